#pragma once

// Scalar-generic solvers for the noncentral Stirling systems.
//
// Row n of either table is fixed by evaluating its defining identity at the
// integer nodes x = j, j+1, ..., j+n, where [x - j]_k vanishes for k > x - j.
// Only [x] at integer x and integer powers of eps2 are needed, so the same code
// runs in double, in extended binary precision, or over exact rationals.

#include <cstddef>
#include <functional>
#include <vector>

#include "rpq/errors.hpp"

namespace rpq::stirling {

template <class T>
using Table = std::vector<std::vector<T>>;

template <class T>
struct Nodes {
    std::function<T(int)> number;  // [x] at integer x
    T eps2;
    int offset = 0;  // noncentral offset j
};

template <class T>
T int_pow(T base, long long e) {
    T result(1);
    const bool invert = e < 0;
    unsigned long long k = invert ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    while (k) {
        if (k & 1ULL) result *= base;
        base *= base;
        k >>= 1ULL;
    }
    return invert ? T(1) / result : result;
}

template <class T>
T abs_value(const T& v) {
    return v < T(0) ? T(-v) : v;
}

inline long long choose2(long long n) { return n * (n - 1) / 2; }

// [i]_k at integer i >= 0, zero when k > i.
template <class T>
T integer_falling(const Nodes<T>& nodes, int i, int k) {
    if (k > i) return T(0);
    T r(1);
    for (int v = 0; v < k; ++v) r *= nodes.number(i - v);
    return r;
}

// Solves sum_k a_k t_i^k = f_i for distinct nodes t (Bjorck-Pereyra, primal form).
template <class T>
std::vector<T> vandermonde_solve(const std::vector<T>& t, std::vector<T> f) {
    const std::size_t n = t.size() - 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = n; i > k; --i) f[i] = (f[i] - f[i - 1]) / (t[i] - t[i - k - 1]);
    for (std::size_t k = n; k-- > 0;)
        for (std::size_t i = k; i < n; ++i) f[i] = f[i] - t[k] * f[i + 1];
    return f;
}

template <class T>
T one_norm(const Table<T>& a) {
    T best(0);
    if (a.empty()) return best;
    for (std::size_t c = 0; c < a[0].size(); ++c) {
        T s(0);
        for (const auto& row : a) s += abs_value(row[c]);
        if (best < s) best = s;
    }
    return best;
}

// Condition number ||V||_1 ||V^-1||_1 of the power-basis matrix V[i][k] = t_i^k.
template <class T>
T vandermonde_condition(const std::vector<T>& t) {
    const std::size_t m = t.size();
    Table<T> v(m, std::vector<T>(m)), inv(m, std::vector<T>(m));
    for (std::size_t i = 0; i < m; ++i) {
        T power(1);
        for (std::size_t k = 0; k < m; ++k) {
            v[i][k] = power;
            power *= t[i];
        }
    }
    for (std::size_t c = 0; c < m; ++c) {
        std::vector<T> e(m, T(0));
        e[c] = T(1);
        const auto col = vandermonde_solve(t, e);
        for (std::size_t r = 0; r < m; ++r) inv[r][c] = col[r];
    }
    return one_norm(v) * one_norm(inv);
}

// Condition number of a lower-triangular matrix via its explicit inverse.
template <class T>
T lower_triangular_condition(const Table<T>& l) {
    const std::size_t m = l.size();
    Table<T> inv(m, std::vector<T>(m, T(0)));
    for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t r = c; r < m; ++r) {
            T acc = r == c ? T(1) : T(0);
            for (std::size_t k = c; k < r; ++k) acc -= l[r][k] * inv[k][c];
            inv[r][c] = acc / l[r][r];
        }
    }
    return one_norm(l) * one_norm(inv);
}

struct SolveStats {
    double max_condition = 0.0;
};

template <class T>
void check_nodes(const std::vector<T>& t) {
    for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = a + 1; b < t.size(); ++b)
            if (t[a] == t[b])
                throw DegenerateBasisError("sample points give coincident deformed numbers");
}

// Rows 0..n_max of s(n,k;j) from [x-j]_n = eps2^(-C(n,2)-jn) sum_k s(n,k;j) [x]^k.
template <class T>
Table<T> solve_first_kind(const Nodes<T>& nodes, int n_max, SolveStats* stats = nullptr,
                          const std::function<double(const T&)>& to_double = {}) {
    const int j = nodes.offset;
    Table<T> rows(static_cast<std::size_t>(n_max) + 1);
    rows[0] = {T(1)};
    for (int n = 1; n <= n_max; ++n) {
        std::vector<T> t(static_cast<std::size_t>(n) + 1), f(static_cast<std::size_t>(n) + 1);
        const T scale = int_pow(nodes.eps2, choose2(n) + static_cast<long long>(j) * n);
        for (int i = 0; i <= n; ++i) {
            t[static_cast<std::size_t>(i)] = nodes.number(j + i);
            f[static_cast<std::size_t>(i)] = scale * integer_falling(nodes, i, n);
        }
        check_nodes(t);
        if (stats && to_double) {
            const double c = to_double(vandermonde_condition(t));
            if (c > stats->max_condition) stats->max_condition = c;
        }
        rows[static_cast<std::size_t>(n)] = vandermonde_solve(t, f);
    }
    return rows;
}

// Rows 0..n_max of S(n,k;j) from [x]^n = sum_k eps2^(C(k,2)+jk) S(n,k;j) [x-j]_k.
template <class T>
Table<T> solve_second_kind(const Nodes<T>& nodes, int n_max, SolveStats* stats = nullptr,
                           const std::function<double(const T&)>& to_double = {}) {
    const int j = nodes.offset;
    const std::size_t m = static_cast<std::size_t>(n_max) + 1;
    // basis[i][k] = eps2^(C(k,2)+jk) [i]_k, lower triangular in (i, k)
    Table<T> basis(m, std::vector<T>(m, T(0)));
    std::vector<T> node(m);
    for (std::size_t i = 0; i < m; ++i) {
        node[i] = nodes.number(j + static_cast<int>(i));
        for (std::size_t k = 0; k <= i; ++k)
            basis[i][k] = int_pow(nodes.eps2, choose2(static_cast<long long>(k)) +
                                                  static_cast<long long>(j) * static_cast<long long>(k)) *
                          integer_falling(nodes, static_cast<int>(i), static_cast<int>(k));
        if (basis[i][i] == T(0))
            throw DegenerateBasisError("falling-factorial basis has a zero pivot");
    }
    check_nodes(node);
    if (stats && to_double) {
        const double c = to_double(lower_triangular_condition(basis));
        if (c > stats->max_condition) stats->max_condition = c;
    }
    Table<T> rows(m);
    for (std::size_t n = 0; n < m; ++n) {
        std::vector<T> row(n + 1, T(0));
        for (std::size_t i = 0; i <= n; ++i) {
            T acc = int_pow(node[i], static_cast<long long>(n));
            for (std::size_t k = 0; k < i; ++k) acc -= basis[i][k] * row[k];
            row[i] = acc / basis[i][i];
        }
        rows[n] = std::move(row);
    }
    return rows;
}

}  // namespace rpq::stirling
