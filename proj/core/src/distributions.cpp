#include "rpq/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "rpq/combinatorics.hpp"
#include "rpq/special_functions.hpp"

namespace rpq {

namespace {

double choose2(double n) { return n * (n - 1.0) / 2.0; }

// Product kept as sign and extended-precision log-magnitude; urn and Euler terms
// overflow doubles long before their ratio does.
class LogProduct {
public:
    void mul(double f) {
        if (f == 0.0) {
            zero_ = true;
            return;
        }
        if (f < 0.0) negative_ = !negative_;
        log_abs_ += std::log(std::fabs(static_cast<long double>(f)));
    }
    void div(double f, const char* what) {
        if (f == 0.0) throw SingularError(what);
        if (f < 0.0) negative_ = !negative_;
        log_abs_ -= std::log(std::fabs(static_cast<long double>(f)));
    }
    void mul_pow(double base, double exponent) {
        log_abs_ += static_cast<long double>(exponent) * std::log(static_cast<long double>(base));
    }
    void mul_magnitude(long double log_abs, bool negative) {
        log_abs_ += log_abs;
        if (negative) negative_ = !negative_;
    }
    void mark_zero() { zero_ = true; }
    double value() const {
        if (zero_) return 0.0;
        const double v = static_cast<double>(std::exp(log_abs_));
        return negative_ ? -v : v;
    }

private:
    long double log_abs_ = 0.0L;
    bool negative_ = false;
    bool zero_ = false;
};

// Running products of a factor sequence, so any contiguous run f[a..b) costs O(1).
class PrefixProduct {
public:
    void push(double f) {
        log_abs_.push_back(log_abs_.back() + (f == 0.0 ? 0.0L : std::log(std::fabs(static_cast<long double>(f)))));
        negatives_.push_back(negatives_.back() + (f < 0.0 ? 1 : 0));
        zeros_.push_back(zeros_.back() + (f == 0.0 ? 1 : 0));
    }
    std::size_t size() const { return log_abs_.size() - 1; }
    void mul(LogProduct& acc, std::size_t a, std::size_t b) const {
        if (zeros_[b] != zeros_[a]) acc.mark_zero();
        acc.mul_magnitude(log_abs_[b] - log_abs_[a], (negatives_[b] - negatives_[a]) % 2 != 0);
    }
    void div(LogProduct& acc, std::size_t a, std::size_t b, const char* what) const {
        if (zeros_[b] != zeros_[a]) throw SingularError(what);
        acc.mul_magnitude(log_abs_[a] - log_abs_[b], (negatives_[b] - negatives_[a]) % 2 != 0);
    }

private:
    std::vector<long double> log_abs_{0.0L};
    std::vector<int> negatives_{0};
    std::vector<int> zeros_{0};
};

void mul_falling(LogProduct& acc, const DeformationSpec& d, double x, int j) {
    for (int v = 0; v < j; ++v) acc.mul(d.number(x - v));
}

void div_falling(LogProduct& acc, const DeformationSpec& d, double x, int j, const char* what) {
    for (int v = 0; v < j; ++v) acc.div(d.number(x - v), what);
}

void mul_binomial(LogProduct& acc, const DeformationSpec& d, double x, int k) {
    mul_falling(acc, d, x, k);
    for (int v = 1; v <= k; ++v) acc.div(d.number(v), "deformed factorial vanishes");
}

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
}

PmfTable make_table(Family family, const DeformationSpec& d, FamilyParams params, Method method,
                    std::vector<double> probs, bool truncated) {
    PmfTable t{.family = family, .deformation = d, .params = std::move(params)};
    t.support.resize(probs.size());
    std::iota(t.support.begin(), t.support.end(), 0);
    t.probs = std::move(probs);
    t.truncated = truncated;
    t.method = method;
    annotate(t);
    return t;
}

double inverse_sign(int gap) { return gap % 2 == 0 ? 1.0 : -1.0; }

}  // namespace

std::string_view family_name(Family f) {
    switch (f) {
        case Family::Binomial: return "binomial";
        case Family::Euler: return "euler";
        case Family::Polya: return "polya";
        case Family::InversePolya: return "inverse-polya";
        case Family::Hypergeometric: return "hypergeometric";
    }
    return "unknown";
}

std::string_view method_name(Method m) { return m == Method::Direct ? "direct" : "recursive"; }

PolyaParams PolyaParams::from_urn(int n, int r, int s, int x) {
    require(x != 0, "urn step x must be nonzero");
    return PolyaParams{n, -static_cast<double>(r) / x, -static_cast<double>(s) / x, x};
}

InversePolyaParams InversePolyaParams::from_urn(int n, int r, int s, int x) {
    require(x != 0, "urn step x must be nonzero");
    InversePolyaParams p;
    p.n = n;
    p.m = -static_cast<double>(r) / x;
    p.u = -static_cast<double>(s) / x;
    p.x_step = x;
    return p;
}

double PmfTable::sum() const { return std::accumulate(probs.begin(), probs.end(), 0.0); }

DeformationSpec PmfTable::bracket_deformation() const {
    if (const auto* p = std::get_if<PolyaParams>(&params)) return deformation.base_changed(p->x_step);
    if (const auto* p = std::get_if<InversePolyaParams>(&params))
        return deformation.base_changed(p->x_step);
    return deformation;
}

void annotate(PmfTable& t) {
    t.normalization_residual = std::fabs(t.sum() - 1.0);
    t.out_of_range.clear();
    for (std::size_t i = 0; i < t.probs.size(); ++i)
        if (!(t.probs[i] >= -1e-9 && t.probs[i] <= 1.0 + 1e-9)) t.out_of_range.push_back(t.support[i]);
}

MomentReport make_report(int order, double closed_form, double brute_force) {
    MomentReport r{order, closed_form, brute_force, std::fabs(closed_form - brute_force), 0.0};
    const double scale = std::max(std::fabs(closed_form), std::fabs(brute_force));
    r.rel_err = scale > 0.0 ? r.abs_err / scale : 0.0;
    return r;
}

double deformed_factorial_moment(const PmfTable& pmf, int j) {
    const DeformationSpec bd = pmf.bracket_deformation();
    double s = 0.0;
    for (std::size_t i = 0; i < pmf.probs.size(); ++i)
        s += falling_factorial(bd, pmf.support[i], j) * pmf.probs[i];
    return s;
}

double classical_factorial_moment_of(const PmfTable& pmf, int j) {
    double s = 0.0;
    for (std::size_t i = 0; i < pmf.probs.size(); ++i) {
        double f = 1.0;
        for (int v = 0; v < j; ++v) f *= pmf.support[i] - v;
        s += f * pmf.probs[i];
    }
    return s;
}

// --- binomial -------------------------------------------------------------

PmfTable binomial_pmf(const DeformationSpec& d, const BinomialParams& params, Method method,
                      BinomialRecursion recursion) {
    const int n = params.n;
    const double p0 = params.p0;
    require(n >= 0, "binomial requires n >= 0");
    require(p0 > 0.0 && p0 < 1.0, "binomial requires 0 < p0 < 1");
    // Both methods run in extended precision so that out-of-range tables (values far above
    // one) still agree to the last double bit.
    using wide = long double;
    const wide e1 = d.eps1(), e2 = d.eps2(), w0 = p0;
    auto minus_product = [&](int len) {
        wide r = 1.0L, a = 1.0L, b = 1.0L;
        for (int i = 0; i < len; ++i) {
            r *= a - b * w0;
            a *= e1;
            b *= e2;
        }
        return r;
    };
    std::vector<double> probs(static_cast<std::size_t>(n) + 1);
    if (method == Method::Direct) {
        for (int k = 0; k <= n; ++k) {
            wide coeff = 1.0L;
            for (int v = 0; v < k; ++v) {
                const double den = d.number(v + 1);
                if (den == 0.0) throw SingularError("deformed factorial vanishes");
                coeff *= static_cast<wide>(d.number(n - v)) / den;
            }
            probs[static_cast<std::size_t>(k)] =
                static_cast<double>(coeff * std::pow(w0, k) * minus_product(n - k));
        }
    } else {
        wide current = minus_product(n);
        probs[0] = static_cast<double>(current);
        for (int k = 0; k < n; ++k) {
            const int e = recursion == BinomialRecursion::Matched ? n - k - 1 : n - k;
            const wide denom = std::pow(e1, e) - std::pow(e2, e) * w0;
            if (denom == 0.0L) throw SingularError("binomial recursion denominator vanishes");
            const double den = d.number(k + 1);
            if (den == 0.0) throw SingularError("deformed factorial vanishes");
            current *= static_cast<wide>(d.number(n - k)) / den * w0 / denom;
            probs[static_cast<std::size_t>(k) + 1] = static_cast<double>(current);
        }
    }
    return make_table(Family::Binomial, d, params, method, std::move(probs), false);
}

double binomial_factorial_moment(const DeformationSpec& d, const BinomialParams& params, int j) {
    require(j >= 1, "factorial moment order must be >= 1");
    if (j > params.n) return 0.0;
    return falling_factorial(d, params.n, j) * std::pow(params.p0, j);
}

double binomial_classical_factorial_moment(const DeformationSpec& d, const BinomialParams& params,
                                           int i, int tau) {
    require(i >= 1 && i <= params.n, "classical factorial moment needs 1 <= i <= n");
    const StirlingTable s = stirling_table(d, StirlingKind::First, 0, params.n);
    double sum = 0.0;
    for (int j = i; j <= params.n; ++j)
        sum += conversion_weight(d, s, j, i, tau) * binomial_coefficient(d, params.n, j) *
               std::pow(params.p0, j);
    return std::tgamma(i + 1.0) * sum;
}

double binomial_mean(const DeformationSpec& d, const BinomialParams& params) {
    return params.p0 * d.number(params.n);
}

double binomial_variance(const DeformationSpec& d, const BinomialParams& params) {
    const double r1 = d.number(1);
    const double x = (d.number(2) - r1) / r1;
    const double p0 = params.p0;
    const double top = d.number(params.n);
    return p0 * top * (r1 + x * p0 * d.number(params.n - 1) - p0 * top);
}

MomentReport binomial_product_moment(const DeformationSpec& d, const BinomialParams& params, int r) {
    require(r >= 1 && r <= params.n, "product moment needs 1 <= r <= n");
    double closed = std::pow(params.p0, r);
    for (int i = 0; i < r; ++i) closed *= d.number(params.n - i);
    const PmfTable pmf = binomial_pmf(d, params, Method::Direct);
    double brute = 0.0;
    for (int k = 0; k <= params.n; ++k) {
        const double bracket = std::pow(d.number(k), r);
        double f = 1.0;
        for (int i = 0; i < r; ++i)
            f *= std::pow(d.eps2(), -i) * (bracket - std::pow(d.eps1(), r - i) * d.number(i));
        brute += f * pmf.probs[static_cast<std::size_t>(k)];
    }
    return make_report(r, closed, brute);
}

// --- Euler ----------------------------------------------------------------

namespace {

void check_euler(const DeformationSpec& d, const EulerParams& params) {
    require(params.theta > 0.0, "euler requires theta > 0");
    require(params.tail_tol > 0.0, "euler requires tail_tol > 0");
    if (d.kind() == Kind::ArikCoon)
        require(params.theta < 1.0 / (1.0 - d.q()), "arik-coon euler requires theta < 1/(1-q)");
    (void)exp_small_e(d, params.theta);  // convergence guard for the other kinds
}

double euler_ratio(const DeformationSpec& d, double theta, int x) {
    return theta * std::pow(d.eps1(), x) / d.number(x + 1);
}

}  // namespace

PmfTable euler_pmf(const DeformationSpec& d, const EulerParams& params, Method method) {
    check_euler(d, params);
    const double head = exp_big_E(d, -params.theta);
    std::vector<double> rec{head};
    // Support ends once a geometric bound on the remaining mass drops below tail_tol.
    for (int x = 0;; ++x) {
        if (x >= params.max_terms) throw ConvergenceError("euler tail did not shrink within max_terms");
        const double r = euler_ratio(d, params.theta, x);
        const double last = rec.back();
        if (x >= 1 && r < 1.0 && std::fabs(last) * r / (1.0 - r) < params.tail_tol) break;
        rec.push_back(last * r);
    }
    if (method == Method::Recursive)
        return make_table(Family::Euler, d, params, method, std::move(rec), true);

    std::vector<double> direct(rec.size());
    for (std::size_t x = 0; x < rec.size(); ++x) {
        LogProduct t;
        t.mul(head);
        t.mul_pow(d.eps1(), choose2(static_cast<double>(x)));
        t.mul_pow(params.theta, static_cast<double>(x));
        for (std::size_t k = 1; k <= x; ++k) t.div(d.number(static_cast<double>(k)), "[k] vanishes");
        direct[x] = t.value();
    }
    return make_table(Family::Euler, d, params, method, std::move(direct), true);
}

double euler_factorial_moment(const DeformationSpec& d, const EulerParams& params, int j) {
    require(j >= 1, "factorial moment order must be >= 1");
    check_euler(d, params);
    const double shifted = std::pow(d.eps1(), j) * params.theta;
    return std::pow(params.theta, j) * std::pow(d.eps1(), choose2(j)) *
           exp_big_E(d, -params.theta) * exp_small_e(d, shifted);
}

double euler_classical_factorial_moment(const DeformationSpec& d, const EulerParams& params, int i,
                                        int tau, SeriesOptions options) {
    require(i >= 1, "classical factorial moment needs i >= 1");
    // Single-base kinds get rows by expansion, grown until the series settles; other
    // kinds are limited to the rows the sample-point solver can produce.
    int rows = std::max(i, 32);
    std::optional<StirlingTable> s = stirling_first_by_expansion(d, rows);
    const bool expanded = s.has_value();
    if (!expanded) {
        require(i <= kStirlingMaxOrder, "classical factorial moment order exceeds the Stirling range");
        rows = kStirlingMaxOrder;
        s = stirling_table(d, StirlingKind::First, 0, rows);
    }
    SeriesAccumulator acc(options);
    for (int j = i;; ++j) {
        if (j > rows) {
            if (!expanded) throw DependencyError("euler conversion needs Stirling rows beyond order 20");
            rows *= 2;
            s = stirling_first_by_expansion(d, rows);
        }
        const double term = conversion_weight(d, *s, j, i, tau) * euler_factorial_moment(d, params, j) /
                            factorial(d, j);
        if (acc.add(term)) break;
        acc.check_budget();
    }
    return std::tgamma(i + 1.0) * acc.sum();
}

// --- Polya ----------------------------------------------------------------

namespace {

void check_polya(int n, int x_step) {
    require(n >= 0, "urn distributions require n >= 0");
    require(x_step != 0, "urn step x must be nonzero");
}

}  // namespace

PmfTable polya_pmf(const DeformationSpec& d, const PolyaParams& params, Method method) {
    check_polya(params.n, params.x_step);
    const DeformationSpec b = d.base_changed(params.x_step);
    const int n = params.n;
    const double m = params.m, u = params.u, x = params.x_step;
    const double total = falling_factorial(b, m + u, n);
    if (total == 0.0) throw SingularError("urn distribution has [m+u]_n = 0");
    std::vector<double> probs(static_cast<std::size_t>(n) + 1, 0.0);
    auto direct_term = [&](int k) {
        LogProduct t;
        t.mul_pow(b.eps1(), k * (u - n + k));
        t.mul_pow(b.eps2(), (n - k) * (m - k));
        mul_binomial(t, b, n, k);
        mul_falling(t, b, m, k);
        mul_falling(t, b, u, n - k);
        div_falling(t, b, m + u, n, "urn distribution has [m+u]_n = 0");
        return t.value();
    };

    if (method == Method::Direct) {
        for (int k = 0; k <= n; ++k) probs[static_cast<std::size_t>(k)] = direct_term(k);
    } else {
        // With an integer u < n the support starts at n - u, where the ratio below is 0/0;
        // the chain is then seeded with the direct value at that edge.
        int start = 0;
        if (u >= 0.0 && u < n && u == std::floor(u)) start = n - static_cast<int>(u);
        probs[static_cast<std::size_t>(start)] =
            start == 0 ? std::pow(d.eps2(), -x * m * n) * falling_factorial(b, u, n) / total
                       : direct_term(start);
        for (int k = start; k < n; ++k) {
            const double denom = b.number(u - n + k + 1) * b.number(k + 1);
            if (denom == 0.0) throw SingularError("urn recursion denominator vanishes");
            const double w = std::pow(d.eps2(), x * (n + m - 2.0 * k - 1.0)) /
                             std::pow(d.eps1(), x * (u - n + 2.0 * k + 1.0));
            probs[static_cast<std::size_t>(k) + 1] = w * b.number(n - k) * b.number(m - k) / denom *
                                                     probs[static_cast<std::size_t>(k)];
        }
    }
    return make_table(Family::Polya, d, params, method, std::move(probs), false);
}

PmfTable hypergeometric_pmf(const DeformationSpec& d, int n, double m, double u, Method method) {
    PmfTable t = polya_pmf(d, PolyaParams{n, m, u, -1}, method);
    t.family = Family::Hypergeometric;
    return t;
}

double polya_factorial_moment(const DeformationSpec& d, const PolyaParams& params, int j) {
    check_polya(params.n, params.x_step);
    require(j >= 1, "factorial moment order must be >= 1");
    if (j > params.n) return 0.0;
    const DeformationSpec b = d.base_changed(params.x_step);
    const double denom = falling_factorial(b, params.m + params.u, j);
    if (denom == 0.0) throw SingularError("urn moment has [m+u]_j = 0");
    return falling_factorial(b, params.n, j) * falling_factorial(b, params.m, j) / denom;
}

double polya_classical_factorial_moment(const DeformationSpec& d, const PolyaParams& params, int i,
                                        int tau) {
    check_polya(params.n, params.x_step);
    require(i >= 1 && i <= params.n, "classical factorial moment needs 1 <= i <= n");
    const DeformationSpec b = d.base_changed(params.x_step);
    const StirlingTable s = stirling_table(b, StirlingKind::First, 0, params.n);
    double sum = 0.0;
    for (int j = i; j <= params.n; ++j) {
        const double denom = falling_factorial(b, params.m + params.u, j);
        if (denom == 0.0) throw SingularError("urn moment has [m+u]_j = 0");
        const double weight = std::pow(d.eps1(), choose2(j)) * falling_factorial(b, params.m, j) /
                              (std::pow(d.eps1(), static_cast<double>(tau) * (j - i)) * denom);
        sum += inverse_sign(j - i) * binomial_coefficient(d, params.n, j) * s.at(j, i) /
               std::pow(b.eps1() - b.eps2(), i - j) * weight;
    }
    return std::tgamma(i + 1.0) * sum;
}

// --- inverse Polya ----------------------------------------------------------

namespace {

void check_inverse(const InversePolyaParams& params) {
    require(params.n >= 1, "inverse polya requires n >= 1");
    require(params.x_step != 0, "urn step x must be nonzero");
    require(params.tail_tol > 0.0, "inverse polya requires tail_tol > 0");
}

}  // namespace

PmfTable inverse_polya_pmf(const DeformationSpec& d, const InversePolyaParams& params, Method method) {
    check_inverse(params);
    const DeformationSpec b = d.base_changed(params.x_step);
    const int n = params.n;
    const double m = params.m, u = params.u, x = params.x_step;
    const double head_denom = falling_factorial(b, m + u, n);
    if (head_denom == 0.0) throw SingularError("inverse urn distribution has [m+u]_n = 0");
    const double lead = std::pow(d.eps1(), n * (u - x));
    const double step_weight = std::pow(d.eps2(), -x * (m - n + 1.0));

    std::vector<double> rec{lead * falling_factorial(b, m, n) / head_denom};
    bool truncated = true;
    for (int y = 0;; ++y) {
        if (y >= params.max_terms)
            throw ConvergenceError("inverse polya tail did not shrink within max_terms");
        // Far out the brackets overflow; that only happens when the tail does not shrink.
        if (!std::isfinite(rec.back()))
            throw ConvergenceError("inverse polya terms overflow before the tail shrinks");
        double stop = 0.0, denom = 0.0, r = 0.0;
        try {
            stop = b.number(u - y);
            denom = b.number(y + 1) * b.number(m + u - n - y);
            r = step_weight * b.number(n + y) * stop / denom;
        } catch (const DomainError&) {
            throw ConvergenceError("inverse polya brackets overflow before the tail shrinks");
        }
        if (stop == 0.0) {
            truncated = false;  // [u]_y vanishes from here on
            break;
        }
        if (denom == 0.0) throw SingularError("inverse urn recursion denominator vanishes");
        const double last = rec.back();
        if (y >= 1 && std::fabs(r) < 1.0 &&
            std::fabs(last) * std::fabs(r) / (1.0 - std::fabs(r)) < params.tail_tol)
            break;
        rec.push_back(last * r);
    }
    if (method == Method::Recursive)
        return make_table(Family::InversePolya, d, params, method, std::move(rec), truncated);

    // Each term is the defining product; the brackets shared between terms are read
    // from running products so a long support stays linear in its length.
    const std::size_t len = rec.size();
    PrefixProduct ints, tops, mixed;  // [t] for t >= 1, [u - v], [m + u - v]
    for (std::size_t t = 1; t < static_cast<std::size_t>(n) + len; ++t) ints.push(b.number(static_cast<double>(t)));
    for (std::size_t v = 0; v < len; ++v) tops.push(b.number(u - static_cast<double>(v)));
    for (std::size_t v = 0; v < static_cast<std::size_t>(n) + len; ++v) mixed.push(b.number(m + u - static_cast<double>(v)));
    std::vector<double> direct(len);
    for (std::size_t yi = 0; yi < len; ++yi) {
        const std::size_t nn = static_cast<std::size_t>(n);
        LogProduct t;
        t.mul(lead);
        t.mul_pow(d.eps2(), -static_cast<double>(yi) * x * (m - n + 1.0));
        ints.mul(t, nn - 1, nn - 1 + yi);  // [n+y-1]_y
        ints.div(t, 0, yi, "deformed factorial vanishes");
        mul_falling(t, b, m, n);
        tops.mul(t, 0, yi);
        mixed.div(t, 0, nn + yi, "inverse urn distribution has [m+u]_(n+y) = 0");
        direct[yi] = t.value();
    }
    return make_table(Family::InversePolya, d, params, method, std::move(direct), truncated);
}

double inverse_polya_factorial_moment(const DeformationSpec& d, const InversePolyaParams& params,
                                      int j) {
    check_inverse(params);
    require(j >= 1, "factorial moment order must be >= 1");
    const DeformationSpec b = d.base_changed(params.x_step);
    const double denom = falling_factorial(b, params.m + j, j);
    if (denom == 0.0) throw SingularError("inverse urn moment has [m+j]_j = 0");
    const double x = params.x_step;
    return falling_factorial(b, params.n - j + 1, j) * falling_factorial(b, params.u, j) /
           (std::pow(d.eps2(), j * x * (params.m - params.n + 1.0)) * denom);
}

double inverse_polya_classical_factorial_moment(const DeformationSpec& d,
                                                const InversePolyaParams& params, int i, int tau) {
    check_inverse(params);
    require(i >= 1 && i <= params.n, "classical factorial moment needs 1 <= i <= n");
    const DeformationSpec b = d.base_changed(params.x_step);
    const StirlingTable s = stirling_table(b, StirlingKind::First, 0, params.n);
    const double x = params.x_step;
    double sum = 0.0;
    for (int j = i; j <= params.n; ++j) {
        const double denom = falling_factorial(b, params.m + j, j) *
                             std::pow(d.eps2(), j * x * (params.m - params.n + 1.0));
        if (denom == 0.0) throw SingularError("inverse urn moment has [m+j]_j = 0");
        const double ip = s.at(j, i) * std::pow(d.eps1(), choose2(j) - static_cast<double>(tau) * (j - i)) *
                          std::pow(b.eps1() - b.eps2(), j - i) * falling_factorial(b, params.u, j) / denom;
        sum += inverse_sign(j - i) * binomial_coefficient(b, params.n + j - 1, j) * ip;
    }
    return std::tgamma(i + 1.0) * sum;
}

double urn_draw_probability(const DeformationSpec& d, int i, int j, double m, double u, int x) {
    require(j >= 1 && j <= i, "urn draw probability needs 1 <= j <= i");
    const DeformationSpec b = d.base_changed(x);
    const double denom = b.number(m + u - i + 1);
    if (denom == 0.0) throw SingularError("urn draw probability denominator vanishes");
    return b.number(m - j + 1) / denom;
}

double urn_draw_probability_counts(const DeformationSpec& d, int i, int j, int r, int s, int x) {
    require(j >= 1 && j <= i, "urn draw probability needs 1 <= j <= i");
    const double denom = d.number(r + s + x * (i - 1));
    if (denom == 0.0) throw SingularError("urn draw probability denominator vanishes");
    return d.number(r + x * (j - 1)) / denom;
}

// --- sampling ---------------------------------------------------------------

std::vector<int> sample(const PmfTable& pmf, std::mt19937_64& generator, std::size_t count) {
    if (!(pmf.normalization_residual < 1e-6))
        throw DomainError("sampling requires a PMF normalized within 1e-6");
    if (!pmf.out_of_range.empty()) throw DomainError("sampling requires probabilities in [0, 1]");
    std::vector<double> cdf(pmf.probs.size());
    std::partial_sum(pmf.probs.begin(), pmf.probs.end(), cdf.begin());
    const double total = cdf.back();
    std::vector<int> out;
    out.reserve(count);
    for (std::size_t c = 0; c < count; ++c) {
        const double target = std::generate_canonical<double, 53>(generator) * total;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
        const auto idx = std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
        out.push_back(pmf.support[idx]);
    }
    return out;
}

std::vector<int> sample(const PmfTable& pmf, std::uint64_t seed, std::size_t count) {
    std::mt19937_64 generator(seed);
    return sample(pmf, generator, count);
}

}  // namespace rpq
