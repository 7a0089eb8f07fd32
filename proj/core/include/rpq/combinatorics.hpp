#pragma once

#include <optional>
#include <vector>

#include "rpq/deformation.hpp"
#include "rpq/series.hpp"

namespace rpq {

// sum_k [n k] eps1^C(n-k,2) eps2^C(k,2) x^(n-k) y^k.
double euler_expansion(const DeformationSpec& d, double x, double y, int n);

// Which of the two mirrored expansions to use. A puts the k-dependent exponent
// on eps1, B on eps2. Automatic picks B when eps1 > eps2 and A otherwise; for the
// infinite series only that choice converges to the intended value.
enum class Variant { A, B, Automatic };

Variant resolve_variant(const DeformationSpec& d, Variant v);

// Finite expansion of [u+v]_n:
// A: sum_k [n k] eps1^(k(v-n+k)) eps2^((n-k)(u-k)) [u]_k [v]_(n-k), B mirrors the exponents.
double vandermonde(const DeformationSpec& d, double u, double v, int n, Variant variant);

// Infinite expansion of [u+v]_{-n}:
// sum_k [-n k] eps1^(k(v+n+k)) eps2^((-n-k)(u-k)) [u]_k [v]_{-n-k} (A), B mirrored.
// Terms are generated by ratio updates; a zero factor [u-k] ends the series.
double negative_vandermonde(const DeformationSpec& d, double u, double v, int n,
                            SeriesOptions options = {}, Variant variant = Variant::Automatic);

// Infinite expansion of 1/[v]_n:
// sum_k [n+k-1 k] eps1^(n(u-k)) eps2^(k(v-n+1)) [u]_k / [u+v]_(n+k) (A), B mirrored.
double reciprocal_factorial_series(const DeformationSpec& d, double u, double v, int n,
                                   SeriesOptions options = {},
                                   Variant variant = Variant::Automatic);

enum class StirlingKind { First, Second };

// Noncentral Stirling numbers of one kind for rows 0..n_max.
//   first:  [x-j]_n = eps2^(-C(n,2)-jn) sum_k s(n,k;j) [x]^k
//   second: [x]^n   = sum_k eps2^(C(k,2)+jk) S(n,k;j) [x-j]_k
struct StirlingTable {
    StirlingKind kind = StirlingKind::First;
    int j_offset = 0;
    int n_max = 0;
    std::vector<std::vector<double>> entries;  // entries[n][k], k <= n
    DeformationSpec deformation;
    // Largest condition estimate met while solving, in double-equivalent units.
    double condition = 0.0;

    double at(int n, int k) const;
};

inline constexpr int kStirlingMaxOrder = 20;

// Solves the sample-point systems at x = j..j+n for every row. Predefined kinds
// are solved in 50-digit arithmetic and rounded; Custom kinds in double.
StirlingTable stirling_table(const DeformationSpec& d, StirlingKind kind, int j, int n_max);

// First-kind rows (offset 0) for 0..n_max built by expanding prod_v [x-v] as a
// polynomial in [x]. That needs every [x-v] to be affine in [x], which holds for
// single-base kinds; returns nullopt otherwise. There is no linear solve, so the
// order is not capped and the table matches stirling_table where both apply.
std::optional<StirlingTable> stirling_first_by_expansion(const DeformationSpec& d, int n_max);

// sum_{m>=j} (-1)^(m-j) (eps1-eps2)^(m-j) eps1^(C(m,2)-tau(m-j)) s(m,j) moments[m],
// where moments[m] is the deformed binomial moment E([X m]) for m = j..M.
double classical_binomial_moment(const DeformationSpec& d,
                                 const std::vector<double>& deformed_binomial_moments, int j,
                                 int tau = 0);

// j! times the same sum with moments[m] / [m]!, moments[m] = E([X]_m).
double classical_factorial_moment(const DeformationSpec& d,
                                  const std::vector<double>& deformed_factorial_moments, int j,
                                  int tau = 0);

// Conversion weight (-1)^(m-j) (eps1-eps2)^(m-j) eps1^(C(m,2)-tau(m-j)) s(m,j).
double conversion_weight(const DeformationSpec& d, const StirlingTable& first_kind, int m,
                         int j, int tau);

}  // namespace rpq
