#pragma once

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "rpq/deformation.hpp"
#include "rpq/series.hpp"

namespace rpq {

enum class Family { Binomial, Euler, Polya, InversePolya, Hypergeometric };
enum class Method { Direct, Recursive };

std::string_view family_name(Family f);
std::string_view method_name(Method m);

struct BinomialParams {
    int n = 1;
    double p0 = 0.5;
};

struct EulerParams {
    double theta = 0.5;
    double tail_tol = 1e-12;
    int max_terms = 10000;
};

// Urn model with m = -r/x and u = -s/x; brackets live in the base-changed deformation.
struct PolyaParams {
    int n = 1;
    double m = 1.0;
    double u = 1.0;
    int x_step = -1;

    // r white, s black, x added per draw.
    static PolyaParams from_urn(int n, int r, int s, int x);
};

struct InversePolyaParams {
    int n = 1;
    double m = 1.0;
    double u = 1.0;
    int x_step = -1;
    double tail_tol = 1e-12;
    int max_terms = 10000;

    static InversePolyaParams from_urn(int n, int r, int s, int x);
};

using FamilyParams = std::variant<BinomialParams, EulerParams, PolyaParams, InversePolyaParams>;

struct PmfTable {
    Family family = Family::Binomial;
    DeformationSpec deformation;
    FamilyParams params;
    std::vector<int> support{};
    std::vector<double> probs{};
    double normalization_residual = 0.0;
    bool truncated = false;
    Method method = Method::Direct;
    // Support points whose value lies outside [-1e-9, 1 + 1e-9].
    std::vector<int> out_of_range{};

    double sum() const;
    // Deformation whose brackets label the support: the base-changed one for urn families.
    DeformationSpec bracket_deformation() const;
};

// Finalizes residual and range metadata; used by every constructor and the JSON reader.
void annotate(PmfTable& table);

struct MomentReport {
    int order = 0;
    double closed_form = 0.0;
    double brute_force = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
};

MomentReport make_report(int order, double closed_form, double brute_force);

// sum_k [k]_j P_k with the table's bracket deformation.
double deformed_factorial_moment(const PmfTable& pmf, int j);
// sum_k k(k-1)...(k-j+1) P_k.
double classical_factorial_moment_of(const PmfTable& pmf, int j);

// --- binomial -------------------------------------------------------------

// Which ratio the recursive method applies between consecutive terms:
//   Matched: denominator eps1^(n-k-1) - eps2^(n-k-1) p0, the exact ratio of direct terms.
//   ShiftedExponent: exponent n-k, kept so the audit can quantify that variant.
enum class BinomialRecursion { Matched, ShiftedExponent };

PmfTable binomial_pmf(const DeformationSpec& d, const BinomialParams& params, Method method,
                      BinomialRecursion recursion = BinomialRecursion::Matched);
double binomial_factorial_moment(const DeformationSpec& d, const BinomialParams& params, int j);
double binomial_classical_factorial_moment(const DeformationSpec& d, const BinomialParams& params,
                                           int i, int tau = 0);
double binomial_mean(const DeformationSpec& d, const BinomialParams& params);
double binomial_variance(const DeformationSpec& d, const BinomialParams& params);
// Closed form p0^r prod [n-i] against sum_k P_k prod_i eps2^-i ([k]^r - eps1^(r-i) [i]).
MomentReport binomial_product_moment(const DeformationSpec& d, const BinomialParams& params, int r);

// --- Euler ----------------------------------------------------------------

PmfTable euler_pmf(const DeformationSpec& d, const EulerParams& params, Method method);
double euler_factorial_moment(const DeformationSpec& d, const EulerParams& params, int j);
double euler_classical_factorial_moment(const DeformationSpec& d, const EulerParams& params, int i,
                                        int tau = 0, SeriesOptions options = {});

// --- Polya and hypergeometric ----------------------------------------------

PmfTable polya_pmf(const DeformationSpec& d, const PolyaParams& params, Method method);
PmfTable hypergeometric_pmf(const DeformationSpec& d, int n, double m, double u,
                            Method method = Method::Direct);
double polya_factorial_moment(const DeformationSpec& d, const PolyaParams& params, int j);
double polya_classical_factorial_moment(const DeformationSpec& d, const PolyaParams& params, int i,
                                        int tau = 0);

// --- inverse Polya ----------------------------------------------------------

PmfTable inverse_polya_pmf(const DeformationSpec& d, const InversePolyaParams& params,
                           Method method);
double inverse_polya_factorial_moment(const DeformationSpec& d, const InversePolyaParams& params,
                                      int j);
double inverse_polya_classical_factorial_moment(const DeformationSpec& d,
                                                const InversePolyaParams& params, int i,
                                                int tau = 0);

// [m-j+1]/[m+u-i+1] in the base-changed deformation.
double urn_draw_probability(const DeformationSpec& d, int i, int j, double m, double u, int x);
// Same probability from urn counts: [r+x(j-1)]/[r+s+x(i-1)] in the original deformation.
double urn_draw_probability_counts(const DeformationSpec& d, int i, int j, int r, int s, int x);

// --- sampling ---------------------------------------------------------------

// Inverse-CDF draws; the generator is owned by the caller.
std::vector<int> sample(const PmfTable& pmf, std::mt19937_64& generator, std::size_t count);
std::vector<int> sample(const PmfTable& pmf, std::uint64_t seed, std::size_t count);

}  // namespace rpq
