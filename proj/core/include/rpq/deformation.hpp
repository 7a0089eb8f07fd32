#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rpq/errors.hpp"

namespace rpq {

enum class Kind {
    ArikCoon,
    Quesne,
    JagannathanSrinivasa,
    ChakrabartyJagannathan,
    GeneralizedQuesne,
    MultiParameter,
    Custom,
};

// Command-line spelling, e.g. "arik-coon".
std::string_view kind_name(Kind kind);
std::optional<Kind> parse_kind(std::string_view name);

// A deformation kind with its parameters and structure constants eps1, eps2.
//
// Every predefined kind evaluates [x] = R(p^x, q^x) in closed form. Instances are
// immutable; construct them through the named factories, which enforce the
// kind's parameter domain.
class DeformationSpec {
public:
    // R(u, v) for the Custom kind; [x] = R(p^x, q^x).
    using Evaluator = std::function<double(double, double)>;

    static DeformationSpec arik_coon(double q);
    static DeformationSpec quesne(double q);
    static DeformationSpec jagannathan_srinivasa(double p, double q);
    static DeformationSpec chakrabarty_jagannathan(double p, double q);
    static DeformationSpec generalized_quesne(double p, double q);
    static DeformationSpec multi_parameter(double p, double q, double mu, double nu, double g = 1.0);
    static DeformationSpec custom(double p, double q, double eps1, double eps2, Evaluator evaluator);

    // Dispatch on kind; p is ignored for the single-parameter kinds.
    static DeformationSpec make(Kind kind, double p, double q, double mu = 0.0, double nu = 0.0,
                                double g = 1.0);

    // Derived deformation with (p, q) -> (p^-step, q^-step) and eps_i -> eps_i^-step,
    // used by the urn families. The primary domain guard is not reapplied.
    DeformationSpec base_changed(int step) const;

    Kind kind() const { return kind_; }
    double p() const { return p_; }
    double q() const { return q_; }
    double mu() const { return mu_; }
    double nu() const { return nu_; }
    double g() const { return g_; }
    double eps1() const { return eps1_; }
    double eps2() const { return eps2_; }
    // Step of the base change that produced this spec, 0 for a primary spec.
    int base_step() const { return base_step_; }

    // [x]; throws DomainError on NaN.
    double number(double x) const;

    // Short human-readable descriptor such as "arik-coon(q=0.5)".
    std::string descriptor() const;

private:
    DeformationSpec() = default;

    Kind kind_ = Kind::ArikCoon;
    double p_ = 1.0;
    double q_ = 0.5;
    double mu_ = 0.0;
    double nu_ = 0.0;
    double g_ = 1.0;
    double eps1_ = 1.0;
    double eps2_ = 0.5;
    int base_step_ = 0;
    Evaluator evaluator_;
};

// Coefficients indexed by degree in z. Trailing zeros are allowed.
struct Polynomial {
    std::vector<double> coefficients;

    // Highest index with a nonzero coefficient, or -1 for the zero polynomial.
    int degree() const;
    bool is_zero() const { return degree() < 0; }
    double coefficient(std::size_t k) const {
        return k < coefficients.size() ? coefficients[k] : 0.0;
    }
};

double number(const DeformationSpec& d, double x);

// [n]! = [1][2]...[n]; 1 for n = 0.
double factorial(const DeformationSpec& d, int n);

// [x]_j = [x][x-1]...[x-j+1] for j > 0, 1 for j = 0, and 1/[x+|j|]_{|j|} for j < 0.
double falling_factorial(const DeformationSpec& d, double x, int j);

// [x]_k / [k]!, valid for real x.
double binomial_coefficient(const DeformationSpec& d, double x, int k);

// prod_{i=1..n} (x eps1^(i-1) + y eps2^(i-1)).
double shifted_factorial_plus(const DeformationSpec& d, double x, double y, int n);

// prod_{i=1..n} (x eps1^(i-1) - y eps2^(i-1)).
double shifted_factorial_minus(const DeformationSpec& d, double x, double y, int n);

// Monomial action z^n -> [n] z^(n-1).
Polynomial polynomial_derivative(const DeformationSpec& d, const Polynomial& f);

}  // namespace rpq
