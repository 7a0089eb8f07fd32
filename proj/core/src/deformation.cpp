#include "rpq/deformation.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <utility>

#include "number_kernel.hpp"

namespace rpq {

namespace {

constexpr std::array<std::pair<Kind, std::string_view>, 7> kKindNames{{
    {Kind::ArikCoon, "arik-coon"},
    {Kind::Quesne, "quesne"},
    {Kind::JagannathanSrinivasa, "jagannathan-srinivasa"},
    {Kind::ChakrabartyJagannathan, "chakrabarty-jagannathan"},
    {Kind::GeneralizedQuesne, "generalized-quesne"},
    {Kind::MultiParameter, "multi-parameter"},
    {Kind::Custom, "custom"},
}};

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

void require_positive_finite(double v, const char* name) {
    require(std::isfinite(v) && v > 0.0, std::string(name) + " must be a positive finite number");
}

}  // namespace

std::string_view kind_name(Kind kind) {
    for (const auto& [k, name] : kKindNames)
        if (k == kind) return name;
    return "unknown";
}

std::optional<Kind> parse_kind(std::string_view name) {
    for (const auto& [k, n] : kKindNames)
        if (n == name) return k;
    return std::nullopt;
}

DeformationSpec DeformationSpec::arik_coon(double q) {
    require_positive_finite(q, "q");
    require(q < 1.0, "arik-coon requires 0 < q < 1");
    DeformationSpec d;
    d.kind_ = Kind::ArikCoon;
    d.p_ = 1.0;
    d.q_ = q;
    d.eps1_ = 1.0;
    d.eps2_ = q;
    return d;
}

DeformationSpec DeformationSpec::quesne(double q) {
    require_positive_finite(q, "q");
    require(q < 1.0, "quesne requires 0 < q < 1");
    DeformationSpec d;
    d.kind_ = Kind::Quesne;
    d.p_ = 1.0;
    d.q_ = q;
    d.eps1_ = 1.0;
    d.eps2_ = 1.0 / q;
    return d;
}

DeformationSpec DeformationSpec::jagannathan_srinivasa(double p, double q) {
    require_positive_finite(p, "p");
    require_positive_finite(q, "q");
    require(q < p && p <= 1.0, "jagannathan-srinivasa requires 0 < q < p <= 1");
    DeformationSpec d;
    d.kind_ = Kind::JagannathanSrinivasa;
    d.p_ = p;
    d.q_ = q;
    d.eps1_ = p;
    d.eps2_ = q;
    return d;
}

DeformationSpec DeformationSpec::chakrabarty_jagannathan(double p, double q) {
    require_positive_finite(p, "p");
    require_positive_finite(q, "q");
    require(q < p && p <= 1.0, "chakrabarty-jagannathan requires 0 < q < p <= 1");
    DeformationSpec d;
    d.kind_ = Kind::ChakrabartyJagannathan;
    d.p_ = p;
    d.q_ = q;
    d.eps1_ = 1.0 / p;
    d.eps2_ = q;
    return d;
}

DeformationSpec DeformationSpec::generalized_quesne(double p, double q) {
    require_positive_finite(p, "p");
    require_positive_finite(q, "q");
    require(p * q < 1.0 && p > 1.0, "generalized-quesne requires 0 < pq < 1 and p > 1");
    DeformationSpec d;
    d.kind_ = Kind::GeneralizedQuesne;
    d.p_ = p;
    d.q_ = q;
    d.eps1_ = p;
    d.eps2_ = 1.0 / q;
    return d;
}

DeformationSpec DeformationSpec::multi_parameter(double p, double q, double mu, double nu,
                                                 double g) {
    require_positive_finite(p, "p");
    require_positive_finite(q, "q");
    require_positive_finite(g, "g");
    require(std::isfinite(mu) && std::isfinite(nu), "mu and nu must be finite");
    require(p * q < 1.0 && p > 1.0, "multi-parameter requires 0 < pq < 1 and p > 1");
    require(std::pow(p, mu) < std::pow(q, nu - 1.0), "multi-parameter requires p^mu < q^(nu-1)");
    DeformationSpec d;
    d.kind_ = Kind::MultiParameter;
    d.p_ = p;
    d.q_ = q;
    d.mu_ = mu;
    d.nu_ = nu;
    d.g_ = g;
    d.eps1_ = p;
    d.eps2_ = 1.0 / q;
    return d;
}

DeformationSpec DeformationSpec::custom(double p, double q, double eps1, double eps2,
                                        Evaluator evaluator) {
    require_positive_finite(p, "p");
    require_positive_finite(q, "q");
    require_positive_finite(eps1, "eps1");
    require_positive_finite(eps2, "eps2");
    require(static_cast<bool>(evaluator), "custom deformation needs an evaluator");
    require(evaluator(1.0, 1.0) == 0.0, "custom evaluator must satisfy R(1,1) = 0");
    for (int n = 1; n <= 64; ++n) {
        const double v = evaluator(std::pow(p, n), std::pow(q, n));
        require(std::isfinite(v) && v > 0.0,
                "custom evaluator must be positive at (p^n, q^n), failed at n=" + std::to_string(n));
    }
    DeformationSpec d;
    d.kind_ = Kind::Custom;
    d.p_ = p;
    d.q_ = q;
    d.eps1_ = eps1;
    d.eps2_ = eps2;
    d.evaluator_ = std::move(evaluator);
    return d;
}

DeformationSpec DeformationSpec::make(Kind kind, double p, double q, double mu, double nu,
                                      double g) {
    switch (kind) {
        case Kind::ArikCoon: return arik_coon(q);
        case Kind::Quesne: return quesne(q);
        case Kind::JagannathanSrinivasa: return jagannathan_srinivasa(p, q);
        case Kind::ChakrabartyJagannathan: return chakrabarty_jagannathan(p, q);
        case Kind::GeneralizedQuesne: return generalized_quesne(p, q);
        case Kind::MultiParameter: return multi_parameter(p, q, mu, nu, g);
        case Kind::Custom: break;
    }
    throw DomainError("custom deformations need an evaluator; use DeformationSpec::custom");
}

DeformationSpec DeformationSpec::base_changed(int step) const {
    require(step != 0, "base change step must be nonzero");
    DeformationSpec d = *this;
    d.p_ = std::pow(p_, -step);
    d.q_ = std::pow(q_, -step);
    d.eps1_ = std::pow(eps1_, -step);
    d.eps2_ = std::pow(eps2_, -step);
    d.base_step_ = base_step_ == 0 ? step : base_step_ * step;
    return d;
}

double DeformationSpec::number(double x) const {
    double v;
    if (kind_ == Kind::Custom)
        v = evaluator_(std::pow(p_, x), std::pow(q_, x));
    else
        v = detail::kind_number<double>(kind_, p_, q_, mu_, nu_, g_, x);
    if (std::isnan(v)) throw DomainError("deformed number evaluated to NaN");
    return v;
}

std::string DeformationSpec::descriptor() const {
    std::ostringstream out;
    out.precision(12);
    out << kind_name(kind_) << '(';
    if (kind_ == Kind::ArikCoon || kind_ == Kind::Quesne)
        out << "q=" << q_;
    else
        out << "p=" << p_ << ",q=" << q_;
    if (kind_ == Kind::MultiParameter) out << ",mu=" << mu_ << ",nu=" << nu_ << ",g=" << g_;
    if (kind_ == Kind::Custom) out << ",eps1=" << eps1_ << ",eps2=" << eps2_;
    if (base_step_ != 0) out << ",step=" << base_step_;
    out << ')';
    return out.str();
}

int Polynomial::degree() const {
    for (int k = static_cast<int>(coefficients.size()) - 1; k >= 0; --k)
        if (coefficients[static_cast<std::size_t>(k)] != 0.0) return k;
    return -1;
}

double number(const DeformationSpec& d, double x) { return d.number(x); }

double factorial(const DeformationSpec& d, int n) {
    if (n < 0) throw DomainError("factorial requires n >= 0");
    double r = 1.0;
    for (int k = 1; k <= n; ++k) r *= d.number(k);
    return r;
}

double falling_factorial(const DeformationSpec& d, double x, int j) {
    if (j >= 0) {
        double r = 1.0;
        for (int v = 0; v < j; ++v) r *= d.number(x - v);
        return r;
    }
    const double denom = falling_factorial(d, x - j, -j);
    if (denom == 0.0) throw SingularError("negative-order falling factorial has a zero factor");
    return 1.0 / denom;
}

double binomial_coefficient(const DeformationSpec& d, double x, int k) {
    if (k < 0) throw DomainError("binomial coefficient requires k >= 0");
    return falling_factorial(d, x, k) / factorial(d, k);
}

double shifted_factorial_plus(const DeformationSpec& d, double x, double y, int n) {
    if (n < 0) throw DomainError("shifted factorial requires n >= 0");
    double r = 1.0;
    double e1 = 1.0, e2 = 1.0;
    for (int i = 1; i <= n; ++i) {
        r *= x * e1 + y * e2;
        e1 *= d.eps1();
        e2 *= d.eps2();
    }
    return r;
}

double shifted_factorial_minus(const DeformationSpec& d, double x, double y, int n) {
    if (n < 0) throw DomainError("shifted factorial requires n >= 0");
    double r = 1.0;
    double e1 = 1.0, e2 = 1.0;
    for (int i = 1; i <= n; ++i) {
        r *= x * e1 - y * e2;
        e1 *= d.eps1();
        e2 *= d.eps2();
    }
    return r;
}

Polynomial polynomial_derivative(const DeformationSpec& d, const Polynomial& f) {
    Polynomial out;
    const int deg = f.degree();
    if (deg <= 0) return out;
    out.coefficients.resize(static_cast<std::size_t>(deg));
    for (int n = 1; n <= deg; ++n)
        out.coefficients[static_cast<std::size_t>(n - 1)] =
            d.number(n) * f.coefficients[static_cast<std::size_t>(n)];
    return out;
}

}  // namespace rpq
