#include "rpq/combinatorics.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>
#include <optional>

#include "number_kernel.hpp"
#include "rpq/stirling_solver.hpp"

namespace rpq {

namespace {

using Wide = boost::multiprecision::cpp_bin_float_50;

double choose2(double n) { return n * (n - 1.0) / 2.0; }

// num1 * num2 / (den1 * den2) * exp(log_weight), accumulated in log magnitude so a
// vanishing weight cannot zero out a growing bracket before they meet.
double term_ratio(double num1, double num2, double den1, double den2, double log_weight) {
    for (double f : {num1, num2, den1, den2})
        if (!std::isfinite(f)) throw ConvergenceError("series brackets overflow before convergence");
    if (num1 == 0.0 || num2 == 0.0) return 0.0;
    const int flips = (num1 < 0) + (num2 < 0) + (den1 < 0) + (den2 < 0);
    const double log_mag = std::log(std::fabs(num1)) + std::log(std::fabs(num2)) -
                           std::log(std::fabs(den1)) - std::log(std::fabs(den2)) + log_weight;
    const double mag = std::exp(log_mag);
    return flips % 2 == 1 ? -mag : mag;
}

}  // namespace

double euler_expansion(const DeformationSpec& d, double x, double y, int n) {
    if (n < 0) throw DomainError("euler_expansion requires n >= 0");
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        sum += binomial_coefficient(d, n, k) * std::pow(d.eps1(), choose2(n - k)) *
               std::pow(d.eps2(), choose2(k)) * std::pow(x, n - k) * std::pow(y, k);
    }
    return sum;
}

Variant resolve_variant(const DeformationSpec& d, Variant v) {
    if (v != Variant::Automatic) return v;
    return d.eps1() > d.eps2() ? Variant::B : Variant::A;
}

double vandermonde(const DeformationSpec& d, double u, double v, int n, Variant variant) {
    if (n < 1) throw DomainError("vandermonde requires n >= 1");
    const bool a = resolve_variant(d, variant) == Variant::A;
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double e_left = k * (v - n + k);
        const double e_right = (n - k) * (u - k);
        const double w = a ? std::pow(d.eps1(), e_left) * std::pow(d.eps2(), e_right)
                            : std::pow(d.eps1(), e_right) * std::pow(d.eps2(), e_left);
        sum += binomial_coefficient(d, n, k) * w * falling_factorial(d, u, k) *
               falling_factorial(d, v, n - k);
    }
    return sum;
}

double negative_vandermonde(const DeformationSpec& d, double u, double v, int n,
                            SeriesOptions options, Variant variant) {
    if (n < 1) throw DomainError("negative_vandermonde requires n >= 1");
    const bool a = resolve_variant(d, variant) == Variant::A;
    const double e1 = d.eps1(), e2 = d.eps2();
    double term = std::pow(a ? e2 : e1, -static_cast<double>(n) * u) * falling_factorial(d, v, -n);
    SeriesAccumulator acc(options);
    for (int k = 0;; ++k) {
        if (acc.add(term)) break;
        acc.check_budget();
        const double zero_factor = d.number(u - k);
        if (zero_factor == 0.0) break;  // [u]_{k+1} and every later term vanish
        const double grow = v + n + 2.0 * k + 1.0;
        const double shrink = n + 2.0 * k + 1.0 - u;
        const double log_weight = a ? grow * std::log(e1) + shrink * std::log(e2)
                                    : shrink * std::log(e1) + grow * std::log(e2);
        const double below = d.number(k + 1), shifted = d.number(v + n + k + 1);
        if (below == 0.0 || shifted == 0.0)
            throw SingularError("negative Vandermonde series hits a zero bracket");
        term *= term_ratio(d.number(-n - k), zero_factor, below, shifted, log_weight);
    }
    return acc.sum();
}

double reciprocal_factorial_series(const DeformationSpec& d, double u, double v, int n,
                                   SeriesOptions options, Variant variant) {
    if (n < 1) throw DomainError("reciprocal_factorial_series requires n >= 1");
    const bool a = resolve_variant(d, variant) == Variant::A;
    const double e1 = d.eps1(), e2 = d.eps2();
    const double head = falling_factorial(d, u + v, n);
    if (head == 0.0) throw SingularError("reciprocal series has [u+v]_n = 0");
    double term = std::pow(a ? e1 : e2, static_cast<double>(n) * u) / head;
    const double log_weight = a ? -n * std::log(e1) + (v - n + 1.0) * std::log(e2)
                                : (v - n + 1.0) * std::log(e1) - n * std::log(e2);
    SeriesAccumulator acc(options);
    for (int k = 0;; ++k) {
        if (acc.add(term)) break;
        acc.check_budget();
        const double zero_factor = d.number(u - k);
        if (zero_factor == 0.0) break;
        const double below = d.number(k + 1), shifted = d.number(u + v - n - k);
        if (below == 0.0 || shifted == 0.0) throw SingularError("reciprocal series hits a zero bracket");
        term *= term_ratio(d.number(n + k), zero_factor, below, shifted, log_weight);
    }
    return acc.sum();
}

double StirlingTable::at(int n, int k) const {
    if (n < 0 || n > n_max || k < 0) throw DependencyError("Stirling entry out of range");
    if (k > n) return 0.0;
    return entries[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

StirlingTable stirling_table(const DeformationSpec& d, StirlingKind kind, int j, int n_max) {
    if (n_max < 0 || n_max > kStirlingMaxOrder)
        throw DomainError("stirling_table requires 0 <= n_max <= 20");
    StirlingTable table{kind, j, n_max, {}, d, 0.0};
    stirling::SolveStats stats;

    if (d.kind() == Kind::Custom) {
        stirling::Nodes<double> nodes{[&d](int x) { return d.number(x); }, d.eps2(), j};
        const std::function<double(const double&)> id = [](const double& v) { return v; };
        table.entries = kind == StirlingKind::First ? stirling::solve_first_kind(nodes, n_max, &stats, id)
                                                    : stirling::solve_second_kind(nodes, n_max, &stats, id);
        table.condition = stats.max_condition;
        if (stats.max_condition > 1e12)
            throw ConditioningError("Stirling system condition estimate exceeds 1e12");
        return table;
    }

    const Wide p(d.p()), q(d.q()), mu(d.mu()), nu(d.nu()), g(d.g());
    const Kind k = d.kind();
    stirling::Nodes<Wide> nodes{
        [=](int x) { return detail::kind_number<Wide>(k, p, q, mu, nu, g, Wide(x)); },
        q, j};
    // eps2 is q or 1/q for every predefined kind, base-changed or not; recompute it
    // in working precision rather than widening the rounded double.
    if (k == Kind::Quesne || k == Kind::GeneralizedQuesne || k == Kind::MultiParameter)
        nodes.eps2 = Wide(1) / q;

    const std::function<double(const Wide&)> narrow = [](const Wide& v) {
        return v > Wide(std::numeric_limits<double>::max()) ? std::numeric_limits<double>::infinity()
                                                            : v.convert_to<double>();
    };
    const auto wide = kind == StirlingKind::First ? stirling::solve_first_kind(nodes, n_max, &stats, narrow)
                                                  : stirling::solve_second_kind(nodes, n_max, &stats, narrow);
    // Guard in double-equivalent units: cond * u_work <= 1e12 * u_double.
    const double u_double = std::numeric_limits<double>::epsilon() / 2.0;
    const double u_work = std::ldexp(1.0, -std::numeric_limits<Wide>::digits);
    table.condition = stats.max_condition * u_work / u_double;
    if (!(table.condition <= 1e12))
        throw ConditioningError("Stirling system is too ill-conditioned for the working precision");

    table.entries.resize(wide.size());
    for (std::size_t n = 0; n < wide.size(); ++n) {
        table.entries[n].resize(wide[n].size());
        for (std::size_t c = 0; c < wide[n].size(); ++c) table.entries[n][c] = narrow(wide[n][c]);
    }
    return table;
}

std::optional<StirlingTable> stirling_first_by_expansion(const DeformationSpec& d, int n_max) {
    if (n_max < 0) throw DomainError("stirling_first_by_expansion requires n_max >= 0");
    // [x-v] = slope_v ([x] - [v]); the slope is read at two probes and must agree.
    constexpr double probe_a = 0.37, probe_b = 2.71;
    std::vector<double> slope(static_cast<std::size_t>(n_max));
    for (int v = 0; v < n_max; ++v) {
        const double at_v = d.number(v);
        const double sa = d.number(probe_a - v) / (d.number(probe_a) - at_v);
        const double sb = d.number(probe_b - v) / (d.number(probe_b) - at_v);
        if (!std::isfinite(sa) || !std::isfinite(sb)) return std::nullopt;
        if (std::fabs(sa - sb) > 1e-10 * std::max(std::fabs(sa), std::fabs(sb))) return std::nullopt;
        slope[static_cast<std::size_t>(v)] = 0.5 * (sa + sb);
    }

    StirlingTable table{StirlingKind::First, 0, n_max, {}, d, 1.0};
    // coeffs holds prod_{v<n} ([x] - [v]); signs alternate by degree, so the update
    // below adds like-signed values and never cancels.
    std::vector<double> coeffs{1.0};
    double scale = 1.0;  // eps2^C(n,2) prod_{v<n} slope_v
    table.entries.push_back({1.0});
    for (int n = 1; n <= n_max; ++n) {
        const double root = d.number(n - 1);
        std::vector<double> next(coeffs.size() + 1, 0.0);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            next[k + 1] += coeffs[k];
            next[k] -= root * coeffs[k];
        }
        coeffs = std::move(next);
        scale *= std::pow(d.eps2(), n - 1) * slope[static_cast<std::size_t>(n - 1)];
        std::vector<double> row(coeffs.size());
        for (std::size_t k = 0; k < coeffs.size(); ++k) row[k] = scale * coeffs[k];
        table.entries.push_back(std::move(row));
    }
    return table;
}

double conversion_weight(const DeformationSpec& d, const StirlingTable& first_kind, int m, int j,
                         int tau) {
    const int gap = m - j;
    const double sign = gap % 2 == 0 ? 1.0 : -1.0;
    return sign * std::pow(d.eps1() - d.eps2(), gap) *
           std::pow(d.eps1(), choose2(m) - static_cast<double>(tau) * gap) * first_kind.at(m, j);
}

namespace {

double conversion_sum(const DeformationSpec& d, const std::vector<double>& moments, int j, int tau,
                      bool factorial_weighting) {
    if (j < 0) throw DomainError("conversion order must be nonnegative");
    if (static_cast<int>(moments.size()) <= j)
        throw DependencyError("deformed moments must be supplied up to at least order j");
    const int top = static_cast<int>(moments.size()) - 1;
    if (top > kStirlingMaxOrder)
        throw DependencyError("conversion needs Stirling rows beyond order 20");
    const StirlingTable s = stirling_table(d, StirlingKind::First, 0, top);
    double sum = 0.0;
    for (int m = j; m <= top; ++m) {
        double term = conversion_weight(d, s, m, j, tau) * moments[static_cast<std::size_t>(m)];
        if (factorial_weighting) term /= factorial(d, m);
        sum += term;
    }
    if (factorial_weighting) sum *= std::tgamma(j + 1.0);
    return sum;
}

}  // namespace

double classical_binomial_moment(const DeformationSpec& d,
                                 const std::vector<double>& deformed_binomial_moments, int j,
                                 int tau) {
    return conversion_sum(d, deformed_binomial_moments, j, tau, false);
}

double classical_factorial_moment(const DeformationSpec& d,
                                  const std::vector<double>& deformed_factorial_moments, int j,
                                  int tau) {
    return conversion_sum(d, deformed_factorial_moments, j, tau, true);
}

}  // namespace rpq
