#include "rpq/special_functions.hpp"

#include <cmath>

namespace rpq {

namespace {

// Far out [n+1] grows like rho^n, so the term ratio base^n z / [n+1] behaves like
// (base / rho)^n. A base above rho diverges for every z != 0; a base equal to rho
// leaves a finite limiting ratio that must stay below one. Without this check the
// partial sums of a divergent series can pass the small-terms test while the terms
// are still on their way down before the eventual blow-up.
void check_growth(const DeformationSpec& d, double base, double z) {
    if (z == 0.0) return;
    int n = 400;
    double hi = 0.0, lo = 0.0;
    for (; n >= 8; n /= 2) {
        hi = d.number(n + 1);
        lo = d.number(n);
        if (std::isfinite(hi) && std::isfinite(lo) && lo != 0.0) break;
    }
    if (n < 8) return;  // brackets overflow immediately; the running sum guards itself
    const double rho = std::fabs(hi / lo);
    const double rel = std::fabs(base) / rho;
    if (rel > 1.0 + 1e-6) throw ConvergenceError("deformed exponential diverges for every z != 0");
    if (rel < 1.0 - 1e-6) return;
    const double limiting = std::fabs(z) * std::exp(n * std::log(std::fabs(base)) - std::log(std::fabs(hi)));
    if (limiting >= 1.0) throw ConvergenceError("deformed exponential diverges at this |z|");
}

// Terms advance by t_{n+1} = t_n * base^n * z / [n+1], so [n]! never overflows.
double exponential_series(const DeformationSpec& d, double base, double z, SeriesOptions options) {
    check_growth(d, base, z);
    SeriesAccumulator acc(options);
    double term = 1.0;
    double base_power = 1.0;  // base^n
    for (int n = 0;; ++n) {
        if (acc.add(term)) break;
        acc.check_budget();
        term *= base_power * z / d.number(n + 1);
        base_power *= base;
    }
    return acc.sum();
}

}  // namespace

double exp_big_E(const DeformationSpec& d, double z, SeriesOptions options) {
    return exponential_series(d, d.eps2(), z, options);
}

double exp_small_e(const DeformationSpec& d, double z, SeriesOptions options) {
    if (d.kind() == Kind::ArikCoon && d.base_step() == 0 && std::fabs(z) >= 1.0 / (1.0 - d.q()))
        throw ConvergenceError("arik-coon e(z) needs |z| < 1/(1-q)");
    return exponential_series(d, d.eps1(), z, options);
}

}  // namespace rpq
