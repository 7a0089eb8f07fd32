#include "rpq/audit.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <future>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <variant>

#include <nlohmann/json.hpp>

#include "rpq/combinatorics.hpp"
#include "rpq/distributions.hpp"
#include "rpq/serialization.hpp"
#include "rpq/special_functions.hpp"

namespace rpq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double choose2(double n) { return n * (n - 1.0) / 2.0; }

// |lhs - rhs| measured against the larger of |lhs| and the magnitude of the summed terms.
double term_residual(double lhs, double rhs, double scale) {
    const double diff = std::fabs(lhs - rhs);
    const double s = std::max(std::fabs(lhs), scale);
    return s > 0.0 ? diff / s : diff;
}

double rel_diff(double a, double b) {
    const double s = std::max(std::fabs(a), std::fabs(b));
    return s > 0.0 ? std::fabs(a - b) / s : 0.0;
}

std::string pt(std::initializer_list<std::pair<const char*, double>> fields) {
    std::string out;
    for (const auto& [name, value] : fields) {
        if (!out.empty()) out += ",";
        out += name;
        out += "=";
        out += format_double(value);
    }
    return out;
}

// Accumulates the worst residual of one identity on one deformation.
class Tracker {
public:
    Tracker(std::string suite, std::string id, const DeformationSpec& d, double tol,
            bool reported = false, bool allow_empty = false)
        : reported_(reported), allow_empty_(allow_empty) {
        entry_.suite = std::move(suite);
        entry_.identity_id = std::move(id);
        entry_.deformation = d.descriptor();
        entry_.tolerance = tol;
    }

    void observe(double residual, const std::string& where) {
        if (std::isnan(residual)) residual = kInf;
        ++entry_.evaluated;
        if (entry_.evaluated == 1 || residual > entry_.max_residual) {
            entry_.max_residual = residual;
            entry_.point = where;
        }
    }

    // Runs f() and records its residual. A ConvergenceError means the point lies
    // outside the region where the object exists, so it is counted as skipped. Other
    // library errors fail the point unless skip_any_error is set.
    template <class F>
    void probe(const std::string& where, F&& f, bool skip_any_error = false) {
        try {
            observe(f(), where);
        } catch (const ConvergenceError&) {
            ++entry_.skipped;
        } catch (const Error& e) {
            if (skip_any_error)
                ++entry_.skipped;
            else
                observe(kInf, where + " [" + e.what() + "]");
        }
    }

    AuditEntry finish() {
        if (entry_.evaluated == 0) {
            entry_.point = "no point evaluated";
            entry_.max_residual = allow_empty_ ? 0.0 : kInf;
            entry_.status = allow_empty_ ? AuditStatus::Reported : AuditStatus::Fail;
            return entry_;
        }
        if (reported_)
            entry_.status = AuditStatus::Reported;
        else
            entry_.status = entry_.max_residual <= entry_.tolerance ? AuditStatus::Pass : AuditStatus::Fail;
        return entry_;
    }

private:
    AuditEntry entry_;
    bool reported_;
    bool allow_empty_;
};

using Entries = std::vector<AuditEntry>;

std::vector<double> half_steps(double lo, double hi) {
    std::vector<double> out;
    for (double v = lo; v <= hi + 1e-12; v += 0.5) out.push_back(v);
    return out;
}

// --- structural -------------------------------------------------------------

void structural(const DeformationSpec& d, Entries& out) {
    const double e1 = d.eps1(), e2 = d.eps2();
    Tracker add("structural", "addition-law", d, 1e-9);
    Tracker add_fixed("structural", "addition-law-sign-corrected", d, 1e-9, true);
    for (double x : half_steps(-2, 4)) {
        for (double y : half_steps(-2, 4)) {
            const double lhs = d.number(x - y);
            const double t1 = std::pow(e1, -y) * d.number(x);
            const double t2 = std::pow(e1, -y) * std::pow(e2, x - y) * d.number(y);
            const double scale = std::fabs(t1) + std::fabs(t2);
            add.observe(term_residual(lhs, t1 + t2, scale), pt({{"x", x}, {"y", y}}));
            add_fixed.observe(term_residual(lhs, t1 - t2, scale), pt({{"x", x}, {"y", y}}));
        }
    }
    out.push_back(add.finish());
    out.push_back(add_fixed.finish());

    Tracker pascal("structural", "pascal-recursion", d, 1e-9);
    for (int x = 1; x <= 12; ++x) {
        for (int k = 0; k <= x; ++k) {
            const double lhs = binomial_coefficient(d, x, k);
            const double t1 = std::pow(e1, k) * binomial_coefficient(d, x - 1, k);
            const double t2 = k == 0 ? 0.0 : std::pow(e2, x - k) * binomial_coefficient(d, x - 1, k - 1);
            pascal.observe(term_residual(lhs, t1 + t2, std::fabs(t1) + std::fabs(t2)),
                           pt({{"x", x}, {"k", k}}));
        }
    }
    out.push_back(pascal.finish());

    Tracker sym("structural", "binomial-symmetry", d, 1e-12);
    for (int m = 0; m <= 12; ++m)
        for (int k = 0; k <= m; ++k)
            sym.observe(rel_diff(binomial_coefficient(d, m, k), binomial_coefficient(d, m, m - k)),
                        pt({{"m", m}, {"k", k}}));
    out.push_back(sym.finish());

    Tracker euler("structural", "euler-expansion", d, 1e-9);
    for (double x : {0.5, 1.0, 2.0}) {
        for (double y : {0.5, 1.0, 2.0}) {
            for (int n = 0; n <= 8; ++n) {
                double scale = 0.0;
                for (int k = 0; k <= n; ++k)
                    scale += std::fabs(binomial_coefficient(d, n, k) * std::pow(e1, choose2(n - k)) *
                                       std::pow(e2, choose2(k)) * std::pow(x, n - k) * std::pow(y, k));
                euler.observe(term_residual(shifted_factorial_plus(d, x, y, n),
                                            euler_expansion(d, x, y, n), scale),
                              pt({{"x", x}, {"y", y}, {"n", n}}));
            }
        }
    }
    out.push_back(euler.finish());

    Tracker action("structural", "algebra-action", d, 1e-12);
    for (int n = 0; n <= 10; ++n) {
        Polynomial raised{std::vector<double>(static_cast<std::size_t>(n + 2), 0.0)};
        raised.coefficients[static_cast<std::size_t>(n + 1)] = 1.0;
        const double lowered = polynomial_derivative(d, raised).coefficient(static_cast<std::size_t>(n));
        action.observe(rel_diff(lowered, d.number(n + 1)), pt({{"n", n}, {"side", 0}}));
        Polynomial mono{std::vector<double>(static_cast<std::size_t>(n + 1), 0.0)};
        mono.coefficients[static_cast<std::size_t>(n)] = 1.0;
        const double back = n == 0 ? 0.0 : polynomial_derivative(d, mono).coefficient(static_cast<std::size_t>(n - 1));
        action.observe(rel_diff(back, d.number(n)), pt({{"n", n}, {"side", 1}}));
    }
    out.push_back(action.finish());
}

// --- vandermonde --------------------------------------------------------------

void vandermonde_suite(const DeformationSpec& d, Entries& out) {
    const std::vector<double> grid = half_steps(-1, 4);
    for (Variant v : {Variant::A, Variant::B}) {
        Tracker t("vandermonde", v == Variant::A ? "vandermonde-a" : "vandermonde-b", d, 1e-8);
        const double e1 = d.eps1(), e2 = d.eps2();
        for (double a : grid) {
            for (double b : grid) {
                for (int n = 1; n <= 6; ++n) {
                    t.probe(pt({{"u", a}, {"v", b}, {"n", n}}), [&] {
                        double scale = 0.0;
                        for (int k = 0; k <= n; ++k) {
                            const double el = k * (b - n + k), er = (n - k) * (a - k);
                            const double w = v == Variant::A ? std::pow(e1, el) * std::pow(e2, er)
                                                             : std::pow(e1, er) * std::pow(e2, el);
                            scale += std::fabs(binomial_coefficient(d, n, k) * w *
                                               falling_factorial(d, a, k) * falling_factorial(d, b, n - k));
                        }
                        return term_residual(falling_factorial(d, a + b, n), vandermonde(d, a, b, n, v), scale);
                    });
                }
            }
        }
        out.push_back(t.finish());
    }

    const Variant chosen = resolve_variant(d, Variant::Automatic);
    const Variant other = chosen == Variant::A ? Variant::B : Variant::A;
    const std::vector<double> us = {0.5, 1.5, 2.0, 3.0};
    const std::vector<double> vs = {-3.3, -0.6, 0.4, 2.2};
    struct Series {
        const char* id;
        Variant variant;
        bool reported;
        bool reciprocal;
    };
    for (const Series s : {Series{"negative-vandermonde", chosen, false, false},
                           Series{"negative-vandermonde-other-variant", other, true, false},
                           Series{"reciprocal-series", chosen, false, true},
                           Series{"reciprocal-series-other-variant", other, true, true}}) {
        Tracker t("vandermonde", s.id, d, 1e-8, s.reported, true);
        for (double a : us) {
            for (double b : vs) {
                for (int n = 1; n <= 3; ++n) {
                    t.probe(pt({{"u", a}, {"v", b}, {"n", n}}), [&] {
                        if (s.reciprocal) {
                            const double ref = 1.0 / falling_factorial(d, b, n);
                            return rel_diff(reciprocal_factorial_series(d, a, b, n, {}, s.variant), ref);
                        }
                        const double ref = falling_factorial(d, a + b, -n);
                        return rel_diff(negative_vandermonde(d, a, b, n, {}, s.variant), ref);
                    }, true);
                }
            }
        }
        out.push_back(t.finish());
    }
}

// --- stirling -------------------------------------------------------------------

void stirling_suite(const DeformationSpec& d, Entries& out) {
    const double e2 = d.eps2();
    for (StirlingKind kind : {StirlingKind::First, StirlingKind::Second}) {
        const bool first = kind == StirlingKind::First;
        Tracker t("stirling", first ? "stirling-first-kind" : "stirling-second-kind", d, 1e-7);
        for (int j = 0; j <= 2; ++j) {
            std::optional<StirlingTable> table;
            try {
                table = stirling_table(d, kind, j, 8);
            } catch (const Error& e) {
                t.observe(kInf, pt({{"j", j}}) + " [" + e.what() + "]");
                continue;
            }
            for (int i = 0; i < 20; ++i) {
                const double x = j - 0.9 + 0.43 * i;
                for (int n = 0; n <= 8; ++n) {
                    double lhs = 0.0, rhs = 0.0, scale = 0.0;
                    if (first) {
                        lhs = falling_factorial(d, x - j, n);
                        const double pre = std::pow(e2, -choose2(n) - static_cast<double>(j) * n);
                        for (int k = 0; k <= n; ++k) {
                            const double term = pre * table->at(n, k) * std::pow(d.number(x), k);
                            rhs += term;
                            scale += std::fabs(term);
                        }
                    } else {
                        lhs = std::pow(d.number(x), n);
                        for (int k = 0; k <= n; ++k) {
                            const double term = std::pow(e2, choose2(k) + static_cast<double>(j) * k) *
                                                table->at(n, k) * falling_factorial(d, x - j, k);
                            rhs += term;
                            scale += std::fabs(term);
                        }
                    }
                    t.observe(term_residual(lhs, rhs, scale), pt({{"j", j}, {"n", n}, {"x", x}}));
                }
            }
        }
        out.push_back(t.finish());
    }
}

// --- exponential ------------------------------------------------------------------

void exponential_suite(const DeformationSpec& d, Entries& out) {
    Tracker t("exponential", "exponential-reciprocity", d, 1e-8);
    for (double z : {0.1, 0.3, 0.7})
        t.probe(pt({{"z", z}}), [&] { return std::fabs(exp_big_E(d, -z) * exp_small_e(d, z) - 1.0); });
    out.push_back(t.finish());
}

// --- distribution parameter points -------------------------------------------------

const std::vector<BinomialParams>& binomial_points() {
    static const std::vector<BinomialParams> points = [] {
        std::vector<BinomialParams> v;
        for (int n : {1, 2, 5, 8})
            for (double p0 : {0.2, 0.45, 0.7}) v.push_back({n, p0});
        return v;
    }();
    return points;
}

const std::vector<EulerParams>& euler_points() {
    // Moment oracles weight the tail by brackets that may grow geometrically, so the
    // support is cut far below the probability tolerance.
    static const std::vector<EulerParams> points = {{0.2, 1e-40}, {0.5, 1e-40}, {0.9, 1e-40}};
    return points;
}

const std::vector<PolyaParams>& polya_points() {
    static const std::vector<PolyaParams> points = {PolyaParams::from_urn(4, 3, 5, 1),
                                                    PolyaParams::from_urn(3, 2, 3, 2),
                                                    PolyaParams::from_urn(5, 6, 4, -1)};
    return points;
}

struct HyperPoint {
    int n;
    double m, u;
};
const std::vector<HyperPoint>& hyper_points() {
    static const std::vector<HyperPoint> points = {{3, 5, 6}, {4, 4, 7}};
    return points;
}

const std::vector<InversePolyaParams>& inverse_points() {
    static const std::vector<InversePolyaParams> points = [] {
        InversePolyaParams finite;
        finite.n = 2, finite.m = 3, finite.u = 4, finite.x_step = -1;
        InversePolyaParams infinite;
        infinite.n = 2, infinite.m = -2.5, infinite.u = -1.7, infinite.x_step = 1;
        InversePolyaParams urn = InversePolyaParams::from_urn(2, 3, 2, 1);
        for (auto* p : {&finite, &infinite, &urn}) p->tail_tol = 1e-40;
        return std::vector<InversePolyaParams>{finite, infinite, urn};
    }();
    return points;
}

std::string describe(const BinomialParams& b) { return pt({{"n", b.n}, {"p0", b.p0}}); }
std::string describe(const EulerParams& e) { return pt({{"theta", e.theta}}); }
std::string describe(const PolyaParams& p) {
    return pt({{"n", p.n}, {"m", p.m}, {"u", p.u}, {"x", p.x_step}});
}
std::string describe(const HyperPoint& h) { return pt({{"n", h.n}, {"m", h.m}, {"u", h.u}}); }
std::string describe(const InversePolyaParams& p) {
    return pt({{"n", p.n}, {"m", p.m}, {"u", p.u}, {"x", p.x_step}});
}

// Direct tables are reused across the probes of one suite. Each suite runs on its own
// thread, so a thread-local cache needs no locking. Failures are cached too.
template <class P, class F>
const PmfTable& cached_pmf(const char* family, const DeformationSpec& d, const P& params, F&& make) {
    thread_local std::map<std::string, std::variant<PmfTable, std::exception_ptr>> cache;
    const std::string key = d.descriptor() + "|" + family + "|" + describe(params);
    auto it = cache.find(key);
    if (it == cache.end()) {
        try {
            it = cache.emplace(key, make()).first;
        } catch (...) {
            it = cache.emplace(key, std::current_exception()).first;
        }
    }
    if (const auto* error = std::get_if<std::exception_ptr>(&it->second)) std::rethrow_exception(*error);
    return std::get<PmfTable>(it->second);
}

// Elementwise |a - b| / max(1, |a|, |b|): absolute for genuine probabilities, relative
// for out-of-range tables whose entries can reach astronomic sizes.
double elementwise_residual(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return kInf;
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double scale = std::max({1.0, std::fabs(a[i]), std::fabs(b[i])});
        worst = std::max(worst, std::fabs(a[i] - b[i]) / scale);
    }
    return worst;
}

double elementwise_residual(const PmfTable& a, const PmfTable& b) {
    return elementwise_residual(a.probs, b.probs);
}

// --- normalization ------------------------------------------------------------------

// Normalization and the classical-moment conversions are asserted on ArikCoon only;
// elsewhere they depend on eps1 (and on tau) and are reported.
bool asserted_kind(const DeformationSpec& d) { return d.kind() == Kind::ArikCoon; }

void normalization_suite(const DeformationSpec& d, Entries& out) {
    const bool info = !asserted_kind(d);
    Tracker bin("normalization", "binomial-normalization", d, 1e-9, info);
    Tracker range("normalization", "pmf-range", d, 0.0, true);
    auto note_range = [&](const PmfTable& t, const std::string& where) {
        range.observe(static_cast<double>(t.out_of_range.size()), where);
    };
    for (const auto& b : binomial_points())
        bin.probe(describe(b), [&] {
            const auto& t = cached_pmf("binomial", d, b, [&] { return binomial_pmf(d, b, Method::Direct); });
            note_range(t, "binomial " + describe(b));
            return t.normalization_residual;
        });
    out.push_back(bin.finish());

    Tracker eu("normalization", "euler-normalization", d, 1e-6, info);
    for (const auto& e : euler_points())
        eu.probe(describe(e), [&] {
            const auto& t = cached_pmf("euler", d, e, [&] { return euler_pmf(d, e, Method::Direct); });
            note_range(t, "euler " + describe(e));
            return t.normalization_residual;
        });
    out.push_back(eu.finish());

    Tracker po("normalization", "polya-normalization", d, 1e-9, info);
    for (const auto& p : polya_points())
        po.probe(describe(p), [&] {
            const auto& t = cached_pmf("polya", d, p, [&] { return polya_pmf(d, p, Method::Direct); });
            note_range(t, "polya " + describe(p));
            return t.normalization_residual;
        });
    out.push_back(po.finish());

    Tracker hy("normalization", "hypergeometric-normalization", d, 1e-9, info);
    for (const auto& h : hyper_points())
        hy.probe(describe(h), [&] {
            const auto& t = cached_pmf("hypergeometric", d, h, [&] { return hypergeometric_pmf(d, h.n, h.m, h.u); });
            note_range(t, "hypergeometric " + describe(h));
            return t.normalization_residual;
        });
    out.push_back(hy.finish());

    Tracker inv("normalization", "inverse-polya-normalization", d, 1e-6, info);
    for (const auto& p : inverse_points())
        inv.probe(describe(p), [&] {
            const auto& t = cached_pmf("inverse_polya", d, p, [&] { return inverse_polya_pmf(d, p, Method::Direct); });
            note_range(t, "inverse-polya " + describe(p));
            return t.normalization_residual;
        });
    out.push_back(inv.finish());
    out.push_back(range.finish());
}

// --- recursion ----------------------------------------------------------------------

void recursion_suite(const DeformationSpec& d, Entries& out) {
    Tracker bin("recursion", "binomial-recursion", d, 1e-10);
    Tracker shifted("recursion", "binomial-recursion-shifted-exponent", d, 1e-10, true);
    for (const auto& b : binomial_points()) {
        bin.probe(describe(b), [&] {
            return elementwise_residual(binomial_pmf(d, b, Method::Direct), binomial_pmf(d, b, Method::Recursive));
        });
        shifted.probe(describe(b), [&] {
            return elementwise_residual(binomial_pmf(d, b, Method::Direct),
                                binomial_pmf(d, b, Method::Recursive, BinomialRecursion::ShiftedExponent));
        });
    }
    out.push_back(bin.finish());
    out.push_back(shifted.finish());

    Tracker eu("recursion", "euler-recursion", d, 1e-10);
    for (const auto& e : euler_points())
        eu.probe(describe(e), [&] {
            return elementwise_residual(euler_pmf(d, e, Method::Direct), euler_pmf(d, e, Method::Recursive));
        });
    out.push_back(eu.finish());

    Tracker po("recursion", "polya-recursion", d, 1e-10);
    for (const auto& p : polya_points())
        po.probe(describe(p), [&] {
            return elementwise_residual(polya_pmf(d, p, Method::Direct), polya_pmf(d, p, Method::Recursive));
        });
    for (const auto& h : hyper_points())
        po.probe("hypergeometric " + describe(h), [&] {
            return elementwise_residual(hypergeometric_pmf(d, h.n, h.m, h.u, Method::Direct),
                                hypergeometric_pmf(d, h.n, h.m, h.u, Method::Recursive));
        });
    out.push_back(po.finish());

    Tracker inv("recursion", "inverse-polya-recursion", d, 1e-10);
    for (const auto& p : inverse_points())
        inv.probe(describe(p), [&] {
            return elementwise_residual(inverse_polya_pmf(d, p, Method::Direct),
                                inverse_polya_pmf(d, p, Method::Recursive));
        });
    out.push_back(inv.finish());
}

// --- moments ------------------------------------------------------------------------

void moments_suite(const DeformationSpec& d, Entries& out) {
    Tracker bfm("moments", "binomial-factorial-moment", d, 1e-7);
    Tracker mean("moments", "binomial-mean", d, 1e-8);
    Tracker var("moments", "binomial-variance", d, 1e-8);
    Tracker prod1("moments", "binomial-product-moment-r1", d, 1e-8);
    Tracker prod2("moments", "binomial-product-moment-r2", d, 1e-8);
    Tracker cond("moments", "binomial-variance-condition", d, 0.0, true);
    for (const auto& b : binomial_points()) {
        const std::string where = describe(b);
        std::optional<PmfTable> t;
        try {
            t = binomial_pmf(d, b, Method::Direct);
        } catch (const Error& e) {
            bfm.observe(kInf, where + " [" + e.what() + "]");
            continue;
        }
        for (int j = 1; j <= std::min(2, b.n); ++j)
            bfm.probe(where + ",j=" + std::to_string(j), [&] {
                return rel_diff(binomial_factorial_moment(d, b, j), deformed_factorial_moment(*t, j));
            });
        const double m1 = deformed_factorial_moment(*t, 1);
        double m2 = 0.0;
        for (std::size_t i = 0; i < t->probs.size(); ++i) {
            const double v = d.number(t->support[i]);
            m2 += v * v * t->probs[i];
        }
        mean.probe(where, [&] { return rel_diff(binomial_mean(d, b), m1); });
        var.probe(where, [&] { return rel_diff(binomial_variance(d, b), m2 - m1 * m1); });
        prod1.probe(where, [&] { return binomial_product_moment(d, b, 1).rel_err; });
        if (b.n >= 2) prod2.probe(where, [&] { return binomial_product_moment(d, b, 2).rel_err; });
        cond.probe(where, [&] {
            const double x = (d.number(2) - d.number(1)) / d.number(1);
            const double lhs = x * b.p0 * d.number(b.n - 1);
            const double rhs = b.p0 * d.number(b.n) - d.number(1);
            return lhs > rhs ? 0.0 : rhs - lhs;
        });
    }
    for (Tracker* t : {&bfm, &mean, &var, &prod1, &prod2, &cond}) out.push_back(t->finish());

    Tracker efm("moments", "euler-factorial-moment", d, 1e-5);
    for (const auto& e : euler_points())
        for (int j = 1; j <= 2; ++j)
            efm.probe(describe(e) + ",j=" + std::to_string(j), [&] {
                const auto& t = cached_pmf("euler", d, e, [&] { return euler_pmf(d, e, Method::Direct); });
                return rel_diff(euler_factorial_moment(d, e, j), deformed_factorial_moment(t, j));
            });
    out.push_back(efm.finish());

    Tracker pfm("moments", "polya-factorial-moment", d, 1e-7);
    for (const auto& p : polya_points())
        for (int j = 1; j <= 2; ++j)
            pfm.probe(describe(p) + ",j=" + std::to_string(j), [&] {
                const auto& t = cached_pmf("polya", d, p, [&] { return polya_pmf(d, p, Method::Direct); });
                return rel_diff(polya_factorial_moment(d, p, j), deformed_factorial_moment(t, j));
            });
    out.push_back(pfm.finish());

    // The closed form carries [n-j+1]_j; the rising product [n+j-1]_j is run
    // alongside for comparison (the two agree at j = 1).
    Tracker ifm("moments", "inverse-polya-factorial-moment", d, 1e-5);
    Tracker ifr("moments", "inverse-polya-factorial-moment-rising", d, 1e-5, true);
    for (const auto& p : inverse_points()) {
        const DeformationSpec b = d.base_changed(p.x_step);
        for (int j = 1; j <= 2; ++j) {
            const std::string where = describe(p) + ",j=" + std::to_string(j);
            ifm.probe(where, [&] {
                const auto& t = cached_pmf("inverse_polya", d, p, [&] { return inverse_polya_pmf(d, p, Method::Direct); });
                return rel_diff(inverse_polya_factorial_moment(d, p, j), deformed_factorial_moment(t, j));
            });
            ifr.probe(where, [&] {
                const auto& t = cached_pmf("inverse_polya", d, p, [&] { return inverse_polya_pmf(d, p, Method::Direct); });
                const double rising = falling_factorial(b, p.n + j - 1, j) * falling_factorial(b, p.u, j) /
                                      (std::pow(d.eps2(), j * p.x_step * (p.m - p.n + 1.0)) *
                                       falling_factorial(b, p.m + j, j));
                return rel_diff(rising, deformed_factorial_moment(t, j));
            });
        }
    }
    out.push_back(ifm.finish());
    out.push_back(ifr.finish());
}

// --- conversions --------------------------------------------------------------------

double brute_binomial_moment(const PmfTable& t, int j) {
    double s = 0.0;
    for (std::size_t i = 0; i < t.probs.size(); ++i) {
        const int k = t.support[i];
        if (k < j) continue;
        s += std::exp(std::lgamma(k + 1.0) - std::lgamma(j + 1.0) - std::lgamma(k - j + 1.0)) * t.probs[i];
    }
    return s;
}

void conversions_suite(const DeformationSpec& d, Entries& out) {
    const bool info = !asserted_kind(d);
    Tracker fba("conversions", "classical-binomial-moment", d, 1e-7, info);
    Tracker factorial_conv("conversions", "classical-factorial-moment", d, 1e-7, info);
    auto check_table = [&](const PmfTable& t, const std::string& where) {
        const DeformationSpec bd = t.bracket_deformation();
        const int top = t.support.empty() ? 0 : t.support.back();
        std::vector<double> binom_moments, fact_moments;
        for (int m = 0; m <= top; ++m) {
            double b = 0.0;
            for (std::size_t i = 0; i < t.probs.size(); ++i)
                b += binomial_coefficient(bd, t.support[i], m) * t.probs[i];
            binom_moments.push_back(b);
            fact_moments.push_back(deformed_factorial_moment(t, m));
        }
        for (int j = 1; j <= std::min(3, top); ++j) {
            const std::string w = where + ",j=" + std::to_string(j);
            fba.probe(w, [&] {
                return rel_diff(classical_binomial_moment(bd, binom_moments, j), brute_binomial_moment(t, j));
            });
            factorial_conv.probe(w, [&] {
                return rel_diff(classical_factorial_moment(bd, fact_moments, j),
                                classical_factorial_moment_of(t, j));
            });
        }
    };
    for (const auto& b : binomial_points()) {
        if (b.n < 2) continue;
        try {
            check_table(binomial_pmf(d, b, Method::Direct), "binomial " + describe(b));
        } catch (const Error& e) {
            fba.observe(kInf, describe(b) + " [" + e.what() + "]");
        }
    }
    for (const auto& h : hyper_points()) {
        try {
            check_table(hypergeometric_pmf(d, h.n, h.m, h.u), "hypergeometric " + describe(h));
        } catch (const Error& e) {
            fba.observe(kInf, describe(h) + " [" + e.what() + "]");
        }
    }
    out.push_back(fba.finish());
    out.push_back(factorial_conv.finish());

    Tracker binomial_conv("conversions", "binomial-classical-factorial-moment", d, 1e-7, info);
    for (const auto& b : binomial_points())
        for (int i = 1; i <= std::min(3, b.n); ++i)
            binomial_conv.probe(describe(b) + ",i=" + std::to_string(i), [&] {
                const auto& t = cached_pmf("binomial", d, b, [&] { return binomial_pmf(d, b, Method::Direct); });
                return rel_diff(binomial_classical_factorial_moment(d, b, i), classical_factorial_moment_of(t, i));
            });
    out.push_back(binomial_conv.finish());

    Tracker euler_conv("conversions", "euler-classical-factorial-moment", d, 1e-7, info);
    for (const auto& e : euler_points())
        for (int i = 1; i <= 2; ++i)
            euler_conv.probe(describe(e) + ",i=" + std::to_string(i), [&] {
                const auto& t = cached_pmf("euler", d, e, [&] { return euler_pmf(d, e, Method::Direct); });
                return rel_diff(euler_classical_factorial_moment(d, e, i), classical_factorial_moment_of(t, i));
            });
    out.push_back(euler_conv.finish());

    // The urn conversion takes [n j] in the original deformation; the generic
    // conversion in base-changed brackets is run alongside for comparison.
    Tracker urn_conv("conversions", "polya-classical-factorial-moment", d, 1e-7, true);
    Tracker urn_conv_base("conversions", "polya-classical-factorial-moment-base-changed", d, 1e-7, true);
    for (const auto& p : polya_points()) {
        const DeformationSpec b = d.base_changed(p.x_step);
        for (int i = 1; i <= 2; ++i) {
            const std::string where = describe(p) + ",i=" + std::to_string(i);
            urn_conv.probe(where, [&] {
                const auto& t = cached_pmf("polya", d, p, [&] { return polya_pmf(d, p, Method::Direct); });
                return rel_diff(polya_classical_factorial_moment(d, p, i), classical_factorial_moment_of(t, i));
            });
            urn_conv_base.probe(where, [&] {
                const auto& t = cached_pmf("polya", d, p, [&] { return polya_pmf(d, p, Method::Direct); });
                std::vector<double> moments{1.0};
                for (int j = 1; j <= p.n; ++j) moments.push_back(polya_factorial_moment(d, p, j));
                return rel_diff(classical_factorial_moment(b, moments, i), classical_factorial_moment_of(t, i));
            });
        }
    }
    out.push_back(urn_conv.finish());
    out.push_back(urn_conv_base.finish());

    Tracker inverse_conv("conversions", "inverse-polya-classical-factorial-moment", d, 1e-5, true);
    for (const auto& p : inverse_points())
        for (int i = 1; i <= std::min(2, p.n); ++i)
            inverse_conv.probe(describe(p) + ",i=" + std::to_string(i), [&] {
                const auto& t = cached_pmf("inverse_polya", d, p, [&] { return inverse_polya_pmf(d, p, Method::Direct); });
                return rel_diff(inverse_polya_classical_factorial_moment(d, p, i),
                                classical_factorial_moment_of(t, i));
            });
    out.push_back(inverse_conv.finish());
}

// --- generalized Quesne specializations -------------------------------------------

// Builds P_0..P_n (or a truncated tail) from an initial value and a step ratio.
std::vector<double> chain(double first, std::size_t count, const std::function<double(int)>& ratio) {
    std::vector<double> v{first};
    for (std::size_t k = 1; k < count; ++k) v.push_back(v.back() * ratio(static_cast<int>(k - 1)));
    return v;
}


void quesne_suite(const DeformationSpec& d, Entries& out) {
    const double p = d.p(), q = d.q();
    if (d.kind() == Kind::MultiParameter) {
        const DeformationSpec base = DeformationSpec::generalized_quesne(p, q);
        Tracker t("quesne", "multi-parameter-rescaling", d, 1e-10);
        for (int n = 1; n <= 10; ++n)
            t.observe(rel_diff(d.number(n), d.g() * std::pow(q, d.nu() * n) / std::pow(p, d.mu() * n) *
                                                base.number(n)),
                      pt({{"n", n}}));
        out.push_back(t.finish());
        return;
    }
    if (d.kind() != Kind::GeneralizedQuesne) return;

    auto entry = [&](const char* id, double tol) { return Tracker("quesne", id, d, tol); };

    Tracker bridge = entry("bridge-identity", 1e-10);
    for (int n = 1; n <= 10; ++n) {
        const double swapped = (std::pow(p, n) - std::pow(q, -n)) / (p - 1.0 / q);
        bridge.observe(rel_diff(swapped, q / p * d.number(n)), pt({{"n", n}}));
    }
    out.push_back(bridge.finish());

    Tracker comm = entry("quesne-commutation", 1e-10);
    for (int n = 0; n <= 10; ++n) {
        comm.observe(rel_diff(d.number(n + 1) / p - d.number(n), std::pow(q, -n - 1.0)), pt({{"n", n}, {"side", 0}}));
        comm.observe(rel_diff(q * d.number(n + 1) - d.number(n), std::pow(p, n + 1.0)), pt({{"n", n}, {"side", 1}}));
    }
    out.push_back(comm.finish());

    // Binomial specializations.
    Tracker bfm = entry("specialized-binomial-factorial-moment", 1e-9);
    Tracker bcl = entry("specialized-binomial-classical-moment", 1e-9);
    Tracker brec = entry("specialized-binomial-recursion", 1e-9);
    Tracker bmean = entry("specialized-binomial-mean", 1e-9);
    Tracker bvar = entry("specialized-binomial-variance", 1e-9);
    Tracker bprod = entry("specialized-binomial-product-moment", 1e-9);
    for (const auto& b : binomial_points()) {
        const std::string where = describe(b);
        const int n = b.n;
        const double p0 = b.p0;
        for (int j = 1; j <= n; ++j)
            bfm.probe(where + ",j=" + std::to_string(j), [&] {
                return rel_diff(falling_factorial(d, n, j) * std::pow(q / p, j) * std::pow(p0, j),
                                binomial_factorial_moment(d, b, j));
            });
        for (int i = 1; i <= std::min(3, n); ++i)
            bcl.probe(where + ",i=" + std::to_string(i), [&] {
                const StirlingTable s = stirling_table(d, StirlingKind::First, 0, n);
                double sum = 0.0;
                for (int j = i; j <= n; ++j)
                    sum += ((j - i) % 2 == 0 ? 1.0 : -1.0) * binomial_coefficient(d, n, j) * std::pow(p0, j) *
                           std::pow(p - 1.0 / q, j - i) * std::pow(p, choose2(j)) * s.at(j, i);
                return rel_diff(std::tgamma(i + 1.0) * sum, binomial_classical_factorial_moment(d, b, i));
            });
        brec.probe(where, [&] {
            // Its (1 - p0) factor is read as the one-step minus-shifted product.
            const double minus = shifted_factorial_minus(d, 1.0, p0, 1);
            const auto specialized = chain(std::pow(minus, n), static_cast<std::size_t>(n + 1), [&](int k) {
                return d.number(n - k) / d.number(k + 1) * p0 / minus;
            });
            return elementwise_residual(specialized, binomial_pmf(d, b, Method::Direct).probs);
        });
        bmean.probe(where, [&] {
            return rel_diff(p0 * q / p * (std::pow(p, n) - std::pow(q, -n)) / (q - 1.0 / p), binomial_mean(d, b));
        });
        bvar.probe(where, [&] {
            const double a = p0 * q / p;
            const double specialized =
                a * d.number(n) * (1.0 + (1.0 / p + q - 1.0) * a * d.number(n - 1) - a * d.number(n));
            return rel_diff(specialized, binomial_variance(d, b));
        });
        for (int r = 1; r <= std::min(2, n); ++r)
            bprod.probe(where + ",r=" + std::to_string(r), [&] {
                double prod = 1.0;
                for (int i = 0; i < r; ++i) prod *= d.number(n - i);
                const double specialized = std::pow(q, r) * std::pow(p, -r) * std::pow(p0, r) * prod;
                return rel_diff(specialized, binomial_product_moment(d, b, r).closed_form);
            });
    }
    for (Tracker* t : {&bfm, &bcl, &brec, &bmean, &bvar, &bprod}) out.push_back(t->finish());

    // Euler specializations.
    Tracker epmf = entry("specialized-euler-pmf", 1e-9);
    Tracker efm = entry("specialized-euler-factorial-moment", 1e-9);
    Tracker erec = entry("specialized-euler-recursion", 1e-9);
    for (const auto& e : euler_points()) {
        const std::string where = describe(e);
        const double th = e.theta;
        epmf.probe(where, [&] {
            const auto& t = cached_pmf("euler", d, e, [&] { return euler_pmf(d, e, Method::Direct); });
            const double head = exp_big_E(d, -th);
            std::vector<double> specialized;
            for (int x : t.support)
                specialized.push_back(head * std::pow(th, x) * std::pow(p, x) * std::pow(q, choose2(x)) /
                                 (std::pow(q, x) * factorial(d, x)));
            return elementwise_residual(specialized, t.probs);
        });
        for (int j = 1; j <= 2; ++j)
            efm.probe(where + ",j=" + std::to_string(j), [&] {
                const double specialized = std::pow(th, j) * std::pow(p, choose2(j)) * exp_big_E(d, -th) *
                                      exp_small_e(d, std::pow(p, j) * th);
                return rel_diff(specialized, euler_factorial_moment(d, e, j));
            });
        erec.probe(where, [&] {
            const auto& t = cached_pmf("euler", d, e, [&] { return euler_pmf(d, e, Method::Direct); });
            const auto specialized = chain(exp_big_E(d, -th), t.probs.size(), [&](int x) {
                return th * std::pow(p, x + 1.0) / (q * d.number(x + 1));
            });
            return elementwise_residual(specialized, t.probs);
        });
    }
    for (Tracker* t : {&epmf, &efm, &erec}) out.push_back(t->finish());

    // Polya specializations; brackets at (p^-x, q^-x).
    Tracker ppmf = entry("specialized-polya-pmf", 1e-9);
    Tracker pfm = entry("specialized-polya-factorial-moment", 1e-9);
    Tracker pcl = entry("specialized-polya-classical-moment", 1e-9);
    Tracker prec = entry("specialized-polya-recursion", 1e-9);
    for (const auto& pp : polya_points()) {
        const std::string where = describe(pp);
        const int n = pp.n, x = pp.x_step;
        const double m = pp.m, u = pp.u;
        const DeformationSpec b = d.base_changed(x);
        ppmf.probe(where, [&] {
            const auto& t = cached_pmf("polya", d, pp, [&] { return polya_pmf(d, pp, Method::Direct); });
            std::vector<double> specialized;
            for (int k = 0; k <= n; ++k)
                specialized.push_back(std::pow(q, x * (m - k) * (n - k)) / std::pow(p, x * k * (u - n + k)) *
                                 binomial_coefficient(b, n, k) * falling_factorial(b, m, k) *
                                 falling_factorial(b, u, n - k) / falling_factorial(b, m + u, n));
            return elementwise_residual(specialized, t.probs);
        });
        for (int j = 1; j <= std::min(2, n); ++j)
            pfm.probe(where + ",j=" + std::to_string(j), [&] {
                const double specialized = std::pow(q / p, -x * j) * falling_factorial(b, n, j) *
                                      falling_factorial(b, m, j) / falling_factorial(b, m + u, j);
                return rel_diff(specialized, polya_factorial_moment(d, pp, j));
            });
        for (int i = 1; i <= std::min(2, n); ++i)
            pcl.probe(where + ",i=" + std::to_string(i), [&] {
                const StirlingTable s = stirling_table(b, StirlingKind::First, 0, n);
                double sum = 0.0;
                for (int j = i; j <= n; ++j) {
                    const double pji = std::pow(p, choose2(j)) * std::pow(std::pow(p, -x) - std::pow(q, x), j - i) *
                                       falling_factorial(b, m, j) / falling_factorial(b, m + u, j);
                    sum += ((j - i) % 2 == 0 ? 1.0 : -1.0) * binomial_coefficient(b, n, j) * s.at(j, i) * pji;
                }
                return rel_diff(std::tgamma(i + 1.0) * sum, polya_classical_factorial_moment(d, pp, i));
            });
        prec.probe(where, [&] {
            const auto& t = cached_pmf("polya", d, pp, [&] { return polya_pmf(d, pp, Method::Direct); });
            const double first = std::pow(q, x * m * n) * falling_factorial(b, u, n) / falling_factorial(b, m + u, n);
            const auto specialized = chain(first, static_cast<std::size_t>(n + 1), [&](int k) {
                return std::pow(p, x * (u - n + 2.0 * k + 1.0)) / std::pow(q, x * (n + m - 2.0 * k - 1.0)) *
                       b.number(n - k) / b.number(u - n + k + 1) * b.number(m - k) / b.number(k + 1);
            });
            return elementwise_residual(specialized, t.probs);
        });
    }
    for (Tracker* t : {&ppmf, &pfm, &pcl, &prec}) out.push_back(t->finish());

    // Inverse Polya specializations.
    Tracker ipmf = entry("specialized-inverse-polya-pmf", 1e-9);
    Tracker ifm = entry("specialized-inverse-polya-factorial-moment", 1e-9);
    Tracker irec = entry("specialized-inverse-polya-recursion", 1e-9);
    for (const auto& ip : inverse_points()) {
        const std::string where = describe(ip);
        const int n = ip.n, x = ip.x_step;
        const double m = ip.m, u = ip.u;
        const DeformationSpec b = d.base_changed(x);
        ipmf.probe(where, [&] {
            const auto& t = cached_pmf("inverse_polya", d, ip, [&] { return inverse_polya_pmf(d, ip, Method::Direct); });
            std::vector<double> specialized;
            for (int y : t.support)
                specialized.push_back(std::pow(p, n * (u - x)) / std::pow(q, x * y * (m - n + 1)) *
                                 binomial_coefficient(b, n + y - 1, y) * falling_factorial(b, m, n) *
                                 falling_factorial(b, u, y) / falling_factorial(b, m + u, n + y));
            return elementwise_residual(specialized, t.probs);
        });
        for (int j = 1; j <= 2; ++j)
            ifm.probe(where + ",j=" + std::to_string(j), [&] {
                const double specialized = falling_factorial(b, n - j + 1, j) * falling_factorial(b, u, j) /
                                      (std::pow(q, -j * x * (m - n + 1)) * falling_factorial(b, m + j, j)) *
                                      std::pow(q / p, -x * j);
                return rel_diff(specialized, inverse_polya_factorial_moment(d, ip, j));
            });
        irec.probe(where, [&] {
            const auto& t = cached_pmf("inverse_polya", d, ip, [&] { return inverse_polya_pmf(d, ip, Method::Direct); });
            const double first = std::pow(p, n * (u - x)) * falling_factorial(b, m, n) / falling_factorial(b, m + u, n);
            // This specialization writes the step brackets at (p, q) rather than (p^-x, q^-x).
            const auto specialized = chain(first, t.probs.size(), [&](int y) {
                return std::pow(q, x * (m - n + 1)) * d.number(n + y) * d.number(u - y) /
                       (d.number(y + 1) * d.number(m + u - n - y));
            });
            return elementwise_residual(specialized, t.probs);
        });
    }
    for (Tracker* t : {&ipmf, &ifm, &irec}) out.push_back(t->finish());
}

// --- classical limits ------------------------------------------------------------

double classical_choose(double n, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= (n - i) / (i + 1.0);
    return r;
}

void limits_suite(Entries& out) {
    const double q = 1.0 - 1e-6, p = 1.0 - 1e-7;
    const std::vector<DeformationSpec> probes = {
        DeformationSpec::arik_coon(q), DeformationSpec::quesne(q),
        DeformationSpec::jagannathan_srinivasa(p, q), DeformationSpec::jagannathan_srinivasa(1.0, q),
        DeformationSpec::chakrabarty_jagannathan(1.0, q)};
    for (const auto& d : probes) {
        Tracker num("limits", "limit-number", d, 1e-4);
        for (int n = 1; n <= 10; ++n) num.observe(std::fabs(d.number(n) - n), pt({{"n", n}}));
        out.push_back(num.finish());

        Tracker bin("limits", "limit-binomial-pmf", d, 1e-3);
        for (const auto& b : binomial_points())
            bin.probe(describe(b), [&] {
                const auto& t = cached_pmf("binomial", d, b, [&] { return binomial_pmf(d, b, Method::Direct); });
                std::vector<double> classical;
                for (int k = 0; k <= b.n; ++k)
                    classical.push_back(classical_choose(b.n, k) * std::pow(b.p0, k) * std::pow(1 - b.p0, b.n - k));
                return elementwise_residual(classical, t.probs);
            });
        out.push_back(bin.finish());

        Tracker hy("limits", "limit-hypergeometric-pmf", d, 1e-3);
        for (const auto& h : hyper_points())
            hy.probe(describe(h), [&] {
                const auto& t = cached_pmf("hypergeometric", d, h, [&] { return hypergeometric_pmf(d, h.n, h.m, h.u); });
                std::vector<double> classical;
                for (int k = 0; k <= h.n; ++k)
                    classical.push_back(classical_choose(h.m, k) * classical_choose(h.u, h.n - k) /
                                        classical_choose(h.m + h.u, h.n));
                return elementwise_residual(classical, t.probs);
            });
        out.push_back(hy.finish());

        Tracker eu("limits", "limit-euler-poisson", d, 1e-3);
        for (const auto& e : euler_points())
            eu.probe(describe(e), [&] {
                const auto& t = cached_pmf("euler", d, e, [&] { return euler_pmf(d, e, Method::Direct); });
                std::vector<double> classical;
                for (int x : t.support)
                    classical.push_back(std::exp(-e.theta + x * std::log(e.theta) - std::lgamma(x + 1.0)));
                return elementwise_residual(classical, t.probs);
            });
        out.push_back(eu.finish());

        Tracker ex("limits", "limit-exponential", d, 1e-4);
        for (double z : {0.1, 0.5, 1.0})
            ex.probe(pt({{"z", z}}), [&] { return rel_diff(exp_big_E(d, z), std::exp(z)); });
        out.push_back(ex.finish());

        Tracker urn("limits", "limit-urn-probability", d, 1e-3);
        for (int x : {-1, 1, 2})
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= i; ++j)
                    urn.probe(pt({{"x", x}, {"i", i}, {"j", j}}), [&] {
                        const int r = 4, s = 5;
                        const double classical = (r + x * (j - 1.0)) / (r + s + x * (i - 1.0));
                        return std::fabs(urn_draw_probability_counts(d, i, j, r, s, x) - classical);
                    });
        out.push_back(urn.finish());
    }
}

// --- sampling ---------------------------------------------------------------------

void sampling_suite(const std::vector<DeformationSpec>& grid, Entries& out) {
    const BinomialParams b{10, 0.45};
    const std::size_t count = 100000;
    for (const auto& d : grid) {
        if (d.kind() != Kind::ArikCoon) continue;
        Tracker mean("sampling", "sample-deformed-mean", d, 3.0);
        Tracker rerun("sampling", "sample-determinism", d, 0.0);
        mean.probe(describe(b) + ",seed=42", [&] {
            const auto& t = cached_pmf("binomial", d, b, [&] { return binomial_pmf(d, b, Method::Direct); });
            double mu = 0.0, second = 0.0;
            for (std::size_t i = 0; i < t.probs.size(); ++i) {
                const double v = d.number(t.support[i]);
                mu += v * t.probs[i];
                second += v * v * t.probs[i];
            }
            const auto draws = sample(t, 42, count);
            double acc = 0.0;
            for (int k : draws) acc += d.number(k);
            const double se = std::sqrt(std::max(second - mu * mu, 0.0) / static_cast<double>(count));
            return std::fabs(acc / static_cast<double>(count) - mu) / se;
        });
        rerun.probe(describe(b) + ",seed=42", [&] {
            const auto& t = cached_pmf("binomial", d, b, [&] { return binomial_pmf(d, b, Method::Direct); });
            return sample(t, 42, count) == sample(t, 42, count) ? 0.0 : 1.0;
        });
        out.push_back(mean.finish());
        out.push_back(rerun.finish());
    }
}

using GridSuite = void (*)(const DeformationSpec&, Entries&);

Entries run_suite(const std::string& name, const std::vector<DeformationSpec>& grid) {
    static const std::map<std::string, GridSuite> per_point = {
        {"structural", structural},           {"vandermonde", vandermonde_suite},
        {"stirling", stirling_suite},         {"exponential", exponential_suite},
        {"normalization", normalization_suite}, {"recursion", recursion_suite},
        {"moments", moments_suite},           {"conversions", conversions_suite},
        {"quesne", quesne_suite}};
    Entries out;
    if (auto it = per_point.find(name); it != per_point.end()) {
        for (const auto& d : grid) it->second(d, out);
    } else if (name == "limits") {
        limits_suite(out);
    } else if (name == "sampling") {
        sampling_suite(grid, out);
    } else {
        throw DomainError("unknown audit suite: " + name);
    }
    return out;
}

}  // namespace

std::string_view status_name(AuditStatus s) {
    switch (s) {
        case AuditStatus::Pass: return "pass";
        case AuditStatus::Fail: return "fail";
        case AuditStatus::Reported: return "reported";
    }
    return "fail";
}

std::size_t AuditReport::count(AuditStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [s](const AuditEntry& e) { return e.status == s; }));
}

std::vector<DeformationSpec> default_audit_grid() {
    return {DeformationSpec::arik_coon(0.3),
            DeformationSpec::arik_coon(0.5),
            DeformationSpec::arik_coon(0.9),
            DeformationSpec::jagannathan_srinivasa(0.9, 0.5),
            DeformationSpec::jagannathan_srinivasa(1.0, 0.7),
            DeformationSpec::chakrabarty_jagannathan(0.9, 0.5),
            DeformationSpec::quesne(0.5),
            DeformationSpec::quesne(0.8),
            DeformationSpec::generalized_quesne(1.2, 0.7),
            DeformationSpec::generalized_quesne(1.1, 0.8),
            DeformationSpec::multi_parameter(1.1, 0.8, 1.0, 0.0, 1.0)};
}

const std::vector<std::string>& audit_suite_names() {
    static const std::vector<std::string> names = {
        "structural", "vandermonde", "stirling", "exponential", "normalization", "recursion",
        "moments",    "conversions", "quesne",   "limits",      "sampling"};
    return names;
}

AuditReport run_audit(const std::vector<std::string>& suites, const std::vector<DeformationSpec>& grid) {
    std::vector<std::string> selected;
    for (const auto& s : suites) {
        if (s == "all") {
            selected = audit_suite_names();
            break;
        }
        if (std::find(audit_suite_names().begin(), audit_suite_names().end(), s) == audit_suite_names().end())
            throw DomainError("unknown audit suite: " + s);
        selected.push_back(s);
    }
    std::vector<std::future<Entries>> jobs;
    for (const auto& s : selected)
        jobs.push_back(std::async(std::launch::async, [&grid, s] { return run_suite(s, grid); }));
    AuditReport report;
    for (auto& job : jobs) {
        Entries part = job.get();
        report.entries.insert(report.entries.end(), part.begin(), part.end());
    }
    return report;
}

std::string to_json(const AuditReport& report) {
    nlohmann::ordered_json j;
    j["summary"] = {{"pass", report.count(AuditStatus::Pass)},
                    {"fail", report.count(AuditStatus::Fail)},
                    {"reported", report.count(AuditStatus::Reported)}};
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : report.entries) {
        j["entries"].push_back({{"suite", e.suite},
                                {"identity_id", e.identity_id},
                                {"kind", e.deformation},
                                {"point", e.point},
                                {"max_residual", format_double(e.max_residual)},
                                {"tolerance", format_double(e.tolerance)},
                                {"status", status_name(e.status)},
                                {"evaluated", e.evaluated},
                                {"skipped", e.skipped}});
    }
    return j.dump(2) + "\n";
}

std::string to_text(const AuditReport& report) {
    std::ostringstream os;
    for (const auto& e : report.entries) {
        os << status_name(e.status) << "  " << e.suite << "/" << e.identity_id << "  " << e.deformation
           << "  max_residual=" << format_double(e.max_residual) << " tol=" << format_double(e.tolerance)
           << "  at " << e.point;
        if (e.skipped > 0) os << "  (skipped " << e.skipped << ")";
        os << "\n";
    }
    os << "summary: pass=" << report.count(AuditStatus::Pass) << " fail=" << report.count(AuditStatus::Fail)
       << " reported=" << report.count(AuditStatus::Reported) << "\n";
    return os.str();
}

std::string to_csv(const AuditReport& report) {
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    };
    std::ostringstream os;
    os << "suite,identity_id,kind,point,max_residual,tolerance,status,evaluated,skipped\n";
    for (const auto& e : report.entries)
        os << e.suite << "," << e.identity_id << "," << quote(e.deformation) << "," << quote(e.point) << ","
           << format_double(e.max_residual) << "," << format_double(e.tolerance) << ","
           << status_name(e.status) << "," << e.evaluated << "," << e.skipped << "\n";
    return os.str();
}

}  // namespace rpq
