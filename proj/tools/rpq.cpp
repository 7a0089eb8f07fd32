#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rpq/audit.hpp"
#include "rpq/combinatorics.hpp"
#include "rpq/deformation.hpp"
#include "rpq/distributions.hpp"
#include "rpq/serialization.hpp"
#include "rpq/special_functions.hpp"

namespace {

using namespace rpq;

struct Common {
    std::string kind = "arik-coon";
    double p = 1.0;
    double q = 0.5;
    double mu = 0.0;
    double nu = 0.0;
    double g = 1.0;
    double tol = 1e-9;
    int max_terms = 10000;
    int tau = 0;
    std::uint64_t seed = 42;
    std::string format = "text";
};

struct FamilyArgs {
    std::string family = "binomial";
    std::string method = "direct";
    int n = 1;
    double p0 = 0.5;
    double theta = 0.5;
    double m = 1.0;
    double u = 1.0;
    int x_step = -1;
    int r = -1;
    int s = -1;
};

DeformationSpec deformation(const Common& c) {
    const auto kind = parse_kind(c.kind);
    if (!kind || *kind == Kind::Custom) throw DomainError("unknown --kind: " + c.kind);
    return DeformationSpec::make(*kind, c.p, c.q, c.mu, c.nu, c.g);
}

Method method(const FamilyArgs& f) {
    if (f.method == "direct") return Method::Direct;
    if (f.method == "recursive") return Method::Recursive;
    throw DomainError("unknown --method: " + f.method);
}

// Urn counts win over raw m, u when both r and s are given.
template <class P>
P urn_params(const FamilyArgs& f) {
    if (f.r >= 0 && f.s >= 0) return P::from_urn(f.n, f.r, f.s, f.x_step);
    P params;
    params.n = f.n;
    params.m = f.m;
    params.u = f.u;
    params.x_step = f.x_step;
    return params;
}

PmfTable build_pmf(const Common& c, const FamilyArgs& f) {
    const DeformationSpec d = deformation(c);
    const Method how = method(f);
    if (f.family == "binomial") return binomial_pmf(d, {f.n, f.p0}, how);
    if (f.family == "euler") return euler_pmf(d, {f.theta, c.tol, c.max_terms}, how);
    if (f.family == "polya") return polya_pmf(d, urn_params<PolyaParams>(f), how);
    if (f.family == "hypergeometric") {
        const auto params = urn_params<PolyaParams>(f);
        if (params.x_step != -1) throw DomainError("hypergeometric requires --x -1");
        return hypergeometric_pmf(d, params.n, params.m, params.u, how);
    }
    if (f.family == "inverse-polya") {
        auto params = urn_params<InversePolyaParams>(f);
        params.tail_tol = c.tol;
        params.max_terms = c.max_terms;
        return inverse_polya_pmf(d, params, how);
    }
    throw DomainError("unknown family: " + f.family);
}

void check_format(const Common& c) {
    if (c.format != "json" && c.format != "csv" && c.format != "text")
        throw DomainError("unknown --format: " + c.format);
}

void print_scalar(const Common& c, const std::string& name, double value) {
    if (c.format == "json")
        std::cout << "{\"" << name << "\": " << format_double(value) << "}\n";
    else if (c.format == "csv")
        std::cout << name << "\n" << format_double(value) << "\n";
    else
        std::cout << format_double(value) << "\n";
}

void print_pmf(const Common& c, const PmfTable& t) {
    if (c.format == "json") {
        std::cout << to_json(t);
    } else if (c.format == "csv") {
        std::cout << to_csv(t);
    } else {
        for (std::size_t i = 0; i < t.probs.size(); ++i)
            std::cout << t.support[i] << ' ' << format_double(t.probs[i]) << '\n';
        std::cout << "# residual " << format_double(t.normalization_residual)
                  << (t.truncated ? " (truncated)" : "") << '\n';
    }
}

void print_stirling(const Common& c, const StirlingTable& t) {
    if (c.format == "json") {
        std::cout << to_json(t);
        return;
    }
    const char sep = c.format == "csv" ? ',' : ' ';
    if (c.format == "csv") std::cout << "n,k,value\n";
    for (int n = 0; n <= t.n_max; ++n)
        for (int k = 0; k <= n; ++k) std::cout << n << sep << k << sep << format_double(t.at(n, k)) << '\n';
}

struct MomentRow {
    std::string type;
    MomentReport report;
};

std::vector<MomentRow> moment_rows(const Common& c, const FamilyArgs& f, int order) {
    const DeformationSpec d = deformation(c);
    const PmfTable t = build_pmf(c, f);
    std::vector<MomentRow> rows;
    for (int j = 1; j <= order; ++j) {
        double deformed = 0.0, classical = 0.0;
        if (f.family == "binomial") {
            const BinomialParams b{f.n, f.p0};
            deformed = binomial_factorial_moment(d, b, j);
            classical = binomial_classical_factorial_moment(d, b, j, c.tau);
        } else if (f.family == "euler") {
            const EulerParams e{f.theta, c.tol, c.max_terms};
            deformed = euler_factorial_moment(d, e, j);
            classical = euler_classical_factorial_moment(d, e, j, c.tau, {c.tol, c.max_terms});
        } else if (f.family == "polya" || f.family == "hypergeometric") {
            const auto params = urn_params<PolyaParams>(f);
            deformed = polya_factorial_moment(d, params, j);
            classical = polya_classical_factorial_moment(d, params, j, c.tau);
        } else {
            auto params = urn_params<InversePolyaParams>(f);
            params.tail_tol = c.tol;
            params.max_terms = c.max_terms;
            deformed = inverse_polya_factorial_moment(d, params, j);
            classical = inverse_polya_classical_factorial_moment(d, params, j, c.tau);
        }
        rows.push_back({"deformed", make_report(j, deformed, deformed_factorial_moment(t, j))});
        rows.push_back({"classical", make_report(j, classical, classical_factorial_moment_of(t, j))});
    }
    return rows;
}

void print_moments(const Common& c, const std::vector<MomentRow>& rows) {
    if (c.format == "json") {
        std::cout << "[\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::string body = to_json(rows[i].report);
            while (!body.empty() && body.back() == '\n') body.pop_back();
            std::cout << "{\"type\": \"" << rows[i].type << "\", \"report\": " << body << "}"
                      << (i + 1 < rows.size() ? "," : "") << '\n';
        }
        std::cout << "]\n";
        return;
    }
    const char sep = c.format == "csv" ? ',' : ' ';
    if (c.format == "csv") std::cout << "type,order,closed_form,brute_force,abs_err,rel_err\n";
    for (const auto& r : rows)
        std::cout << r.type << sep << r.report.order << sep << format_double(r.report.closed_form) << sep
                  << format_double(r.report.brute_force) << sep << format_double(r.report.abs_err) << sep
                  << format_double(r.report.rel_err) << '\n';
}

void add_common(CLI::App& app, Common& c) {
    app.add_option("--kind", c.kind,
                   "arik-coon | quesne | jagannathan-srinivasa | chakrabarty-jagannathan | "
                   "generalized-quesne | multi-parameter");
    app.add_option("-p", c.p, "first deformation parameter");
    app.add_option("-q", c.q, "second deformation parameter");
    app.add_option("--mu", c.mu, "multi-parameter mu");
    app.add_option("--nu", c.nu, "multi-parameter nu");
    app.add_option("--g", c.g, "multi-parameter g value");
    app.add_option("--tol", c.tol, "series and tail tolerance")->capture_default_str();
    app.add_option("--max-terms", c.max_terms, "series term budget")->capture_default_str();
    app.add_option("--tau", c.tau, "tau exponent in moment conversions")->capture_default_str();
    app.add_option("--seed", c.seed, "sampling seed")->capture_default_str();
    app.add_option("--format", c.format, "json | csv | text")->capture_default_str();
}

void add_family(CLI::App& cmd, FamilyArgs& f) {
    cmd.add_option("family", f.family, "binomial | euler | polya | hypergeometric | inverse-polya")
        ->required();
    cmd.add_option("--method", f.method, "direct | recursive")->capture_default_str();
    cmd.add_option("--n", f.n, "number of trials or draws");
    cmd.add_option("--p0", f.p0, "binomial success probability");
    cmd.add_option("--theta", f.theta, "Euler parameter");
    cmd.add_option("--m", f.m, "urn parameter m");
    cmd.add_option("--u", f.u, "urn parameter u");
    cmd.add_option("--x", f.x_step, "boxes added per draw (-1 draws without replacement)");
    cmd.add_option("--r", f.r, "white boxes (with --s, sets m = -r/x)");
    cmd.add_option("--s", f.s, "black boxes (with --r, sets u = -s/x)");
}

int run(int argc, char** argv) {
    CLI::App app{"rpq: deformed numbers, combinatorics and discrete distributions"};
    app.require_subcommand(1);
    Common c;
    add_common(app, c);
    app.fallthrough();

    double x = 0.0;
    int n = 0, k = 0, j = 0, order = 2;
    std::size_t count = 10;
    std::string stirling_kind = "first", which = "E";
    std::vector<std::string> suites{"all"};
    FamilyArgs f;

    auto* number_cmd = app.add_subcommand("number", "deformed number [x]");
    number_cmd->add_option("--x", x, "argument")->required();
    auto* factorial_cmd = app.add_subcommand("factorial", "deformed factorial [n]!");
    factorial_cmd->add_option("--n", n, "order")->required();
    auto* binom_cmd = app.add_subcommand("binom", "deformed binomial coefficient");
    binom_cmd->add_option("--x", x, "upper argument")->required();
    binom_cmd->add_option("--k", k, "lower index")->required();
    auto* pmf_cmd = app.add_subcommand("pmf", "probability mass function table");
    add_family(*pmf_cmd, f);
    auto* moments_cmd = app.add_subcommand("moments", "closed-form moments against the PMF");
    add_family(*moments_cmd, f);
    moments_cmd->add_option("--order", order, "highest moment order")->capture_default_str();
    auto* stirling_cmd = app.add_subcommand("stirling", "noncentral Stirling table");
    stirling_cmd->add_option("--type", stirling_kind, "first | second")->capture_default_str();
    stirling_cmd->add_option("--j", j, "noncentral offset")->capture_default_str();
    stirling_cmd->add_option("--n", n, "largest row")->required();
    auto* exp_cmd = app.add_subcommand("exp", "deformed exponential");
    exp_cmd->add_option("--z", x, "argument")->required();
    exp_cmd->add_option("--which", which, "E | e")->capture_default_str();
    auto* sample_cmd = app.add_subcommand("sample", "inverse-CDF samples");
    add_family(*sample_cmd, f);
    sample_cmd->add_option("--count", count, "number of draws")->capture_default_str();
    auto* verify_cmd = app.add_subcommand("verify", "run the identity audit on the default grid");
    verify_cmd->add_option("--suite", suites, "suite name or all (repeatable)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "rpq: " << e.what() << '\n';
        return 2;
    }

    check_format(c);
    const SeriesOptions series{c.tol, c.max_terms};

    if (*number_cmd) {
        print_scalar(c, "value", deformation(c).number(x));
    } else if (*factorial_cmd) {
        print_scalar(c, "value", factorial(deformation(c), n));
    } else if (*binom_cmd) {
        print_scalar(c, "value", binomial_coefficient(deformation(c), x, k));
    } else if (*pmf_cmd) {
        print_pmf(c, build_pmf(c, f));
    } else if (*moments_cmd) {
        print_moments(c, moment_rows(c, f, order));
    } else if (*stirling_cmd) {
        StirlingKind sk;
        if (stirling_kind == "first")
            sk = StirlingKind::First;
        else if (stirling_kind == "second")
            sk = StirlingKind::Second;
        else
            throw DomainError("unknown --type: " + stirling_kind);
        print_stirling(c, stirling_table(deformation(c), sk, j, n));
    } else if (*exp_cmd) {
        const DeformationSpec d = deformation(c);
        if (which == "E")
            print_scalar(c, "E", exp_big_E(d, x, series));
        else if (which == "e")
            print_scalar(c, "e", exp_small_e(d, x, series));
        else
            throw DomainError("unknown --which: " + which);
    } else if (*sample_cmd) {
        const auto draws = sample(build_pmf(c, f), c.seed, count);
        if (c.format == "json") {
            std::cout << "{\"seed\": " << c.seed << ", \"samples\": [";
            for (std::size_t i = 0; i < draws.size(); ++i) std::cout << (i ? ", " : "") << draws[i];
            std::cout << "]}\n";
        } else {
            if (c.format == "csv") std::cout << "sample\n";
            for (int v : draws) std::cout << v << '\n';
        }
    } else if (*verify_cmd) {
        const AuditReport report = run_audit(suites);
        if (c.format == "json")
            std::cout << to_json(report);
        else if (c.format == "csv")
            std::cout << to_csv(report);
        else
            std::cout << to_text(report);
        return report.passed() ? 0 : 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "rpq: " << e.what() << '\n';
        return 2;
    }
}
