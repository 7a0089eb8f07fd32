#include "rpq/serialization.hpp"

#include <charconv>
#include <nlohmann/json.hpp>
#include <sstream>

namespace rpq {

namespace {

using nlohmann::json;

json deformation_json(const DeformationSpec& d) {
    json j{{"kind", kind_name(d.kind())}, {"p", d.p()},       {"q", d.q()},
           {"eps1", d.eps1()},            {"eps2", d.eps2()}};
    if (d.kind() == Kind::MultiParameter) {
        j["mu"] = d.mu();
        j["nu"] = d.nu();
        j["g"] = d.g();
    }
    if (d.base_step() != 0) j["base_step"] = d.base_step();
    return j;
}

DeformationSpec deformation_from(const json& j) {
    const auto kind = parse_kind(j.at("kind").get<std::string>());
    if (!kind || *kind == Kind::Custom) throw DomainError("unsupported deformation kind in JSON");
    if (j.contains("base_step")) throw DomainError("base-changed deformations are not serialized inputs");
    return DeformationSpec::make(*kind, j.at("p").get<double>(), j.at("q").get<double>(),
                                 j.value("mu", 0.0), j.value("nu", 0.0), j.value("g", 1.0));
}

json params_json(const FamilyParams& params) {
    return std::visit(
        [](const auto& p) -> json {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, BinomialParams>)
                return {{"n", p.n}, {"p0", p.p0}};
            else if constexpr (std::is_same_v<P, EulerParams>)
                return {{"theta", p.theta}, {"tail_tol", p.tail_tol}, {"max_terms", p.max_terms}};
            else if constexpr (std::is_same_v<P, PolyaParams>)
                return {{"n", p.n}, {"m", p.m}, {"u", p.u}, {"x_step", p.x_step}};
            else
                return {{"n", p.n},           {"m", p.m},
                        {"u", p.u},           {"x_step", p.x_step},
                        {"tail_tol", p.tail_tol}, {"max_terms", p.max_terms}};
        },
        params);
}

Family family_from(const std::string& name) {
    for (Family f : {Family::Binomial, Family::Euler, Family::Polya, Family::InversePolya,
                     Family::Hypergeometric})
        if (family_name(f) == name) return f;
    throw DomainError("unknown family in JSON: " + name);
}

FamilyParams params_from(Family f, const json& j) {
    switch (f) {
        case Family::Binomial:
            return BinomialParams{j.at("n").get<int>(), j.at("p0").get<double>()};
        case Family::Euler:
            return EulerParams{j.at("theta").get<double>(), j.at("tail_tol").get<double>(),
                               j.at("max_terms").get<int>()};
        case Family::Polya:
        case Family::Hypergeometric:
            return PolyaParams{j.at("n").get<int>(), j.at("m").get<double>(), j.at("u").get<double>(),
                               j.at("x_step").get<int>()};
        case Family::InversePolya: {
            InversePolyaParams p;
            p.n = j.at("n").get<int>();
            p.m = j.at("m").get<double>();
            p.u = j.at("u").get<double>();
            p.x_step = j.at("x_step").get<int>();
            p.tail_tol = j.at("tail_tol").get<double>();
            p.max_terms = j.at("max_terms").get<int>();
            return p;
        }
    }
    throw DomainError("unknown family");
}

std::string params_text(const FamilyParams& params) {
    std::string out;
    const json fields = params_json(params);
    for (const auto& [key, value] : fields.items()) {
        if (!out.empty()) out += ';';
        out += key + '=' + (value.is_number_integer() ? std::to_string(value.get<long long>())
                                                      : format_double(value.get<double>()));
    }
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string to_json(const DeformationSpec& d) { return deformation_json(d).dump(); }

std::string to_json(const StirlingTable& table) {
    json entries = json::array();
    for (const auto& row : table.entries) entries.push_back(row);
    json j{{"kind", table.kind == StirlingKind::First ? "first" : "second"},
           {"j", table.j_offset},
           {"n_max", table.n_max},
           {"deformation", deformation_json(table.deformation)},
           {"condition", table.condition},
           {"entries", entries}};
    return j.dump();
}

std::string to_json(const PmfTable& pmf) {
    json j{{"family", family_name(pmf.family)},
           {"method", method_name(pmf.method)},
           {"deformation", deformation_json(pmf.deformation)},
           {"params", params_json(pmf.params)},
           {"support", pmf.support},
           {"probs", pmf.probs},
           {"normalization_residual", pmf.normalization_residual},
           {"truncated", pmf.truncated},
           {"out_of_range", pmf.out_of_range}};
    return j.dump();
}

std::string to_json(const MomentReport& r) {
    json j{{"order", r.order},
           {"closed_form", r.closed_form},
           {"brute_force", r.brute_force},
           {"abs_err", r.abs_err},
           {"rel_err", r.rel_err}};
    return j.dump();
}

std::string to_csv(const PmfTable& pmf) {
    std::ostringstream out;
    out << "# family=" << family_name(pmf.family) << '\n'
        << "# kind=" << pmf.deformation.descriptor() << '\n'
        << "# params=" << params_text(pmf.params) << '\n'
        << "# method=" << method_name(pmf.method) << '\n'
        << "# residual=" << format_double(pmf.normalization_residual) << '\n'
        << "k,p_k\n";
    for (std::size_t i = 0; i < pmf.probs.size(); ++i)
        out << pmf.support[i] << ',' << format_double(pmf.probs[i]) << '\n';
    return out.str();
}

PmfTable pmf_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
        const Family family = family_from(j.at("family").get<std::string>());
        PmfTable t{.family = family,
                   .deformation = deformation_from(j.at("deformation")),
                   .params = params_from(family, j.at("params"))};
        t.support = j.at("support").get<std::vector<int>>();
        t.probs = j.at("probs").get<std::vector<double>>();
        t.truncated = j.at("truncated").get<bool>();
        t.method = j.at("method").get<std::string>() == "direct" ? Method::Direct : Method::Recursive;
        if (t.support.size() != t.probs.size()) throw DomainError("support and probs differ in length");
        annotate(t);
        return t;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed PMF JSON: ") + e.what());
    }
}

bool operator==(const PmfTable& a, const PmfTable& b) {
    return a.family == b.family && a.method == b.method && a.truncated == b.truncated &&
           a.support == b.support && a.probs == b.probs &&
           a.normalization_residual == b.normalization_residual && a.out_of_range == b.out_of_range &&
           to_json(a.deformation) == to_json(b.deformation) &&
           params_json(a.params) == params_json(b.params);
}

}  // namespace rpq
