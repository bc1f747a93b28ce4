#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gcalpha/errors.hpp"
#include "gcalpha/invariants.hpp"
#include "gcalpha/json_io.hpp"
#include "gcalpha/numcheck.hpp"

using namespace gcalpha;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open input file: " + path);
    try {
        return json::parse(in);
    } catch (const std::exception& e) {
        throw ValidationError(std::string("input is not valid JSON: ") + e.what());
    }
}

struct Loaded {
    ProblemFile pf;
    WeylGroup w;
};

Loaded load(const std::string& path, std::size_t max_weyl) {
    ProblemFile pf = parse_problem(load_json(path));
    WeylGroup w = weyl_group(pf.rs, max_weyl);
    return {std::move(pf), std::move(w)};
}

Polytope resolve(const Loaded& l, const char* key, bool wonderful,
                 const std::optional<Polytope>& given) {
    if (wonderful) return wonderful_polytope(l.pf.rs, l.w);
    if (!given) throw ValidationError(std::string("problem file needs \"") + key + "\"");
    return *given;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int cmd_alpha(const Loaded& l, std::size_t max_weyl, bool as_json) {
    Polytope p = resolve(l, "P", l.pf.p_wonderful, l.pf.p);
    Polytope q = resolve(l, "Q", l.pf.q_wonderful, l.pf.q);
    CompactificationData data = CompactificationData::make(l.pf.rs, p, q, max_weyl);
    InvariantReport rep;
    if (l.pf.symmetries.empty())
        alpha(data, &rep);
    else
        alpha_with_symmetries(data, SymmetryGroup{l.pf.symmetries}, &rep, max_weyl);
    if (as_json) {
        emit(report_to_json(rep, true));
    } else {
        std::cout << rep.value.str() << "\n"
                  << "fixed_dim: " << rep.fixed_dim << "\n"
                  << "witness: " << int_vec_to_json(rep.witness).dump() << "\n";
        json act = json::array();
        for (const auto& a : rep.active_constraints) act.push_back(int_vec_to_json(a));
        std::cout << "active: " << act.dump() << "\n";
    }
    return 0;
}

int cmd_lct(const Loaded& l, std::size_t max_weyl, bool as_json) {
    if (!l.pf.metric) throw ValidationError("problem file needs a \"metric\" block");
    Polytope p = resolve(l, "P", l.pf.p_wonderful, l.pf.p);
    Polytope q = resolve(l, "Q", l.pf.q_wonderful, l.pf.q);
    CompactificationData data = CompactificationData::make(l.pf.rs, p, q, max_weyl);
    InvariantReport rep;
    lct(data, *l.pf.metric, &rep);
    if (as_json) {
        emit(report_to_json(rep, false));
    } else {
        std::cout << rep.value.str() << "\n"
                  << "witness: " << int_vec_to_json(rep.witness).dump() << "\n";
        json act = json::array();
        for (const auto& a : rep.active_constraints) act.push_back(int_vec_to_json(a));
        std::cout << "active: " << act.dump() << "\n";
    }
    return 0;
}

int cmd_wonderful(const Loaded& l) {
    emit(polytope_to_json(wonderful_polytope(l.pf.rs, l.w)));
    return 0;
}

int cmd_fano_check(const Loaded& l, bool as_json) {
    Polytope q = resolve(l, "Q", l.pf.q_wonderful, l.pf.q);
    FanoReport rep = fano_check(l.pf.rs, l.w, q);
    if (as_json) {
        json slacks = json::array();
        for (const auto& [a, s] : rep.slacks)
            slacks.push_back(json{{"a", int_vec_to_json(a)}, {"slack", rat_str(s)}});
        emit(json{{"ok", rep.ok}, {"slacks", slacks}});
    } else {
        std::cout << (rep.ok ? "ok" : "violated") << "\n";
        for (const auto& [a, s] : rep.slacks)
            std::cout << "slack " << int_vec_to_json(a).dump() << " " << rat_str(s) << "\n";
    }
    return 0;
}

int cmd_newton(const Loaded& l) {
    if (!l.pf.metric) throw ValidationError("problem file needs a \"metric\" block");
    Polytope p = resolve(l, "P", l.pf.p_wonderful, l.pf.p);
    if (!check_w_invariance(p, l.w))
        throw NotWInvariant("polarization polytope is not Weyl-invariant");
    emit(polytope_to_json(newton_body(*l.pf.metric, p, l.w)));
    return 0;
}

int cmd_verify(const Loaded& l, std::uint64_t seed) {
    if (!l.pf.exponent) throw ValidationError("problem file needs an \"integrand\" block");
    IntegrandSpec spec{l.pf.rs, *l.pf.exponent};
    if (!l.pf.radii.empty()) spec.truncation_radii = l.pf.radii;
    if (l.pf.samples_per_cell > 0) spec.samples_per_cell = l.pf.samples_per_cell;
    spec.seed = seed;
    CriterionCheck check = criterion_agreement(spec, l.pf.decomposition);
    const char* outcome = check.outcome == CriterionCheck::Outcome::Agree ? "agree"
                          : check.outcome == CriterionCheck::Outcome::Contradict
                              ? "contradict"
                              : "inconclusive";
    json j;
    j["outcome"] = outcome;
    j["exact_integrable"] = check.exact_integrable;
    j["seed"] = seed;
    j["numeric"] = verdict_to_json(check.numeric);
    emit(j);
    return check.outcome == CriterionCheck::Outcome::Contradict ? 3 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact alpha invariants and log canonical thresholds of polarized "
                 "group compactifications"};
    app.require_subcommand(1);

    std::string input;
    bool as_json = false;
    std::uint64_t seed = 12345;
    std::size_t max_weyl = kDefaultWeylCap;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", input, "problem file (JSON)")->required();
        sub->add_flag("--json", as_json, "emit a JSON report");
        sub->add_option("--max-weyl", max_weyl, "Weyl group size cap");
        return sub;
    };
    CLI::App* s_alpha = add_common(app.add_subcommand("alpha", "alpha invariant"));
    CLI::App* s_lct = add_common(app.add_subcommand("lct", "log canonical threshold"));
    CLI::App* s_wonderful =
        add_common(app.add_subcommand("wonderful", "anticanonical polytope of the "
                                                   "wonderful compactification"));
    CLI::App* s_fano = add_common(app.add_subcommand("fano-check", "admissibility check"));
    CLI::App* s_verify =
        add_common(app.add_subcommand("verify", "numerical integrability cross-check"));
    s_verify->add_option("--seed", seed, "Monte-Carlo seed");
    CLI::App* s_newton = add_common(app.add_subcommand("newton", "Newton body of a metric"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << error_to_json("ValidationError", e.what()).dump() << "\n";
        return 2;
    }

    try {
        Loaded l = load(input, max_weyl);
        if (s_alpha->parsed()) return cmd_alpha(l, max_weyl, as_json);
        if (s_lct->parsed()) return cmd_lct(l, max_weyl, as_json);
        if (s_wonderful->parsed()) return cmd_wonderful(l);
        if (s_fano->parsed()) return cmd_fano_check(l, as_json);
        if (s_verify->parsed()) return cmd_verify(l, seed);
        if (s_newton->parsed()) return cmd_newton(l);
        return 2;
    } catch (const Error& e) {
        std::cout << error_to_json(e.code(), e.what()).dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cout << error_to_json("InternalError", e.what()).dump() << "\n";
        return 2;
    }
}
