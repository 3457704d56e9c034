// Command-line driver: eval, flatten, arguments, check-postulates, random, oracle.
//
// Exit codes: 0 success, 1 postulate violation (or oracle disagreement),
// 2 input error, 3 limit exceeded.

#include "aspic/arguments.hpp"
#include "aspic/brute_force.hpp"
#include "aspic/dsl.hpp"
#include "aspic/errors.hpp"
#include "aspic/postulates.hpp"
#include "aspic/render.hpp"
#include "aspic/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

namespace {

using namespace aspic;

enum Exit : int { Ok = 0, Violation = 1, InputError = 2, LimitHit = 3 };

struct Common {
    std::string file;
    std::string report = "json";
    std::size_t max_arguments = EnumerationLimits{}.max_arguments;
    std::size_t max_nodes = SearchLimits{}.max_nodes;
    std::string flatten = "literal";
    bool allow_inconsistent = false;

    EvalLimits limits() const {
        EvalLimits l;
        l.enumeration.max_arguments = max_arguments;
        l.search.max_nodes = max_nodes;
        l.flatten = *parse_flatten_mode(flatten);
        l.require_consistent = !allow_inconsistent;
        return l;
    }
    ReportFormat format() const { return report == "text" ? ReportFormat::Text : ReportFormat::Json; }
};

void add_limits(CLI::App* cmd, Common& c) {
    cmd->add_option("--max-arguments", c.max_arguments, "Argument enumeration cap");
    cmd->add_option("--max-nodes", c.max_nodes, "Node bound for complete/stable/preferred search");
}

void add_flatten(CLI::App* cmd, Common& c) {
    cmd->add_option("--flatten", c.flatten, "Meta-argument treatment")
        ->check(CLI::IsMember({"literal", "prune-inert"}));
}

void add_report(CLI::App* cmd, Common& c, const char* fallback) {
    c.report = fallback;
    cmd->add_option("--report", c.report, "Output format")->check(CLI::IsMember({"json", "text"}));
}

int cmd_eval(const Common& c, const std::string& semantics, const std::string& mode) {
    const SourceDocument doc = read_source(c.file);
    const ArgumentationSystem as = parse_system(doc);
    EvalOptions opts{*parse_semantics(semantics), *parse_mode(mode), c.limits()};
    EvalReport r = run_eval(as, opts, doc.provenance);
    std::cout << emit_report(r, c.format());
    if (r.status == "limit_exceeded")
        return LimitHit;
    if (r.status == "inconsistent")
        return InputError;
    return r.violation_found() ? Violation : Ok;
}

int cmd_flatten(const Common& c, const std::string& stage, const std::string& emit) {
    const ArgumentationSystem as = parse_system(read_source(c.file));
    const JSBAF j = build_da_jsbaf(as, c.limits().enumeration);
    if (stage == "none" || stage == "one-step") {
        if (emit == "apx") {
            std::cerr << "error: APX cannot represent " << (stage == "none" ? "supports" : "joint attacks")
                      << "; use --emit dot\n";
            return InputError;
        }
        std::cout << (stage == "none" ? emit_dot(j) : emit_dot(flatten_one_step(j)));
        return Ok;
    }
    AF af = stage == "two-step" ? flatten_joint_attacks(flatten_one_step(j))
                                : flatten_simplified(j, c.limits().flatten);
    if (stage == "two-step" && c.limits().flatten == FlattenMode::PruneInert)
        af = prune_inert(af);
    std::cout << (emit == "apx" ? emit_apx(af) : emit_dot(af));
    return Ok;
}

int cmd_arguments(const Common& c) {
    const ArgumentationSystem as = parse_system(read_source(c.file));
    std::cout << emit_arguments(construct_arguments(as, c.limits().enumeration), c.format());
    return Ok;
}

int cmd_check_postulates(const Common& c) {
    const SourceDocument doc = read_source(c.file);
    const ArgumentationSystem as = parse_system(doc);
    if (!c.allow_inconsistent && !is_consistent(as)) {
        auto w = inconsistency_witness(as);
        std::cerr << "error: inconsistent system (strict rules derive " << w->first.str() << " and "
                  << w->second.str() << "); pass --allow-inconsistent to score it out of postulate scope\n";
        return InputError;
    }
    std::vector<ComparisonReport> runs;
    bool violation = false;
    for (Semantics s : all_semantics) {
        runs.push_back(compare_modes(as, s, c.limits()));
        const auto& r = runs.back();
        violation |= r.in_postulate_scope && !(r.aspic_minus.all_satisfied() && r.deductive.all_satisfied());
    }
    std::cout << emit_comparisons(runs, doc.provenance, c.format());
    return violation ? Violation : Ok;
}

int cmd_random(const Common& c, const RandomSystemParams& params, std::uint64_t seed, unsigned count, bool check) {
    bool violation = false;
    for (unsigned k = 0; k < count; ++k) {
        const GeneratedSystem g = random_system(params, seed + k);
        std::cout << "# seed " << g.seed << ", consistent after " << g.attempts << " draw(s)\n"
                  << print_system(g.system);
        if (check) {
            for (Semantics s : all_semantics) {
                for (const auto& cs : conclusion_sets(g.system, s, Mode::Deductive, c.limits())) {
                    PostulateReport p = check_postulates(g.system, cs.formulas);
                    if (!p.all_satisfied()) {
                        violation = true;
                        std::cout << "# VIOLATION seed " << g.seed << " semantics " << to_string(s)
                                  << ": " << to_json(p).dump() << '\n';
                    }
                }
            }
        }
        if (k + 1 < count)
            std::cout << '\n';
    }
    return violation ? Violation : Ok;
}

int cmd_oracle(const Common& c, const std::string& apx_file, const std::string& mode, std::size_t bound) {
    AF af;
    std::string provenance;
    if (!apx_file.empty()) {
        const SourceDocument doc = read_source(apx_file);
        af = parse_apx(doc.text);
        provenance = doc.provenance;
    } else {
        const SourceDocument doc = read_source(c.file);
        const ArgumentationSystem as = parse_system(doc);
        provenance = doc.provenance;
        if (*parse_mode(mode) == Mode::AspicMinus)
            af = build_aspic_minus_af(as, c.limits().enumeration);
        else
            af = flatten_simplified(build_da_jsbaf(as, c.limits().enumeration), c.limits().flatten);
    }
    if (af.nodes.size() > bound) {
        std::cerr << "error: framework has " << af.nodes.size() << " nodes; oracle bound is " << bound << '\n';
        return LimitHit;
    }
    bool agree = true;
    std::cout << provenance << ": " << af.nodes.size() << " nodes, " << af.attacks.size() << " attacks\n";
    for (Semantics s : all_semantics) {
        const auto engine = extensions(af, s, SearchLimits{af.nodes.size()});
        const auto oracle = brute_force::extensions(af, s);
        const bool same = engine == oracle;
        agree &= same;
        std::cout << "  " << to_string(s) << ": " << engine.size() << " extension(s), "
                  << (same ? "agrees with oracle" : "DISAGREES with oracle") << '\n';
        if (!same) {
            for (const auto& e : engine)
                std::cout << "    engine " << to_string(e) << '\n';
            for (const auto& e : oracle)
                std::cout << "    oracle " << to_string(e) << '\n';
        }
    }
    return agree ? Ok : Violation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structured argumentation with deductive joint support"};
    app.require_subcommand(1);

    Common common;
    std::string semantics = "preferred", mode = "deductive", stage = "simplified", emit = "dot", apx_file;
    RandomSystemParams params;
    std::uint64_t seed = 1;
    unsigned count = 1;
    bool check = false;
    std::size_t oracle_bound = 12;

    auto* eval = app.add_subcommand("eval", "Evaluate a system and report extensions, conclusions and postulates");
    eval->add_option("--file", common.file, "Rule file ('-' for stdin)")->required();
    eval->add_option("--semantics", semantics)->check(CLI::IsMember({"grounded", "complete", "stable", "preferred"}));
    eval->add_option("--mode", mode)->check(CLI::IsMember({"aspic-minus", "deductive"}));
    eval->add_flag("--allow-inconsistent", common.allow_inconsistent,
                   "Evaluate inconsistent systems, flagged out of postulate scope");
    add_flatten(eval, common);
    add_report(eval, common, "json");
    add_limits(eval, common);

    auto* flatten = app.add_subcommand("flatten", "Emit the joint-support framework or one of its flattenings");
    flatten->add_option("--file", common.file)->required();
    flatten->add_option("--stage", stage)->check(CLI::IsMember({"none", "one-step", "two-step", "simplified"}));
    flatten->add_option("--emit", emit)->check(CLI::IsMember({"dot", "apx"}));
    add_flatten(flatten, common);
    add_limits(flatten, common);

    auto* arguments = app.add_subcommand("arguments", "List the argument store");
    arguments->add_option("--file", common.file)->required();
    add_report(arguments, common, "text");
    add_limits(arguments, common);

    auto* postulates = app.add_subcommand("check-postulates", "Compare both modes under every semantics");
    postulates->add_option("--file", common.file)->required();
    postulates->add_flag("--allow-inconsistent", common.allow_inconsistent);
    add_flatten(postulates, common);
    add_report(postulates, common, "text");
    add_limits(postulates, common);

    auto* random = app.add_subcommand("random", "Generate seeded consistent systems");
    random->add_option("--seed", seed);
    random->add_option("--count", count);
    random->add_option("--atoms", params.atoms);
    random->add_option("--strict", params.strict_rules);
    random->add_option("--defeasible", params.defeasible_rules);
    random->add_option("--max-body", params.max_body);
    random->add_option("--undercut-density", params.undercut_density)->check(CLI::Range(0.0, 1.0));
    random->add_flag("--check", check, "Check the postulates in deductive mode under every semantics");
    add_limits(random, common);

    auto* oracle = app.add_subcommand("oracle", "Cross-check the search engine against brute force");
    auto* oracle_file = oracle->add_option("--file", common.file, "Rule file");
    auto* oracle_apx = oracle->add_option("--apx", apx_file, "APX framework file");
    oracle_file->excludes(oracle_apx);
    oracle->add_option("--mode", mode)->check(CLI::IsMember({"aspic-minus", "deductive"}));
    oracle->add_option("--max-nodes", oracle_bound, "Largest framework to brute-force")
        ->check(CLI::Range(std::size_t{0}, brute_force::max_nodes));
    add_flatten(oracle, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Ok : InputError;
    }

    try {
        if (*eval)
            return cmd_eval(common, semantics, mode);
        if (*flatten)
            return cmd_flatten(common, stage, emit);
        if (*arguments)
            return cmd_arguments(common);
        if (*postulates)
            return cmd_check_postulates(common);
        if (*random)
            return cmd_random(common, params, seed, count, check);
        if (*oracle) {
            if (common.file.empty() && apx_file.empty()) {
                std::cerr << "error: oracle needs --file or --apx\n";
                return InputError;
            }
            return cmd_oracle(common, apx_file, mode, oracle_bound);
        }
    } catch (const LimitExceeded& e) {
        std::cerr << "limit exceeded: " << e.what() << '\n';
        return LimitHit;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return InputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return InputError;
    }
    return InputError;
}
