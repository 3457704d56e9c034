// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "aspic/arguments.hpp"
#include "aspic/brute_force.hpp"
#include "aspic/dsl.hpp"
#include "aspic/errors.hpp"
#include "aspic/postulates.hpp"
#include "aspic/semantics.hpp"
#include "support.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace aspic;
using namespace aspic::test;

namespace {

constexpr double arguments_budget_s = 1.0;
constexpr double tandem_preferred_budget_s = 5.0;
constexpr double oracle_budget_s = 300.0;

constexpr std::size_t sampled_small_afs = 10000;
constexpr std::size_t random_large_afs = 500;
constexpr std::size_t max_large_af_nodes = 12;
constexpr std::size_t random_jsbafs = 500;
constexpr std::size_t max_jsbaf_nodes = 10;
constexpr std::size_t max_jsbaf_supports = 4;
constexpr std::size_t random_systems = 500;
constexpr unsigned max_atoms = 6;
constexpr unsigned max_rules = 8;
constexpr std::size_t sampled_small_jsbafs = 2000;
constexpr std::size_t random_large_jsbafs = 200;

constexpr std::uint64_t oracle_seed = 6000;
constexpr std::uint64_t jsbaf_seed = 7000;
constexpr std::uint64_t system_seed = 8000;
constexpr std::uint64_t flattening_seed = 9000;

// Frameworks in the property suites grow past the interactive default once flattened.
const SearchLimits property_search{96};

struct Outcome {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string secs(double s) {
    std::ostringstream out;
    out.precision(3);
    out << std::fixed << s << "s";
    return out.str();
}

template <typename T>
bool same(const std::vector<T>& a, const std::vector<T>& b) {
    return std::set<T>(a.begin(), a.end()) == std::set<T>(b.begin(), b.end()) && a.size() == b.size();
}

Outcome tandem_arguments() {
    const auto start = Clock::now();
    const auto as = parse_system(read_source(data_path("tandem.asp")));
    const auto store = construct_arguments(as);
    const double t = seconds_since(start);

    const std::array<std::pair<const char*, const char*>, 9> listed{{
        {"A1", "-> hw"},        {"A2", "-> sw"},        {"A3", "-> tw"},
        {"A4", "A1 => ht"},     {"A5", "A2 => st"},     {"A6", "A3 => tt"},
        {"A7", "A5,A6 -> ~ht"}, {"A8", "A6,A4 -> ~st"}, {"A9", "A4,A5 -> ~tt"},
    }};
    if (store.size() != listed.size())
        return {false, std::to_string(store.size()) + " arguments"};
    for (const auto& [label, form] : listed) {
        const auto id = store.find_label(label);
        if (!id || store.describe(*id) != form)
            return {false, std::string(label) + " is " + (id ? store.describe(*id) : "missing")};
    }
    if (t >= arguments_budget_s)
        return {false, "took " + secs(t)};
    return {true, "9 arguments match A1-A9 in " + secs(t)};
}

Outcome tandem_framework() {
    const auto j = build_da_jsbaf(tandem());
    std::set<Edge> attacks;
    for (auto [x, y] : std::vector<std::pair<const char*, const char*>>{
             {"A7", "A8"}, {"A8", "A9"}, {"A9", "A7"}, {"A7", "A4"}, {"A8", "A5"}, {"A9", "A6"}}) {
        attacks.insert({n(x), n(y)});
        attacks.insert({n(y), n(x)});
    }
    const std::set<Support> supports{
        {labels({"A5", "A6"}), n("A7")}, {labels({"A6", "A4"}), n("A8")}, {labels({"A4", "A5"}), n("A9")},
        {{}, n("A1")},                   {{}, n("A2")},                   {{}, n("A3")},
    };
    if (j.attacks != attacks)
        return {false, std::to_string(j.attacks.size()) + " attacks differ from the six mutual pairs"};
    if (j.supports != supports)
        return {false, std::to_string(j.supports.size()) + " supports differ"};
    return {true, "12 attacks, 3 joint and 3 empty-source supports"};
}

Outcome tandem_preferred() {
    const auto j = build_da_jsbaf(tandem());
    const auto want = tandem_preferred_flat();
    std::string detail;
    for (auto mode : {FlattenMode::Literal, FlattenMode::PruneInert}) {
        const auto start = Clock::now();
        const auto af = flatten_simplified(j, mode);
        const auto exts = preferred_extensions(af);
        const double t = seconds_since(start);
        const std::string name(to_string(mode));
        if (!same(exts, want))
            return {false, name + ": " + std::to_string(exts.size()) + " extensions, not E1'-E3'"};
        if (t >= tandem_preferred_budget_s)
            return {false, name + " took " + secs(t)};
        detail += (detail.empty() ? "" : ", ") + name + " " + std::to_string(af.nodes.size()) + " nodes in " + secs(t);
    }
    return {true, "E1'-E3' exactly (" + detail + ")"};
}

Outcome tandem_conclusions() {
    const auto as = tandem();
    const auto sets = conclusion_sets(as, Semantics::Preferred, Mode::Deductive);
    std::vector<FormulaSet> got;
    for (const auto& c : sets) {
        got.push_back(c.formulas);
        if (!check_postulates(as, c.formulas).all_satisfied())
            return {false, "postulate violated on " + std::to_string(c.formulas.size()) + "-formula set"};
    }
    const std::vector<FormulaSet> want{formulas({"hw", "sw", "tw", "~tt", "ht", "st"}),
                                       formulas({"hw", "sw", "tw", "~st", "ht", "tt"}),
                                       formulas({"hw", "sw", "tw", "~ht", "tt", "st"})};
    if (!same(got, want))
        return {false, "conclusion sets differ"};
    return {true, "three conclusion sets match, all postulates satisfied"};
}

Outcome aspic_minus_contrast() {
    const auto as = tandem();
    const auto store = construct_arguments(as);
    const auto af = build_aspic_minus_af(as, store);
    const auto target = labels({"A1", "A2", "A3", "A4", "A5", "A6"});
    const auto oracle = brute_force::extensions(af, Semantics::Preferred);
    if (std::find(oracle.begin(), oracle.end(), target) == oracle.end())
        return {false, "oracle does not list {A1..A6} as preferred"};
    FormulaSet concs;
    for (const auto& x : target)
        concs.insert(store[*store.find_label(x.label())].conclusion);
    if (concs != formulas({"hw", "sw", "tw", "ht", "st", "tt"}))
        return {false, "unexpected conclusions of {A1..A6}"};

    const auto cmp = compare_modes(as, Semantics::Preferred);
    for (std::size_t i = 0; i < cmp.aspic_minus.sets.size(); ++i) {
        if (cmp.aspic_minus.sets[i].formulas != concs)
            continue;
        const auto& r = cmp.aspic_minus.reports[i];
        if (r.closure.satisfied || r.indirect_consistency.satisfied)
            return {false, "engine does not flag closure and indirect consistency"};
        return {true, "oracle confirms {hw,sw,tw,ht,st,tt}; engine flags closure (" + r.closure.witness->str() +
                          ") and indirect consistency"};
    }
    return {false, "engine misses {hw,sw,tw,ht,st,tt}"};
}

Outcome oracle_equivalence() {
    const auto start = Clock::now();
    std::size_t checked = 0;
    auto agree = [&](const AF& af, std::string& why) {
        ++checked;
        for (auto s : all_semantics)
            if (extensions(af, s, SearchLimits{max_large_af_nodes}) != brute_force::extensions(af, s)) {
                why = std::string(to_string(s)) + " differs on " + std::to_string(af.nodes.size()) + " nodes";
                return false;
            }
        return true;
    };
    std::string why;
    for (std::size_t nodes = 0; nodes <= 3; ++nodes)
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << (nodes * nodes)); ++code)
            if (!agree(af_from_code(nodes, code), why))
                return {false, "exhaustive: " + why};
    std::mt19937_64 rng(oracle_seed);
    std::uniform_int_distribution<std::size_t> small(4, 5);
    for (std::size_t i = 0; i < sampled_small_afs; ++i) {
        const std::size_t nodes = small(rng);
        const auto code = rng() & ((std::uint64_t{1} << (nodes * nodes)) - 1);
        if (!agree(af_from_code(nodes, code), why))
            return {false, "sampled: " + why};
    }
    std::uniform_int_distribution<std::size_t> large(6, max_large_af_nodes);
    std::uniform_real_distribution<double> density(0.05, 0.4);
    for (std::size_t i = 0; i < random_large_afs; ++i)
        if (!agree(random_af(rng, large(rng), density(rng)), why))
            return {false, "random: " + why};
    const double t = seconds_since(start);
    if (t >= oracle_budget_s)
        return {false, "took " + secs(t)};
    return {true, std::to_string(checked) + " frameworks, zero discrepancies in " + secs(t)};
}

Outcome sup_extensions_deductive() {
    std::size_t bad_frameworks = 0, bad_extensions = 0, empty_witnesses = 0, extensions_seen = 0;
    std::vector<std::uint64_t> seeds;
    for (std::size_t i = 0; i < random_jsbafs; ++i) {
        const std::uint64_t seed = jsbaf_seed + i;
        std::mt19937_64 rng(seed);
        const auto j = random_jsbaf(rng, 1 + i % max_jsbaf_nodes, max_jsbaf_supports, 0.2);
        bool bad = false;
        for (auto s : all_semantics)
            for (const auto& ext : jsbaf_extensions(j, s, FlattenMode::Literal, property_search)) {
                ++extensions_seen;
                const auto d = is_deductive_extension(j, ext);
                const auto c = is_conflict_free_jsbaf(j, ext);
                if (d.deductive && c.conflict_free)
                    continue;
                bad = true;
                ++bad_extensions;
                empty_witnesses += !d.deductive && d.witness->sources.empty();
            }
        if (bad) {
            ++bad_frameworks;
            if (seeds.size() < 5)
                seeds.push_back(seed);
        }
    }
    if (bad_frameworks == 0)
        return {true, std::to_string(extensions_seen) + " extensions deductive and conflict-free"};
    std::string list;
    for (auto s : seeds)
        list += (list.empty() ? "" : ",") + std::to_string(s);
    return {false, std::to_string(bad_extensions) + " violating extensions in " + std::to_string(bad_frameworks) + "/" +
                       std::to_string(random_jsbafs) + " frameworks (" + std::to_string(empty_witnesses) +
                       " witnessed by empty-source supports; seeds " + list + ")"};
}

RandomSystemParams system_shape(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    RandomSystemParams p;
    p.atoms = std::uniform_int_distribution<unsigned>(2, max_atoms)(rng);
    const unsigned total = std::uniform_int_distribution<unsigned>(2, max_rules)(rng);
    p.strict_rules = std::uniform_int_distribution<unsigned>(1, total - 1)(rng);
    p.defeasible_rules = total - p.strict_rules;
    p.max_body = 2;
    p.undercut_density = 0.3;
    return p;
}

Outcome postulates_on_random_systems() {
    EvalLimits limits;
    limits.search = property_search;
    limits.enumeration.max_arguments = 20000;
    std::size_t violating = 0, sets = 0, empty_body_only = 0;
    std::vector<std::string> reports;
    for (std::size_t i = 0; i < random_systems; ++i) {
        const std::uint64_t seed = system_seed + i;
        const auto g = random_system(system_shape(seed), seed);
        bool bad = false, only_empty = true;
        for (auto s : all_semantics) {
            std::vector<ConclusionSet> cs;
            try {
                cs = conclusion_sets(g.system, s, Mode::Deductive, limits);
            } catch (const LimitExceeded& e) {
                return {false, "seed " + std::to_string(seed) + " hit " + e.limit()};
            }
            for (const auto& c : cs) {
                ++sets;
                const auto r = check_postulates(g.system, c.formulas);
                if (r.all_satisfied())
                    continue;
                bad = true;
                bool axiom_missing = false;
                for (const auto& rule : g.system.strict_rules)
                    axiom_missing |= rule.body.empty() && !c.formulas.count(rule.head);
                only_empty &= axiom_missing;
                if (reports.size() < 3)
                    reports.push_back("seed " + std::to_string(seed) + " " + std::string(to_string(s)) + " " +
                                      (r.closure.witness ? "closure " + r.closure.witness->str()
                                                         : std::string("consistency")));
            }
        }
        violating += bad;
        empty_body_only += bad && only_empty;
    }
    if (violating == 0)
        return {true, std::to_string(sets) + " conclusion sets over " + std::to_string(random_systems) +
                          " systems satisfy all three postulates"};
    std::string list;
    for (const auto& r : reports)
        list += "; " + r;
    return {false, std::to_string(violating) + "/" + std::to_string(random_systems) + " systems violate (" +
                       std::to_string(empty_body_only) + " with a rejected empty-body strict argument)" + list};
}

Outcome flattening_equivalence() {
    std::size_t checked = 0;
    auto agree = [&](const JSBAF& j, std::string& why) {
        ++checked;
        const auto two_step = flatten_joint_attacks(flatten_one_step(j));
        for (auto s : all_semantics) {
            std::set<Extension> reference;
            for (const auto& e : extensions(two_step, s, property_search))
                reference.insert(project(e, j.nodes));
            for (auto mode : {FlattenMode::Literal, FlattenMode::PruneInert}) {
                const auto got = jsbaf_extensions(j, s, mode, property_search);
                if (std::set<Extension>(got.begin(), got.end()) != reference) {
                    why = std::string(to_string(s)) + "/" + std::string(to_string(mode));
                    return false;
                }
            }
        }
        return true;
    };
    std::string why;
    for (std::size_t i = 0; i < sampled_small_jsbafs; ++i) {
        std::mt19937_64 rng(flattening_seed + i);
        if (!agree(random_jsbaf(rng, 1 + i % 5, max_jsbaf_supports, 0.25), why))
            return {false, why + " differs, seed " + std::to_string(flattening_seed + i)};
    }
    for (std::size_t i = 0; i < random_large_jsbafs; ++i) {
        const std::uint64_t seed = flattening_seed + sampled_small_jsbafs + i;
        std::mt19937_64 rng(seed);
        if (!agree(random_jsbaf(rng, 6 + i % 5, max_jsbaf_supports, 0.2), why))
            return {false, why + " differs, seed " + std::to_string(seed)};
    }
    return {true, std::to_string(checked) + " frameworks, zero discrepancies"};
}

std::string run_cli(const std::string& args, int& status) {
    const std::string cmd = std::string("\"") + ASPIC_CLI_PATH + "\" " + args;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    for (std::size_t k; (k = std::fread(buf.data(), 1, buf.size(), pipe)) > 0;)
        out.append(buf.data(), k);
    status = pclose(pipe);
    return out;
}

Outcome determinism() {
    const std::string args = "eval --file \"" + data_path("tandem.asp") + "\" --semantics preferred --mode deductive --report json";
    int s1 = 0, s2 = 0;
    const auto a = run_cli(args, s1);
    const auto b = run_cli(args, s2);
    if (s1 != 0 || s2 != 0)
        return {false, "cli exit status " + std::to_string(s1) + "/" + std::to_string(s2)};
    if (a.empty() || a != b)
        return {false, "reports differ"};
    return {true, "two eval runs byte-identical (" + std::to_string(a.size()) + " bytes)"};
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"tandem arguments", tandem_arguments},
        {"tandem joint-support framework", tandem_framework},
        {"tandem flattening and preferred extensions", tandem_preferred},
        {"tandem conclusion sets", tandem_conclusions},
        {"ASPIC- baseline contrast", aspic_minus_contrast},
        {"semantics oracle equivalence", oracle_equivalence},
        {"deductive and conflict-free sup extensions", sup_extensions_deductive},
        {"postulates on random consistent systems", postulates_on_random_systems},
        {"simplified flattening equivalence", flattening_equivalence},
        {"report determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail
                  << std::endl;
    }
    return failed ? 1 : 0;
}
