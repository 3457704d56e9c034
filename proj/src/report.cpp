#include "aspic/report.hpp"

#include "aspic/dsl.hpp"
#include "aspic/errors.hpp"

#include <sstream>

namespace aspic {

using nlohmann::json;

bool EvalReport::violation_found() const {
    // Postulates only speak about consistent systems.
    if (!consistent)
        return false;
    for (const auto& p : postulates)
        if (!p.all_satisfied())
            return true;
    return false;
}

EvalReport run_eval(const ArgumentationSystem& as, const EvalOptions& options, std::string provenance) {
    EvalReport r;
    r.provenance = std::move(provenance);
    r.options = options;
    r.system = as;
    r.consistent = is_consistent(as);
    try {
        r.evaluation = evaluate(as, options.semantics, options.mode, options.limits);
        for (const auto& c : r.evaluation->conclusion_sets)
            r.postulates.push_back(check_postulates(as, c.formulas));
    } catch (const LimitExceeded& e) {
        r.status = "limit_exceeded";
        r.message = e.what();
        r.limit_name = e.limit();
        r.limit_value = e.value();
    } catch (const InconsistentSystem& e) {
        r.status = "inconsistent";
        r.message = e.what();
    }
    return r;
}

namespace {

json node_list(const NodeSet& nodes) {
    json out = json::array();
    for (const auto& n : nodes)
        out.push_back(n.str());
    return out;
}

json edge_list(const std::set<Edge>& edges) {
    json out = json::array();
    for (const auto& [a, b] : edges)
        out.push_back({a.str(), b.str()});
    return out;
}

json formula_list(const FormulaSet& fs) {
    json out = json::array();
    for (const auto& f : fs)
        out.push_back(f.str());
    return out;
}

json extension_list(const std::vector<Extension>& exts) {
    json out = json::array();
    for (const auto& e : exts)
        out.push_back(node_list(e));
    return out;
}

json consistency_json(const ConsistencyVerdict& v) {
    json out{{"satisfied", v.satisfied}, {"witness", nullptr}};
    if (v.witness)
        out["witness"] = {v.witness->first.str(), v.witness->second.str()};
    return out;
}

std::string verdict_word(bool ok) { return ok ? "satisfied" : "VIOLATED"; }

std::string set_text(const FormulaSet& fs) {
    std::string out = "{";
    bool first = true;
    for (const auto& f : fs) {
        if (!first)
            out += ',';
        first = false;
        out += f.str();
    }
    return out + "}";
}

void postulate_text(std::ostream& out, const PostulateReport& p, const char* indent) {
    out << indent << "closure: " << verdict_word(p.closure.satisfied);
    if (p.closure.witness)
        out << " (rule " << p.closure.witness->id << ": " << p.closure.witness->str() << ")";
    out << '\n';
    auto cons = [&](const char* name, const ConsistencyVerdict& v) {
        out << indent << name << ": " << verdict_word(v.satisfied);
        if (v.witness)
            out << " (" << v.witness->first.str() << ", " << v.witness->second.str() << ")";
        out << '\n';
    };
    cons("direct consistency", p.direct_consistency);
    cons("indirect consistency", p.indirect_consistency);
}

void arguments_text(std::ostream& out, const ArgumentStore& store) {
    for (const auto& a : store.arguments()) {
        std::string subs;
        for (std::size_t i = 0; i < a.subs.size(); ++i)
            subs += (i ? "," : "") + store[a.subs[i]].label;
        out << "  " << a.label << " = " << a.rule_id << '(' << subs << ")  " << store.describe(a.id)
            << (a.defeasible() ? "  [defeasible]" : "") << '\n';
    }
}

json system_lines(const ArgumentationSystem& as) {
    json lines = json::array();
    std::istringstream in(print_system(as));
    for (std::string l; std::getline(in, l);)
        lines.push_back(l);
    return lines;
}

} // namespace

json to_json(const PostulateReport& p) {
    json closure{{"satisfied", p.closure.satisfied}, {"witness", nullptr}};
    if (p.closure.witness)
        closure["witness"] = {{"rule", p.closure.witness->id}, {"text", p.closure.witness->str()}};
    return {{"closure", closure},
            {"direct_consistency", consistency_json(p.direct_consistency)},
            {"indirect_consistency", consistency_json(p.indirect_consistency)}};
}

json to_json(const ArgumentStore& store) {
    json args = json::array();
    for (const auto& a : store.arguments()) {
        json subs = json::array();
        for (ArgId s : a.subs)
            subs.push_back(store[s].label);
        args.push_back({{"id", a.label},
                        {"rule", a.rule_id},
                        {"subs", subs},
                        {"conclusion", a.conclusion.str()},
                        {"structure", store.describe(a.id)},
                        {"expanded", store.expand(a.id)},
                        {"defeasible", a.defeasible()}});
    }
    return {{"arguments", args},
            {"count", store.size()},
            {"pruned_circular", store.pruned_circular()},
            {"max_arguments", store.limits().max_arguments}};
}

json to_json(const EvalReport& r) {
    const auto& as = r.system;
    json out{
        {"input", r.provenance},
        {"status", r.status},
        {"message", r.message},
        {"settings",
         {{"semantics", std::string(to_string(r.options.semantics))},
          {"mode", std::string(to_string(r.options.mode))},
          {"flatten", std::string(to_string(r.options.limits.flatten))},
          {"require_consistent", r.options.limits.require_consistent},
          {"max_arguments", r.options.limits.enumeration.max_arguments},
          {"max_nodes", r.options.limits.search.max_nodes},
          {"non_circular_arguments", true}}},
        {"system",
         {{"strict_rules", as.strict_rules.size()},
          {"defeasible_rules", as.defeasible_rules.size()},
          {"undercut_names", as.undercut_names.size()},
          {"consistent", r.consistent},
          {"rules", system_lines(as)}}},
        {"in_postulate_scope", r.consistent},
        {"limit", nullptr},
        {"enumeration", nullptr},
        {"arguments", json::array()},
        {"framework", nullptr},
        {"flattened", nullptr},
        {"extensions", json::array()},
        {"conclusion_sets", json::array()},
        {"postulates", json::array()},
    };
    if (r.limit_name)
        out["limit"] = {{"name", *r.limit_name}, {"value", *r.limit_value}};
    if (!r.evaluation) {
        out["summary"] = {{"violations", 0}, {"conclusion_sets", 0}};
        return out;
    }

    const Evaluation& ev = *r.evaluation;
    json store = to_json(ev.store);
    out["arguments"] = store["arguments"];
    out["enumeration"] = {{"count", store["count"]},
                          {"pruned_circular", store["pruned_circular"]},
                          {"pruned", ev.store.pruned_circular() > 0}};

    json supports = json::array();
    for (const auto& s : ev.framework.supports)
        supports.push_back({{"from", node_list(s.sources)}, {"to", s.target.str()}});
    out["framework"] = {{"nodes", node_list(ev.framework.nodes)},
                        {"attacks", edge_list(ev.framework.attacks)},
                        {"supports", supports}};
    if (ev.flattened)
        out["flattened"] = {{"nodes", node_list(ev.flattened->nodes)},
                            {"attacks", edge_list(ev.flattened->attacks)},
                            {"extensions", extension_list(ev.raw_extensions)}};
    out["extensions"] = extension_list(ev.extensions);

    std::size_t violations = 0;
    for (std::size_t i = 0; i < ev.conclusion_sets.size(); ++i) {
        out["conclusion_sets"].push_back(formula_list(ev.conclusion_sets[i].formulas));
        out["postulates"].push_back(to_json(r.postulates[i]));
        violations += !r.postulates[i].all_satisfied();
    }
    out["summary"] = {{"violations", violations}, {"conclusion_sets", ev.conclusion_sets.size()}};
    return out;
}

json to_json(const ComparisonReport& c) {
    auto mode_json = [](const ModeResult& m) {
        json sets = json::array();
        for (std::size_t i = 0; i < m.sets.size(); ++i)
            sets.push_back({{"conclusions", formula_list(m.sets[i].formulas)},
                            {"extension", node_list(m.sets[i].source_extension)},
                            {"postulates", to_json(m.reports[i])}});
        return json{{"mode", std::string(to_string(m.mode))},
                    {"closure", m.closure},
                    {"direct_consistency", m.direct_consistency},
                    {"indirect_consistency", m.indirect_consistency},
                    {"sets", sets}};
    };
    return {{"semantics", std::string(to_string(c.semantics))},
            {"in_postulate_scope", c.in_postulate_scope},
            {"aspic_minus", mode_json(c.aspic_minus)},
            {"deductive", mode_json(c.deductive)},
            {"differing", c.differing}};
}

std::string emit_report(const EvalReport& r, ReportFormat format) {
    if (format == ReportFormat::Json)
        return to_json(r).dump(2) + "\n";

    std::ostringstream out;
    out << "input: " << r.provenance << '\n';
    out << "semantics: " << to_string(r.options.semantics) << "  mode: " << to_string(r.options.mode)
        << "  flatten: " << to_string(r.options.limits.flatten) << '\n';
    out << "status: " << r.status << '\n';
    if (!r.message.empty())
        out << "message: " << r.message << '\n';
    out << "system: " << r.system.strict_rules.size() << " strict, " << r.system.defeasible_rules.size()
        << " defeasible, " << r.system.undercut_names.size() << " named; "
        << (r.consistent ? "consistent" : "INCONSISTENT") << '\n';
    if (!r.evaluation)
        return out.str();

    const Evaluation& ev = *r.evaluation;
    out << "\narguments (" << ev.store.size() << ")";
    if (ev.store.pruned_circular())
        out << ", " << ev.store.pruned_circular() << " circular candidates pruned";
    out << ":\n";
    arguments_text(out, ev.store);

    out << "\nattacks (" << ev.framework.attacks.size() << "):\n";
    for (const auto& [a, b] : ev.framework.attacks)
        out << "  " << a.str() << " -> " << b.str() << '\n';
    if (!ev.framework.supports.empty()) {
        out << "\nsupports (" << ev.framework.supports.size() << "):\n";
        for (const auto& s : ev.framework.supports)
            out << "  " << to_string(s.sources) << " => " << s.target.str() << '\n';
    }
    if (ev.flattened)
        out << "\nflattened framework: " << ev.flattened->nodes.size() << " nodes, "
            << ev.flattened->attacks.size() << " attacks\n";

    out << "\nextensions (" << ev.extensions.size() << "):\n";
    for (std::size_t i = 0; i < ev.extensions.size(); ++i) {
        out << "  E" << i + 1 << " = " << to_string(ev.extensions[i]) << '\n';
        out << "    conclusions " << set_text(ev.conclusion_sets[i].formulas) << '\n';
        postulate_text(out, r.postulates[i], "    ");
    }
    return out.str();
}

std::string emit_arguments(const ArgumentStore& store, ReportFormat format) {
    if (format == ReportFormat::Json)
        return to_json(store).dump(2) + "\n";
    std::ostringstream out;
    out << store.size() << " arguments";
    if (store.pruned_circular())
        out << " (" << store.pruned_circular() << " circular candidates pruned)";
    out << '\n';
    arguments_text(out, store);
    return out.str();
}

std::string emit_comparisons(const std::vector<ComparisonReport>& reports, const std::string& provenance,
                             ReportFormat format) {
    if (format == ReportFormat::Json) {
        json runs = json::array();
        for (const auto& c : reports)
            runs.push_back(to_json(c));
        return json{{"input", provenance}, {"runs", runs}}.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "input: " << provenance << '\n';
    for (const auto& c : reports) {
        out << '\n' << to_string(c.semantics) << (c.in_postulate_scope ? "" : " (out of postulate scope)") << '\n';
        for (const ModeResult* m : {&c.aspic_minus, &c.deductive}) {
            out << "  " << to_string(m->mode) << ": closure " << verdict_word(m->closure) << ", direct "
                << verdict_word(m->direct_consistency) << ", indirect " << verdict_word(m->indirect_consistency)
                << '\n';
            for (std::size_t i = 0; i < m->sets.size(); ++i) {
                out << "    " << set_text(m->sets[i].formulas) << '\n';
                postulate_text(out, m->reports[i], "      ");
            }
        }
        if (!c.differing.empty()) {
            out << "  differs on:";
            for (const auto& d : c.differing)
                out << ' ' << d;
            out << '\n';
        }
    }
    return out.str();
}

} // namespace aspic
