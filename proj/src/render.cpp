#include "aspic/render.hpp"

#include "aspic/errors.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace aspic {

namespace {

std::string quoted(const NodeId& n) {
    std::string out = "\"";
    for (char c : n.str()) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

void node_lines(std::ostringstream& out, const NodeSet& nodes) {
    for (const auto& n : nodes) {
        out << "  " << quoted(n);
        if (n.is_meta())
            out << " [shape=box, style=dashed]";
        out << ";\n";
    }
}

void edge_lines(std::ostringstream& out, const std::set<Edge>& edges) {
    for (const auto& [a, b] : edges)
        out << "  " << quoted(a) << " -> " << quoted(b) << ";\n";
}

constexpr const char* header = "digraph af {\n";
constexpr const char* doubled = "color=\"black:invis:black\"";

} // namespace

std::string emit_dot(const AF& af) {
    std::ostringstream out;
    out << header;
    node_lines(out, af.nodes);
    edge_lines(out, af.attacks);
    out << "}\n";
    return out.str();
}

std::string emit_dot(const HigherLevelAF& h) {
    std::ostringstream out;
    out << header;
    node_lines(out, h.nodes);
    std::size_t junction = 0;
    for (const auto& att : h.attacks) {
        if (att.attackers.size() == 1) {
            out << "  " << quoted(*att.attackers.begin()) << " -> " << quoted(att.target) << ";\n";
            continue;
        }
        const std::string j = "\"_joint" + std::to_string(junction++) + "\"";
        out << "  " << j << " [shape=point];\n";
        for (const auto& a : att.attackers)
            out << "  " << quoted(a) << " -> " << j << " [arrowhead=none];\n";
        out << "  " << j << " -> " << quoted(att.target) << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string emit_dot(const JSBAF& jsbaf) {
    std::ostringstream out;
    out << header;
    node_lines(out, jsbaf.nodes);
    edge_lines(out, jsbaf.attacks);
    std::size_t junction = 0;
    for (const auto& s : jsbaf.supports) {
        const std::string j = "\"_support" + std::to_string(junction++) + "\"";
        out << "  " << j << " [shape=point];\n";
        for (const auto& a : s.sources)
            out << "  " << quoted(a) << " -> " << j << " [" << doubled << ", arrowhead=none];\n";
        out << "  " << j << " -> " << quoted(s.target) << " [" << doubled << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::map<NodeId, std::string> apx_names(const NodeSet& nodes) {
    std::map<NodeId, std::string> names;
    std::set<std::string> taken;
    for (const auto& n : nodes) {
        std::string s;
        for (char c : n.str()) {
            if (std::isalnum(static_cast<unsigned char>(c)))
                s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            else if (!s.empty() && s.back() != '_')
                s += '_';
        }
        while (!s.empty() && s.back() == '_')
            s.pop_back();
        if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front())))
            s = "n_" + s;
        std::string candidate = s;
        for (int k = 2; taken.count(candidate); ++k)
            candidate = s + "_" + std::to_string(k);
        taken.insert(candidate);
        names.emplace(n, candidate);
    }
    return names;
}

std::string emit_apx(const AF& af) {
    const auto names = apx_names(af.nodes);
    std::ostringstream out;
    for (const auto& n : af.nodes)
        out << "arg(" << names.at(n) << ").\n";
    for (const auto& [a, b] : af.attacks)
        out << "att(" << names.at(a) << ',' << names.at(b) << ").\n";
    for (const auto& n : af.nodes)
        if (names.at(n) != n.str())
            out << "% " << names.at(n) << " = " << n.str() << '\n';
    return out.str();
}

AF parse_apx(std::string_view text) {
    AF af;
    struct PendingAttack {
        Edge edge;
        std::size_t line, column;
    };
    std::vector<PendingAttack> pending;
    std::size_t line = 1, col = 1, i = 0;
    auto advance = [&] {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    };
    auto skip = [&] {
        while (i < text.size()) {
            if (std::isspace(static_cast<unsigned char>(text[i]))) {
                advance();
            } else if (text[i] == '%') {
                while (i < text.size() && text[i] != '\n')
                    advance();
            } else {
                break;
            }
        }
    };
    auto fail = [&](const std::string& msg) -> ParseError {
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])))
            ++j;
        return ParseError(line, col, std::string(text.substr(i, j - i)), msg);
    };
    auto ident = [&] {
        skip();
        std::string s;
        while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
            s += text[i];
            advance();
        }
        if (s.empty())
            throw fail("expected identifier");
        return s;
    };
    auto punct = [&](char c) {
        skip();
        if (i >= text.size() || text[i] != c)
            throw fail(std::string("expected '") + c + "'");
        advance();
    };

    while (true) {
        skip();
        if (i >= text.size())
            break;
        const std::size_t fact_line = line, fact_col = col;
        const std::string kw = ident();
        punct('(');
        if (kw == "arg") {
            af.nodes.insert(NodeId::base(ident()));
        } else if (kw == "att") {
            std::string a = ident();
            punct(',');
            std::string b = ident();
            pending.push_back({{NodeId::base(a), NodeId::base(b)}, fact_line, fact_col});
        } else {
            throw ParseError(line, col, kw, "expected arg or att");
        }
        punct(')');
        punct('.');
    }
    for (const auto& [e, l, c] : pending) {
        if (!af.nodes.count(e.first) || !af.nodes.count(e.second))
            throw ParseError(l, c, "att(" + e.first.str() + "," + e.second.str() + ")", "attack on undeclared argument");
        af.attacks.insert(e);
    }
    return af;
}

} // namespace aspic
