#include "aspic/dsl.hpp"

#include "aspic/errors.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

namespace aspic {

SourceDocument read_source(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw Error("cannot open " + path);
        buf << in.rdbuf();
    }
    return {buf.str(), path};
}

namespace {

enum class Tok { Ident, Colon, Comma, Arrow, DoubleArrow, Equals, Tilde, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t column; // 1-based
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view line, std::size_t line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == '#')
            break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t col = i + 1;
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < line.size() && ident_char(line[j]))
                ++j;
            out.push_back({Tok::Ident, std::string(line.substr(i, j - i)), col});
            i = j;
            continue;
        }
        auto two = line.substr(i, 2);
        if (two == "->") {
            out.push_back({Tok::Arrow, "->", col});
            i += 2;
        } else if (two == "=>") {
            out.push_back({Tok::DoubleArrow, "=>", col});
            i += 2;
        } else if (c == ':') {
            out.push_back({Tok::Colon, ":", col});
            ++i;
        } else if (c == ',') {
            out.push_back({Tok::Comma, ",", col});
            ++i;
        } else if (c == '=') {
            out.push_back({Tok::Equals, "=", col});
            ++i;
        } else if (c == '~') {
            out.push_back({Tok::Tilde, "~", col});
            ++i;
        } else {
            std::size_t j = i + 1;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
                ++j;
            throw ParseError(line_no, col, std::string(line.substr(i, j - i)), "unexpected character");
        }
    }
    out.push_back({Tok::End, "", line.size() + 1});
    return out;
}

struct Position {
    std::size_t line, column;
};

struct PositionedFormula {
    Formula formula;
    Position pos;
};

class LineParser {
public:
    LineParser(std::vector<Token> tokens, std::size_t line) : toks_(std::move(tokens)), line_(line) {}

    const Token& peek() const { return toks_[i_]; }
    Token next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }
    Position pos() const { return {line_, peek().column}; }

    [[noreturn]] void fail(const std::string& message) const {
        const auto& tok = peek();
        throw ParseError(line_, tok.column, tok.kind == Tok::End ? "end of line" : tok.text, message);
    }

    Token expect(Tok kind, const char* what) {
        if (peek().kind != kind)
            fail(std::string("expected ") + what);
        return next();
    }

    PositionedFormula literal() {
        Position p = pos();
        unsigned negs = 0;
        while (peek().kind == Tok::Tilde) {
            next();
            ++negs;
        }
        Token atom = expect(Tok::Ident, "atom");
        Formula f = Formula::atom(atom.text);
        for (unsigned k = 0; k < negs; ++k)
            f = f.negated();
        return {f, {p.line, negs ? p.column : atom.column}};
    }

    void end() {
        if (peek().kind != Tok::End)
            fail("unexpected trailing input");
    }

private:
    std::vector<Token> toks_;
    std::size_t i_ = 0;
    std::size_t line_;
};

} // namespace

ArgumentationSystem parse_system(const SourceDocument& doc) {
    ArgumentationSystem as;
    std::set<std::string> declared;
    std::vector<PositionedFormula> uses;
    std::map<std::string, Position> rule_pos;
    std::map<std::tuple<RuleKind, std::vector<Formula>, Formula>, std::string> shapes;
    struct PendingName {
        std::string rule;
        Position pos;
        PositionedFormula name;
    };
    std::vector<PendingName> names;

    std::istringstream in(doc.text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();
        LineParser p(lex(raw, line_no), line_no);
        if (p.peek().kind == Tok::End)
            continue;
        Token kw = p.expect(Tok::Ident, "statement keyword");

        if (kw.text == "atoms") {
            if (p.peek().kind == Tok::End)
                p.fail("atoms declaration lists no atoms");
            while (p.peek().kind != Tok::End) {
                Token a = p.expect(Tok::Ident, "atom name");
                if (declared.insert(a.text).second)
                    as.vocabulary.push_back(a.text);
            }
        } else if (kw.text == "strict" || kw.text == "defeasible") {
            const bool strict = kw.text == "strict";
            Position id_pos = p.pos();
            Token id = p.expect(Tok::Ident, "rule id");
            p.expect(Tok::Colon, "':' after rule id");
            Rule r;
            r.id = id.text;
            r.kind = strict ? RuleKind::Strict : RuleKind::Defeasible;
            const Tok arrow = strict ? Tok::Arrow : Tok::DoubleArrow;
            if (p.peek().kind != arrow) {
                while (true) {
                    auto f = p.literal();
                    r.body.push_back(f.formula);
                    uses.push_back(f);
                    if (p.peek().kind != Tok::Comma)
                        break;
                    p.next();
                }
            }
            if (p.peek().kind == (strict ? Tok::DoubleArrow : Tok::Arrow))
                p.fail(strict ? "strict rules use '->'" : "defeasible rules use '=>'");
            p.expect(arrow, strict ? "'->'" : "'=>'");
            auto head = p.literal();
            r.head = head.formula;
            uses.push_back(head);
            p.end();

            if (!rule_pos.emplace(r.id, id_pos).second)
                throw ValidationError(id_pos.line, id_pos.column, "duplicate rule id " + r.id);
            auto [it, fresh] = shapes.emplace(std::tuple{r.kind, r.body, r.head}, r.id);
            if (!fresh)
                throw ValidationError(id_pos.line, id_pos.column,
                                      "rule " + r.id + " duplicates rule " + it->second);
            (strict ? as.strict_rules : as.defeasible_rules).push_back(std::move(r));
        } else if (kw.text == "name") {
            Position rp = p.pos();
            Token id = p.expect(Tok::Ident, "defeasible rule id");
            p.expect(Tok::Equals, "'='");
            auto f = p.literal();
            p.end();
            names.push_back({id.text, rp, f});
        } else {
            throw ParseError(line_no, kw.column, kw.text, "unknown statement (expected atoms, strict, defeasible or name)");
        }
    }

    for (const auto& n : names) {
        const Rule* r = as.find_rule(n.rule);
        if (!r)
            throw ValidationError(n.pos.line, n.pos.column, "n defined on unknown rule " + n.rule);
        if (r->is_strict())
            throw ValidationError(n.pos.line, n.pos.column, "n defined on strict rule " + n.rule);
        if (!as.undercut_names.emplace(n.rule, n.name.formula).second)
            throw ValidationError(n.pos.line, n.pos.column, "n defined twice for rule " + n.rule);
        uses.push_back(n.name);
    }
    if (!declared.empty()) {
        for (const auto& u : uses)
            if (!declared.count(u.formula.atom_name()))
                throw ValidationError(u.pos.line, u.pos.column,
                                      "undeclared atom '" + u.formula.atom_name() + "'");
    }
    as.validate();
    return as;
}

ArgumentationSystem parse_system(std::string_view text) {
    return parse_system(SourceDocument{std::string(text), "<string>"});
}

std::string print_system(const ArgumentationSystem& as) {
    std::ostringstream out;
    if (!as.vocabulary.empty()) {
        out << "atoms";
        for (const auto& a : as.vocabulary)
            out << ' ' << a;
        out << '\n';
    }
    auto rule = [&](const Rule& r) {
        out << (r.is_strict() ? "strict " : "defeasible ") << r.id << ": " << r.str() << '\n';
    };
    for (const auto& r : as.strict_rules)
        rule(r);
    for (const auto& r : as.defeasible_rules)
        rule(r);
    for (const auto& [id, f] : as.undercut_names)
        out << "name " << id << " = " << f.str() << '\n';
    return out.str();
}

} // namespace aspic
