#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "realdecide/multipoly.hpp"
#include "realdecide/rational.hpp"
#include "realdecide/signdet.hpp"
#include "realdecide/system.hpp"

namespace realdecide {

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(const std::string& msg, int line_, int column_)
        : std::runtime_error(msg + " at line " + std::to_string(line_) + ", column " +
                             std::to_string(column_)),
          line(line_), column(column_) {}
};

namespace detail {

// Grammar:
//   expression := term (('+'|'-') term)*
//   term       := factor ('*' factor)*
//   factor     := base ('^' unsigned-integer)?
//   base       := rational-literal | identifier | '(' expression ')'
//   rational-literal := integer ('/' positive-integer)?
// Whitespace is insignificant; implicit multiplication is not supported.
class ExprParser {
public:
    ExprParser(const std::string& text, const std::vector<std::string>& vars, int line)
        : text_(text), vars_(vars), line_(line) {}

    MultiPoly parse() {
        MultiPoly p = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    MultiPoly expression() {
        MultiPoly acc = term();
        while (true) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                acc = acc + term();
            } else if (peek() == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    MultiPoly factor() {
        MultiPoly b = base();
        skip_ws();
        if (peek() != '^') return b;
        ++pos_;
        skip_ws();
        if (!std::isdigit(peek())) fail("malformed exponent: expected unsigned integer");
        unsigned long e = 0;
        while (std::isdigit(peek())) {
            e = e * 10 + static_cast<unsigned long>(peek() - '0');
            if (e > 10000) fail("malformed exponent: too large");
            ++pos_;
        }
        MultiPoly r = MultiPoly::constant(arity(), Rational(1));
        for (unsigned long i = 0; i < e; ++i) r = r * b;
        return r;
    }

    MultiPoly base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            MultiPoly p = expression();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (c == '-' || std::isdigit(c)) return MultiPoly::constant(arity(), rational_literal());
        if (std::isalpha(c) || c == '_') {
            std::size_t start = pos_;
            while (std::isalnum(peek()) || peek() == '_') ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i] == name) return MultiPoly::variable(arity(), i);
            fail("unknown identifier '" + name + "'", static_cast<int>(start));
        }
        if (c == '/') fail("division is not supported outside rational literals");
        fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
        return MultiPoly::zero(1);  // unreachable
    }

    Rational rational_literal() {
        std::size_t start = pos_;
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        if (!std::isdigit(peek())) fail("expected digits in rational literal", static_cast<int>(start));
        std::string num;
        while (std::isdigit(peek())) num += text_[pos_++];
        std::string den;
        if (peek() == '/') {
            ++pos_;
            if (!std::isdigit(peek())) fail("malformed rational literal: expected denominator");
            while (std::isdigit(peek())) den += text_[pos_++];
        }
        std::string lit = (neg ? "-" : "") + num + (den.empty() ? "" : "/" + den);
        auto r = parse_rational(lit);
        if (!r) fail("malformed rational literal '" + lit + "'", static_cast<int>(start));
        return *r;
    }

    std::size_t arity() const { return vars_.empty() ? 1 : vars_.size(); }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { fail(msg, static_cast<int>(pos_)); }
    [[noreturn]] void fail(const std::string& msg, int col) const {
        throw ParseError(msg, line_, col + 1);
    }

    const std::string& text_;
    const std::vector<std::string>& vars_;
    int line_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline MultiPoly parse_polynomial(const std::string& text,
                                  const std::vector<std::string>& vars, int line = 1) {
    if (vars.empty()) throw std::invalid_argument("need at least one variable name");
    return detail::ExprParser(text, vars, line).parse();
}

inline const char* relation_token(Relation r) {
    switch (r) {
        case Relation::Ge: return ">=";
        case Relation::Gt: return ">";
        case Relation::Eq: return "=";
        case Relation::Le: return "<=";
        case Relation::Lt: return "<";
        case Relation::Ne: return "!=";
    }
    return "?";
}

struct SystemDocument {
    std::vector<std::string> variables;
    std::vector<std::pair<MultiPoly, Relation>> conditions;

    friend bool operator==(const SystemDocument& a, const SystemDocument& b) {
        return a.variables == b.variables && a.conditions == b.conditions;
    }
};

// Format: first significant line `vars: x, y`; every following non-empty,
// non-# line is `<expression> <relation> 0`.
inline SystemDocument parse_system(const std::string& text) {
    SystemDocument doc;
    std::vector<std::pair<std::string, int>> lines;
    {
        std::string cur;
        int ln = 1;
        for (char c : text + "\n") {
            if (c != '\n') {
                cur += c;
                continue;
            }
            std::size_t a = cur.find_first_not_of(" \t\r");
            if (a != std::string::npos && cur[a] != '#')
                lines.emplace_back(cur, ln);
            cur.clear();
            ++ln;
        }
    }
    if (lines.empty()) throw ParseError("missing 'vars:' header", 1, 1);

    {
        const auto& [header, ln] = lines[0];
        std::size_t a = header.find_first_not_of(" \t");
        if (header.compare(a, 5, "vars:") != 0)
            throw ParseError("expected 'vars:' header", ln, static_cast<int>(a) + 1);
        std::string rest = header.substr(a + 5);
        std::string name;
        auto flush = [&](std::size_t col) {
            if (name.empty()) throw ParseError("empty variable name", ln, static_cast<int>(col));
            for (const auto& v : doc.variables)
                if (v == name) throw ParseError("duplicate variable '" + name + "'", ln,
                                                static_cast<int>(col));
            doc.variables.push_back(name);
            name.clear();
        };
        for (std::size_t i = 0; i <= rest.size(); ++i) {
            char c = i < rest.size() ? rest[i] : ',';
            if (c == ',') {
                flush(a + 6 + i);
            } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                if (name.empty() && std::isdigit(static_cast<unsigned char>(c)))
                    throw ParseError("variable names must not start with a digit", ln,
                                     static_cast<int>(a + 6 + i));
                name += c;
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
                throw ParseError("unexpected character in vars list", ln,
                                 static_cast<int>(a + 6 + i));
            }
        }
    }

    static const std::pair<const char*, Relation> kRelations[] = {
        {">=", Relation::Ge}, {"<=", Relation::Le}, {"!=", Relation::Ne},
        {">", Relation::Gt},  {"<", Relation::Lt},  {"=", Relation::Eq},
    };
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto& [text_line, ln] = lines[li];
        std::size_t rel_pos = std::string::npos;
        const std::pair<const char*, Relation>* rel = nullptr;
        for (const auto& cand : kRelations) {
            std::size_t p = text_line.find(cand.first);
            if (p != std::string::npos && (rel_pos == std::string::npos || p < rel_pos ||
                                           (p == rel_pos && std::string(cand.first).size() > 1))) {
                rel_pos = p;
                rel = &cand;
            }
        }
        if (!rel) throw ParseError("missing relation", ln, 1);
        std::string lhs = text_line.substr(0, rel_pos);
        std::string rhs = text_line.substr(rel_pos + std::string(rel->first).size());
        std::size_t r0 = rhs.find_first_not_of(" \t\r");
        if (r0 == std::string::npos || rhs.find_first_not_of(" \t\r", r0 + 1) != std::string::npos ||
            rhs[r0] != '0')
            throw ParseError("right-hand side must be 0", ln,
                             static_cast<int>(rel_pos + std::string(rel->first).size() + 1));
        doc.conditions.emplace_back(parse_polynomial(lhs, doc.variables, ln), rel->second);
    }
    return doc;
}

inline std::string print_system(const SystemDocument& doc) {
    std::string out = "vars: ";
    for (std::size_t i = 0; i < doc.variables.size(); ++i) {
        if (i) out += ", ";
        out += doc.variables[i];
    }
    out += "\n";
    for (const auto& [p, rel] : doc.conditions)
        out += to_string(p, doc.variables) + " " + relation_token(rel) + " 0\n";
    return out;
}

// Conversion for the decision core: <=, < and != are not in its relation
// set, so p <= 0 becomes -p >= 0, p < 0 becomes -p > 0, and p != 0 becomes
// p^2 > 0 (equivalent over the reals).
inline SignSystem to_sign_system(const SystemDocument& doc) {
    SignSystem sys;
    sys.arity = doc.variables.empty() ? 1 : doc.variables.size();
    for (const auto& [p, rel] : doc.conditions) {
        switch (rel) {
            case Relation::Ge:
            case Relation::Gt:
            case Relation::Eq:
                sys.polys.push_back(p);
                sys.relations.push_back(rel);
                break;
            case Relation::Le:
                sys.polys.push_back(-p);
                sys.relations.push_back(Relation::Ge);
                break;
            case Relation::Lt:
                sys.polys.push_back(-p);
                sys.relations.push_back(Relation::Gt);
                break;
            case Relation::Ne:
                sys.polys.push_back(p * p);
                sys.relations.push_back(Relation::Gt);
                break;
        }
    }
    return sys;
}

}  // namespace realdecide
