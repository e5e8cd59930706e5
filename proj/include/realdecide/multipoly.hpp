#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "realdecide/rational.hpp"
#include "realdecide/unipoly.hpp"

namespace realdecide {

using ExponentVec = std::vector<unsigned>;

// Sparse multivariate polynomial over Rational. Terms map exponent vectors
// (length = arity) to nonzero coefficients; the map order (lexicographic on
// exponent vectors) makes iteration deterministic.
class MultiPoly {
public:
    explicit MultiPoly(std::size_t arity) : arity_(arity) {
        if (arity == 0) throw std::invalid_argument("arity must be positive");
    }

    static MultiPoly zero(std::size_t arity) { return MultiPoly(arity); }

    static MultiPoly constant(std::size_t arity, const Rational& c) {
        MultiPoly p(arity);
        if (c != 0) p.terms_[ExponentVec(arity, 0)] = c;
        return p;
    }

    static MultiPoly variable(std::size_t arity, std::size_t index) {
        if (index >= arity) throw std::invalid_argument("variable index out of range");
        MultiPoly p(arity);
        ExponentVec e(arity, 0);
        e[index] = 1;
        p.terms_[std::move(e)] = Rational(1);
        return p;
    }

    static MultiPoly monomial(std::size_t arity, ExponentVec e, const Rational& c) {
        if (e.size() != arity) throw std::invalid_argument("exponent vector arity mismatch");
        MultiPoly p(arity);
        if (c != 0) p.terms_[std::move(e)] = c;
        return p;
    }

    std::size_t arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<ExponentVec, Rational>& terms() const { return terms_; }

    bool is_constant() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && total_degree() == 0;
    }

    Rational constant_term() const {
        auto it = terms_.find(ExponentVec(arity_, 0));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    long total_degree() const {
        long d = -1;
        for (const auto& [e, c] : terms_) {
            long t = 0;
            for (unsigned x : e) t += x;
            if (t > d) d = t;
        }
        return d;
    }

    long degree_in(std::size_t var) const {
        long d = 0;
        for (const auto& [e, c] : terms_)
            if (static_cast<long>(e[var]) > d) d = e[var];
        return terms_.empty() ? -1 : d;
    }

    bool is_homogeneous() const {
        long d = -1;
        for (const auto& [e, c] : terms_) {
            long t = 0;
            for (unsigned x : e) t += x;
            if (d < 0) d = t;
            else if (t != d) return false;
        }
        return true;
    }

    void add_term(const ExponentVec& e, const Rational& c) {
        if (e.size() != arity_) throw std::invalid_argument("exponent vector arity mismatch");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly operator-() const {
        MultiPoly r(arity_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        a.check_arity(b);
        MultiPoly r(a);
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        a.check_arity(b);
        MultiPoly r(a);
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_arity(b);
        MultiPoly r(a.arity_);
        ExponentVec e(a.arity_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const Rational& c) {
        MultiPoly r(a.arity_);
        if (c == 0) return r;
        for (const auto& [e, k] : a.terms_) r.terms_[e] = k * c;
        return r;
    }

    friend MultiPoly operator*(const Rational& c, const MultiPoly& a) { return a * c; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        if (point.size() != arity_)
            throw std::invalid_argument("evaluation point arity mismatch");
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < arity_; ++i)
                if (e[i] > 0) t *= rational_pow(point[i], e[i]);
            acc += t;
        }
        return acc;
    }

    MultiPoly derivative(std::size_t var) const {
        if (var >= arity_) throw std::invalid_argument("variable index out of range");
        MultiPoly r(arity_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            ExponentVec d(e);
            d[var] -= 1;
            r.terms_[std::move(d)] = c * Rational(static_cast<long>(e[var]));
        }
        return r;
    }

private:
    void check_arity(const MultiPoly& other) const {
        if (arity_ != other.arity_) throw std::invalid_argument("arity mismatch");
    }

    std::size_t arity_;
    std::map<ExponentVec, Rational> terms_;
};

// hom(p) = X0^d * p(X1/X0, ..., Xn/X0): a new variable is prepended and
// every term is padded up to total degree d.
inline MultiPoly homogenize(const MultiPoly& p, long d) {
    if (d < p.total_degree())
        throw std::invalid_argument("homogenization degree below total degree");
    MultiPoly r(p.arity() + 1);
    for (const auto& [e, c] : p.terms()) {
        long t = 0;
        for (unsigned x : e) t += x;
        ExponentVec ne(p.arity() + 1);
        ne[0] = static_cast<unsigned>(d - t);
        for (std::size_t i = 0; i < p.arity(); ++i) ne[i + 1] = e[i];
        r.add_term(ne, c);
    }
    return r;
}

// Substitutes 1 for variable `var`, dropping it from the arity.
inline MultiPoly set_var_to_one(const MultiPoly& p, std::size_t var) {
    if (p.arity() < 2) throw std::invalid_argument("cannot drop variable of unary polynomial");
    MultiPoly r(p.arity() - 1);
    for (const auto& [e, c] : p.terms()) {
        ExponentVec ne;
        ne.reserve(p.arity() - 1);
        for (std::size_t i = 0; i < p.arity(); ++i)
            if (i != var) ne.push_back(e[i]);
        r.add_term(ne, c);
    }
    return r;
}

// Substitutes univariate polynomials for every variable.
inline UniPoly compose_univariate(const MultiPoly& p, const std::vector<UniPoly>& subs) {
    if (subs.size() != p.arity())
        throw std::invalid_argument("substitution arity mismatch");
    UniPoly acc;
    for (const auto& [e, c] : p.terms()) {
        UniPoly term = UniPoly::constant(c);
        for (std::size_t i = 0; i < p.arity(); ++i)
            for (unsigned j = 0; j < e[i]; ++j) term = term * subs[i];
        acc = acc + term;
    }
    return acc;
}

// Widens arity by appending `extra` fresh variables (exponent 0 everywhere).
inline MultiPoly extend_arity(const MultiPoly& p, std::size_t extra) {
    MultiPoly r(p.arity() + extra);
    for (const auto& [e, c] : p.terms()) {
        ExponentVec ne(e);
        ne.resize(p.arity() + extra, 0);
        r.add_term(ne, c);
    }
    return r;
}

inline UniPoly to_unipoly(const MultiPoly& p) {
    if (p.arity() != 1) throw std::invalid_argument("not univariate");
    std::vector<Rational> c;
    for (const auto& [e, k] : p.terms()) {
        if (e[0] >= c.size()) c.resize(e[0] + 1, Rational(0));
        c[e[0]] = k;
    }
    return UniPoly(std::move(c));
}

inline MultiPoly from_unipoly(const UniPoly& p) {
    MultiPoly r(1);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        r.add_term(ExponentVec{static_cast<unsigned>(i)}, p.coeff(i));
    return r;
}

// Exact division in the polynomial ring: returns a/b when b divides a,
// nothing otherwise. Repeated lex-leading-term elimination; the leading
// exponent of the running remainder strictly decreases, so this terminates.
inline std::optional<MultiPoly> try_divide_exact(const MultiPoly& a, const MultiPoly& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("arity mismatch");
    if (b.is_zero()) return std::nullopt;
    MultiPoly rem = a;
    MultiPoly quot(a.arity());
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms().rbegin();
        const auto& [be, bc] = *b.terms().rbegin();
        ExponentVec qe(a.arity());
        for (std::size_t i = 0; i < a.arity(); ++i) {
            if (re[i] < be[i]) return std::nullopt;
            qe[i] = re[i] - be[i];
        }
        MultiPoly qterm = MultiPoly::monomial(a.arity(), qe, rc / bc);
        quot = quot + qterm;
        rem = rem - qterm * b;
    }
    return quot;
}

inline MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
    auto q = try_divide_exact(a, b);
    if (!q) throw std::invalid_argument("inexact multivariate division");
    return *q;
}

inline std::string to_string(const MultiPoly& p, const std::vector<std::string>& vars) {
    if (vars.size() != p.arity()) throw std::invalid_argument("variable name arity mismatch");
    if (p.is_zero()) return "0";
    std::string out;
    // highest-degree-first reads naturally; reverse of map order is close enough
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        if (!out.empty()) out += sign(c) < 0 ? " - " : " + ";
        else if (sign(c) < 0) out += "-";
        Rational a = rational_abs(c);
        std::string mono;
        for (std::size_t i = 0; i < p.arity(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) out += to_string(a);
        else {
            // a leading "-x" would not re-parse (no unary minus in the
            // grammar), so force the coefficient there
            if (a != 1 || out == "-") out += to_string(a) + "*";
            out += mono;
        }
    }
    return out;
}

}  // namespace realdecide
