#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>

#include "realdecide/multipoly.hpp"
#include "realdecide/rational.hpp"

namespace realdecide {

// Polynomial in the infinitesimal eps whose coefficients are MultiPoly.
// Only nonzero coefficients are stored. eps is never given a numeric value;
// limits as eps -> 0 are taken by extracting the lowest-order term.
class EpsPoly {
public:
    explicit EpsPoly(std::size_t coeff_arity) : arity_(coeff_arity) {}

    static EpsPoly zero(std::size_t coeff_arity) { return EpsPoly(coeff_arity); }

    static EpsPoly from_coeff(unsigned eps_exp, MultiPoly c) {
        EpsPoly p(c.arity());
        if (!c.is_zero()) p.coeffs_.emplace(eps_exp, std::move(c));
        return p;
    }

    static EpsPoly constant(std::size_t coeff_arity, const Rational& c) {
        return from_coeff(0, MultiPoly::constant(coeff_arity, c));
    }

    static EpsPoly eps(std::size_t coeff_arity) {
        return from_coeff(1, MultiPoly::constant(coeff_arity, Rational(1)));
    }

    std::size_t coeff_arity() const { return arity_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<unsigned, MultiPoly>& coeffs() const { return coeffs_; }

    long eps_degree() const {
        return coeffs_.empty() ? -1 : static_cast<long>(coeffs_.rbegin()->first);
    }

    MultiPoly coeff(unsigned eps_exp) const {
        auto it = coeffs_.find(eps_exp);
        return it == coeffs_.end() ? MultiPoly::zero(arity_) : it->second;
    }

    void add_coeff(unsigned eps_exp, const MultiPoly& c) {
        if (c.arity() != arity_) throw std::invalid_argument("coefficient arity mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = coeffs_.try_emplace(eps_exp, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    EpsPoly operator-() const {
        EpsPoly r(arity_);
        for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
        return r;
    }

    friend EpsPoly operator+(const EpsPoly& a, const EpsPoly& b) {
        a.check(b);
        EpsPoly r(a);
        for (const auto& [e, c] : b.coeffs_) r.add_coeff(e, c);
        return r;
    }

    friend EpsPoly operator-(const EpsPoly& a, const EpsPoly& b) {
        a.check(b);
        EpsPoly r(a);
        for (const auto& [e, c] : b.coeffs_) r.add_coeff(e, -c);
        return r;
    }

    friend EpsPoly operator*(const EpsPoly& a, const EpsPoly& b) {
        a.check(b);
        EpsPoly r(a.arity_);
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_)
                r.add_coeff(ea + eb, ca * cb);
        return r;
    }

    friend bool operator==(const EpsPoly& a, const EpsPoly& b) {
        return a.arity_ == b.arity_ && a.coeffs_ == b.coeffs_;
    }

private:
    void check(const EpsPoly& other) const {
        if (arity_ != other.arity_) throw std::invalid_argument("coefficient arity mismatch");
    }

    std::size_t arity_;
    std::map<unsigned, MultiPoly> coeffs_;
};

enum class EpsOp { Add, Sub, Mul };

inline EpsPoly eps_arith(const EpsPoly& a, const EpsPoly& b, EpsOp op) {
    switch (op) {
        case EpsOp::Add: return a + b;
        case EpsOp::Sub: return a - b;
        case EpsOp::Mul: return a * b;
    }
    throw std::logic_error("unreachable");
}

struct LowestTerm {
    unsigned order;     // minimal eps exponent with nonzero coefficient
    MultiPoly coeff;    // equals lim_{eps->0} p / eps^order
};

inline LowestTerm lowest_term(const EpsPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("no lowest term");
    const auto& [e, c] = *p.coeffs().begin();
    return {e, c};
}

// Folds eps in as variable 0 of a MultiPoly, for ring computations that
// treat eps like any other indeterminate (e.g. symbolic determinants).
inline MultiPoly fold_eps(const EpsPoly& p) {
    MultiPoly r(p.coeff_arity() + 1);
    for (const auto& [e, c] : p.coeffs())
        for (const auto& [ev, k] : c.terms()) {
            ExponentVec ne(p.coeff_arity() + 1);
            ne[0] = e;
            for (std::size_t i = 0; i < p.coeff_arity(); ++i) ne[i + 1] = ev[i];
            r.add_term(ne, k);
        }
    return r;
}

inline EpsPoly unfold_eps(const MultiPoly& p) {
    if (p.arity() < 2) throw std::invalid_argument("need eps slot plus one coefficient variable");
    EpsPoly r(p.arity() - 1);
    for (const auto& [e, c] : p.terms()) {
        ExponentVec ne(e.begin() + 1, e.end());
        r.add_coeff(e[0], MultiPoly::monomial(p.arity() - 1, std::move(ne), c));
    }
    return r;
}

}  // namespace realdecide
