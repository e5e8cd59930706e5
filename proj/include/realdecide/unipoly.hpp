#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "realdecide/rational.hpp"

namespace realdecide {

// Dense univariate polynomial over Rational. coeffs[i] is the coefficient
// of X^i; the leading coefficient is nonzero unless the polynomial is zero
// (empty coefficient vector).
class UniPoly {
public:
    UniPoly() = default;

    explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    UniPoly(std::initializer_list<Rational> coeffs)
        : coeffs_(coeffs) {
        trim();
    }

    static UniPoly zero() { return UniPoly{}; }

    static UniPoly constant(const Rational& c) {
        if (c == 0) return UniPoly{};
        return UniPoly{std::vector<Rational>{c}};
    }

    // c * X^e
    static UniPoly monomial(const Rational& c, std::size_t e) {
        if (c == 0) return UniPoly{};
        std::vector<Rational> v(e + 1, Rational(0));
        v[e] = c;
        return UniPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    // Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    const Rational& coeff(std::size_t i) const {
        static const Rational kZero(0);
        return i < coeffs_.size() ? coeffs_[i] : kZero;
    }

    const Rational& leading() const {
        if (coeffs_.empty()) throw std::invalid_argument("zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    Rational evaluate(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc *= x;
            acc += coeffs_[i];
        }
        return acc;
    }

    UniPoly derivative() const {
        if (coeffs_.size() <= 1) return UniPoly{};
        std::vector<Rational> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
        return UniPoly(std::move(d));
    }

    UniPoly operator-() const {
        std::vector<Rational> v(coeffs_);
        for (auto& c : v) c = -c;
        return UniPoly(std::move(v));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
        return UniPoly(std::move(v));
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
        return UniPoly(std::move(v));
    }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly{};
        std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return UniPoly(std::move(v));
    }

    friend UniPoly operator*(const UniPoly& a, const Rational& c) {
        if (c == 0) return UniPoly{};
        std::vector<Rational> v(a.coeffs_);
        for (auto& x : v) x *= c;
        return UniPoly(std::move(v));
    }

    friend UniPoly operator*(const Rational& c, const UniPoly& a) { return a * c; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        UniPoly r(*this);
        Rational inv = 1 / leading();
        for (auto& c : r.coeffs_) c *= inv;
        return r;
    }

    // Divides every coefficient by the positive content gcd(nums)/lcm(dens),
    // keeping the sign pattern intact. Used to control growth in remainder
    // chains.
    UniPoly primitive() const {
        if (is_zero()) return *this;
        Integer g(0), l(1);
        for (const auto& c : coeffs_) {
            if (c == 0) continue;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        }
        Rational content(g, l);
        content.canonicalize();
        UniPoly r(*this);
        for (auto& c : r.coeffs_) c /= content;
        return r;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

struct UniDivMod {
    UniPoly quotient;
    UniPoly remainder;
};

inline UniDivMod divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (a.degree() < b.degree()) return {UniPoly{}, a};
    std::vector<Rational> rem(a.coeffs());
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<Rational> quot(rem.size() - db, Rational(0));
    Rational lead_inv = 1 / b.leading();
    for (std::size_t k = quot.size(); k-- > 0;) {
        if (rem[k + db] == 0) continue;
        Rational q = rem[k + db] * lead_inv;
        quot[k] = q;
        for (std::size_t j = 0; j <= db; ++j)
            rem[k + j] -= q * bc[j];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

inline UniPoly operator/(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::invalid_argument("inexact polynomial division");
    return q;
}

inline bool divides(const UniPoly& b, const UniPoly& a) {
    if (b.is_zero()) return a.is_zero();
    return divmod(a, b).remainder.is_zero();
}

// Monic greatest common divisor by the Euclidean algorithm, with content
// removal between steps to control coefficient growth.
inline UniPoly gcd_uni(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() && q.is_zero())
        throw std::invalid_argument("gcd of zeros undefined");
    UniPoly a = p.primitive();
    UniPoly b = q.primitive();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).remainder;
        a = std::move(b);
        b = r.is_zero() ? r : r.primitive();
    }
    return a.monic();
}

// p / gcd(p, p'), monic: same real roots as p, each simple.
inline UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree part of zero undefined");
    if (p.is_constant()) return UniPoly::constant(Rational(1));
    UniPoly g = gcd_uni(p, p.derivative());
    return (p / g).monic();
}

inline bool is_squarefree(const UniPoly& p) {
    if (p.is_zero()) return false;
    if (p.is_constant()) return true;
    return gcd_uni(p, p.derivative()).is_constant();
}

// Multiplicity split: result[i] is the monic product of the factors
// occurring in p with multiplicity exactly i+1. Uses the repeated-gcd
// chain q_{j+1} = gcd(q_j, q_j'): q_j / q_{j+1} collects the factors of
// multiplicity >= j+1, and adjacent quotients isolate exact multiplicity.
inline std::vector<UniPoly> squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("decomposition of zero undefined");
    std::vector<UniPoly> at_least;  // at_least[j] = product of factors with multiplicity > j
    UniPoly q = p.monic();
    while (!q.is_constant()) {
        UniPoly next = gcd_uni(q, q.derivative());
        at_least.push_back((q / next).monic());
        q = std::move(next);
    }
    std::vector<UniPoly> parts(at_least.size());
    for (std::size_t i = 0; i < at_least.size(); ++i) {
        parts[i] = (i + 1 < at_least.size()) ? (at_least[i] / at_least[i + 1]).monic()
                                             : at_least[i];
    }
    return parts;
}

inline std::string to_string(const UniPoly& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        const Rational& c = p.coeff(i);
        if (c == 0) continue;
        if (!out.empty()) out += sign(c) < 0 ? " - " : " + ";
        else if (sign(c) < 0) out += "-";
        Rational a = rational_abs(c);
        bool need_coeff = (a != 1) || i == 0;
        if (need_coeff) out += to_string(a);
        if (i > 0) {
            if (need_coeff) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace realdecide
