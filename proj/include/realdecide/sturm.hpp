#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "realdecide/rational.hpp"
#include "realdecide/unipoly.hpp"

namespace realdecide {

// A point of the extended real line. Signs of polynomials at +/-infinity
// come from the leading term, never from substituting a large bound.
struct ExtendedPoint {
    enum class Tag { MinusInf, Finite, PlusInf };

    Tag tag = Tag::Finite;
    Rational value;

    static ExtendedPoint minus_inf() { return {Tag::MinusInf, Rational(0)}; }
    static ExtendedPoint plus_inf() { return {Tag::PlusInf, Rational(0)}; }
    static ExtendedPoint finite(Rational v) { return {Tag::Finite, std::move(v)}; }

    friend bool operator<(const ExtendedPoint& a, const ExtendedPoint& b) {
        if (a.tag == Tag::MinusInf) return b.tag != Tag::MinusInf;
        if (a.tag == Tag::PlusInf) return false;
        if (b.tag == Tag::PlusInf) return true;
        if (b.tag == Tag::MinusInf) return false;
        return a.value < b.value;
    }
};

inline int sign_at(const UniPoly& p, const ExtendedPoint& x) {
    if (p.is_zero()) return 0;
    switch (x.tag) {
        case ExtendedPoint::Tag::Finite:
            return sign(p.evaluate(x.value));
        case ExtendedPoint::Tag::PlusInf:
            return sign(p.leading());
        case ExtendedPoint::Tag::MinusInf:
            return p.degree() % 2 == 0 ? sign(p.leading()) : -sign(p.leading());
    }
    return 0;
}

// Chain of negated Euclidean remainders seeded by (f, divisor), with the
// final division of every element by the last remainder (constant or gcd).
struct SturmChain {
    std::vector<UniPoly> polys;
    UniPoly seed_f;
    UniPoly seed_divisor;
};

inline SturmChain sturm_chain(const UniPoly& f, const UniPoly& divisor) {
    if (f.is_zero() || f.is_constant())
        throw std::invalid_argument("no roots to analyze");
    if (divisor.is_zero())
        throw std::invalid_argument("chain divisor must be nonzero");

    std::vector<UniPoly> h;
    h.push_back(f);
    h.push_back(divisor);
    // Positive-content normalization keeps every sign pattern intact while
    // controlling coefficient growth.
    while (!h.back().is_constant()) {
        UniPoly r = divmod(h[h.size() - 2], h.back()).remainder;
        if (r.is_zero()) break;
        h.push_back((-r).primitive());
    }

    // Divide everything by the last remainder: a nonzero constant when f and
    // divisor are coprime, their gcd otherwise.
    UniPoly last = h.back();
    std::vector<UniPoly> polys;
    if (last.is_constant()) {
        Rational c = last.coeff(0);
        for (const auto& p : h) polys.push_back(p * (1 / c));
    } else {
        UniPoly g = last.monic();
        for (const auto& p : h) polys.push_back(p / g);
    }
    return {std::move(polys), f, divisor};
}

// V(x): number of index pairs (i,j), i<j, with f_i(x) f_j(x) < 0 and all
// strictly-between values zero. Equivalently: drop zeros, count adjacent
// sign changes.
inline int sign_variations(const SturmChain& chain, const ExtendedPoint& x) {
    int count = 0;
    int prev = 0;
    for (const auto& p : chain.polys) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

inline int chain_query(const SturmChain& chain) {
    return sign_variations(chain, ExtendedPoint::minus_inf()) -
           sign_variations(chain, ExtendedPoint::plus_inf());
}

// Number of distinct real roots of f in (a, b]. Inputs are normalized to
// the squarefree part first.
inline int count_roots(const UniPoly& f, const ExtendedPoint& a, const ExtendedPoint& b) {
    if (f.is_zero()) throw std::invalid_argument("root count of zero polynomial undefined");
    if (!(a < b)) throw std::invalid_argument("interval endpoints must satisfy a < b");
    if (f.is_constant()) return 0;
    UniPoly fs = squarefree_part(f);
    if (fs.is_constant()) return 0;
    SturmChain chain = sturm_chain(fs, fs.derivative());
    return sign_variations(chain, a) - sign_variations(chain, b);
}

inline int count_real_roots(const UniPoly& f) {
    return count_roots(f, ExtendedPoint::minus_inf(), ExtendedPoint::plus_inf());
}

// R = 1 + max |a_i / a_d|: all real roots lie in [-R, R].
inline Rational cauchy_bound(const UniPoly& f) {
    if (f.is_zero() || f.is_constant())
        throw std::invalid_argument("cauchy bound requires a nonconstant polynomial");
    Rational m(0);
    for (long i = 0; i < f.degree(); ++i) {
        Rational a = rational_abs(f.coeff(static_cast<std::size_t>(i)) / f.leading());
        if (a > m) m = a;
    }
    return m + 1;
}

struct RootInterval {
    Rational lo;
    Rational hi;  // exclusive-inclusive semantics are irrelevant: endpoints are non-roots
};

// Bisection driven by Sturm counts. Each returned interval has non-root
// rational endpoints and contains exactly one distinct real root of f;
// intervals are disjoint, ordered, and no wider than max_width.
inline std::vector<RootInterval> isolate_roots(const UniPoly& f,
                                               const Rational& max_width = Rational(1)) {
    if (f.is_zero()) throw std::invalid_argument("cannot isolate roots of zero polynomial");
    if (max_width <= 0) throw std::invalid_argument("width must be positive");
    std::vector<RootInterval> out;
    if (f.is_constant()) return out;
    UniPoly fs = squarefree_part(f);
    if (fs.is_constant()) return out;
    SturmChain chain = sturm_chain(fs, fs.derivative());
    auto var_at = [&](const Rational& x) {
        return sign_variations(chain, ExtendedPoint::finite(x));
    };

    Rational bound = cauchy_bound(fs) + 1;  // strictly outside the root disk
    struct Item {
        Rational lo, hi;
        int vlo, vhi;
    };
    std::vector<Item> stack{{-bound, bound, var_at(-bound), var_at(bound)}};
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        int n = it.vlo - it.vhi;
        if (n == 0) continue;
        if (n == 1 && it.hi - it.lo <= max_width) {
            out.push_back({it.lo, it.hi});
            continue;
        }
        // Cut near the middle at a non-root point; finitely many roots, so
        // one of these fractions works.
        Rational w = it.hi - it.lo;
        Rational cut;
        bool found = false;
        for (int denom = 2; denom <= 4096 && !found; denom *= 2) {
            for (int num = 1; num < denom; num += 2) {  // odd/2^k: all distinct
                cut = it.lo + w * Rational(num, denom);
                if (fs.evaluate(cut) != 0) {
                    found = true;
                    break;
                }
            }
        }
        if (!found) throw std::logic_error("could not find a non-root cut point");
        int vc = var_at(cut);
        stack.push_back({cut, it.hi, vc, it.vhi});
        stack.push_back({it.lo, cut, it.vlo, vc});
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

// Generalized Sturm query S(f, f'g) = #{f=0, g>0} - #{f=0, g<0}.
inline int sturm_query(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() || f.is_constant())
        throw std::invalid_argument("query requires a nonconstant polynomial");
    if (!is_squarefree(f)) throw std::invalid_argument("query requires squarefree f");
    if (g.is_zero()) throw std::invalid_argument("query requires nonzero g");
    return chain_query(sturm_chain(f, f.derivative() * g));
}

}  // namespace realdecide
