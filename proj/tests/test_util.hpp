#pragma once

// Shared test-only helpers: random polynomial generation, an independent
// Descartes-bisection root counter, and the direct 2^k sign-count system.

#include <random>
#include <string>
#include <vector>

#include "realdecide/linalg.hpp"
#include "realdecide/sturm.hpp"
#include "realdecide/unipoly.hpp"

namespace testutil {

using namespace realdecide;

inline UniPoly random_poly(std::mt19937& rng, int max_deg, int coeff_bound) {
    std::uniform_int_distribution<int> c(-coeff_bound, coeff_bound);
    std::uniform_int_distribution<int> d(0, max_deg);
    UniPoly p;
    do {
        std::vector<Rational> co;
        int deg = d(rng);
        for (int j = 0; j <= deg; ++j) co.push_back(Rational(c(rng)));
        p = UniPoly(std::move(co));
    } while (p.is_zero());
    return p;
}

// --- Descartes / Vincent bisection counter (independent of Sturm) ---

inline int coeff_variations(const UniPoly& p) {
    int v = 0, prev = 0;
    for (const auto& c : p.coeffs()) {
        int s = sign(c);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

// p(a + (b-a)x): Horner in the polynomial ring
inline UniPoly affine_substitute(const UniPoly& p, const Rational& a, const Rational& b) {
    UniPoly x{a, b - a};
    UniPoly acc;
    for (std::size_t i = p.coeffs().size(); i-- > 0;)
        acc = acc * x + UniPoly::constant(p.coeff(i));
    return acc;
}

// coefficient variations of (1+x)^d q(1/(1+x)): reverse then shift by 1
inline int descartes_bound01(const UniPoly& q) {
    std::vector<Rational> rev(q.coeffs().rbegin(), q.coeffs().rend());
    return coeff_variations(affine_substitute(UniPoly(std::move(rev)), Rational(1), Rational(2)));
}

// distinct roots of squarefree p in the open interval (a, b)
inline int descartes_count_open(const UniPoly& p, const Rational& a, const Rational& b) {
    int v = descartes_bound01(affine_substitute(p, a, b));
    if (v == 0) return 0;
    if (v == 1) return 1;
    Rational m = (a + b) / 2;
    int mid = p.evaluate(m) == 0 ? 1 : 0;
    return descartes_count_open(p, a, m) + mid + descartes_count_open(p, m, b);
}

inline int descartes_count_all(const UniPoly& p) {
    UniPoly s = squarefree_part(p);
    if (s.is_constant()) return 0;
    Rational r = cauchy_bound(s) + 1;
    return descartes_count_open(s, -r, r);
}

// --- direct 2^k sign-count system (no divide-and-conquer) ---

struct DirectCounts {
    std::vector<std::string> labels;  // all 2^k {>,<}-patterns
    std::vector<long> counts;
};

inline DirectCounts direct_sign_counts(const UniPoly& f, const std::vector<UniPoly>& basis) {
    std::size_t k = basis.size();
    QMatrix a1{{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}};
    QMatrix ak = a1;
    for (std::size_t j = 1; j < k; ++j) ak = tensor_product(ak, a1);
    std::size_t n = std::size_t(1) << k;
    QVector s(n);
    for (std::size_t r = 0; r < n; ++r) {
        UniPoly g = UniPoly::constant(Rational(1));
        for (std::size_t j = 0; j < k; ++j)
            if ((r >> (k - 1 - j)) & 1) g = g * basis[j];
        s[r] = Rational(sturm_query(f, g));
    }
    auto x = solve_square(ak, s);
    DirectCounts out;
    for (std::size_t c = 0; c < n; ++c) {
        std::string label;
        for (std::size_t j = 0; j < k; ++j)
            label += ((c >> (k - 1 - j)) & 1) ? '<' : '>';
        out.labels.push_back(label);
        out.counts.push_back(static_cast<long>((*x)[c].get_num().get_si()));
    }
    return out;
}

}  // namespace testutil
