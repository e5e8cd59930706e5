#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "realdecide/epspoly.hpp"
#include "realdecide/multipoly.hpp"
#include "realdecide/rational.hpp"

namespace realdecide {

// Perturbed system data for a family of nonstrict inequalities f_i >= 0:
//   g(eps) = prod(f_i + eps) - eps^{k+1} * sum_j X_j^D
// with D the least even integer >= k*d + 1 and d a strict degree bound.
// The critical points of g (zeros of all partials) have finitely many
// solutions for every small eps > 0, and their eps->0 limits meet every
// connected component of {all f_i >= 0}.
struct CriticalSystem {
    std::size_t n = 0;             // variable count
    long k = 0;                    // family size
    long D = 0;                    // even degree parameter
    EpsPoly g;                     // over X_1..X_n
    std::vector<EpsPoly> partials;        // dg/dX_j, same variables
    std::vector<EpsPoly> homog_partials;  // degree-(D-1) forms in X_0..X_n

    CriticalSystem() : g(EpsPoly::zero(1)) {}
};

inline EpsPoly eps_derivative(const EpsPoly& p, std::size_t var) {
    EpsPoly r(p.coeff_arity());
    for (const auto& [e, c] : p.coeffs()) r.add_coeff(e, c.derivative(var));
    return r;
}

inline EpsPoly eps_homogenize(const EpsPoly& p, long d) {
    EpsPoly r(p.coeff_arity() + 1);
    for (const auto& [e, c] : p.coeffs()) r.add_coeff(e, homogenize(c, d));
    return r;
}

inline CriticalSystem build_critical_system(const std::vector<MultiPoly>& fs) {
    if (fs.empty()) throw std::invalid_argument("empty family");
    std::size_t n = fs[0].arity();
    long max_deg = 0;
    for (const auto& f : fs) {
        if (f.is_zero()) throw std::invalid_argument("zero polynomial in family");
        if (f.arity() != n) throw std::invalid_argument("arity mismatch in family");
        if (f.total_degree() > max_deg) max_deg = f.total_degree();
    }

    CriticalSystem out;
    out.n = n;
    out.k = static_cast<long>(fs.size());
    long d = max_deg + 1;  // strict bound deg(f_i) < d
    long kd = out.k * d;
    out.D = (kd + 1) % 2 == 0 ? kd + 1 : kd + 2;

    EpsPoly prod = EpsPoly::constant(n, Rational(1));
    for (const auto& f : fs)
        prod = prod * (EpsPoly::from_coeff(0, f) + EpsPoly::eps(n));
    MultiPoly power_sum = MultiPoly::zero(n);
    for (std::size_t j = 0; j < n; ++j) {
        ExponentVec e(n, 0);
        e[j] = static_cast<unsigned>(out.D);
        power_sum.add_term(e, Rational(1));
    }
    out.g = prod - EpsPoly::from_coeff(static_cast<unsigned>(out.k + 1), power_sum);

    for (std::size_t j = 0; j < n; ++j) {
        out.partials.push_back(eps_derivative(out.g, j));
        out.homog_partials.push_back(eps_homogenize(out.partials.back(), out.D - 1));
    }
    return out;
}

}  // namespace realdecide
