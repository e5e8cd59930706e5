#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "realdecide/linalg.hpp"
#include "realdecide/rational.hpp"
#include "realdecide/sturm.hpp"
#include "realdecide/unipoly.hpp"

namespace realdecide {

enum class Relation { Ge, Gt, Eq, Le, Lt, Ne };

inline bool relation_accepts(Relation r, char sign_char) {
    switch (r) {
        case Relation::Ge: return sign_char == '>' || sign_char == '=';
        case Relation::Gt: return sign_char == '>';
        case Relation::Eq: return sign_char == '=';
        case Relation::Le: return sign_char == '<' || sign_char == '=';
        case Relation::Lt: return sign_char == '<';
        case Relation::Ne: return sign_char != '=';
    }
    return false;
}

// gcd-free basis with exact reconstruction data: each input polynomial
// factors as unit * prod basis[j]^exponents[i][j].
struct PreparedFamily {
    std::vector<UniPoly> basis;  // pairwise coprime, squarefree, monic, nonconstant
    std::vector<Rational> units;
    std::vector<std::vector<unsigned>> exponents;
};

inline PreparedFamily prepare_family(const std::vector<UniPoly>& fs) {
    for (const auto& f : fs)
        if (f.is_zero()) throw std::invalid_argument("zero polynomial in family");

    PreparedFamily out;
    // Refine against each polynomial's multiplicity strata separately, not
    // just its squarefree part: factors of different multiplicity within
    // one polynomial must land in different basis elements for the trial
    // division below to terminate at a constant.
    for (const auto& f : fs) {
        if (f.is_constant()) continue;
        for (UniPoly s : squarefree_decomposition(f)) {
            if (s.is_constant()) continue;
            // Every inserted polynomial and every old basis element stays a
            // product of new basis elements; parts are squarefree, so split
            // factors are automatically coprime to their cofactors.
            std::vector<UniPoly> next;
            for (const auto& b : out.basis) {
                if (s.is_constant()) {
                    next.push_back(b);
                    continue;
                }
                UniPoly g = gcd_uni(s, b);
                if (g.is_constant()) {
                    next.push_back(b);
                    continue;
                }
                next.push_back(g);
                UniPoly rest = (b / g).monic();
                if (!rest.is_constant()) next.push_back(rest);
                s = (s / g).monic();
            }
            if (!s.is_constant()) next.push_back(s);
            out.basis = std::move(next);
        }
    }
    std::sort(out.basis.begin(), out.basis.end(),
              [](const UniPoly& a, const UniPoly& b) {
                  if (a.degree() != b.degree()) return a.degree() < b.degree();
                  return a.coeffs() < b.coeffs();
              });

    for (const auto& f : fs) {
        std::vector<unsigned> exps(out.basis.size(), 0);
        UniPoly h = f;
        for (std::size_t j = 0; j < out.basis.size(); ++j) {
            while (!h.is_constant() && divides(out.basis[j], h)) {
                h = h / out.basis[j];
                ++exps[j];
            }
        }
        if (!h.is_constant())
            throw std::logic_error("family member does not factor over its basis");
        out.units.push_back(h.coeff(0));
        out.exponents.push_back(std::move(exps));
    }
    return out;
}

// f = P * P' * (X - R)(X + R) for P the basis product and R its root bound,
// returned squarefree (same root set). Roots of f realize every consistent
// sign assignment of the basis: basis roots give the "=" witnesses, critical
// points of P cover every gap between consecutive roots, and +/-R cover the
// unbounded signs.
inline UniPoly auxiliary_poly(const std::vector<UniPoly>& basis) {
    if (basis.empty()) throw std::invalid_argument("empty basis");
    UniPoly product = UniPoly::constant(Rational(1));
    for (const auto& b : basis) product = product * b;
    Rational r = cauchy_bound(product);
    UniPoly ends{-r * r, Rational(0), Rational(1)};  // (X - R)(X + R)
    UniPoly f = product * product.derivative() * ends;
    return squarefree_part(f);
}

// The linear system of generalized Sturm queries for one divide-and-conquer
// node, already reduced: all counts are positive and the matrix rows form a
// basis. Columns are {<,>}-patterns over the node's sub-family.
struct QuerySystem {
    QMatrix matrix;
    std::vector<std::vector<std::size_t>> queries;  // basis index set per row
    std::vector<std::string> labels;                // pattern per column
    std::vector<long> counts;                       // positive
};

// Full sign-count result: pure {<,>} patterns at roots where no basis
// element vanishes, plus "=" patterns read off roots shared with basis
// elements (exactly one "=" each, by pairwise coprimality).
struct SignCountSystem {
    QuerySystem pure;
    std::vector<std::string> eq_labels;
    std::vector<long> eq_counts;
};

namespace detail {

inline UniPoly subset_product(const std::vector<UniPoly>& basis,
                              const std::vector<std::size_t>& idx) {
    UniPoly p = UniPoly::constant(Rational(1));
    for (std::size_t i : idx) p = p * basis[i];
    return p;
}

inline std::vector<std::size_t> symmetric_difference(const std::vector<std::size_t>& a,
                                                     const std::vector<std::size_t>& b) {
    std::vector<std::size_t> r;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(r));
    return r;
}

// Deletes zero-count columns and selects a deterministic row basis
// (topmost rows first) for the remaining columns.
inline QuerySystem reduce_system(const QuerySystem& sys) {
    std::vector<std::size_t> keep_cols;
    for (std::size_t c = 0; c < sys.counts.size(); ++c)
        if (sys.counts[c] != 0) keep_cols.push_back(c);

    QMatrix cols_only = make_matrix(sys.matrix.size(), keep_cols.size());
    for (std::size_t i = 0; i < sys.matrix.size(); ++i)
        for (std::size_t j = 0; j < keep_cols.size(); ++j)
            cols_only[i][j] = sys.matrix[i][keep_cols[j]];

    // Row basis via elimination on the transpose: pivot rows come out in
    // increasing row order.
    QMatrix t = make_matrix(keep_cols.size(), sys.matrix.size());
    for (std::size_t i = 0; i < sys.matrix.size(); ++i)
        for (std::size_t j = 0; j < keep_cols.size(); ++j)
            t[j][i] = cols_only[i][j];
    std::vector<std::size_t> keep_rows = row_reduce(std::move(t)).pivot_cols;
    if (keep_rows.size() != keep_cols.size())
        throw std::logic_error("query system lost rank during reduction");

    QuerySystem out;
    out.matrix = make_matrix(keep_rows.size(), keep_cols.size());
    for (std::size_t i = 0; i < keep_rows.size(); ++i) {
        out.matrix[i] = cols_only[keep_rows[i]];
        out.queries.push_back(sys.queries[keep_rows[i]]);
    }
    for (std::size_t c : keep_cols) {
        out.labels.push_back(sys.labels[c]);
        out.counts.push_back(sys.counts[c]);
    }
    return out;
}

inline std::vector<long> solve_counts(const QMatrix& a, const QVector& s) {
    auto x = solve_square(a, s);
    if (!x) throw std::logic_error("query system singular");
    std::vector<long> counts;
    for (const auto& v : *x) {
        if (v.get_den() != 1 || v < 0)
            throw std::logic_error("root counts must be non-negative integers");
        counts.push_back(static_cast<long>(v.get_num().get_si()));
    }
    return counts;
}

// Divide-and-conquer of Ben-Or--Kozen--Reif over basis[lo..hi), for f
// coprime to every basis element in that range.
inline QuerySystem bkr_node(const UniPoly& f, const std::vector<UniPoly>& basis,
                            std::size_t lo, std::size_t hi) {
    if (hi - lo == 0) {
        QuerySystem sys;
        sys.matrix = {{Rational(1)}};
        sys.queries = {{}};
        sys.labels = {""};
        sys.counts = {sturm_query(f, UniPoly::constant(Rational(1)))};
        return reduce_system(sys);
    }
    if (hi - lo == 1) {
        QuerySystem sys;
        sys.matrix = {{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}};
        sys.queries = {{}, {lo}};
        sys.labels = {">", "<"};
        QVector s{Rational(sturm_query(f, UniPoly::constant(Rational(1)))),
                  Rational(sturm_query(f, basis[lo]))};
        sys.counts = solve_counts(sys.matrix, s);
        return reduce_system(sys);
    }
    std::size_t mid = lo + (hi - lo + 1) / 2;  // ceil split for odd sizes
    QuerySystem left = bkr_node(f, basis, lo, mid);
    QuerySystem right = bkr_node(f, basis, mid, hi);

    QuerySystem merged;
    merged.matrix = tensor_product(left.matrix, right.matrix);
    QVector s;
    for (std::size_t i = 0; i < left.queries.size(); ++i)
        for (std::size_t j = 0; j < right.queries.size(); ++j) {
            auto q = symmetric_difference(left.queries[i], right.queries[j]);
            s.push_back(Rational(sturm_query(f, subset_product(basis, q))));
            merged.queries.push_back(std::move(q));
        }
    for (std::size_t i = 0; i < left.labels.size(); ++i)
        for (std::size_t j = 0; j < right.labels.size(); ++j)
            merged.labels.push_back(left.labels[i] + right.labels[j]);
    merged.counts = solve_counts(merged.matrix, s);
    return reduce_system(merged);
}

}  // namespace detail

// Counts the roots of f by the sign pattern they realize on the basis.
// Shared roots (f and some basis element vanish together) are counted
// separately per basis element; the remaining cofactor of f is handled by
// the divide-and-conquer query systems.
inline SignCountSystem sign_counts_at_roots(const UniPoly& f,
                                            const std::vector<UniPoly>& basis) {
    if (f.is_zero() || f.is_constant())
        throw std::invalid_argument("need a nonconstant polynomial");
    if (!is_squarefree(f)) throw std::invalid_argument("query requires squarefree f");

    SignCountSystem out;
    UniPoly pure_part = f.monic();
    std::vector<UniPoly> shared(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        shared[i] = gcd_uni(pure_part, basis[i]);
        if (!shared[i].is_constant()) pure_part = (pure_part / shared[i]).monic();
    }

    if (!pure_part.is_constant())
        out.pure = detail::bkr_node(pure_part, basis, 0, basis.size());

    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (shared[i].is_constant()) continue;
        // Roots of shared[i] meet no other basis element (pairwise coprime),
        // so a plain divide-and-conquer over the rest applies.
        std::vector<UniPoly> rest;
        std::vector<std::size_t> rest_index;
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (j != i) {
                rest.push_back(basis[j]);
                rest_index.push_back(j);
            }
        QuerySystem sub = detail::bkr_node(shared[i], rest, 0, rest.size());
        for (std::size_t c = 0; c < sub.labels.size(); ++c) {
            std::string label;
            std::size_t p = 0;
            for (std::size_t j = 0; j < basis.size(); ++j)
                label += (j == i) ? '=' : sub.labels[c][p++];
            out.eq_labels.push_back(std::move(label));
            out.eq_counts.push_back(sub.counts[c]);
        }
    }
    return out;
}

struct SignAssignment {
    std::string signs;  // one of {<,=,>} per family member, in family order

    friend bool operator<(const SignAssignment& a, const SignAssignment& b) {
        return a.signs < b.signs;
    }
    friend bool operator==(const SignAssignment& a, const SignAssignment& b) {
        return a.signs == b.signs;
    }
};

namespace detail {

inline char combine_sign(const Rational& unit, const std::string& basis_signs,
                         const std::vector<unsigned>& exps) {
    int s = sign(unit);
    for (std::size_t j = 0; j < exps.size(); ++j) {
        if (exps[j] == 0) continue;
        int bs = basis_signs[j] == '>' ? 1 : (basis_signs[j] == '<' ? -1 : 0);
        if (bs == 0) return '=';
        if (exps[j] % 2 == 1) s *= bs;
    }
    return s > 0 ? '>' : (s < 0 ? '<' : '=');
}

}  // namespace detail

// All sign assignments of fs realized at some real point, in sorted order.
inline std::vector<SignAssignment> consistent_sign_assignments(
    const std::vector<UniPoly>& fs) {
    PreparedFamily prep = prepare_family(fs);

    std::set<std::string> basis_patterns;
    if (prep.basis.empty()) {
        basis_patterns.insert("");
    } else {
        UniPoly f = auxiliary_poly(prep.basis);
        SignCountSystem counts = sign_counts_at_roots(f, prep.basis);
        for (std::size_t c = 0; c < counts.pure.labels.size(); ++c)
            if (counts.pure.counts[c] > 0) basis_patterns.insert(counts.pure.labels[c]);
        for (std::size_t c = 0; c < counts.eq_labels.size(); ++c)
            if (counts.eq_counts[c] > 0) basis_patterns.insert(counts.eq_labels[c]);
    }

    std::set<std::string> result;
    for (const auto& pattern : basis_patterns) {
        std::string assignment;
        for (std::size_t i = 0; i < fs.size(); ++i)
            assignment += detail::combine_sign(prep.units[i], pattern, prep.exponents[i]);
        result.insert(std::move(assignment));
    }
    std::vector<SignAssignment> out;
    for (auto& s : result) out.push_back({s});
    return out;
}

// Consistency of a conjunction of univariate sign conditions: scan the
// consistent assignments of the involved polynomials for one compatible
// with every relation.
inline bool decide_univariate(const std::vector<std::pair<UniPoly, Relation>>& conds) {
    std::vector<UniPoly> family;
    std::vector<long> cond_index;  // -1: constant condition, else family slot
    for (const auto& [p, rel] : conds) {
        if (p.is_zero()) throw std::invalid_argument("zero polynomial condition");
        if (p.is_constant()) {
            int s = sign(p.coeff(0));
            char c = s > 0 ? '>' : '<';  // nonzero constant
            if (!relation_accepts(rel, c)) return false;
            cond_index.push_back(-1);
            continue;
        }
        auto it = std::find(family.begin(), family.end(), p);
        if (it == family.end()) {
            family.push_back(p);
            cond_index.push_back(static_cast<long>(family.size()) - 1);
        } else {
            cond_index.push_back(it - family.begin());
        }
    }
    if (family.empty()) return true;  // only (satisfied) constant conditions

    for (const auto& assignment : consistent_sign_assignments(family)) {
        bool ok = true;
        std::size_t ci = 0;
        for (const auto& [p, rel] : conds) {
            long fi = cond_index[ci++];
            if (fi < 0) continue;
            if (!relation_accepts(rel, assignment.signs[static_cast<std::size_t>(fi)])) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace realdecide
