#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "realdecide/epspoly.hpp"
#include "realdecide/linalg.hpp"
#include "realdecide/multipoly.hpp"
#include "realdecide/rational.hpp"

namespace realdecide {

struct ScaleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline unsigned long binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned long r = 1;
    for (unsigned long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// All exponent vectors of the given length summing to deg, in ascending
// lexicographic order.
inline std::vector<ExponentVec> monomials_of_degree(std::size_t nvars, long deg) {
    std::vector<ExponentVec> out;
    ExponentVec cur(nvars, 0);
    auto rec = [&](auto&& self, std::size_t pos, long rem) -> void {
        if (pos + 1 == nvars) {
            cur[pos] = static_cast<unsigned>(rem);
            out.push_back(cur);
            return;
        }
        for (long e = 0; e <= rem; ++e) {
            cur[pos] = static_cast<unsigned>(e);
            self(self, pos + 1, rem - e);
        }
    };
    if (nvars > 0 && deg >= 0) rec(rec, 0, deg);
    return out;
}

// Matrix of the map (h_0,...,h_n) -> g_0 h_0 + ... + g_n h_n in monomial
// bases, where g_0 = U_0 X_0 + ... + U_n X_n and g_1..g_n are the given
// forms with EpsPoly coefficients. Rows: degree-D monomials in X_0..X_n,
// D = sum of the given degrees. Columns: (i, monomial of degree D - d_i).
// Entries are linear in U for the g_0 block and U-free elsewhere.
struct MacaulayMatrix {
    std::size_t n = 0;   // g_1..g_n count; X-variables are X_0..X_n
    long D = 0;          // total degree of the row space
    std::vector<ExponentVec> row_monomials;
    std::map<ExponentVec, std::size_t> row_index;

    struct Column {
        std::size_t gen;    // 0 for g_0, else 1..n
        ExponentVec shift;  // the multiplier monomial
    };
    std::vector<Column> columns;
    std::vector<EpsPoly> gens;  // gens[i-1] = g_i, over X_0..X_n
    std::vector<long> degrees;  // degrees[i-1] = d_i

    std::size_t rows() const { return row_monomials.size(); }
    std::size_t cols() const { return columns.size(); }
    unsigned max_eps() const {
        long m = 0;
        for (const auto& g : gens)
            if (g.eps_degree() > m) m = g.eps_degree();
        return static_cast<unsigned>(m);
    }
};

inline MacaulayMatrix macaulay_matrix(const std::vector<EpsPoly>& gs,
                                      const std::vector<long>& degrees,
                                      unsigned long row_ceiling = 3003) {
    if (gs.empty() || gs.size() != degrees.size())
        throw std::invalid_argument("need one generator per variable");
    std::size_t n = gs.size();
    for (const auto& g : gs) {
        if (g.coeff_arity() != n + 1)
            throw std::invalid_argument("generators must be forms in X_0..X_n");
        if (g.is_zero()) throw std::invalid_argument("zero generator");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [e, c] : gs[i].coeffs())
            for (const auto& [ev, k] : c.terms()) {
                long t = 0;
                for (unsigned x : ev) t += x;
                if (t != degrees[i])
                    throw std::invalid_argument("generator not homogeneous of declared degree");
            }

    MacaulayMatrix m;
    m.n = n;
    m.gens = gs;
    m.degrees = degrees;
    for (long d : degrees) m.D += d;
    if (binomial(static_cast<unsigned long>(n + m.D), n) > row_ceiling)
        throw ScaleError("instance exceeds desk scale");

    m.row_monomials = monomials_of_degree(n + 1, m.D);
    for (std::size_t r = 0; r < m.row_monomials.size(); ++r)
        m.row_index.emplace(m.row_monomials[r], r);
    for (const auto& mu : monomials_of_degree(n + 1, m.D - 1))
        m.columns.push_back({0, mu});
    for (std::size_t i = 1; i <= n; ++i)
        for (const auto& mu : monomials_of_degree(n + 1, m.D - degrees[i - 1]))
            m.columns.push_back({i, mu});
    return m;
}

// Symbolic entry as an EpsPoly over U_0..U_n (spec of the linear map; the
// numeric paths below avoid materializing this for whole matrices).
inline EpsPoly macaulay_entry(const MacaulayMatrix& m, std::size_t row, std::size_t col) {
    const auto& c = m.columns[col];
    const ExponentVec& target = m.row_monomials[row];
    EpsPoly out(m.n + 1);
    if (c.gen == 0) {
        for (std::size_t j = 0; j <= m.n; ++j) {
            ExponentVec e(c.shift);
            e[j] += 1;
            if (e == target)
                out = out + EpsPoly::from_coeff(0, MultiPoly::variable(m.n + 1, j));
        }
        return out;
    }
    const EpsPoly& g = m.gens[c.gen - 1];
    for (const auto& [eps, coeff] : g.coeffs())
        for (const auto& [ev, k] : coeff.terms()) {
            ExponentVec e(c.shift);
            bool ok = true;
            for (std::size_t j = 0; j <= m.n; ++j) {
                e[j] += ev[j];
                if (e[j] != target[j]) ok = false;
            }
            if (ok) out.add_coeff(eps, MultiPoly::constant(m.n + 1, k));
        }
    return out;
}

// Coefficient matrices by eps power for the selected columns at a numeric
// U-point: A(eps) = sum_e eps^e * result[e].
inline std::vector<QMatrix> eps_matrices_at(const MacaulayMatrix& m,
                                            const std::vector<std::size_t>& cols,
                                            const QVector& u_point) {
    if (u_point.size() != m.n + 1) throw std::invalid_argument("U-point arity mismatch");
    std::vector<QMatrix> mats(m.max_eps() + 1, make_matrix(m.rows(), cols.size()));
    for (std::size_t cc = 0; cc < cols.size(); ++cc) {
        const auto& c = m.columns[cols[cc]];
        if (c.gen == 0) {
            for (std::size_t j = 0; j <= m.n; ++j) {
                ExponentVec e(c.shift);
                e[j] += 1;
                mats[0][m.row_index.at(e)][cc] += u_point[j];
            }
            continue;
        }
        const EpsPoly& g = m.gens[c.gen - 1];
        for (const auto& [eps, coeff] : g.coeffs())
            for (const auto& [ev, k] : coeff.terms()) {
                ExponentVec e(c.shift);
                for (std::size_t j = 0; j <= m.n; ++j) e[j] += ev[j];
                mats[eps][m.row_index.at(e)][cc] += k;
            }
    }
    return mats;
}

struct LowestDet {
    unsigned order;   // eps-valuation of the determinant
    Rational coeff;   // nonzero lowest eps-coefficient
};

// Lowest nonzero eps-term of det A(eps) for a square polynomial matrix
// given by coefficient matrices. While the eps^0 part is singular, its
// kernel vectors (reduced form: unit at their own free column) define
// column operations with unit determinant whose results are divisible by
// eps; dividing shifts the valuation down by one per vector. The loop is
// capped by an upper bound on the eps-degree of the determinant; exceeding
// it proves det == 0 (returns nullopt).
inline std::optional<LowestDet> lowest_det(std::vector<QMatrix> mats, long valuation_cap) {
    if (mats.empty()) throw std::invalid_argument("empty matrix stack");
    std::size_t nr = mats[0].size();
    std::size_t nc = nr ? mats[0][0].size() : 0;
    if (nr != nc) throw std::invalid_argument("matrix not square");
    if (nr == 0) return LowestDet{0, Rational(1)};

    long m = 0;
    while (true) {
        Elimination e = row_reduce(mats[0]);
        if (e.pivot_cols.size() == nr) break;
        if (m > valuation_cap) return std::nullopt;
        std::vector<QVector> kers = kernel_basis(mats[0]);
        for (const auto& v : kers) {
            // the free column this vector belongs to: unit entry outside pivots
            std::size_t fc = nc;
            std::vector<bool> piv(nc, false);
            for (std::size_t c : e.pivot_cols) piv[c] = true;
            for (std::size_t c = 0; c < nc; ++c)
                if (!piv[c] && v[c] == 1) {
                    fc = c;
                    break;
                }
            // column fc <- (A(eps) * v) / eps, applied per coefficient layer
            for (std::size_t layer = 0; layer + 1 < mats.size(); ++layer)
                for (std::size_t r = 0; r < nr; ++r) {
                    Rational acc(0);
                    for (std::size_t c = 0; c < nc; ++c)
                        if (v[c] != 0) acc += mats[layer + 1][r][c] * v[c];
                    mats[layer][r][fc] = acc;
                }
            for (std::size_t r = 0; r < nr; ++r) mats.back()[r][fc] = 0;
            ++m;
        }
        if (m > valuation_cap) return std::nullopt;
    }
    return LowestDet{static_cast<unsigned>(m), determinant(mats[0])};
}

inline long det_valuation_cap(const MacaulayMatrix& m, const std::vector<std::size_t>& cols) {
    long cap = 0;
    for (std::size_t c : cols) {
        const auto& col = m.columns[c];
        if (col.gen > 0) cap += m.gens[col.gen - 1].eps_degree();
    }
    return cap;
}

// Column set of a maximal nonsingular minor, found by random small-rational
// specialization of eps and U followed by exact elimination. nullopt when
// the specialized rank stays below the row count (infinitely many roots,
// or persistent bad luck).
inline std::optional<std::vector<std::size_t>> select_minor_columns(
    const MacaulayMatrix& m, unsigned seed = 20260823, int attempts = 8) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coin(1, 997);
    for (int a = 0; a < attempts; ++a) {
        Rational eps0(1, 64 + coin(rng));
        QVector u(m.n + 1);
        for (auto& x : u) x = Rational(coin(rng), 1);
        std::vector<std::size_t> all_cols(m.cols());
        for (std::size_t c = 0; c < all_cols.size(); ++c) all_cols[c] = c;
        std::vector<QMatrix> mats = eps_matrices_at(m, all_cols, u);
        QMatrix a0 = make_matrix(m.rows(), m.cols());
        Rational p(1);
        for (const auto& layer : mats) {
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c)
                    if (layer[r][c] != 0) a0[r][c] += p * layer[r][c];
            p *= eps0;
        }
        // pivot columns of the transpose-free elimination give a column
        // basis; full row rank means they form a maximal nonsingular minor
        Elimination e = row_reduce(a0);
        if (e.pivot_cols.size() == m.rows()) return e.pivot_cols;
    }
    return std::nullopt;
}

struct UResultant {
    EpsPoly value;  // over U_0..U_n
    std::vector<std::size_t> minor_rows;
    std::vector<std::size_t> minor_cols;

    UResultant() : value(EpsPoly::zero(1)) {}
};

// Symbolic determinant of a maximal nonsingular minor, as an EpsPoly in
// U_0..U_n. nullopt encodes the "infinite roots" verdict (no nonsingular
// maximal minor found).
inline std::optional<UResultant> u_resultant(const MacaulayMatrix& m,
                                             unsigned seed = 20260823) {
    for (int attempt = 0; attempt < 3; ++attempt) {
        auto cols = select_minor_columns(m, seed + static_cast<unsigned>(attempt) * 7919);
        if (!cols) return std::nullopt;
        // entries folded as MultiPoly over (eps, U_0..U_n)
        std::vector<std::vector<MultiPoly>> sym(
            m.rows(), std::vector<MultiPoly>(m.rows(), MultiPoly::zero(m.n + 2)));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.rows(); ++c)
                sym[r][c] = fold_eps(macaulay_entry(m, r, (*cols)[c]));
        MultiPoly det = bareiss_determinant(std::move(sym), m.n + 2);
        if (det.is_zero()) continue;  // unlucky specialization; retry
        UResultant out;
        out.value = unfold_eps(det);
        out.minor_cols = *cols;
        out.minor_rows.resize(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r) out.minor_rows[r] = r;
        return out;
    }
    return std::nullopt;
}

}  // namespace realdecide
