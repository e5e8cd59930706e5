#pragma once

#include <climits>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "realdecide/linalg.hpp"
#include "realdecide/multipoly.hpp"
#include "realdecide/oracle.hpp"
#include "realdecide/perturb.hpp"
#include "realdecide/rational.hpp"
#include "realdecide/signdet.hpp"
#include "realdecide/sturm.hpp"
#include "realdecide/system.hpp"
#include "realdecide/unipoly.hpp"
#include "realdecide/uresultant.hpp"

namespace realdecide {

// Rewrites a system into nonstrict form: equalities split into two >=,
// strict inequalities become Y*f >= 1 with a fresh last variable Y >= 0.
// Consistency is preserved exactly.
inline SignSystem normalize_strict(const SignSystem& sys) {
    sys.validate();
    bool any_strict = false;
    for (Relation r : sys.relations) any_strict |= (r == Relation::Gt);

    SignSystem out;
    out.arity = sys.arity + (any_strict ? 1 : 0);
    MultiPoly y = any_strict ? MultiPoly::variable(out.arity, out.arity - 1)
                             : MultiPoly::zero(1);
    for (std::size_t i = 0; i < sys.polys.size(); ++i) {
        MultiPoly p = any_strict ? extend_arity(sys.polys[i], 1) : sys.polys[i];
        switch (sys.relations[i]) {
            case Relation::Ge:
                out.polys.push_back(p);
                out.relations.push_back(Relation::Ge);
                break;
            case Relation::Eq:
                out.polys.push_back(p);
                out.relations.push_back(Relation::Ge);
                out.polys.push_back(-p);
                out.relations.push_back(Relation::Ge);
                break;
            case Relation::Gt:
                out.polys.push_back(y * p - MultiPoly::constant(out.arity, Rational(1)));
                out.relations.push_back(Relation::Ge);
                break;
            default:
                throw std::invalid_argument("decision core accepts only >=, >, =");
        }
    }
    if (any_strict) {
        out.polys.push_back(y);
        out.relations.push_back(Relation::Ge);
    }
    return out;
}

// Line U = alpha*t + beta in U_0..U_n space, with alpha and beta Vandermonde
// vectors (1, i, i^2, ..., i^n). Enough candidates are generated that some
// line meets each of the <= r root hyperplanes of the lowest resultant
// coefficient at exactly one point each.
struct GenericLine {
    QVector alpha, beta;
    long i1 = 0, i2 = 0;  // generating indices into S1, S2
};

inline std::vector<GenericLine> generic_line_candidates(long n, long r) {
    if (n < 1 || r < 1) throw std::invalid_argument("need n >= 1 and r >= 1");
    long s1 = n * r + 1;
    long s2 = n * r * (r - 1) / 2 + 1;
    auto vandermonde = [&](long i) {
        QVector v(static_cast<std::size_t>(n) + 1);
        Rational p(1);
        for (std::size_t j = 0; j <= static_cast<std::size_t>(n); ++j) {
            v[j] = p;
            p *= i;
        }
        return v;
    };
    std::vector<GenericLine> out;
    for (long i = 1; i <= s1; ++i)
        for (long j = 1; j <= s2; ++j)
            out.push_back({vandermonde(i), vandermonde(j), i, j});
    return out;
}

struct WitnessStratum {
    int multiplicity = 1;  // root multiplicity in rho this stratum covers
    std::vector<std::pair<UniPoly, Relation>> conditions;
};

namespace detail {

// Newton divided-difference interpolation through (x_i, y_i), exact.
inline UniPoly interpolate(const std::vector<Rational>& xs,
                           const std::vector<Rational>& ys) {
    std::size_t n = xs.size();
    if (n == 0 || n != ys.size()) throw std::invalid_argument("bad interpolation data");
    std::vector<Rational> c = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i)
            c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j]);
    UniPoly p = UniPoly::constant(c[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        UniPoly shift{-xs[i], Rational(1)};
        p = p * shift + UniPoly::constant(c[i]);
    }
    return p;
}

// The univariate witness conditions per multiplicity stratum of rho. At a
// root of multiplicity p the plain gradient polynomials may vanish
// identically along the factor; derivatives of order p-1 recover usable
// projective coordinates. Coordinates y_j = Ntil_j/Ntil_0 are substituted
// into each f_i >= 0 with the denominator cleared by an even power
// (odd total degrees get one extra Ntil_0 factor).
inline std::vector<WitnessStratum> strata_conditions(const UniPoly& rho,
                                                     const std::vector<UniPoly>& ns,
                                                     const std::vector<MultiPoly>& fs) {
    std::vector<WitnessStratum> out;
    std::vector<UniPoly> strata = squarefree_decomposition(rho);
    std::vector<UniPoly> ntil = ns;
    for (std::size_t p = 1; p <= strata.size(); ++p) {
        if (p > 1)
            for (auto& nj : ntil) nj = nj.derivative();
        const UniPoly& part = strata[p - 1];
        if (part.is_constant()) continue;
        if (ntil[0].is_zero()) continue;  // no affine representative at this order
        WitnessStratum ws;
        ws.multiplicity = static_cast<int>(p);
        // primitive parts: positive scaling never changes a sign condition,
        // and small coefficients keep the downstream Sturm work cheap
        ws.conditions.emplace_back(part.primitive(), Relation::Eq);
        for (const auto& f : fs) {
            long d = f.total_degree();
            UniPoly q = compose_univariate(homogenize(f, d), ntil);
            if (d % 2 == 1) q = q * ntil[0];
            if (q.is_zero()) continue;  // f vanishes identically on the curve
            ws.conditions.emplace_back(q.primitive(), Relation::Ge);
        }
        ws.conditions.emplace_back(ntil[0].primitive(), Relation::Ne);
        out.push_back(std::move(ws));
    }
    return out;
}

}  // namespace detail

// Witness conditions for a symbolically known lowest resultant coefficient
// R_m (a form in U_0..U_n): restrict R_m and its U-gradient to the line and
// build the per-stratum univariate systems.
inline std::vector<WitnessStratum> witness_system(const MultiPoly& r_m,
                                                  const GenericLine& line,
                                                  const std::vector<MultiPoly>& fs) {
    if (r_m.is_zero()) throw std::runtime_error("u-resultant degenerate");
    std::size_t nu = r_m.arity();
    if (line.alpha.size() != nu || line.beta.size() != nu)
        throw std::invalid_argument("line arity mismatch");
    std::vector<UniPoly> on_line(nu);
    for (std::size_t j = 0; j < nu; ++j)
        on_line[j] = UniPoly{line.beta[j], line.alpha[j]};
    UniPoly rho = compose_univariate(r_m, on_line);
    if (rho.is_zero() || rho.is_constant()) return {};
    std::vector<UniPoly> ns(nu);
    for (std::size_t j = 0; j < nu; ++j)
        ns[j] = compose_univariate(r_m.derivative(j), on_line);
    return detail::strata_conditions(rho, ns, fs);
}

struct Verdict {
    enum class Status { Consistent, Inconsistent, Indeterminate };

    Status status = Status::Indeterminate;
    std::string reason;  // machine-readable for indeterminate; note otherwise
    std::vector<std::pair<UniPoly, Relation>> witness_conditions;
    std::optional<RootInterval> witness_interval;

    struct Trace {
        long lines_tried = 0;
        long eps_order = -1;
        std::size_t minor_size = 0;
        int restarts = 0;
    } trace;
};

struct DecideOptions {
    std::optional<Rational> ball_radius;
    unsigned long row_ceiling = 3003;
    unsigned long long work_budget = 400000000ULL;  // ~ determinant evals x rows^3
    unsigned seed = 20260823;
};

namespace detail {

struct BudgetExhausted {};

// Isolating interval of a root of the conjunction's equality part at which
// every condition holds; exists whenever decide_univariate accepted.
inline std::optional<RootInterval> certifying_interval(
    const std::vector<std::pair<UniPoly, Relation>>& conds) {
    UniPoly w = UniPoly::constant(Rational(1));
    for (const auto& [p, rel] : conds)
        if (!p.is_constant()) w = w * squarefree_part(p);
    if (w.is_constant()) return std::nullopt;
    w = squarefree_part(w);
    for (const auto& iv : isolate_roots(w)) {
        bool ok = true;
        for (const auto& [p, rel] : conds) {
            char c;
            if (p.is_constant()) {
                int s = sign(p.coeff(0));
                c = s > 0 ? '>' : (s < 0 ? '<' : '=');
            } else if (count_roots(p, ExtendedPoint::finite(iv.lo),
                                   ExtendedPoint::finite(iv.hi)) > 0) {
                c = '=';
            } else {
                int s = sign(p.evaluate(iv.lo));
                c = s > 0 ? '>' : '<';
            }
            if (!relation_accepts(rel, c)) {
                ok = false;
                break;
            }
        }
        if (ok) return iv;
    }
    return std::nullopt;
}

}  // namespace detail

// The full decision pipeline for "does the conjunction have a real
// solution". Soundness is unconditional: every consistent verdict carries
// univariate witness conditions re-verified by decide_univariate, so a
// degenerate resultant or an unlucky line can never produce a false
// positive. Inconsistent is reported only when a ball constraint bounds
// the solution set and the full candidate-line sweep completed empty.
inline Verdict decide_exists(const SignSystem& sys, const DecideOptions& opt = {}) {
    sys.validate();
    if (sys.polys.empty()) throw std::invalid_argument("empty system");

    Verdict v;

    // Origin pre-check on the original system.
    {
        std::vector<Rational> origin(sys.arity, Rational(0));
        bool ok = true;
        for (std::size_t i = 0; i < sys.polys.size() && ok; ++i) {
            int s = sign(sys.polys[i].evaluate(origin));
            ok = relation_accepts(sys.relations[i], s > 0 ? '>' : (s < 0 ? '<' : '='));
        }
        if (ok) {
            v.status = Verdict::Status::Consistent;
            v.reason = "origin satisfies the system";
            return v;
        }
    }

    SignSystem norm = normalize_strict(sys);
    if (opt.ball_radius) {
        MultiPoly ball = MultiPoly::constant(norm.arity, (*opt.ball_radius) * (*opt.ball_radius));
        for (std::size_t j = 0; j < norm.arity; ++j) {
            MultiPoly xj = MultiPoly::variable(norm.arity, j);
            ball = ball - xj * xj;
        }
        norm.polys.push_back(ball);
        norm.relations.push_back(Relation::Ge);
    }

    CriticalSystem cs = build_critical_system(norm.polys);
    MacaulayMatrix mac;
    try {
        mac = macaulay_matrix(cs.homog_partials,
                              std::vector<long>(cs.n, cs.D - 1), opt.row_ceiling);
    } catch (const ScaleError&) {
        v.reason = "desk-scale ceiling";
        return v;
    }

    auto cols = select_minor_columns(mac, opt.seed);
    if (!cols) {
        v.reason = "u-resultant degenerate: no nonsingular maximal minor";
        return v;
    }
    v.trace.minor_size = mac.rows();
    long h = 0;  // U-degree of the minor determinant = number of g0 columns
    for (std::size_t c : *cols)
        if (mac.columns[c].gen == 0) ++h;
    if (h == 0) {
        v.reason = "u-resultant degenerate: minor carries no U information";
        return v;
    }

    long cap = det_valuation_cap(mac, *cols);
    unsigned long long unit = 1;
    for (int t = 0; t < 3; ++t) unit *= mac.rows() ? mac.rows() : 1;
    unsigned long long work_left = opt.work_budget;

    auto raw_eval = [&](const QVector& u) -> std::optional<LowestDet> {
        if (work_left < unit) throw detail::BudgetExhausted{};
        work_left -= unit;
        return lowest_det(eps_matrices_at(mac, *cols, u), cap);
    };

    unsigned m_ref = UINT_MAX;
    bool m_lowered = false;
    auto value_at = [&](const QVector& u) -> Rational {
        auto ld = raw_eval(u);
        if (!ld) return Rational(0);  // determinant vanishes identically at u
        if (ld->order < m_ref) {
            m_ref = ld->order;
            m_lowered = true;
        }
        return ld->order == m_ref ? ld->coeff : Rational(0);
    };

    std::size_t nu = mac.n + 1;  // U_0..U_n
    try {
        // Establish the reference eps-valuation at a few generic points.
        {
            std::mt19937 rng(opt.seed ^ 0x9e3779b9u);
            std::uniform_int_distribution<int> coin(1, 997);
            bool any = false;
            for (int t = 0; t < 3; ++t) {
                QVector u(nu);
                for (auto& x : u) x = Rational(coin(rng), coin(rng));
                auto ld = raw_eval(u);
                if (ld && ld->order < m_ref) m_ref = ld->order;
                any |= bool(ld);
            }
            if (!any) {
                v.reason = "u-resultant degenerate: determinant vanishes at probes";
                return v;
            }
        }

        std::vector<GenericLine> lines = generic_line_candidates(static_cast<long>(mac.n), h);
        for (int restart = 0; restart <= cap + 1; ++restart) {
            m_lowered = false;
            v.trace.restarts = restart;
            v.trace.lines_tried = 0;
            bool sweep_complete = true;
            for (const auto& line : lines) {
                ++v.trace.lines_tried;

                auto line_point = [&](const Rational& t) {
                    QVector u(nu);
                    for (std::size_t j = 0; j < nu; ++j)
                        u[j] = line.alpha[j] * t + line.beta[j];
                    return u;
                };

                // rho(t) = R_m(alpha t + beta), degree <= h
                std::vector<Rational> xs, ys;
                for (long t = 0; t <= h; ++t) {
                    xs.push_back(Rational(t));
                    ys.push_back(value_at(line_point(Rational(t))));
                }
                if (m_lowered) break;  // reference order dropped; resweep
                UniPoly rho = detail::interpolate(xs, ys);
                if (rho.is_zero() || rho.is_constant()) continue;

                // Gradient restrictions N_j(t) = dR_m/dU_j(alpha t + beta):
                // j >= 1 by differentiating the degree-<=h slice
                // s -> R_m(line(t) + s e_j) at s = 0; N_0 from the chain rule
                // rho' = sum alpha_j N_j with alpha_0 = 1.
                std::vector<UniPoly> ns(nu);
                for (std::size_t j = 1; j < nu && !m_lowered; ++j) {
                    std::vector<Rational> txs, tys;
                    for (long t = 0; t < h && !m_lowered; ++t) {
                        std::vector<Rational> sxs, sys_;
                        for (long s = 0; s <= h; ++s) {
                            QVector u = line_point(Rational(t));
                            u[j] += Rational(s);
                            sxs.push_back(Rational(s));
                            sys_.push_back(value_at(u));
                            if (m_lowered) break;
                        }
                        if (m_lowered) break;
                        txs.push_back(Rational(t));
                        tys.push_back(detail::interpolate(sxs, sys_).coeff(1));
                    }
                    if (!m_lowered) ns[j] = detail::interpolate(txs, tys);
                }
                if (m_lowered) break;
                ns[0] = rho.derivative();
                for (std::size_t j = 1; j < nu; ++j)
                    ns[0] = ns[0] - UniPoly::constant(line.alpha[j]) * ns[j];

                // Euler cross-check: sum (alpha_j t + beta_j) N_j = h * rho.
                UniPoly euler;
                for (std::size_t j = 0; j < nu; ++j)
                    euler = euler + UniPoly{line.beta[j], line.alpha[j]} * ns[j];
                if (!(euler == UniPoly::constant(Rational(h)) * rho)) {
                    sweep_complete = false;  // reconstruction untrusted here
                    continue;
                }

                for (const auto& stratum : detail::strata_conditions(rho, ns, norm.polys)) {
                    // Root-wise scan first (cheap); a hit is then certified
                    // through the sign-determination engine. The two agree:
                    // the equality condition confines satisfaction to the
                    // roots the scan visits.
                    auto interval = detail::certifying_interval(stratum.conditions);
                    if (!interval) continue;
                    if (decide_univariate(stratum.conditions)) {
                        v.status = Verdict::Status::Consistent;
                        v.witness_conditions = stratum.conditions;
                        v.witness_interval = interval;
                        v.trace.eps_order = static_cast<long>(m_ref);
                        return v;
                    }
                }
            }
            if (!m_lowered) {
                v.trace.eps_order = m_ref == UINT_MAX ? -1 : static_cast<long>(m_ref);
                if (sweep_complete && opt.ball_radius) {
                    v.status = Verdict::Status::Inconsistent;
                    return v;
                }
                v.reason = opt.ball_radius
                               ? "line reconstruction incomplete"
                               : "possibly unbounded solution set";
                return v;
            }
        }
        v.reason = "eps-order failed to stabilize";
        return v;
    } catch (const detail::BudgetExhausted&) {
        v.reason = opt.ball_radius
                       ? "search budget exhausted"
                       : "possibly unbounded solution set (search budget exhausted)";
        return v;
    }
}

}  // namespace realdecide
