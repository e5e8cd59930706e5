// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Usage: acceptance <golden dir> <cli binary>

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "realdecide/decide.hpp"
#include "realdecide/oracle.hpp"
#include "realdecide/parser.hpp"
#include "realdecide/signdet.hpp"
#include "realdecide/sturm.hpp"
#include "realdecide/uresultant.hpp"

#include "cli_cases.hpp"
#include "test_util.hpp"

using namespace realdecide;

namespace {

int g_failures = 0;

void report(int idx, const char* what, bool ok) {
    std::printf("criterion %d (%s): %s\n", idx, what, ok ? "PASS" : "FAIL");
    if (!ok) ++g_failures;
}

// ---------- criterion 1: Sturm vs isolation vs independent counter ----------

bool criterion_root_counts() {
    std::mt19937 rng(1001);
    std::uniform_int_distribution<int> coeff(-9, 9), deg(0, 8);
    for (int it = 0; it < 500; ++it) {
        UniPoly f;
        do {
            std::vector<Rational> c;
            int d = deg(rng);
            for (int j = 0; j <= d; ++j) c.emplace_back(coeff(rng));
            f = UniPoly(std::move(c));
        } while (f.is_zero());
        if (f.is_constant()) continue;
        int sturm = count_real_roots(f);
        int isolated = static_cast<int>(isolate_roots(f).size());
        int independent = testutil::descartes_count_all(f);
        if (sturm != isolated || sturm != independent) {
            std::fprintf(stderr, "  [1] mismatch at iteration %d: %d/%d/%d\n", it,
                         sturm, isolated, independent);
            return false;
        }
    }
    return true;
}

// ---------- criterion 2: sign assignments vs isolation oracle ----------

bool criterion_assignments() {
    std::mt19937 rng(1002);
    std::uniform_int_distribution<int> kdist(1, 6);
    for (int it = 0; it < 300; ++it) {
        int k = kdist(rng);
        std::vector<UniPoly> fs;
        long d = 1;
        for (int i = 0; i < k; ++i) {
            fs.push_back(testutil::random_poly(rng, 6, 9));
            d = std::max(d, fs.back().degree());
        }
        auto algebraic = consistent_sign_assignments(fs);
        auto sampled = enumerate_assignments_by_isolation(fs);
        if (algebraic != sampled) {
            std::fprintf(stderr, "  [2] assignment mismatch at iteration %d\n", it);
            return false;
        }
        // size bound on the strict ({<,>}-only) assignments: the family
        // product has at most k*d roots, so at most k*d + 1 sign-constant
        // open intervals, each carrying one strict assignment
        long strict = 0;
        for (const auto& a : algebraic)
            if (a.signs.find('=') == std::string::npos) ++strict;
        if (strict > static_cast<long>(k) * d + 2) {
            std::fprintf(stderr, "  [2] strict-assignment bound violated at %d\n", it);
            return false;
        }
    }
    return true;
}

// ---------- criterion 3: divide-and-conquer vs direct 2^k system ----------

bool criterion_direct_system() {
    std::mt19937 rng(1003);
    for (int it = 0; it < 80; ++it) {
        int k = 1 + it % 4;
        std::vector<UniPoly> fam;
        for (int i = 0; i < k; ++i) fam.push_back(testutil::random_poly(rng, 4, 5));
        PreparedFamily prep = prepare_family(fam);
        if (prep.basis.empty()) continue;
        UniPoly pure = auxiliary_poly(prep.basis).monic();
        for (const auto& b : prep.basis) {
            UniPoly g = gcd_uni(pure, b);
            if (!g.is_constant()) pure = (pure / g).monic();
        }
        if (pure.is_constant()) continue;
        auto direct = testutil::direct_sign_counts(pure, prep.basis);
        QuerySystem dc = detail::bkr_node(pure, prep.basis, 0, prep.basis.size());
        for (std::size_t c = 0; c < direct.labels.size(); ++c) {
            long got = 0;
            for (std::size_t j = 0; j < dc.labels.size(); ++j)
                if (dc.labels[j] == direct.labels[c]) got = dc.counts[j];
            if (got != direct.counts[c]) {
                std::fprintf(stderr, "  [3] count mismatch at iteration %d (%s)\n", it,
                             direct.labels[c].c_str());
                return false;
            }
        }
    }
    return true;
}

// ---------- criterion 4: resultant minors on systems with known roots ----------

struct KnownRootSystem {
    const char* name;
    std::vector<EpsPoly> gens;
    std::vector<long> degrees;
    std::vector<QVector> roots;  // projective roots (X_0 : ... : X_n)
};

MultiPoly HV(std::size_t arity, std::size_t j) { return MultiPoly::variable(arity, j); }

EpsPoly lin(std::size_t nvars, std::vector<long> c) {
    MultiPoly p(nvars);
    for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j]) p = p + Rational(c[j]) * HV(nvars, j);
    return EpsPoly::from_coeff(0, p);
}

EpsPoly power(std::size_t nvars, std::size_t j, unsigned e) {
    ExponentVec ev(nvars, 0);
    ev[j] = e;
    return EpsPoly::from_coeff(0, MultiPoly::monomial(nvars, ev, Rational(1)));
}

std::vector<KnownRootSystem> known_root_systems() {
    std::vector<KnownRootSystem> out;
    auto Q = [](std::initializer_list<long> xs) {
        QVector v;
        for (long x : xs) v.emplace_back(x);
        return v;
    };
    // one linear form in (X_0, X_1)
    out.push_back({"X1", {lin(2, {0, 1})}, {1}, {Q({1, 0})}});
    out.push_back({"X0-X1", {lin(2, {1, -1})}, {1}, {Q({1, 1})}});
    out.push_back({"X1-2X0", {lin(2, {-2, 1})}, {1}, {Q({1, 2})}});
    out.push_back({"X0+X1", {lin(2, {1, 1})}, {1}, {Q({1, -1})}});
    out.push_back({"3X0-2X1", {lin(2, {3, -2})}, {1}, {Q({2, 3})}});
    // pairs of linear forms in (X_0, X_1, X_2)
    out.push_back({"X1-2X0,X2-X0", {lin(3, {-2, 1, 0}), lin(3, {-1, 0, 1})}, {1, 1},
                   {Q({1, 2, 1})}});
    out.push_back({"X1-X0,X2-X0", {lin(3, {-1, 1, 0}), lin(3, {-1, 0, 1})}, {1, 1},
                   {Q({1, 1, 1})}});
    out.push_back({"X1+X0,X2-3X0", {lin(3, {1, 1, 0}), lin(3, {-3, 0, 1})}, {1, 1},
                   {Q({1, -1, 3})}});
    out.push_back({"X1,X2", {lin(3, {0, 1, 0}), lin(3, {0, 0, 1})}, {1, 1},
                   {Q({1, 0, 0})}});
    // pure powers: single root with multiplicity
    out.push_back({"X1^2", {power(2, 1, 2)}, {2}, {Q({1, 0})}});
    out.push_back({"X1^3", {power(2, 1, 3)}, {3}, {Q({1, 0})}});
    out.push_back({"X1^2,X2^2", {power(3, 1, 2), power(3, 2, 2)}, {2, 2}, {Q({1, 0, 0})}});
    return out;
}

bool criterion_resultant_factors() {
    std::mt19937 rng(1004);
    // wide range: a maximal minor can carry extraneous linear factors beyond
    // the root hyperplanes, and generic probes must miss those too
    std::uniform_int_distribution<int> c(-99991, 99991);
    for (const auto& sysd : known_root_systems()) {
        MacaulayMatrix m = macaulay_matrix(sysd.gens, sysd.degrees);
        auto r = u_resultant(m);
        if (!r || r->value.is_zero()) {
            std::fprintf(stderr, "  [4] %s: no resultant minor\n", sysd.name);
            return false;
        }
        MultiPoly det = lowest_term(r->value).coeff;
        std::size_t nu = m.n + 1;
        for (const auto& root : sysd.roots) {
            // 20 random U-points on the hyperplane sum_j U_j * root_j = 0
            for (int probe = 0; probe < 20; ++probe) {
                // pick a coordinate with nonzero root entry to solve for
                std::size_t pivot = 0;
                while (root[pivot] == 0) ++pivot;
                QVector u(nu);
                Rational dot(0);
                for (std::size_t j = 0; j < nu; ++j) {
                    if (j == pivot) continue;
                    u[j] = Rational(c(rng));
                    dot += u[j] * root[j];
                }
                u[pivot] = -dot / root[pivot];
                if (det.evaluate(u) != 0) {
                    std::fprintf(stderr, "  [4] %s: nonzero on root hyperplane\n", sysd.name);
                    return false;
                }
            }
        }
        // nonzero at 20 random probes off the hyperplanes
        for (int probe = 0; probe < 20; ++probe) {
            QVector u(nu);
            bool on_hyperplane;
            do {
                for (auto& x : u) x = Rational(c(rng));
                on_hyperplane = false;
                for (const auto& root : sysd.roots) {
                    Rational dot(0);
                    for (std::size_t j = 0; j < nu; ++j) dot += u[j] * root[j];
                    on_hyperplane |= (dot == 0);
                }
            } while (on_hyperplane);
            if (det.evaluate(u) == 0) {
                std::fprintf(stderr, "  [4] %s: vanished at a generic probe\n", sysd.name);
                return false;
            }
        }
    }
    return true;
}

// ---------- criterion 5: frozen decision catalog ----------

struct CatalogEntry {
    const char* name;
    const char* doc;  // system file text
    std::optional<Rational> ball;
    Verdict::Status expected;
};

std::vector<CatalogEntry> catalog() {
    const auto N = std::nullopt;
    return {
        // origin cases
        {"ge_origin", "vars: x\nx >= 0\n", N, Verdict::Status::Consistent},
        {"prod_origin", "vars: x, y\nx*y >= 0\n", N, Verdict::Status::Consistent},
        {"eq_origin", "vars: x, y\ny - x^2 = 0\n", N, Verdict::Status::Consistent},
        {"negsq_origin", "vars: x\nx^2 <= 0\n", N, Verdict::Status::Consistent},
        {"pair_origin", "vars: x\nx >= 0\n0 - x >= 0\n", N, Verdict::Status::Consistent},
        // consistent away from the origin, bounded sets
        {"segment", "vars: x\nx - 1 >= 0\n2 - x >= 0\n", N, Verdict::Status::Consistent},
        {"le_segment", "vars: x\n2*x - 3 <= 0\nx - 1 >= 0\n", N,
         Verdict::Status::Consistent},
        {"point_eq", "vars: x\nx - 1 = 0\n", N, Verdict::Status::Consistent},
        {"sqrt2", "vars: x\nx^2 - 2 = 0\n", N, Verdict::Status::Consistent},
        {"sqrt2_pos", "vars: x\nx^2 - 2 = 0\nx >= 0\n", N, Verdict::Status::Consistent},
        // multiple-factor lowest-coefficient case: single double root
        {"double_root", "vars: x\n-1*(x - 1)^2 >= 0\n", N, Verdict::Status::Consistent},
        {"interval_left", "vars: x\nx + 2 >= 0\n-1*x - 1 >= 0\n", N,
         Verdict::Status::Consistent},
        // consistent with a ball restriction
        {"ray_ball", "vars: x\nx - 1 >= 0\n", Rational(3), Verdict::Status::Consistent},
        {"neg_ray_ball", "vars: x\n-1*x - 1 >= 0\n", Rational(3),
         Verdict::Status::Consistent},
        {"quad_ray_ball", "vars: x\nx^2 - x >= 0\nx - 1 >= 0\n", Rational(3),
         Verdict::Status::Consistent},
        // two-variable consistent cases
        {"shifted_disk", "vars: x, y\n1/4 - (x - 1)^2 - y^2 >= 0\n", N,
         Verdict::Status::Consistent},
        {"point2d", "vars: x, y\n-1*(x - 1)^2 - (y - 1)^2 >= 0\n", N,
         Verdict::Status::Consistent},
        // inconsistent cases (ball makes the sweep conclusive)
        {"neg_def_ball", "vars: x\n-1*x^2 - 1 >= 0\n", Rational(2),
         Verdict::Status::Inconsistent},
        {"neg_quad_ball", "vars: x\n-1*x^2 + x - 1 >= 0\n", Rational(2),
         Verdict::Status::Inconsistent},
        {"eq_empty_ball", "vars: x\nx^2 + 1 = 0\n", Rational(1),
         Verdict::Status::Inconsistent},
        // planted unbounded strict cases without a ball: indeterminate allowed
        {"strict_unbounded", "vars: x\nx > 0\n", N, Verdict::Status::Indeterminate},
        {"strict_neg_unbounded", "vars: x\n0 - x > 0\n", N,
         Verdict::Status::Indeterminate},
    };
}

bool criterion_catalog() {
    bool ok = true;
    for (const auto& entry : catalog()) {
        SignSystem sys = to_sign_system(parse_system(entry.doc));
        DecideOptions opt;
        opt.ball_radius = entry.ball;
        Verdict v = decide_exists(sys, opt);
        // indeterminate is tolerated only where planted (expected status);
        // a wrong definite verdict is never tolerated
        bool entry_ok = v.status == entry.expected;
        if (v.status == Verdict::Status::Consistent &&
            !v.witness_conditions.empty() && !decide_univariate(v.witness_conditions)) {
            std::fprintf(stderr, "  [5] %s: witness conditions not satisfiable\n",
                         entry.name);
            entry_ok = false;
        }
        if (!entry_ok) {
            const char* got = v.status == Verdict::Status::Consistent ? "consistent"
                              : v.status == Verdict::Status::Inconsistent
                                  ? "inconsistent"
                                  : "indeterminate";
            std::fprintf(stderr, "  [5] %s: got %s (%s)\n", entry.name, got,
                         v.reason.c_str());
            ok = false;
        }
    }
    return ok;
}

// ---------- criterion 6: valuation laws ----------

bool criterion_valuation() {
    std::mt19937 rng(1006);
    std::uniform_int_distribution<int> c(-5, 5), e(0, 5), d(0, 4);
    auto random_eps = [&]() {
        EpsPoly p(2);
        for (int t = 0; t < 4; ++t) {
            ExponentVec ev{static_cast<unsigned>(d(rng)), static_cast<unsigned>(d(rng))};
            p.add_coeff(static_cast<unsigned>(e(rng)),
                        MultiPoly::monomial(2, ev, Rational(c(rng))));
        }
        return p;
    };
    for (int it = 0; it < 1000; ++it) {
        EpsPoly a = random_eps(), b = random_eps();
        if (a.is_zero() || b.is_zero()) continue;
        auto la = lowest_term(a), lb = lowest_term(b);
        EpsPoly prod = a * b;
        if (prod.is_zero()) return false;
        auto lp = lowest_term(prod);
        if (lp.order != la.order + lb.order || !(lp.coeff == la.coeff * lb.coeff))
            return false;
        EpsPoly sum = a + b;
        if (!sum.is_zero() && lowest_term(sum).order < std::min(la.order, lb.order))
            return false;
        if (la.order != lb.order && !sum.is_zero() &&
            lowest_term(sum).order != std::min(la.order, lb.order))
            return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::fprintf(stderr, "usage: %s <golden dir> <cli binary>\n", argv[0]);
        return 2;
    }
    report(1, "root counting agrees across three methods", criterion_root_counts());
    report(2, "sign assignments match the sampling oracle", criterion_assignments());
    report(3, "divide-and-conquer equals the direct 2^k system", criterion_direct_system());
    report(4, "resultant minors vanish exactly on known-root hyperplanes",
           criterion_resultant_factors());
    report(5, "decision catalog matches ground truth", criterion_catalog());
    report(6, "lowest-term valuation laws", criterion_valuation());
    report(7, "CLI golden files are byte-identical",
           clicases::check_all(argv[2], argv[1]) == 0);
    if (g_failures) {
        std::fprintf(stderr, "%d criterion(s) failed\n", g_failures);
        return 1;
    }
    return 0;
}
