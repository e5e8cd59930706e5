#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "realdecide/epspoly.hpp"

using namespace realdecide;

namespace {

MultiPoly C1(long c) { return MultiPoly::constant(1, Rational(c)); }
MultiPoly X1() { return MultiPoly::variable(1, 0); }

std::mt19937 g_rng(505);

EpsPoly random_epspoly(int max_eps, int max_deg) {
    std::uniform_int_distribution<int> c(-4, 4), e(0, max_eps), d(0, max_deg);
    EpsPoly p(1);
    for (int t = 0; t < 4; ++t) {
        ExponentVec ev{static_cast<unsigned>(d(g_rng))};
        p.add_coeff(static_cast<unsigned>(e(g_rng)),
                    MultiPoly::monomial(1, ev, Rational(c(g_rng))));
    }
    return p;
}

}  // namespace

TEST_CASE("basic eps arithmetic") {
    EpsPoly e = EpsPoly::eps(1);
    CHECK(e * e == EpsPoly::from_coeff(2, C1(1)));  // eps * eps = eps^2
    EpsPoly one = EpsPoly::constant(1, Rational(1));
    CHECK((one + e) - one == e);  // (1 + eps) + (-1) = eps
    CHECK((one + e) + EpsPoly::constant(1, Rational(-1)) == e);
}

TEST_CASE("(x + eps)(x - eps) = x^2 - eps^2") {
    EpsPoly x = EpsPoly::from_coeff(0, X1());
    EpsPoly e = EpsPoly::eps(1);
    EpsPoly prod = (x + e) * (x - e);
    EpsPoly expect = EpsPoly::from_coeff(0, X1() * X1()) - EpsPoly::from_coeff(2, C1(1));
    CHECK(prod == expect);
}

TEST_CASE("lowest_term examples") {
    // 3 eps^2 + 5 eps^3 -> order 2, coeff 3
    EpsPoly p = EpsPoly::from_coeff(2, C1(3)) + EpsPoly::from_coeff(3, C1(5));
    auto lt = lowest_term(p);
    CHECK(lt.order == 2);
    CHECK(lt.coeff == C1(3));
    // eps*x + eps^2*x^2 -> order 1, coeff x
    EpsPoly q = EpsPoly::from_coeff(1, X1()) + EpsPoly::from_coeff(2, X1() * X1());
    auto lq = lowest_term(q);
    CHECK(lq.order == 1);
    CHECK(lq.coeff == X1());
    CHECK_THROWS(lowest_term(EpsPoly::zero(1)));
}

TEST_CASE("valuation laws on random pairs") {
    for (int it = 0; it < 500; ++it) {
        EpsPoly a = random_epspoly(4, 3);
        EpsPoly b = random_epspoly(4, 3);
        if (a.is_zero() || b.is_zero()) continue;
        auto la = lowest_term(a), lb = lowest_term(b);
        // product: orders add, lowest coefficients multiply
        EpsPoly prod = a * b;
        REQUIRE(!prod.is_zero());  // integral domain
        auto lp = lowest_term(prod);
        CHECK(lp.order == la.order + lb.order);
        CHECK(lp.coeff == la.coeff * lb.coeff);
        // sum: order at least the min, with equality unless leading terms cancel
        EpsPoly sum = a + b;
        unsigned mn = std::min(la.order, lb.order);
        if (!sum.is_zero()) {
            auto ls = lowest_term(sum);
            CHECK(ls.order >= mn);
            if (la.order != lb.order) CHECK(ls.order == mn);
            if (la.order == lb.order && !(la.coeff + lb.coeff).is_zero()) {
                CHECK(ls.order == mn);
                CHECK(ls.coeff == la.coeff + lb.coeff);
            }
        }
    }
}

TEST_CASE("fold/unfold round trip") {
    for (int it = 0; it < 200; ++it) {
        EpsPoly p = random_epspoly(3, 3);
        CHECK(unfold_eps(fold_eps(p)) == p);
        EpsPoly q = random_epspoly(3, 3);
        // folding is a ring homomorphism
        CHECK(fold_eps(p * q) == fold_eps(p) * fold_eps(q));
        CHECK(fold_eps(p + q) == fold_eps(p) + fold_eps(q));
    }
}

TEST_CASE("eps_degree and coeff access") {
    EpsPoly p = EpsPoly::from_coeff(1, C1(2)) + EpsPoly::from_coeff(4, X1());
    CHECK(p.eps_degree() == 4);
    CHECK(p.coeff(1) == C1(2));
    CHECK(p.coeff(2).is_zero());
    CHECK(EpsPoly::zero(1).eps_degree() == -1);
}

TEST_CASE("eps_arith dispatch") {
    EpsPoly a = EpsPoly::constant(1, Rational(2));
    EpsPoly b = EpsPoly::eps(1);
    CHECK(eps_arith(a, b, EpsOp::Add) == a + b);
    CHECK(eps_arith(a, b, EpsOp::Sub) == a - b);
    CHECK(eps_arith(a, b, EpsOp::Mul) == a * b);
}
