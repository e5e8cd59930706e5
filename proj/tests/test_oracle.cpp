#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "realdecide/oracle.hpp"
#include "test_util.hpp"

using namespace realdecide;

namespace {

UniPoly P(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return UniPoly(v);
}

std::vector<std::string> enum_strings(const std::vector<UniPoly>& fs) {
    std::vector<std::string> out;
    for (const auto& a : enumerate_assignments_by_isolation(fs)) out.push_back(a.signs);
    return out;
}

MultiPoly X(std::size_t arity, std::size_t i) { return MultiPoly::variable(arity, i); }
MultiPoly C(std::size_t arity, long c) { return MultiPoly::constant(arity, Rational(c)); }

}  // namespace

TEST_CASE("isolation-based enumeration examples") {
    CHECK(enum_strings({P({0, 1}), P({-2, 1})}) ==
          std::vector<std::string>{"<<", "=<", "><", ">=", ">>"});
    CHECK(enum_strings({P({1, 0, 1})}) == std::vector<std::string>{">"});
    CHECK(enum_strings({P({0, 1})}) == std::vector<std::string>{"<", "=", ">"});
    CHECK(enum_strings({P({3})}) == std::vector<std::string>{">"});
    CHECK_THROWS(enumerate_assignments_by_isolation({UniPoly()}));
}

TEST_CASE("enumeration agrees with the algebraic method on random families") {
    std::mt19937 rng(555);
    for (int it = 0; it < 150; ++it) {
        std::vector<UniPoly> fs;
        int k = 1 + it % 3;
        for (int i = 0; i < k; ++i) fs.push_back(testutil::random_poly(rng, 5, 7));
        std::vector<std::string> alg;
        for (const auto& a : consistent_sign_assignments(fs)) alg.push_back(a.signs);
        CHECK(enum_strings(fs) == alg);
    }
}

TEST_CASE("every sign pattern at 100 random points is in the enumeration") {
    std::mt19937 rng(666);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 7);
    std::vector<UniPoly> fs{P({-1, 0, 1}), P({0, 1, 1}), P({2, -3})};
    auto pats = enum_strings(fs);
    for (int it = 0; it < 100; ++it) {
        Rational x(num(rng), den(rng));
        std::string s;
        for (const auto& f : fs) {
            int v = sign(f.evaluate(x));
            s += v > 0 ? '>' : (v < 0 ? '<' : '=');
        }
        CHECK(std::find(pats.begin(), pats.end(), s) != pats.end());
    }
}

TEST_CASE("grid sampling finds a point on the unit circle about (0,0)") {
    // x^2 + y^2 - 1 = 0 scanned over [-2,2]^2 at step 1/2 hits (-1, 0) first
    SignSystem sys;
    sys.arity = 2;
    sys.polys = {X(2, 0) * X(2, 0) + X(2, 1) * X(2, 1) - C(2, 1)};
    sys.relations = {Relation::Eq};
    Box box{{{Rational(-2), Rational(2)}, {Rational(-2), Rational(2)}}};
    SampleReport rep = sample_consistency(sys, box, Rational(1, 2));
    REQUIRE(rep.status == SampleReport::Status::WitnessFound);
    REQUIRE(rep.witness);
    CHECK((*rep.witness)[0] == -1);
    CHECK((*rep.witness)[1] == 0);
}

TEST_CASE("grid sampling respects all relations at the witness") {
    SignSystem sys;
    sys.arity = 2;
    sys.polys = {X(2, 0) - X(2, 1), X(2, 0) + X(2, 1) - C(2, 1)};
    sys.relations = {Relation::Ge, Relation::Gt};
    Box box{{{Rational(-1), Rational(1)}, {Rational(-1), Rational(1)}}};
    SampleReport rep = sample_consistency(sys, box, Rational(1, 4));
    REQUIRE(rep.status == SampleReport::Status::WitnessFound);
    const auto& w = *rep.witness;
    CHECK(sys.polys[0].evaluate(w) >= 0);
    CHECK(sys.polys[1].evaluate(w) > 0);
}

TEST_CASE("negative definite polynomial yields no witness") {
    SignSystem sys;
    sys.arity = 1;
    sys.polys = {C(1, -1) - X(1, 0) * X(1, 0)};
    sys.relations = {Relation::Ge};
    Box box{{{Rational(-3), Rational(3)}}};
    SampleReport rep = sample_consistency(sys, box, Rational(1, 3));
    CHECK(rep.status == SampleReport::Status::NoWitnessInBox);
    CHECK(!rep.witness);
}

TEST_CASE("degenerate box is an empty grid") {
    SignSystem sys;
    sys.arity = 1;
    sys.polys = {X(1, 0)};
    sys.relations = {Relation::Ge};
    Box box{{{Rational(1), Rational(0)}}};  // lo > hi
    CHECK(sample_consistency(sys, box, Rational(1)).status ==
          SampleReport::Status::NoWitnessInBox);
    CHECK_THROWS(sample_consistency(sys, Box{{{Rational(0), Rational(1)}}}, Rational(0)));
}

TEST_CASE("validation rejects mapped-away relations") {
    SignSystem sys;
    sys.arity = 1;
    sys.polys = {X(1, 0)};
    sys.relations = {Relation::Lt};
    Box box{{{Rational(0), Rational(1)}}};
    CHECK_THROWS(sample_consistency(sys, box, Rational(1)));
}
