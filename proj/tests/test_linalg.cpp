#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "realdecide/linalg.hpp"

using namespace realdecide;

namespace {

QMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound) {
    std::uniform_int_distribution<int> c(-bound, bound);
    QMatrix m = make_matrix(rows, cols);
    for (auto& row : m)
        for (auto& x : row) x = Rational(c(rng));
    return m;
}

QVector mat_vec(const QMatrix& m, const QVector& v) {
    QVector r(m.size(), Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

}  // namespace

TEST_CASE("tensor product of the 2x2 sign matrix with itself") {
    QMatrix a1{{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}};
    QMatrix a2 = tensor_product(a1, a1);
    QMatrix expect{{Rational(1), Rational(1), Rational(1), Rational(1)},
                   {Rational(1), Rational(-1), Rational(1), Rational(-1)},
                   {Rational(1), Rational(1), Rational(-1), Rational(-1)},
                   {Rational(1), Rational(-1), Rational(-1), Rational(1)}};
    CHECK(a2 == expect);
}

TEST_CASE("tensor product shape and identity") {
    std::mt19937 rng(7);
    QMatrix b = random_matrix(rng, 3, 2, 5);
    QMatrix i1{{Rational(1)}};
    CHECK(tensor_product(i1, b) == b);
    QMatrix a = random_matrix(rng, 2, 4, 5);
    QMatrix t = tensor_product(a, b);
    CHECK(t.size() == 6);
    CHECK(t[0].size() == 8);
    // associativity
    QMatrix c = random_matrix(rng, 2, 2, 3);
    CHECK(tensor_product(tensor_product(a, b), c) ==
          tensor_product(a, tensor_product(b, c)));
}

TEST_CASE("row_reduce and rank") {
    QMatrix m{{Rational(1), Rational(2), Rational(3)},
              {Rational(2), Rational(4), Rational(6)},
              {Rational(0), Rational(1), Rational(1)}};
    Elimination e = row_reduce(m);
    CHECK(e.pivot_cols == std::vector<std::size_t>{0, 1});
    CHECK(rank(m) == 2);
    CHECK(rank(make_matrix(3, 3)) == 0);
}

TEST_CASE("kernel vectors are actual kernel vectors") {
    std::mt19937 rng(8);
    for (int it = 0; it < 100; ++it) {
        QMatrix m = random_matrix(rng, 3, 5, 4);
        auto basis = kernel_basis(m);
        CHECK(basis.size() == 5 - rank(m));
        for (const auto& v : basis) {
            QVector r = mat_vec(m, v);
            for (const auto& x : r) CHECK(x == 0);
        }
    }
}

TEST_CASE("solve_square") {
    QMatrix a{{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
    QVector b{Rational(5), Rational(10)};
    auto x = solve_square(a, b);
    REQUIRE(x);
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 3);
    QMatrix sing{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK(!solve_square(sing, b));
    // random consistency: A x = b reproduced
    std::mt19937 rng(9);
    for (int it = 0; it < 50; ++it) {
        QMatrix m = random_matrix(rng, 4, 4, 6);
        QVector rhs = random_matrix(rng, 1, 4, 6)[0];
        auto sol = solve_square(m, rhs);
        if (!sol) {
            CHECK(determinant(m) == 0);
            continue;
        }
        CHECK(mat_vec(m, *sol) == rhs);
    }
}

TEST_CASE("determinant agrees with Bareiss on constant matrices") {
    std::mt19937 rng(10);
    for (int it = 0; it < 50; ++it) {
        QMatrix m = random_matrix(rng, 4, 4, 5);
        std::vector<std::vector<MultiPoly>> pm(4, std::vector<MultiPoly>(4, MultiPoly::zero(1)));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                pm[i][j] = MultiPoly::constant(1, m[i][j]);
        MultiPoly d = bareiss_determinant(pm, 1);
        CHECK(d.constant_term() == determinant(m));
    }
}

TEST_CASE("Bareiss determinant with polynomial entries") {
    // [[x, 1], [1, x]] -> x^2 - 1
    MultiPoly x = MultiPoly::variable(1, 0);
    MultiPoly one = MultiPoly::constant(1, Rational(1));
    std::vector<std::vector<MultiPoly>> m{{x, one}, {one, x}};
    CHECK(bareiss_determinant(m, 1) == x * x - one);
    // singular polynomial matrix
    std::vector<std::vector<MultiPoly>> s{{x, x}, {x, x}};
    CHECK(bareiss_determinant(s, 1).is_zero());
}

TEST_CASE("determinant multiplies under row swap and scaling") {
    std::mt19937 rng(11);
    for (int it = 0; it < 50; ++it) {
        QMatrix m = random_matrix(rng, 3, 3, 5);
        Rational d = determinant(m);
        QMatrix sw = m;
        std::swap(sw[0], sw[2]);
        CHECK(determinant(sw) == -d);
        QMatrix sc = m;
        for (auto& x : sc[1]) x *= Rational(3);
        CHECK(determinant(sc) == 3 * d);
    }
}
