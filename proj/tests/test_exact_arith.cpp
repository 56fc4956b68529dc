#include <doctest.h>

#include "tropiq/matrix.hpp"
#include "tropiq/rational.hpp"
#include "tropiq/wedge.hpp"

#include <random>

using namespace tropiq;

namespace {

QMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    QMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Rational(num(rng), den(rng));
    return m;
}

} // namespace

TEST_CASE("rational strings round-trip and stay canonical") {
    CHECK(rational_to_string(Rational(6, 4)) == "3/2");
    CHECK(rational_to_string(Rational(-6, 4)) == "-3/2");
    CHECK(rational_to_string(Rational(8, 2)) == "4");
    CHECK(rational_from_string("3/2") == Rational(3, 2));
    CHECK(rational_from_string("-7") == Rational(-7));
    CHECK(rational_from_string("-4/6") == Rational(-2, 3));
    CHECK(rational_den(rational_from_string("-4/6")) == 3);
    CHECK_THROWS_AS((void)rational_from_string("x"), std::invalid_argument);
    CHECK_THROWS_AS((void)rational_from_string("1/0"), std::invalid_argument);
}

TEST_CASE("rank of empty and identity matrices") {
    CHECK(rank_exact(QMatrix()) == 0);
    CHECK(rank_exact(QMatrix::identity(3)) == 3);
    CHECK(kernel_dim(QMatrix::identity(4)) == 0);
    CHECK(kernel_dim(QMatrix(2, 5)) == 5);
}

TEST_CASE("rank of the differential of a trivalent vertex") {
    // Rows are e1, e2, -e1-e2 in the basis (e1, e2); the one-dimensional
    // kernel is spanned by the sum of the three rows.
    QMatrix m = QMatrix::from_rows({{1, 0}, {0, 1}, {-1, -1}});
    CHECK(rank_exact(m) == 2);
    // As a map R^3 -> R^2 the matrix acts on column vectors.
    QMatrix d = m.transposed();
    CHECK(rank_exact(d) == 2);
    CHECK(kernel_dim(d) == 1);
    QMatrix k = kernel_basis(d);
    CHECK(k.rows() == 1);
    CHECK(k.at(0, 0) == k.at(0, 1));
    CHECK(k.at(0, 1) == k.at(0, 2));
}

TEST_CASE("rank properties on random matrices") {
    std::mt19937_64 rng(20240517);
    for (int iter = 0; iter < 60; ++iter) {
        std::uniform_int_distribution<std::size_t> dim(1, 6);
        std::size_t rows = dim(rng), cols = dim(rng);
        QMatrix m = random_matrix(rng, rows, cols);
        std::size_t rk = rank_exact(m);
        CHECK(rk == rank_exact(m.transposed()));
        CHECK(rk + kernel_dim(m) == cols);

        // Scaling a row by a nonzero rational and swapping rows keeps rank.
        QMatrix s = m;
        std::uniform_int_distribution<int> sc(1, 5);
        Rational factor(sc(rng), sc(rng));
        for (std::size_t c = 0; c < cols; ++c) s.at(0, c) *= factor;
        if (rows > 1)
            for (std::size_t c = 0; c < cols; ++c) std::swap(s.at(0, c), s.at(rows - 1, c));
        CHECK(rank_exact(s) == rk);
    }
}

TEST_CASE("rref and kernel agree with the rank") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 40; ++iter) {
        QMatrix m = random_matrix(rng, 4, 5);
        std::vector<std::size_t> piv;
        QMatrix r = rref(m, &piv);
        CHECK(r.rows() == rank_exact(m));
        QMatrix k = kernel_basis(m);
        CHECK(k.rows() == kernel_dim(m));
        // every kernel row is annihilated
        QMatrix prod = m * k.transposed();
        CHECK(prod.is_zero());
    }
}

TEST_CASE("solve_linear solves and detects inconsistency") {
    QMatrix a = QMatrix::from_rows({{1, 2}, {3, 4}});
    std::vector<Rational> x;
    REQUIRE(solve_linear(a, {Rational(5), Rational(6)}, x));
    CHECK(a.at(0, 0) * x[0] + a.at(0, 1) * x[1] == 5);
    CHECK(a.at(1, 0) * x[0] + a.at(1, 1) * x[1] == 6);

    QMatrix sing = QMatrix::from_rows({{1, 1}, {2, 2}});
    CHECK_FALSE(solve_linear(sing, {Rational(0), Rational(1)}, x));
}

TEST_CASE("wedge coordinates: basics") {
    // p = 1 is the identity on coordinates
    auto w = wedge_coordinates({{1, 0, 0}}, 1);
    CHECK(w == std::vector<Rational>{1, 0, 0});

    // repeated vector kills the wedge
    auto z = wedge_coordinates({{1, 0, 0}, {1, 0, 0}}, 2);
    for (const auto& v : z) CHECK(v == 0);

    // (e1+e2) ^ e2 = e1^e2
    auto e = wedge_coordinates({{1, 1, 0}, {0, 1, 0}}, 2);
    CHECK(e == std::vector<Rational>{1, 0, 0});

    CHECK_THROWS_AS((void)wedge_coordinates({{1, 0}}, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)wedge_coordinates({{1, 0}, {1, 0, 0}}, 2), std::invalid_argument);
}

TEST_CASE("wedge coordinates are alternating and multilinear") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int iter = 0; iter < 40; ++iter) {
        std::vector<std::vector<Rational>> v(2, std::vector<Rational>(4));
        for (auto& row : v)
            for (auto& x : row) x = coeff(rng);
        auto ab = wedge_coordinates({v[0], v[1]}, 2);
        auto ba = wedge_coordinates({v[1], v[0]}, 2);
        for (std::size_t i = 0; i < ab.size(); ++i) CHECK(ab[i] == -ba[i]);

        // linearity in the first slot
        std::vector<Rational> sum(4);
        for (std::size_t i = 0; i < 4; ++i) sum[i] = v[0][i] + v[1][i];
        auto lhs = wedge_coordinates({sum, v[1]}, 2);
        for (std::size_t i = 0; i < ab.size(); ++i) CHECK(lhs[i] == ab[i]);
    }
}

TEST_CASE("subset enumeration is lexicographic") {
    auto s = subsets_lex(4, 2);
    REQUIRE(s.size() == 6);
    CHECK(s[0] == std::vector<std::size_t>{0, 1});
    CHECK(s[1] == std::vector<std::size_t>{0, 2});
    CHECK(s[5] == std::vector<std::size_t>{2, 3});
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(12, 0) == 1);
}
