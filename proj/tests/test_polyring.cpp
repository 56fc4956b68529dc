#include <doctest.h>

#include "tropiq/polynomial.hpp"
#include "tropiq/ring_map.hpp"

#include <random>

using namespace tropiq;

namespace {

using FpPoly = Polynomial<PrimeField>;
using QPoly = Polynomial<RationalField>;

RingPtr<PrimeField> p5_ring(std::uint32_t p = 1009) {
    auto vars = indexed_vars("x", 3);
    auto yvars = indexed_vars("y", 3);
    vars.insert(vars.end(), yvars.begin(), yvars.end());
    return make_ring(PrimeField(p), vars);
}

RingPtr<PrimeField> p11_ring(std::uint32_t p = 1009) {
    return make_ring(PrimeField(p), indexed_vars("z", 12));
}

MonomialRingMap<PrimeField> veronese_map(const RingPtr<PrimeField>& z, const RingPtr<PrimeField>& xy) {
    return MonomialRingMap<PrimeField>::from_strings(
        z, xy,
        {"x0^2", "x0*x1", "x0*x2", "x1^2", "x1*x2", "x2^2",
         "y0^2", "y0*y1", "y0*y2", "y1^2", "y1*y2", "y2^2"});
}

FpPoly random_poly(const RingPtr<PrimeField>& ring, std::mt19937_64& rng, int max_terms = 5,
                   int max_exp = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expd(0, max_exp);
    std::uniform_int_distribution<std::uint32_t> coeff(0, ring->field.modulus() - 1);
    FpPoly f(ring);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Monomial m(ring->nvars());
        for (int v = 0; v < ring->nvars(); ++v) m.set(v, expd(rng) == 3 ? 1 : 0);
        f.add_term(m, coeff(rng));
    }
    return f;
}

} // namespace

TEST_CASE("polynomial parsing and printing round-trip") {
    auto ring = make_ring(RationalField{}, std::vector<std::string>{"x", "y"});
    QPoly f = parse_polynomial(ring, "x^2-y^2");
    CHECK(to_string(f) == "x^2-y^2");
    CHECK(to_string(parse_polynomial(ring, to_string(f))) == to_string(f));

    QPoly g = parse_polynomial(ring, "-x + 2*y");
    CHECK(to_string(g) == "2*y-x");
    CHECK(parse_polynomial(ring, to_string(g)) == g);

    CHECK(to_string(parse_polynomial(ring, "0")) == "0");
    CHECK(to_string(parse_polynomial(ring, "x - x")) == "0");
    CHECK(to_string(parse_polynomial(ring, "3")) == "3");
    CHECK(to_string(parse_polynomial(ring, "x*x*y")) == "x^2*y");
    CHECK_THROWS_AS((void)parse_polynomial(ring, "q+1"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_polynomial(ring, "x+"), std::invalid_argument);
}

TEST_CASE("prime field prints balanced residues") {
    auto ring = p11_ring();
    FpPoly f = parse_polynomial(ring, "z10^2-z9*z11");
    CHECK(to_string(f) == "z10^2-z9*z11");
    CHECK(parse_polynomial(ring, to_string(f)) == f);
}

TEST_CASE("basic arithmetic") {
    auto ring = make_ring(RationalField{}, std::vector<std::string>{"x", "y"});
    QPoly x = QPoly::variable(ring, 0);
    QPoly y = QPoly::variable(ring, 1);
    CHECK(to_string((x + y) + (x - y)) == "2*x");
    CHECK(to_string((x + y) * (x - y)) == "x^2-y^2");

    auto fp = make_ring(PrimeField(1009), std::vector<std::string>{"x"});
    FpPoly xf = FpPoly::variable(fp, 0);
    CHECK(xf.scaled(fp->field.from_long(1009)).is_zero());
}

TEST_CASE("ring mismatch is detected") {
    auto r1 = make_ring(RationalField{}, std::vector<std::string>{"x", "y"});
    auto r2 = make_ring(RationalField{}, std::vector<std::string>{"x", "z"});
    QPoly a = QPoly::variable(r1, 0);
    QPoly b = QPoly::variable(r2, 0);
    CHECK_THROWS_AS((void)(a + b), std::invalid_argument);
}

TEST_CASE("arithmetic laws on random polynomials") {
    auto ring = p5_ring();
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 30; ++iter) {
        FpPoly a = random_poly(ring, rng);
        FpPoly b = random_poly(ring, rng);
        FpPoly c = random_poly(ring, rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("monomial orders are total, multiplicative, with 1 minimal") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> expd(0, 4);
    for (MonomialOrder ord : {MonomialOrder::grevlex(), MonomialOrder::lex(),
                              MonomialOrder::elimination_block(2)}) {
        for (int iter = 0; iter < 200; ++iter) {
            Monomial a(5), b(5), c(5), one(5);
            for (int i = 0; i < 5; ++i) {
                a.set(i, expd(rng));
                b.set(i, expd(rng));
                c.set(i, expd(rng));
            }
            // totality and antisymmetry
            int ab = ord.cmp(a, b);
            CHECK(ab == -ord.cmp(b, a));
            if (a == b) CHECK(ab == 0);
            if (ab == 0) CHECK(a == b);
            // transitivity on this triple
            if (ord.cmp(a, b) >= 0 && ord.cmp(b, c) >= 0) CHECK(ord.cmp(a, c) >= 0);
            // multiplicative
            if (ab > 0) CHECK(ord.cmp(a * c, b * c) > 0);
            // 1 is minimal
            if (!a.is_one()) CHECK(ord.cmp(a, one) > 0);
        }
    }
}

TEST_CASE("block orders eliminate their first block") {
    MonomialOrder ord = MonomialOrder::elimination_block(2);
    Monomial with_x(4), without_x(4);
    with_x.set(0, 1);
    without_x.set(2, 7);
    without_x.set(3, 7);
    CHECK(ord.greater(with_x, without_x));
}

TEST_CASE("ring maps substitute monomials") {
    auto z = p11_ring();
    auto xy = p5_ring();
    auto pii = veronese_map(z, xy);

    // z10^2 - z9*z11 -> (y1 y2)^2 - y1^2 y2^2 = 0
    CHECK(apply_ring_map(parse_polynomial(z, "z10^2-z9*z11"), pii).is_zero());
    CHECK(to_string(apply_ring_map(parse_polynomial(z, "z0"), pii)) == "x0^2");
    CHECK(to_string(apply_ring_map(parse_polynomial(z, "2*z2+z6+5*z7+8*z11"), pii)) ==
          "2*x0*x2+y0^2+5*y0*y1+8*y2^2");
}

TEST_CASE("ring maps are multiplicative and additive") {
    auto z = p11_ring();
    auto xy = p5_ring();
    auto pii = veronese_map(z, xy);
    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 20; ++iter) {
        FpPoly f = random_poly(z, rng);
        FpPoly g = random_poly(z, rng);
        CHECK(apply_ring_map(f * g, pii) == apply_ring_map(f, pii) * apply_ring_map(g, pii));
        CHECK(apply_ring_map(f + g, pii) == apply_ring_map(f, pii) + apply_ring_map(g, pii));
    }
}

TEST_CASE("derivatives and jacobians") {
    auto r1 = make_ring(RationalField{}, std::vector<std::string>{"x"});
    QPoly x2 = parse_polynomial(r1, "x^2");
    auto jac1 = jacobian(std::vector<QPoly>{x2});
    REQUIRE(jac1.size() == 1);
    CHECK(to_string(jac1[0][0]) == "2*x");

    auto r6 = make_ring(RationalField{}, [] {
        auto v = indexed_vars("x", 3);
        auto y = indexed_vars("y", 3);
        v.insert(v.end(), y.begin(), y.end());
        return v;
    }());
    auto jac2 = jacobian(std::vector<QPoly>{parse_polynomial(r6, "x0^2+y0^2")});
    CHECK(to_string(jac2[0][0]) == "2*x0");
    CHECK(jac2[0][1].is_zero());
    CHECK(jac2[0][2].is_zero());
    CHECK(to_string(jac2[0][3]) == "2*y0");
}

TEST_CASE("jacobian of generic quadrics matches term-by-term differentiation") {
    auto ring = p5_ring();
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<std::uint32_t> coeff(0, 1008);
    std::vector<FpPoly> quadrics;
    for (int q = 0; q < 3; ++q) {
        FpPoly f(ring);
        for (int i = 0; i < 6; ++i)
            for (int j = i; j < 6; ++j) {
                Monomial m(6);
                m.set(i, m[i] + 1);
                m.set(j, m[j] + 1);
                f.add_term(m, coeff(rng));
            }
        quadrics.push_back(f);
    }
    auto jac = jacobian(quadrics);
    // independent oracle: differentiate each term by the power rule
    for (std::size_t r = 0; r < quadrics.size(); ++r)
        for (int v = 0; v < 6; ++v) {
            FpPoly expected(ring);
            for (const auto& [m, c] : quadrics[r].terms()) {
                if (m[v] == 0) continue;
                Monomial d = m;
                d.set(v, m[v] - 1);
                expected.add_term(d, ring->field.mul(c, ring->field.from_long(m[v])));
            }
            CHECK(jac[r][v] == expected);
            CHECK((jac[r][v].is_zero() || jac[r][v].degree() == 1));
        }
}

TEST_CASE("jacobian satisfies the Leibniz rule") {
    auto ring = p5_ring();
    std::mt19937_64 rng(31337);
    for (int iter = 0; iter < 15; ++iter) {
        FpPoly f = random_poly(ring, rng);
        FpPoly g = random_poly(ring, rng);
        for (int v = 0; v < ring->nvars(); ++v)
            CHECK(derivative(f * g, v) == derivative(f, v) * g + f * derivative(g, v));
    }
}

TEST_CASE("minors") {
    auto ring = make_ring(RationalField{}, std::vector<std::string>{"x", "y"});
    QPoly one = QPoly::constant(ring, Rational(1));
    QPoly zero(ring);
    QPoly x = QPoly::variable(ring, 0);
    QPoly y = QPoly::variable(ring, 1);

    auto id2 = std::vector<std::vector<QPoly>>{{one, zero}, {zero, one}};
    auto m2 = minors(id2, 2);
    REQUIRE(m2.size() == 1);
    CHECK(to_string(m2[0]) == "1");

    auto diag = std::vector<std::vector<QPoly>>{{x, zero}, {zero, y}};
    auto md = minors(diag, 2);
    REQUIRE(md.size() == 1);
    CHECK(to_string(md[0]) == "x*y");

    // a 3x6 matrix has C(6,3) = 20 maximal minors
    std::vector<std::vector<QPoly>> wide(3, std::vector<QPoly>(6, one));
    CHECK(minors(wide, 3).size() == 20);
    CHECK_THROWS_AS((void)minors(wide, 4), std::invalid_argument);
}
