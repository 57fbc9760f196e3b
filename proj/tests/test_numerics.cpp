#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "rv/polynomial.hpp"
#include "rv/quadratic.hpp"
#include "rv/rational.hpp"

using namespace rv;

namespace {

std::mt19937_64 rng(12345);

Rational random_rational() {
    std::uniform_int_distribution<long> num(-500, 500);
    std::uniform_int_distribution<long> den(1, 97);
    return rat(num(rng), den(rng));
}

Quad random_quad() { return Quad(random_rational(), random_rational()); }

Poly random_poly() {
    std::uniform_int_distribution<int> deg(0, 5);
    std::vector<Rational> c(deg(rng) + 1);
    for (auto& x : c) x = random_rational();
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("rational helpers") {
    CHECK(rat(6, 4) == rat(3, 2));
    CHECK(rat(-6, 4) == rat(-3, 2));
    CHECK(rat_from_string("30375/15199") == rat(30375, 15199));
    CHECK(rat_from_string("-7") == rat(-7));
    CHECK(rat_to_string(rat(30375, 15199)) == "30375/15199");
    CHECK(rat_to_string(rat(4, 2)) == "2");
    CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
}

TEST_CASE("quadratic field axioms on random triples") {
    for (int trial = 0; trial < 10000; ++trial) {
        Quad x = random_quad(), y = random_quad(), z = random_quad();
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + Quad() == x);
        CHECK(x * Quad(Rational(1)) == x);
        CHECK(x - x == Quad());
        if (!x.is_zero()) {
            CHECK(x * x.inverse() == Quad(Rational(1)));
            CHECK((y / x) * x == y);
        }
    }
}

TEST_CASE("quadratic field representation is faithful") {
    // 681 square-free: a + b*sqrt(681) = 0 forces a = b = 0, so norm is
    // multiplicative and zero only at zero.
    for (int trial = 0; trial < 1000; ++trial) {
        Quad x = random_quad(), y = random_quad();
        CHECK(x.norm() * y.norm() == (x * y).norm());
        if (!x.is_zero()) CHECK(x.norm() != 0);
    }
    CHECK(Quad::sqrt_disc() * Quad::sqrt_disc() == Quad(Rational(681)));
}

TEST_CASE("quadratic sign agrees with the real embedding") {
    for (int trial = 0; trial < 10000; ++trial) {
        Quad x = random_quad();
        double v = x.to_double();
        // The double check is only meaningful away from zero.
        if (std::abs(v) > 1e-6) CHECK(x.sign() == (v > 0 ? 1 : -1));
        CHECK((-x).sign() == -x.sign());
        CHECK((x * x).sign() == (x.is_zero() ? 0 : 1));
    }
    CHECK(Quad().sign() == 0);
    CHECK(Quad(Rational(26), Rational(-1)).sign() == -1);  // 26 < sqrt(681) < 27
    CHECK(Quad(Rational(27), Rational(-1)).sign() == 1);
    CHECK(Quad(Rational(-26), Rational(1)).sign() == 1);
    CHECK(Quad(rat(-261, 10), Rational(1)).sign() == -1);  // sqrt(681) < 26.1
    CHECK(Quad(rat(-2609, 100), Rational(1)).sign() == 1);  // 26.09 < sqrt(681)
}

TEST_CASE("decimal rendering is correctly rounded") {
    CHECK(to_decimal(Quad(rat(-77, 4), rat(3, 4)), 6) == "0.321983");
    CHECK(to_decimal(Quad(rat(5, 4), rat(1, 12)), 6) == "3.42466");
    CHECK(to_decimal(Quad(rat(1, 3)), 6) == "0.333333");
    CHECK(to_decimal(Quad(rat(2, 3)), 4) == "0.6667");
    CHECK(to_decimal(Quad(rat(-2, 3)), 4) == "-0.6667");
    CHECK(to_decimal(Quad(Rational(681)), 5) == "681.00");
    CHECK(to_decimal(Quad(rat(1, 7)), 3) == "0.143");
    CHECK(to_decimal(Quad(Rational(12345)), 3) == "12300");
    // Exact ties resolve half-even.
    CHECK(to_decimal(Quad(rat(1, 8)), 2) == "0.12");
    CHECK(to_decimal(Quad(rat(3, 8)), 2) == "0.38");
    CHECK(to_decimal(Quad(rat(15, 1)), 1) == "20");
    CHECK(to_decimal(Quad(rat(25, 1)), 1) == "20");
    CHECK(to_decimal(Quad(), 3) == "0.000");
    // Carry into a new leading digit.
    CHECK(to_decimal(Quad(rat(999999, 1000)), 4) == "1000");
    CHECK_THROWS_AS(to_decimal(Quad(rat(1, 2)), 0), std::invalid_argument);
}

TEST_CASE("decimal rendering matches double arithmetic on random values") {
    for (int trial = 0; trial < 2000; ++trial) {
        Quad x = random_quad();
        if (std::abs(x.to_double()) < 1e-3) continue;
        double back = std::stod(to_decimal(x, 12));
        CHECK(back == doctest::Approx(x.to_double()).epsilon(1e-9));
    }
}

TEST_CASE("polynomial ring axioms on random triples") {
    for (int trial = 0; trial < 2000; ++trial) {
        Poly f = random_poly(), g = random_poly(), h = random_poly();
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f + g) + h == f + (g + h));
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f - f == Poly());
        Rational x = random_rational();
        CHECK((f * g).eval(x) == f.eval(x) * g.eval(x));
        CHECK((f + g).eval(x) == f.eval(x) + g.eval(x));
    }
}

TEST_CASE("polynomial calculus") {
    Poly f = Poly::from_ints({-25, 77, 2});  // 2p^2 + 77p - 25
    CHECK(f.derivative() == Poly::from_ints({77, 4}));
    CHECK(Poly::constant(rat(5)).derivative().is_zero());
    for (int trial = 0; trial < 500; ++trial) {
        Poly g = random_poly(), h = random_poly();
        CHECK((g * h).derivative() == g.derivative() * h + g * h.derivative());
        CHECK((g + h).derivative() == g.derivative() + h.derivative());
    }
    CHECK(Poly::x().pow(3) == Poly::from_ints({0, 0, 0, 1}));
    CHECK(random_poly().pow(0) == Poly::constant(rat(1)));
}

TEST_CASE("polynomial degree and primitive form") {
    CHECK(Poly().degree() == -1);
    CHECK(Poly({rat(1), rat(2), rat(0)}).degree() == 1);  // trailing zero stripped
    Poly f({rat(1, 2), rat(3, 4)});
    CHECK(f.primitive_integer_form() == Poly::from_ints({2, 3}));
    CHECK(Poly::from_ints({-4, -6}).primitive_integer_form() == Poly::from_ints({2, 3}));
    CHECK(Poly::from_ints({4, -6}).primitive_integer_form() == Poly::from_ints({-2, 3}));
}

TEST_CASE("polynomial quad evaluation is a homomorphism") {
    Quad s = Quad::sqrt_disc();
    CHECK(Poly::from_ints({-681, 0, 1}).eval(s).is_zero());
    for (int trial = 0; trial < 200; ++trial) {
        Poly f = random_poly(), g = random_poly();
        Quad x = random_quad();
        CHECK((f * g).eval(x) == f.eval(x) * g.eval(x));
    }
}

TEST_CASE("rational function canonicalization preserves the value") {
    RationalFunction f(Poly({rat(1, 2), rat(1, 3)}), Poly({rat(1, 5), rat(0), rat(2)}));
    for (int trial = 0; trial < 200; ++trial) {
        Rational x = random_rational();
        if (f.den().eval(x) == 0) continue;
        Rational direct =
            Poly({rat(1, 2), rat(1, 3)}).eval(x) / Poly({rat(1, 5), rat(0), rat(2)}).eval(x);
        CHECK(f.eval(x) == direct);
    }
    // Canonical form: integer primitive parts, positive den leading coefficient.
    RationalFunction g(Poly::from_ints({2, 4}), Poly::from_ints({-2, -6}));
    CHECK(g.den().coeff(g.den().degree()) > 0);
    CHECK(g == RationalFunction(Poly::from_ints({-1, -2}), Poly::from_ints({1, 3})));
}

TEST_CASE("rational function arithmetic and equality") {
    RationalFunction x(Poly::x(), Poly::constant(rat(1)));
    RationalFunction one(Poly::constant(rat(1)), Poly::constant(rat(1)));
    // x/(x+1) + 1/(x+1) = 1
    RationalFunction a(Poly::x(), Poly::from_ints({1, 1}));
    RationalFunction b(Poly::constant(rat(1)), Poly::from_ints({1, 1}));
    CHECK(a + b == one);
    // Common factors do not break equality: (x^2-1)/(x-1) == x+1.
    RationalFunction c(Poly::from_ints({-1, 0, 1}), Poly::from_ints({-1, 1}));
    CHECK(c == x + one);
    CHECK(c != x);
    for (int trial = 0; trial < 300; ++trial) {
        RationalFunction f(random_poly(), Poly::from_ints({3, 0, 1}));  // pole-free den
        RationalFunction g(random_poly(), Poly::from_ints({5, 1, 2}));
        Rational p = random_rational();
        CHECK((f + g).eval(p) == f.eval(p) + g.eval(p));
        CHECK((f * g).eval(p) == f.eval(p) * g.eval(p));
        CHECK((f - g).eval(p) == f.eval(p) - g.eval(p));
    }
}

TEST_CASE("rational function derivative follows the quotient rule") {
    RationalFunction f(Poly::from_ints({43, -14, 25}), Poly::from_ints({9, 18, -27}));
    RationalFunction d = f.derivative();
    // Check against a symmetric difference quotient at rational points: exact
    // identity d = (num' den - num den')/den^2 evaluated pointwise.
    for (int trial = 0; trial < 200; ++trial) {
        Rational x = random_rational();
        if (f.den().eval(x) == 0) continue;
        Rational expect = (f.num().derivative().eval(x) * f.den().eval(x) -
                           f.num().eval(x) * f.den().derivative().eval(x)) /
                          (f.den().eval(x) * f.den().eval(x));
        CHECK(d.eval(x) == expect);
    }
}

TEST_CASE("evaluation at a pole throws") {
    RationalFunction f(Poly::constant(rat(1)), Poly::from_ints({-1, 1}));
    CHECK_THROWS(f.eval(rat(1)));
    CHECK_THROWS(RationalFunction(Poly::x(), Poly()));
}
