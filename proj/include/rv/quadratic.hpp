#pragma once

#include <string>

#include "rv/rational.hpp"

namespace rv {

// Element a + b*sqrt(681) of the real quadratic field Q(sqrt(681)).
// 681 = 3*227 is square-free, so representation is unique and equality
// is component-wise.
struct Quad {
    static constexpr long kDisc = 681;

    Rational a;
    Rational b;

    Quad() : a(0), b(0) {}
    Quad(Rational a_, Rational b_ = Rational(0)) : a(std::move(a_)), b(std::move(b_)) {}
    static Quad sqrt_disc() { return Quad(Rational(0), Rational(1)); }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    // a^2 - 681*b^2; zero only for the zero element.
    Rational norm() const { return a * a - Rational(kDisc) * b * b; }

    // Sign of the real value a + b*sqrt(681).
    int sign() const;

    Quad inverse() const;
    double to_double() const;

    friend Quad operator+(const Quad& x, const Quad& y) { return Quad(x.a + y.a, x.b + y.b); }
    friend Quad operator-(const Quad& x, const Quad& y) { return Quad(x.a - y.a, x.b - y.b); }
    friend Quad operator-(const Quad& x) { return Quad(-x.a, -x.b); }
    friend Quad operator*(const Quad& x, const Quad& y) {
        return Quad(x.a * y.a + Rational(kDisc) * x.b * y.b, x.a * y.b + x.b * y.a);
    }
    friend Quad operator/(const Quad& x, const Quad& y) { return x * y.inverse(); }
    friend bool operator==(const Quad& x, const Quad& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }
    friend bool operator<(const Quad& x, const Quad& y) { return (x - y).sign() < 0; }
    friend bool operator>(const Quad& x, const Quad& y) { return (x - y).sign() > 0; }
};

// Correctly rounded decimal rendering with `digits` significant digits
// (round half even), plain notation: "3.42466", "0.321983", "0.000146683".
std::string to_decimal(const Quad& x, int digits);

}  // namespace rv
