#pragma once

#include <string>
#include <vector>

#include "rv/quadratic.hpp"
#include "rv/rational.hpp"

namespace rv {

// Dense univariate polynomial with rational coefficients, ascending degree.
// Trailing zero coefficients are stripped; the zero polynomial has no terms.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(Rational v) { return Poly({std::move(v)}); }
    static Poly x() { return Poly({Rational(0), Rational(1)}); }
    static Poly from_ints(const std::vector<long>& coeffs);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;
    Quad eval(const Quad& x) const;
    Poly derivative() const;
    Poly pow(unsigned n) const;

    // Multiplies through by the lcm of coefficient denominators and divides by
    // the content, leaving integer coefficients with gcd 1 and positive leading
    // coefficient. Zero polynomial maps to itself.
    Poly primitive_integer_form() const;

    std::string to_string(const std::string& var = "p") const;

    friend Poly operator+(const Poly& f, const Poly& g);
    friend Poly operator-(const Poly& f, const Poly& g);
    friend Poly operator-(const Poly& f);
    friend Poly operator*(const Poly& f, const Poly& g);
    friend Poly operator*(const Rational& s, const Poly& f);
    friend bool operator==(const Poly& f, const Poly& g) { return f.c_ == g.c_; }
    friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Ratio of two polynomials. Canonical form keeps num and den as primitive
// integer polynomials with the den's leading coefficient positive; equality is
// semantic (cross-multiplication), so forms differing by a common polynomial
// factor still compare equal.
class RationalFunction {
public:
    RationalFunction() : num_(Poly::constant(Rational(0))), den_(Poly::constant(Rational(1))) {}
    RationalFunction(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    Rational eval(const Rational& x) const;
    Quad eval(const Quad& x) const;
    RationalFunction derivative() const;

    friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g);
    friend RationalFunction operator-(const RationalFunction& f, const RationalFunction& g);
    friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g);
    friend bool operator==(const RationalFunction& f, const RationalFunction& g) {
        return (f.num_ * g.den_) == (g.num_ * f.den_);
    }
    friend bool operator!=(const RationalFunction& f, const RationalFunction& g) {
        return !(f == g);
    }

private:
    Poly num_;
    Poly den_;
};

}  // namespace rv
