#include "rv/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace rv {

Poly Poly::from_ints(const std::vector<long>& coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return Poly(std::move(c));
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Quad Poly::eval(const Quad& x) const {
    Quad acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Quad(*it);
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return Poly(std::move(d));
}

Poly Poly::pow(unsigned n) const {
    Poly result = Poly::constant(Rational(1));
    Poly base = *this;
    while (n) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

Poly Poly::primitive_integer_form() const {
    if (c_.empty()) return *this;
    Integer den_lcm(1);
    for (const auto& q : c_) den_lcm = lcm(den_lcm, q.get_den());
    Integer content(0);
    std::vector<Integer> ints(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        ints[i] = c_[i].get_num() * (den_lcm / c_[i].get_den());
        content = gcd(content, ints[i]);
    }
    if (sgn(ints.back()) < 0) content = -content;
    std::vector<Rational> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = Rational(ints[i] / content);
    return Poly(std::move(out));
}

std::string Poly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        Rational a = c_[i];
        if (!s.empty()) {
            s += (sgn(a) < 0) ? " - " : " + ";
            a = abs(a);
        } else if (sgn(a) < 0) {
            s += "-";
            a = abs(a);
        }
        bool unit = (a == 1) && i > 0;
        if (!unit) s += rat_to_string(a);
        if (i > 0) {
            if (!unit) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

Poly operator+(const Poly& f, const Poly& g) {
    std::vector<Rational> c(std::max(f.c_.size(), g.c_.size()), Rational(0));
    for (size_t i = 0; i < f.c_.size(); ++i) c[i] += f.c_[i];
    for (size_t i = 0; i < g.c_.size(); ++i) c[i] += g.c_[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& f, const Poly& g) { return f + (-g); }

Poly operator-(const Poly& f) {
    std::vector<Rational> c(f.c_.size());
    for (size_t i = 0; i < f.c_.size(); ++i) c[i] = -f.c_[i];
    return Poly(std::move(c));
}

Poly operator*(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Poly();
    std::vector<Rational> c(f.c_.size() + g.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < f.c_.size(); ++i)
        for (size_t j = 0; j < g.c_.size(); ++j) c[i + j] += f.c_[i] * g.c_[j];
    return Poly(std::move(c));
}

Poly operator*(const Rational& s, const Poly& f) {
    std::vector<Rational> c(f.c_.size());
    for (size_t i = 0; i < f.c_.size(); ++i) c[i] = s * f.c_[i];
    return Poly(std::move(c));
}

namespace {

Integer coeff_den_lcm(const Poly& f) {
    Integer l(1);
    for (const auto& q : f.coeffs()) l = lcm(l, q.get_den());
    return l;
}

Integer integer_content(const Poly& f) {
    Integer c(0);
    for (const auto& q : f.coeffs()) c = gcd(c, q.get_num());
    return c;
}

}  // namespace

RationalFunction::RationalFunction(Poly num, Poly den) {
    if (den.is_zero()) throw std::invalid_argument("rational function with zero denominator");
    // Joint scaling only, so the value is preserved: clear denominators, strip
    // the common content, make the den's leading coefficient positive.
    Rational l(lcm(coeff_den_lcm(num), coeff_den_lcm(den)));
    num_ = l * num;
    den_ = l * den;
    Integer g = gcd(integer_content(num_), integer_content(den_));
    if (sgn(den_.coeff(den_.degree())) < 0) g = -g;
    Rational inv_g = Rational(1) / Rational(g);
    num_ = inv_g * num_;
    den_ = inv_g * den_;
    if (num_.is_zero()) den_ = Poly::constant(Rational(1));
}

Rational RationalFunction::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw std::domain_error("rational function pole at evaluation point");
    return num_.eval(x) / d;
}

Quad RationalFunction::eval(const Quad& x) const {
    Quad d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("rational function pole at evaluation point");
    return num_.eval(x) / d;
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) {
    return RationalFunction(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
}

RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) {
    return RationalFunction(f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_);
}

RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
    return RationalFunction(f.num_ * g.num_, f.den_ * g.den_);
}

}  // namespace rv
