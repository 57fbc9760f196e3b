#include "rv/quadratic.hpp"

#include <cmath>
#include <stdexcept>

namespace rv {

int Quad::sign() const {
    int sa = sgn(a), sb = sgn(b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against 681 b^2.
    int c = cmp(a * a, Rational(kDisc) * b * b);
    return c == 0 ? 0 : (c > 0 ? sa : sb);
}

Quad Quad::inverse() const {
    Rational n = norm();
    if (n == 0) throw std::domain_error("division by zero in Q(sqrt(681))");
    return Quad(a / n, -b / n);
}

double Quad::to_double() const {
    return a.get_d() + b.get_d() * std::sqrt(static_cast<double>(kDisc));
}

namespace {

Integer pow10(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

// Half-even rounding of n/10^drop for n >= 0.
Integer round_half_even(const Integer& n, unsigned long drop) {
    Integer scale = pow10(drop);
    Integer q = n / scale;
    Integer rem = n - q * scale;
    int c = cmp(rem * 2, scale);
    if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
    return q;
}

std::string format_plain(bool negative, const std::string& digs, long exp10) {
    std::string out = negative ? "-" : "";
    long n = static_cast<long>(digs.size());
    if (exp10 >= 0) {
        if (exp10 + 1 >= n) {
            out += digs;
            out.append(static_cast<size_t>(exp10 + 1 - n), '0');
        } else {
            out += digs.substr(0, exp10 + 1);
            out += '.';
            out += digs.substr(exp10 + 1);
        }
    } else {
        out += "0.";
        out.append(static_cast<size_t>(-exp10 - 1), '0');
        out += digs;
    }
    return out;
}

// Renders sig digits of the integer interval [lo, hi]; empty string when the
// two ends round differently (caller must retry with more precision).
std::string render_from_scaled(const Integer& lo, const Integer& hi, int digits,
                               long scale_exp, bool negative, std::string* out_lo) {
    std::string slo = lo.get_str();
    std::string shi = hi.get_str();
    if (slo.size() != shi.size()) return "";
    long len = static_cast<long>(slo.size());
    long drop = len - digits;
    if (drop < 2) return "";  // want guard digits below the cut
    Integer rlo = round_half_even(lo, drop);
    Integer rhi = round_half_even(hi, drop);
    if (rlo != rhi) return "";
    std::string digs = rlo.get_str();
    long exp10 = len - 1 - scale_exp;
    if (static_cast<long>(digs.size()) == digits + 1) {
        // Carry into a new leading digit (e.g. 999.. -> 1000..).
        digs.pop_back();
        exp10 += 1;
    }
    *out_lo = format_plain(negative, digs, exp10);
    return *out_lo;
}

}  // namespace

std::string to_decimal(const Quad& x, int digits) {
    if (digits < 1) throw std::invalid_argument("to_decimal: digits must be >= 1");
    if (x.is_zero()) return "0." + std::string(digits, '0');

    bool negative = x.sign() < 0;
    Quad v = negative ? -x : x;

    // v = (A + B*sqrt(681)) / Q with integers A, B and Q > 0.
    Integer qa = v.a.get_den(), qb = v.b.get_den();
    Integer Q = qa / gcd(qa, qb) * qb;
    Integer A = v.a.get_num() * (Q / qa);
    Integer B = v.b.get_num() * (Q / qb);

    for (unsigned long g = static_cast<unsigned long>(digits) + 12;; g *= 2) {
        Integer p = pow10(g);
        // S = floor(sqrt(681) * 10^g), so sqrt(681)*10^g is in [S, S+1).
        Integer S;
        mpz_sqrt(S.get_mpz_t(), Integer(Quad::kDisc * p * p).get_mpz_t());
        Integer num = A * p + B * S;
        Integer slack = abs(B) + Q;  // covers the sqrt floor and the division floor
        Integer lo, hi;
        mpz_fdiv_q(lo.get_mpz_t(), Integer(num - slack).get_mpz_t(), Q.get_mpz_t());
        mpz_cdiv_q(hi.get_mpz_t(), Integer(num + slack).get_mpz_t(), Q.get_mpz_t());
        if (lo <= 0) continue;  // scale further until the value exceeds 1 ulp
        std::string out;
        if (!render_from_scaled(lo, hi, digits, static_cast<long>(g), negative, &out).empty())
            return out;
        // An exact decimal tie stalls the interval; only terminating decimals
        // (B = 0, Q | A*10^g) can tie, and there half-even settles it exactly.
        if (B == 0 && mpz_divisible_p(Integer(A * p).get_mpz_t(), Q.get_mpz_t())) {
            Integer mid = A * p / Q;
            std::string s;
            if (!render_from_scaled(mid, mid, digits, static_cast<long>(g), negative, &s).empty())
                return s;
        }
    }
}

}  // namespace rv
