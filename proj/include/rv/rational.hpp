#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace rv {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "num/den" or "num". Throws on malformed input or zero denominator.
inline Rational rat_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0)
        throw std::invalid_argument("rational with zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rational& r) {
    return r.get_str();
}

}  // namespace rv
