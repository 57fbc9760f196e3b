#pragma once

#include <cstdint>
#include <string>

#include "rv/block_analysis.hpp"
#include "rv/full_game.hpp"
#include "rv/patterns.hpp"
#include "rv/polynomial.hpp"
#include "rv/quadratic.hpp"

namespace rv {

// Closed-form minimum of the AW expected time over p in (0,1).
struct AwOptimum {
    Quad p;
    Quad et;
    Quad derivative_at_p;  // exactly 0
};
AwOptimum minimize_aw();

// Numeric minimum of a symbolic expected-time function over p. The bracket
// [p_lo, p_hi] encloses a sign change of the exact derivative; the value is
// an exact evaluation at the rational midpoint.
struct POptimum {
    Rational p_lo, p_hi;
    Rational p;        // midpoint of the final bracket
    Rational value;    // objective evaluated exactly at p
};
POptimum minimize_full_game_p(const PatternDistribution& dist, const Rational& tol);
POptimum minimize_rational_function_p(const RationalFunction& objective, const Rational& tol);

enum class TstepMode { Tail, Renewal };
TstepMode tstep_mode_from_string(const std::string& s);

// Local minimization of the t-step expected time over the Bell(k)-simplex of
// pattern distributions, by exact pairwise mass transfers from multiple
// starts. Heuristic: the k=4 objective is indefinite, so only local optimality
// is claimed.
struct DistOptimum {
    PatternDistribution dist;
    Rational value;
    // Largest exact improvement available from any single pairwise transfer at
    // the reported point; 0 means pairwise-stationary.
    Rational stationarity_residual;
};
DistOptimum minimize_pattern_distribution(int k, TstepMode mode, int starts = 16,
                                          std::uint64_t seed = 1);

}  // namespace rv
