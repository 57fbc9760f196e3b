#pragma once

#include <array>
#include <vector>

#include "rv/patterns.hpp"
#include "rv/polynomial.hpp"
#include "rv/quadratic.hpp"
#include "rv/tours.hpp"

namespace rv {

// Expected meeting time of the Anderson-Weber strategy on K4 as a function of
// the stay-home probability p, assembled from the three-case block recurrence
// (both home / one tours / both tour). Equals (43-14p+25p^2)/(9(1+2p-3p^2)).
RationalFunction aw_expected_time();

// Exact stationary point of aw_expected_time on (0,1): (3*sqrt(681)-77)/4.
Quad aw_optimal_p();

// One 12-step realization of a player's strategy: four blocks, each Home or a
// concrete tour. r is the conditional probability of the tour subsequence so
// that the path has probability p^(4-t) (1-p)^t r with t touring blocks.
struct PlayerPath {
    std::array<int, 4> actions;  // -1 = Home, else tour index 0..5
    int tour_count;
    Rational r;
};

// All paths with nonzero probability under dist (1585 for the paper's y,
// 2401 for uniform).
std::vector<PlayerPath> enumerate_paths(const PatternDistribution& dist);

struct GameEvaluation {
    RationalFunction et;               // expected meeting time under 12-step renewal
    RationalFunction survival;         // R(p) = P(no meeting within 12 steps)
    std::array<Poly, 12> meet_mass;    // P(first meeting at step s), s = 1..12

    // Sum of step masses plus survival must be identically 1.
    bool masses_complete() const;
};

// Exact symbolic evaluation of the 12-step strategy: every ordered pair of
// paths against every labeling pair, aggregated into polynomial step masses,
// then closed under the restart renewal.
GameEvaluation full_game_et(const PatternDistribution& dist);

// Cached evaluation for the paper's y distribution.
const GameEvaluation& full_game_paper_y();

// AW expected time minus the 12-step strategy's expected time at p, exact in
// Q(sqrt(681)); positive means the new strategy is better.
Quad improvement_at(const Quad& p);

}  // namespace rv
