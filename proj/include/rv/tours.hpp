#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "rv/rational.hpp"

namespace rv {

// Locations are vertices 1..n of K_n. Player I homes at 1, player II at 2.
constexpr int kHomeI = 1;
constexpr int kHomeII = 2;

// A tour visits all n-1 non-home locations once, expressed in the player's
// private letters 0..n-2 ('a','b','c').
struct Tour {
    std::vector<int> letters;

    std::string name() const {
        std::string s;
        for (int v : letters) s += static_cast<char>('a' + v);
        return s;
    }
};

// One block action: stay home, or make a concrete tour.
struct BlockAction {
    static BlockAction home() { return BlockAction{-1}; }
    static BlockAction tour(int idx) { return BlockAction{idx}; }
    int tour_index;  // -1 = Home, else index into enumerate_tours(n)
    bool is_home() const { return tour_index < 0; }
};

// Bijection letter -> location over a player's non-home locations.
struct Labeling {
    int home;
    std::vector<int> letter_to_location;

    int location_of(int letter) const { return letter_to_location.at(letter); }
    void validate(int n) const;
    std::string name() const {
        std::string s;
        for (size_t i = 0; i < letter_to_location.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(letter_to_location[i]);
        }
        return s;
    }
};

// 0 = no meet, otherwise the first step (1-based) at which both players
// occupy the same location within the block.
using MeetingOutcome = int;
constexpr MeetingOutcome kNoMeet = 0;

// All (n-1)! tours in lexicographic letter order (abc, acb, bac, bca, cab,
// cba for n=4). Throws for n outside {3,4}.
std::vector<Tour> enumerate_tours(int n);

// All (n-1)! labelings of the non-home locations for the given home, ordered
// lexicographically by the location sequence.
std::vector<Labeling> enumerate_labelings(int home, int n = 4);

// First meeting step within one block of n-1 steps. A Home action occupies the
// player's home location at every step.
MeetingOutcome meeting_outcome(const BlockAction& act_I, const BlockAction& act_II,
                               const Labeling& lab_I, const Labeling& lab_II, int n = 4);

struct BlockMeetingTable {
    Labeling lab_I, lab_II;
    std::array<std::array<MeetingOutcome, 6>, 6> entries;  // [tour_I][tour_II]

    int no_meet_count_in_row(int row) const;
    int no_meet_count_in_col(int col) const;
};

// The 6x6 tour-vs-tour table for one labeling pair (n=4).
BlockMeetingTable block_meeting_table(const Labeling& lab_I, const Labeling& lab_II);

// Averaged over all 36 labeling pairs and 36 tour pairs: probability of
// meeting and conditional mean meeting step.
std::pair<Rational, Rational> average_meeting_stats();

// Expected meeting step when player I stays home and player II tours,
// averaged over II's labelings and tours.
Rational stayer_tourer_mean_step();

}  // namespace rv
