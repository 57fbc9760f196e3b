#pragma once

#include <map>
#include <string>
#include <vector>

#include "rv/rational.hpp"

namespace rv {

// A pattern is a restricted-growth string over 'A','B',...: the first tour is
// A, the first tour differing from all earlier ones is B, and so on. AAAB
// means "repeat the first tour twice more, then pick a new one".
using Pattern = std::string;

bool is_valid_pattern(const Pattern& w);
int distinct_letters(const Pattern& w);

// Canonical pattern of a concrete id sequence (ids arbitrary ints).
Pattern canonical_pattern(const std::vector<int>& ids);

// All patterns of length k in lexicographic order (AAAA, AAAB, AABA, ...).
// Counts are the Bell numbers 1, 2, 5, 15, ...
std::vector<Pattern> enumerate_patterns(int k);

// Number of concrete tour sequences (over 6 tours) realizing the pattern:
// 6*5*...*(6-m+1) with m distinct letters. Throws if m > 6.
long realization_count(const Pattern& w);

struct PatternDistribution {
    int length = 0;
    std::map<Pattern, Rational> probs;  // patterns absent from the map have mass 0

    Rational prob(const Pattern& w) const {
        auto it = probs.find(w);
        return it == probs.end() ? Rational(0) : it->second;
    }
    // Mass vector in enumerate_patterns(length) order.
    std::vector<Rational> as_vector() const;
    void validate() const;  // lengths match, masses nonnegative, total exactly 1
};

// Law of k i.i.d. uniform tours, expressed on patterns.
PatternDistribution uniform_pattern_distribution(int k);

// The improving 4-tour distribution: AAAB, AABA, ABAA, ABBB each 1/12 and
// ABCD 2/3.
PatternDistribution paper_y_distribution();

// Push-forward under truncation to the first t letters.
PatternDistribution prefix_marginal(const PatternDistribution& dist, int t);

PatternDistribution pattern_distribution_from_json(const std::string& json_text);
std::string pattern_distribution_to_json(const PatternDistribution& dist);

}  // namespace rv
