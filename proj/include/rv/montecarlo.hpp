#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rv/patterns.hpp"
#include "rv/tours.hpp"

namespace rv {

// Counter-based generator: each stream is splitmix64 seeded from (seed,
// stream), so parallel chunks are reproducible independent of scheduling.
struct SplitMix64 {
    using result_type = std::uint64_t;
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~0ULL; }
    result_type operator()() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

SplitMix64 stream_rng(std::uint64_t seed, std::uint64_t stream);

// Sequential sampler of the tour-pattern process: letters are drawn one at a
// time from the conditionals of the full-length law, so stopping after t tours
// yields exactly prefix_marginal(dist, t).
class TourSampler {
public:
    explicit TourSampler(const PatternDistribution& dist);

    int length() const { return length_; }
    // Next pattern letter (0-based) given the canonical prefix made so far.
    int next_letter(const Pattern& prefix, SplitMix64& rng) const;
    // Convenience: a full-length pattern drawn letter by letter.
    Pattern sample_pattern(SplitMix64& rng) const;

private:
    int length_;
    std::map<Pattern, std::vector<double>> cumulative_;  // prefix -> cdf over next letter
};

// One player's actions over a 12-step cycle.
struct CycleActions {
    Labeling labeling;
    std::array<BlockAction, 4> blocks;
};

struct GameLog {
    std::vector<CycleActions> player_I;
    std::vector<CycleActions> player_II;
    long meeting_step;
};

// Simulates both players until first meeting; returns the global step count.
// The strategy restarts fresh (coins, tours, labelings) every 12 steps.
// Throws after 10^6 cycles without a meeting.
long simulate_game(double p, const TourSampler& sampler, SplitMix64& rng, GameLog* log = nullptr);

struct SimulationReport {
    long trials;
    double mean;
    std::optional<double> stderr_of_mean;
    std::uint64_t seed;
    std::optional<double> exact_reference;
    std::optional<double> z_score;
};

// Mean meeting time over `trials` independent games. Chunks of trials run on
// independent counter-based streams; RV_THREADS (default: hardware
// concurrency) controls the worker count without affecting the result.
SimulationReport estimate_et(double p, const PatternDistribution& dist, long trials,
                             std::uint64_t seed,
                             std::optional<double> exact_reference = std::nullopt);

}  // namespace rv
