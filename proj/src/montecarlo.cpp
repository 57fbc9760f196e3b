#include "rv/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace rv {

SplitMix64 stream_rng(std::uint64_t seed, std::uint64_t stream) {
    // Decorrelate the stream index through one splitmix step.
    SplitMix64 mix(seed ^ (stream * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
    return SplitMix64(mix());
}

TourSampler::TourSampler(const PatternDistribution& dist) : length_(dist.length) {
    dist.validate();
    // Mass of every canonical prefix, then per-prefix cdf over the next letter.
    std::map<Pattern, double> prefix_mass;
    for (const auto& [w, q] : dist.probs) {
        if (q == 0) continue;
        double mass = q.get_d();
        for (int t = 0; t <= length_; ++t) prefix_mass[w.substr(0, t)] += mass;
    }
    for (const auto& [prefix, mass] : prefix_mass) {
        if (static_cast<int>(prefix.size()) == length_) continue;
        int m = prefix.empty() ? 0 : distinct_letters(prefix);
        std::vector<double> cdf(m + 1, 0.0);
        double acc = 0.0;
        for (int v = 0; v <= m; ++v) {
            auto it = prefix_mass.find(prefix + static_cast<char>('A' + v));
            acc += (it == prefix_mass.end()) ? 0.0 : it->second / mass;
            cdf[v] = acc;
        }
        cumulative_[prefix] = std::move(cdf);
    }
}

int TourSampler::next_letter(const Pattern& prefix, SplitMix64& rng) const {
    auto it = cumulative_.find(prefix);
    if (it == cumulative_.end())
        throw std::invalid_argument("prefix has zero probability: " + prefix);
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const auto& cdf = it->second;
    for (size_t v = 0; v + 1 < cdf.size(); ++v)
        if (u < cdf[v]) return static_cast<int>(v);
    return static_cast<int>(cdf.size()) - 1;
}

Pattern TourSampler::sample_pattern(SplitMix64& rng) const {
    Pattern w;
    for (int t = 0; t < length_; ++t) w += static_cast<char>('A' + next_letter(w, rng));
    return w;
}

namespace {

int uniform_below(int n, SplitMix64& rng) { return static_cast<int>(rng() % n); }

Labeling random_labeling(int home, SplitMix64& rng) {
    std::vector<int> locs;
    for (int v = 1; v <= 4; ++v)
        if (v != home) locs.push_back(v);
    for (int i = 2; i > 0; --i) std::swap(locs[i], locs[uniform_below(i + 1, rng)]);
    return Labeling{home, locs};
}

// One player's fresh 12-step cycle: labeling, home/tour coins, and tours drawn
// through the sequential pattern sampler.
CycleActions draw_cycle(double p, int home, const TourSampler& sampler, SplitMix64& rng) {
    CycleActions cycle{random_labeling(home, rng), {}};
    Pattern prefix;
    std::array<int, 6> letter_tour{};  // letter -> concrete tour
    unsigned used = 0;
    for (int b = 0; b < 4; ++b) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < p) {
            cycle.blocks[b] = BlockAction::home();
            continue;
        }
        int letter = sampler.next_letter(prefix, rng);
        int seen = prefix.empty() ? 0 : distinct_letters(prefix);
        if (letter == seen) {
            // New letter: uniform choice among unused tours.
            int skip = uniform_below(6 - __builtin_popcount(used), rng);
            for (int t = 0; t < 6; ++t) {
                if (used & (1u << t)) continue;
                if (skip-- == 0) {
                    letter_tour[letter] = t;
                    used |= 1u << t;
                    break;
                }
            }
        }
        prefix += static_cast<char>('A' + letter);
        cycle.blocks[b] = BlockAction::tour(letter_tour[letter]);
    }
    return cycle;
}

const std::vector<Tour>& tours4() {
    static const std::vector<Tour> t = enumerate_tours(4);
    return t;
}

int position_at(const CycleActions& cycle, int block, int step) {
    const BlockAction& act = cycle.blocks[block];
    if (act.is_home()) return cycle.labeling.home;
    return cycle.labeling.location_of(tours4()[act.tour_index].letters[step]);
}

}  // namespace

long simulate_game(double p, const TourSampler& sampler, SplitMix64& rng, GameLog* log) {
    if (p < 0.0 || p >= 1.0) throw std::invalid_argument("p must lie in [0, 1)");
    constexpr long kMaxCycles = 1000000;
    long steps_done = 0;
    for (long cycle_idx = 0; cycle_idx < kMaxCycles; ++cycle_idx) {
        CycleActions ci = draw_cycle(p, kHomeI, sampler, rng);
        CycleActions cj = draw_cycle(p, kHomeII, sampler, rng);
        if (log) {
            log->player_I.push_back(ci);
            log->player_II.push_back(cj);
        }
        for (int b = 0; b < 4; ++b)
            for (int s = 0; s < 3; ++s)
                if (position_at(ci, b, s) == position_at(cj, b, s)) {
                    long step = steps_done + 3 * b + s + 1;
                    if (log) log->meeting_step = step;
                    return step;
                }
        steps_done += 12;
    }
    throw std::runtime_error("no meeting within the cycle cap");
}

SimulationReport estimate_et(double p, const PatternDistribution& dist, long trials,
                             std::uint64_t seed, std::optional<double> exact_reference) {
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    TourSampler sampler(dist);

    constexpr long kChunk = 8192;
    const long nchunks = (trials + kChunk - 1) / kChunk;

    unsigned nthreads = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("RV_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) nthreads = static_cast<unsigned>(v);
    }
    nthreads = std::max(1u, std::min<unsigned>(nthreads, static_cast<unsigned>(nchunks)));

    std::vector<double> sums(nchunks), sqsums(nchunks);
    auto worker = [&](unsigned tid) {
        for (long c = tid; c < nchunks; c += nthreads) {
            SplitMix64 rng = stream_rng(seed, static_cast<std::uint64_t>(c));
            long lo = c * kChunk, hi = std::min(trials, lo + kChunk);
            double sum = 0, sq = 0;
            for (long t = lo; t < hi; ++t) {
                double v = static_cast<double>(simulate_game(p, sampler, rng));
                sum += v;
                sq += v * v;
            }
            sums[c] = sum;
            sqsums[c] = sq;
        }
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    double sum = 0, sq = 0;
    for (long c = 0; c < nchunks; ++c) {
        sum += sums[c];
        sq += sqsums[c];
    }

    SimulationReport report;
    report.trials = trials;
    report.seed = seed;
    report.mean = sum / static_cast<double>(trials);
    if (trials > 1) {
        double var = (sq - sum * report.mean) / static_cast<double>(trials - 1);
        report.stderr_of_mean = std::sqrt(std::max(0.0, var) / static_cast<double>(trials));
    }
    report.exact_reference = exact_reference;
    if (exact_reference && report.stderr_of_mean)
        report.z_score = (report.mean - *exact_reference) / *report.stderr_of_mean;
    return report;
}

}  // namespace rv
