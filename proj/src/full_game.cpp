#include "rv/full_game.hpp"

#include <cstdint>
#include <stdexcept>

namespace rv {

RationalFunction aw_expected_time() {
    // Block outcomes computed from the meeting engine, not transcribed.
    auto [meet_prob, meet_mean] = average_meeting_stats();  // (1/2, 16/9)
    Rational stayer_mean = stayer_tourer_mean_step();       // 2

    // ET = p^2 (3+ET) + 2p(1-p) stayer_mean
    //      + (1-p)^2 (meet_prob*meet_mean + (1-meet_prob)(3+ET))
    Poly p = Poly::x();
    Poly one = Poly::constant(Rational(1));
    Poly both_home = p * p;
    Poly one_tours = rat(2) * (p * (one - p));
    Poly both_tour = (one - p) * (one - p);

    Poly et_coeff = one - both_home - (1 - meet_prob) * both_tour;
    Poly constant = rat(3) * both_home + stayer_mean * one_tours +
                    (meet_prob * meet_mean + (1 - meet_prob) * 3) * both_tour;
    return RationalFunction(constant, et_coeff);
}

namespace {

// Square root of a nonnegative rational that is an exact square; nullopt-like
// behavior via thrown error (callers only pass discriminants they must split).
Rational exact_sqrt(const Rational& q) {
    if (sgn(q) < 0) throw std::domain_error("negative radicand");
    Integer n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        throw std::domain_error("rational is not an exact square");
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return Rational(sn) / Rational(sd);
}

// Roots in Q(sqrt(681)) of a rational quadratic a x^2 + b x + c.
std::pair<Quad, Quad> solve_quadratic(const Rational& a, const Rational& b, const Rational& c) {
    Rational disc = b * b - 4 * a * c;
    if (sgn(disc) < 0) throw std::domain_error("complex roots");
    Quad root_disc;
    if (mpq_class scaled = disc / Quad::kDisc; sgn(disc) != 0) {
        // Try sqrt(disc) = s*sqrt(681) first, else a plain rational sqrt.
        try {
            root_disc = Quad(Rational(0), exact_sqrt(scaled));
        } catch (const std::domain_error&) {
            root_disc = Quad(exact_sqrt(disc));
        }
    }
    Quad two_a(2 * a);
    return {(Quad(-b) + root_disc) / two_a, (Quad(-b) - root_disc) / two_a};
}

}  // namespace

Quad aw_optimal_p() {
    RationalFunction d = aw_expected_time().derivative();
    Poly num = d.num();
    if (num.degree() != 2) throw std::logic_error("unexpected stationarity equation degree");
    auto [r1, r2] = solve_quadratic(num.coeff(2), num.coeff(1), num.coeff(0));
    for (const Quad& r : {r1, r2})
        if (r.sign() > 0 && (Quad(Rational(1)) - r).sign() > 0) return r;
    throw std::logic_error("no stationary point inside (0,1)");
}

std::vector<PlayerPath> enumerate_paths(const PatternDistribution& dist) {
    if (dist.length != 4) throw std::invalid_argument("paths are defined for 4-block cycles");
    dist.validate();

    std::vector<PlayerPath> paths;
    for (int t = 0; t <= 4; ++t) {
        PatternDistribution marg;
        if (t > 0) marg = prefix_marginal(dist, t);
        for (unsigned placement = 0; placement < 16; ++placement) {
            if (__builtin_popcount(placement) != t) continue;
            // Concrete tour subsequences of length t with positive pattern mass.
            std::vector<int> seq(t, 0);
            auto emit = [&](auto&& self, int depth) -> void {
                if (depth == t) {
                    Rational r(1);
                    if (t > 0) {
                        Pattern w = canonical_pattern(seq);
                        Rational mass = marg.prob(w);
                        if (mass == 0) return;
                        r = mass / realization_count(w);
                    }
                    PlayerPath path{{-1, -1, -1, -1}, t, r};
                    int pos = 0;
                    for (int b = 0; b < 4; ++b)
                        if (placement & (1u << b)) path.actions[b] = seq[pos++];
                    paths.push_back(std::move(path));
                    return;
                }
                for (int tour = 0; tour < 6; ++tour) {
                    seq[depth] = tour;
                    self(self, depth + 1);
                }
            };
            emit(emit, 0);
        }
    }
    return paths;
}

namespace {

Integer int128_to_mpz(unsigned __int128 v) {
    Integer hi(static_cast<unsigned long>(v >> 64));
    Integer lo(static_cast<unsigned long>(v & ~0ULL));
    return (hi << 64) + lo;
}

}  // namespace

GameEvaluation full_game_et(const PatternDistribution& dist) {
    const auto paths = enumerate_paths(dist);
    const int npaths = static_cast<int>(paths.size());

    // Scale all conditional probabilities to 64-bit integers so the hot loop
    // accumulates integers only.
    Integer scale(1);
    for (const auto& path : paths) scale = lcm(scale, path.r.get_den());
    std::vector<std::int64_t> r_scaled(npaths);
    std::vector<std::uint8_t> action(npaths * 4);
    std::vector<std::uint8_t> tour_count(npaths);
    for (int i = 0; i < npaths; ++i) {
        Rational s = paths[i].r * Rational(scale);
        if (s.get_den() != 1 || !s.get_num().fits_slong_p())
            throw std::overflow_error("path probability scale exceeds 64 bits");
        r_scaled[i] = s.get_num().get_si();
        tour_count[i] = static_cast<std::uint8_t>(paths[i].tour_count);
        for (int b = 0; b < 4; ++b)
            action[i * 4 + b] = static_cast<std::uint8_t>(paths[i].actions[b] + 1);  // 0 = Home
    }

    // buckets[h][s]: total scaled weight of ordered path pairs with h = tI+tJ
    // meeting first at global step s (s = 13 means survival).
    unsigned __int128 buckets[9][14] = {};

    const auto labs_I = enumerate_labelings(kHomeI);
    const auto labs_II = enumerate_labelings(kHomeII);
    for (const auto& li : labs_I)
        for (const auto& lj : labs_II) {
            auto table = block_meeting_table(li, lj);
            // outcome[aI][aJ], action 0 = Home: first meeting step within one block
            std::uint8_t outcome[7][7];
            for (int ai = 0; ai < 7; ++ai)
                for (int aj = 0; aj < 7; ++aj) {
                    BlockAction bi = ai ? BlockAction::tour(ai - 1) : BlockAction::home();
                    BlockAction bj = aj ? BlockAction::tour(aj - 1) : BlockAction::home();
                    outcome[ai][aj] = static_cast<std::uint8_t>(meeting_outcome(bi, bj, li, lj));
                }

            for (int i = 0; i < npaths; ++i) {
                const std::uint8_t* ai = &action[i * 4];
                for (int j = 0; j < npaths; ++j) {
                    const std::uint8_t* aj = &action[j * 4];
                    int step = 13;
                    for (int b = 0; b < 4; ++b) {
                        std::uint8_t o = outcome[ai[b]][aj[b]];
                        if (o) {
                            step = 3 * b + o;
                            break;
                        }
                    }
                    buckets[tour_count[i] + tour_count[j]][step] +=
                        static_cast<unsigned __int128>(r_scaled[i]) * r_scaled[j];
                }
            }
        }

    // p^(8-h) (1-p)^h, the home/tour weight shared by every pair with h tours.
    Poly p = Poly::x();
    Poly q = Poly::constant(Rational(1)) - p;
    std::array<Poly, 9> weight;
    for (int h = 0; h <= 8; ++h) weight[h] = p.pow(8 - h) * q.pow(h);

    Rational denom = Rational(36) * Rational(scale) * Rational(scale);
    GameEvaluation eval;
    Poly survival_poly;
    for (int s = 1; s <= 13; ++s) {
        Poly mass;
        for (int h = 0; h <= 8; ++h) {
            if (buckets[h][s] == 0) continue;
            mass = mass + (Rational(int128_to_mpz(buckets[h][s])) / denom) * weight[h];
        }
        if (s <= 12)
            eval.meet_mass[s - 1] = mass;
        else
            survival_poly = mass;
    }

    Poly num;
    for (int s = 1; s <= 12; ++s) num = num + rat(s) * eval.meet_mass[s - 1];
    num = num + rat(12) * survival_poly;
    eval.survival = RationalFunction(survival_poly, Poly::constant(Rational(1)));
    eval.et = RationalFunction(num, Poly::constant(Rational(1)) - survival_poly);
    if (!eval.masses_complete())
        throw std::logic_error("step masses and survival do not sum to 1");
    return eval;
}

bool GameEvaluation::masses_complete() const {
    RationalFunction total = survival;
    Poly one = Poly::constant(Rational(1));
    for (const auto& m : meet_mass) total = total + RationalFunction(m, one);
    return total == RationalFunction(one, one);
}

const GameEvaluation& full_game_paper_y() {
    static const GameEvaluation eval = full_game_et(paper_y_distribution());
    return eval;
}

Quad improvement_at(const Quad& p) {
    if (p.sign() <= 0 || (Quad(Rational(1)) - p).sign() <= 0)
        throw std::domain_error("p must lie in (0,1)");
    return aw_expected_time().eval(p) - full_game_paper_y().et.eval(p);
}

}  // namespace rv
