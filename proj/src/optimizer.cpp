#include "rv/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace rv {

AwOptimum minimize_aw() {
    RationalFunction et = aw_expected_time();
    Quad p = aw_optimal_p();
    return AwOptimum{p, et.eval(p), et.derivative().eval(p)};
}

POptimum minimize_rational_function_p(const RationalFunction& objective, const Rational& tol) {
    if (sgn(tol) <= 0) throw std::invalid_argument("tolerance must be positive");
    const Poly dnum = objective.derivative().num();

    // Sign scan of the exact derivative numerator over a grid in (0,1).
    const int grid = 128;
    std::vector<std::pair<Rational, Rational>> brackets;  // sign change - -> +
    int prev_sign = 0;
    Rational prev_x;
    std::vector<Rational> exact_roots;
    for (int i = 1; i < grid; ++i) {
        Rational x = rat(i, grid);
        int s = sgn(dnum.eval(x));
        if (s == 0) exact_roots.push_back(x);
        if (prev_sign < 0 && s > 0) brackets.emplace_back(prev_x, x);
        if (s != 0) {
            prev_sign = s;
            prev_x = x;
        }
    }

    POptimum best;
    bool have = false;
    auto consider = [&](const Rational& lo, const Rational& hi) {
        Rational mid = (lo + hi) / 2;
        Rational v = objective.eval(mid);
        if (!have || v < best.value) {
            best = POptimum{lo, hi, mid, v};
            have = true;
        }
    };
    for (const auto& x : exact_roots) consider(x, x);
    for (auto [lo, hi] : brackets) {
        while (hi - lo > tol) {
            Rational mid = (lo + hi) / 2;
            int s = sgn(dnum.eval(mid));
            if (s == 0) {
                lo = hi = mid;
                break;
            }
            (s < 0 ? lo : hi) = mid;
        }
        consider(lo, hi);
    }
    if (!have) {
        // No interior stationary point detected: dense scan fallback.
        for (int i = 1; i < 4 * grid; ++i) consider(rat(i, 4 * grid), rat(i, 4 * grid));
    }
    return best;
}

POptimum minimize_full_game_p(const PatternDistribution& dist, const Rational& tol) {
    return minimize_rational_function_p(full_game_et(dist).et, tol);
}

TstepMode tstep_mode_from_string(const std::string& s) {
    if (s == "tail") return TstepMode::Tail;
    if (s == "renewal") return TstepMode::Renewal;
    throw std::invalid_argument("mode must be tail or renewal");
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix lifted_prefix_matrix(const NotMeetMatrix& pt, const std::vector<Pattern>& pats, int t) {
    const int n = static_cast<int>(pats.size());
    Matrix q(n, std::vector<Rational>(n));
    std::vector<int> pre(n);
    for (int i = 0; i < n; ++i) {
        auto it = std::find(pt.patterns.begin(), pt.patterns.end(), pats[i].substr(0, t));
        pre[i] = static_cast<int>(it - pt.patterns.begin());
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q[i][j] = pt.entries[pre[i]][pre[j]];
    return q;
}

// Candidate step sizes are snapped to a fixed dyadic grid so coordinate
// denominators stay bounded over thousands of moves; moves are still only
// applied when they improve the exact objective.
Rational snap_unit(double x) {
    constexpr long long kScale = 1LL << 48;
    if (!std::isfinite(x) || std::abs(x) > 2.0) return Rational(0);
    return rat(std::llround(x * static_cast<double>(kScale)), kScale);
}

Rational form(const Matrix& m, const std::vector<Rational>& d) {
    Rational acc(0);
    const int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i) {
        if (d[i] == 0) continue;
        for (int j = 0; j < n; ++j)
            if (d[j] != 0) acc += d[i] * d[j] * m[i][j];
    }
    return acc;
}

// Search state: point d with cached quadratic-form values, so each pairwise
// move costs O(n) exact operations.
struct SearchState {
    TstepMode mode;
    const Matrix* head;  // sum of lifted P_t, t < k, plus 2 P_k in tail mode
    const Matrix* last;  // lifted P_k (renewal mode)
    std::vector<Rational> d;
    Rational head_form;
    Rational last_form;

    void reset(std::vector<Rational> point) {
        d = std::move(point);
        head_form = form(*head, d);
        last_form = (mode == TstepMode::Renewal) ? form(*last, d) : Rational(0);
    }

    Rational value() const { return value_at(head_form, last_form); }

    Rational value_at(const Rational& hf, const Rational& lf) const {
        if (mode == TstepMode::Tail) return 1 + hf;
        if (lf >= 1) throw std::domain_error("degenerate point: certain survival");
        return (1 + hf) / (1 - lf);
    }

    // u = e_i - e_j; (u'Md, u'Mu) for symmetric M.
    std::pair<Rational, Rational> move_coeffs(const Matrix& m, int i, int j) const {
        Rational md(0);
        const int n = static_cast<int>(m.size());
        for (int l = 0; l < n; ++l)
            if (d[l] != 0) md += (m[i][l] - m[j][l]) * d[l];
        return {md, m[i][i] - 2 * m[i][j] + m[j][j]};
    }

    // Best exact step for d + delta*(e_i - e_j), delta in [-d_i, d_j].
    // Returns true and applies the move if it strictly improves.
    bool try_move(int i, int j, Rational* achieved) {
        const Rational lo = -d[i], hi = d[j];
        auto [hb, hc] = move_coeffs(*head, i, j);
        Rational lb(0), lc(0);
        if (mode == TstepMode::Renewal) std::tie(lb, lc) = move_coeffs(*last, i, j);

        std::vector<Rational> candidates{lo, hi};
        if (mode == TstepMode::Tail) {
            if (sgn(hc) > 0) candidates.push_back(snap_unit(Rational(-hb / hc).get_d()));
        } else {
            // Stationary deltas of (N0+2hb d+hc d^2)/(D0-2lb d-lc d^2):
            // (hb lc - hc lb) d^2 + (hc D0 + lc N0) d + (hb D0 + lb N0) = 0.
            Rational n0 = 1 + head_form, d0 = 1 - last_form;
            double a = Rational(hb * lc - hc * lb).get_d();
            double b = Rational(hc * d0 + lc * n0).get_d();
            double c = Rational(hb * d0 + lb * n0).get_d();
            double disc = b * b - 4 * a * c;
            if (std::abs(a) > 1e-300 && disc >= 0) {
                candidates.push_back(snap_unit((-b + std::sqrt(disc)) / (2 * a)));
                candidates.push_back(snap_unit((-b - std::sqrt(disc)) / (2 * a)));
            } else if (std::abs(a) <= 1e-300 && std::abs(b) > 1e-300) {
                candidates.push_back(snap_unit(-c / b));
            }
        }

        Rational current = value();
        Rational best_value = current, best_delta(0);
        Rational best_hf = head_form, best_lf = last_form;
        for (auto delta : candidates) {
            if (delta < lo) delta = lo;
            if (delta > hi) delta = hi;
            Rational hf = head_form + 2 * hb * delta + hc * delta * delta;
            Rational lf = last_form;
            if (mode == TstepMode::Renewal) lf += 2 * lb * delta + lc * delta * delta;
            if (mode == TstepMode::Renewal && lf >= 1) continue;
            Rational v = value_at(hf, lf);
            if (v < best_value) {
                best_value = v;
                best_delta = delta;
                best_hf = hf;
                best_lf = lf;
            }
        }
        *achieved = best_value;
        if (best_value < current) {
            d[i] += best_delta;
            d[j] -= best_delta;
            head_form = best_hf;
            last_form = best_lf;
            return true;
        }
        return false;
    }
};

}  // namespace

DistOptimum minimize_pattern_distribution(int k, TstepMode mode, int starts, std::uint64_t seed) {
    if (k < 2 || k > 4) throw std::invalid_argument("pattern length must be 2..4");
    const auto pats = enumerate_patterns(k);
    const int n = static_cast<int>(pats.size());

    Matrix head(n, std::vector<Rational>(n, Rational(0)));
    Matrix last(n, std::vector<Rational>(n, Rational(0)));
    for (int t = 1; t <= k; ++t) {
        auto lifted = lifted_prefix_matrix(not_meet_matrix(t), pats, t);
        Rational w = (t < k) ? Rational(1) : (mode == TstepMode::Tail ? Rational(2) : Rational(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                head[i][j] += w * lifted[i][j];
                if (t == k) last[i][j] = lifted[i][j];
            }
    }

    // Start points: uniform, the published y (k=4), every vertex, random draws.
    std::vector<std::vector<Rational>> start_points;
    start_points.push_back(uniform_pattern_distribution(k).as_vector());
    if (k == 4) start_points.push_back(paper_y_distribution().as_vector());
    for (int v = 0; v < n; ++v) {
        std::vector<Rational> d(n, Rational(0));
        d[v] = 1;
        start_points.push_back(std::move(d));
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> cell(0, 720);
    for (int s = 0; s < starts; ++s) {
        std::vector<Rational> d(n);
        Rational total(0);
        for (int i = 0; i < n; ++i) {
            d[i] = rat(cell(rng), 720);
            total += d[i];
        }
        if (total == 0) continue;
        for (auto& x : d) x /= total;
        start_points.push_back(std::move(d));
    }

    SearchState state{mode, &head, &last, {}, Rational(0), Rational(0)};
    std::vector<Rational> best_d;
    Rational best_v;
    bool have = false;
    for (const auto& start : start_points) {
        state.reset(start);
        for (int pass = 0; pass < 60; ++pass) {
            bool improved = false;
            Rational achieved;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (i != j && state.try_move(i, j, &achieved)) improved = true;
            if (!improved) break;
        }
        Rational v = state.value();
        if (!have || v < best_v) {
            best_v = v;
            best_d = state.d;
            have = true;
        }
    }

    // Largest one-move improvement still available at the reported point.
    Rational residual(0);
    state.reset(best_d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            SearchState probe = state;
            Rational achieved;
            probe.try_move(i, j, &achieved);
            if (best_v - achieved > residual) residual = best_v - achieved;
        }

    DistOptimum out;
    out.dist.length = k;
    for (int i = 0; i < n; ++i)
        if (best_d[i] != 0) out.dist.probs[pats[i]] = best_d[i];
    out.dist.validate();
    out.value = best_v;
    out.stationarity_residual = residual;
    return out;
}

}  // namespace rv
