#include "rv/block_analysis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rv/tours.hpp"

namespace rv {

namespace {

// All injective maps {0..m-1} -> {0..5} as flat arrays.
std::vector<std::array<int, 4>> injections(int m) {
    std::vector<std::array<int, 4>> out;
    std::array<int, 4> f{};
    auto rec = [&](auto&& self, int depth, unsigned used) -> void {
        if (depth == m) {
            out.push_back(f);
            return;
        }
        for (int t = 0; t < 6; ++t) {
            if (used & (1u << t)) continue;
            f[depth] = t;
            self(self, depth + 1, used | (1u << t));
        }
    };
    rec(rec, 0, 0);
    return out;
}

long falling_factorial_6(int m) {
    long r = 1;
    for (int i = 0; i < m; ++i) r *= 6 - i;
    return r;
}

// Counts injective g with g(j) constrained to allowed[j] (bitmask over tours).
long count_injective(const std::vector<unsigned>& allowed, int depth, unsigned used) {
    if (depth == static_cast<int>(allowed.size())) return 1;
    long total = 0;
    unsigned free_mask = allowed[depth] & ~used;
    while (free_mask) {
        unsigned bit = free_mask & -free_mask;
        free_mask ^= bit;
        total += count_injective(allowed, depth + 1, used | bit);
    }
    return total;
}

}  // namespace

const Rational& NotMeetMatrix::at(const Pattern& u, const Pattern& v) const {
    auto iu = std::find(patterns.begin(), patterns.end(), u);
    auto iv = std::find(patterns.begin(), patterns.end(), v);
    if (iu == patterns.end() || iv == patterns.end())
        throw std::invalid_argument("pattern not indexed by this matrix");
    return entries[iu - patterns.begin()][iv - patterns.begin()];
}

NotMeetMatrix not_meet_matrix(int k) {
    if (k < 1 || k > 4) throw std::invalid_argument("pattern length must be 1..4");

    // Per labeling pair: bitmask row per player-I tour of the player-II tours
    // that do not meet it within one block.
    const auto labs_I = enumerate_labelings(kHomeI);
    const auto labs_II = enumerate_labelings(kHomeII);
    std::vector<std::array<unsigned, 6>> not_meet_rows;
    for (const auto& li : labs_I)
        for (const auto& lj : labs_II) {
            auto table = block_meeting_table(li, lj);
            std::array<unsigned, 6> rows{};
            for (int a = 0; a < 6; ++a)
                for (int b = 0; b < 6; ++b)
                    if (table.entries[a][b] == kNoMeet) rows[a] |= 1u << b;
            not_meet_rows.push_back(rows);
        }

    NotMeetMatrix m;
    m.k = k;
    m.patterns = enumerate_patterns(k);
    const int n = m.size();
    m.entries.assign(n, std::vector<Rational>(n, Rational(0)));

    std::array<std::vector<std::array<int, 4>>, 5> inj;
    for (int d = 1; d <= 4; ++d) inj[d] = injections(d);

    for (int ui = 0; ui < n; ++ui) {
        const Pattern& u = m.patterns[ui];
        int mu = distinct_letters(u);
        for (int vi = ui; vi < n; ++vi) {
            const Pattern& v = m.patterns[vi];
            int mv = distinct_letters(v);
            // neighbors[j] = set of I-letters paired with II-letter j at some step
            std::vector<unsigned> neighbors(mv, 0);
            for (int s = 0; s < k; ++s) neighbors[v[s] - 'A'] |= 1u << (u[s] - 'A');

            long survivors = 0;
            for (const auto& rows : not_meet_rows) {
                for (const auto& f : inj[mu]) {
                    std::vector<unsigned> allowed(mv, 0x3f);
                    for (int j = 0; j < mv; ++j) {
                        unsigned nb = neighbors[j];
                        while (nb) {
                            int i = __builtin_ctz(nb);
                            nb &= nb - 1;
                            allowed[j] &= rows[f[i]];
                        }
                    }
                    survivors += count_injective(allowed, 0, 0);
                }
            }
            Rational entry = rat(survivors) /
                             rat(36 * falling_factorial_6(mu) * falling_factorial_6(mv));
            m.entries[ui][vi] = entry;
            m.entries[vi][ui] = entry;
        }
    }
    return m;
}

static const NotMeetMatrix& cached_not_meet_matrix(int k) {
    static NotMeetMatrix cache[5];
    if (cache[k].k != k) cache[k] = not_meet_matrix(k);
    return cache[k];
}

std::vector<Rational> survival_sequence(const PatternDistribution& dist,
                                        const std::vector<NotMeetMatrix>& pmats) {
    dist.validate();
    if (dist.length > static_cast<int>(pmats.size()))
        throw std::invalid_argument("missing not-meet matrix for requested length");
    std::vector<Rational> q;
    for (int t = 1; t <= dist.length; ++t) {
        const NotMeetMatrix& P = pmats[t - 1];
        if (P.k != t) throw std::invalid_argument("matrix/length mismatch");
        auto mt = prefix_marginal(dist, t).as_vector();
        Rational acc(0);
        for (int i = 0; i < P.size(); ++i) {
            if (mt[i] == 0) continue;
            for (int j = 0; j < P.size(); ++j)
                if (mt[j] != 0) acc += mt[i] * mt[j] * P.entries[i][j];
        }
        q.push_back(acc);
    }
    return q;
}

std::vector<Rational> survival_sequence(const PatternDistribution& dist) {
    if (dist.length > 4) throw std::invalid_argument("distributions longer than 4 unsupported");
    std::vector<NotMeetMatrix> pmats;
    for (int t = 1; t <= dist.length; ++t) pmats.push_back(cached_not_meet_matrix(t));
    return survival_sequence(dist, pmats);
}

Rational tail_et_from_survival(const std::vector<Rational>& q) {
    Rational et(1);
    for (size_t t = 0; t + 1 < q.size(); ++t) et += q[t];
    et += 2 * q.back();
    return et;
}

Rational renewal_et_from_survival(const std::vector<Rational>& q) {
    if (q.back() == 1) throw std::domain_error("degenerate distribution: certain survival");
    Rational cycle(1);
    for (size_t t = 0; t + 1 < q.size(); ++t) cycle += q[t];
    return cycle / (1 - q.back());
}

Rational tstep_et_tail(const PatternDistribution& dist) {
    return tail_et_from_survival(survival_sequence(dist));
}

Rational tstep_et_renewal(const PatternDistribution& dist) {
    return renewal_et_from_survival(survival_sequence(dist));
}

std::vector<Rational> characteristic_polynomial(const std::vector<std::vector<Rational>>& a) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("matrix not square");

    // Faddeev-LeVerrier: M_k = A(M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (int k = 1; k <= n; ++k) {
        if (k > 1)
            for (int i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
        std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n, Rational(0)));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (k == 1) {
                    next[i][l] = a[i][l];
                    continue;
                }
                Rational acc(0);
                for (int j = 0; j < n; ++j)
                    if (a[i][j] != 0 && m[j][l] != 0) acc += a[i][j] * m[j][l];
                next[i][l] = acc;
            }
        m = std::move(next);
        Rational tr(0);
        for (int i = 0; i < n; ++i) tr += m[i][i];
        c[n - k] = -tr / k;
    }
    return c;
}

std::string to_string(Definiteness d) {
    switch (d) {
        case Definiteness::PositiveDefinite: return "PositiveDefinite";
        case Definiteness::PositiveSemidefinite: return "PositiveSemidefinite";
        case Definiteness::Indefinite: return "Indefinite";
    }
    return "?";
}

namespace {

Eigen::MatrixXd to_eigen(const std::vector<std::vector<Rational>>& m) {
    const int n = static_cast<int>(m.size());
    Eigen::MatrixXd out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = m[i][j].get_d();
    return out;
}

Rational quadratic_form(const std::vector<std::vector<Rational>>& m,
                        const std::vector<Rational>& v) {
    Rational acc(0);
    const int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) acc += v[i] * v[j] * m[i][j];
    return acc;
}

// Rational vector near the most negative eigenvector with an exactly negative
// quadratic form.
std::vector<Rational> negative_witness(const std::vector<std::vector<Rational>>& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(m));
    if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    Eigen::VectorXd vec = es.eigenvectors().col(0);  // eigenvalues ascending
    const int n = static_cast<int>(m.size());
    for (long den = 1000; den <= 1000000000L; den *= 1000) {
        std::vector<Rational> v(n);
        for (int i = 0; i < n; ++i) v[i] = rat(std::lround(vec(i) * den), den);
        if (sgn(quadratic_form(m, v)) < 0) return v;
    }
    throw std::runtime_error("failed to round eigenvector to an exact negative witness");
}

}  // namespace

DefinitenessReport definiteness(const std::vector<std::vector<Rational>>& m) {
    const int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (m[i][j] != m[j][i]) throw std::invalid_argument("matrix not symmetric");

    auto c = characteristic_polynomial(m);
    // All eigenvalues are real; they are all positive (resp. nonnegative) iff
    // the signed coefficients (-1)^(n-i) c_i are all positive (resp. >= 0).
    bool all_pos = true, all_nonneg = true;
    for (int i = 0; i < n; ++i) {
        Rational signed_c = ((n - i) % 2 == 0) ? c[i] : -c[i];
        if (sgn(signed_c) <= 0) all_pos = false;
        if (sgn(signed_c) < 0) all_nonneg = false;
    }
    DefinitenessReport report;
    if (all_pos) {
        report.classification = Definiteness::PositiveDefinite;
    } else if (all_nonneg) {
        report.classification = Definiteness::PositiveSemidefinite;
    } else {
        report.classification = Definiteness::Indefinite;
        report.witness = negative_witness(m);
        report.witness_value = quadratic_form(m, report.witness);
    }
    return report;
}

DefinitenessReport definiteness(const NotMeetMatrix& m) { return definiteness(m.entries); }

std::vector<std::vector<int>> negative_eigvec_structure(
    const std::vector<std::vector<Rational>>& m, double tol) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(m));
    if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    if (es.eigenvalues()(0) >= -1e-12)
        throw std::domain_error("matrix has no negative eigenvalue");
    Eigen::VectorXd v = es.eigenvectors().col(0);

    std::vector<std::vector<int>> classes;
    std::vector<double> reps;
    for (int i = 0; i < v.size(); ++i) {
        bool placed = false;
        for (size_t c = 0; c < reps.size(); ++c) {
            if (std::abs(v(i) - reps[c]) <= tol) {
                classes[c].push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) {
            classes.push_back({static_cast<int>(i)});
            reps.push_back(v(i));
        }
    }
    return classes;
}

std::vector<std::vector<int>> negative_eigvec_structure(const NotMeetMatrix& m, double tol) {
    return negative_eigvec_structure(m.entries, tol);
}

}  // namespace rv
