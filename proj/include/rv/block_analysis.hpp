#pragma once

#include <string>
#include <vector>

#include "rv/patterns.hpp"
#include "rv/rational.hpp"

namespace rv {

// Symmetric matrix of survival probabilities, indexed by enumerate_patterns(k):
// entry (u,v) is the probability that two players whose tour sequences follow
// patterns u and v never meet during the k touring blocks.
struct NotMeetMatrix {
    int k = 0;
    std::vector<Pattern> patterns;
    std::vector<std::vector<Rational>> entries;

    int size() const { return static_cast<int>(patterns.size()); }
    const Rational& at(const Pattern& u, const Pattern& v) const;
};

// Exhaustive exact computation over concrete tour assignments and all 36
// labeling pairs; k in 1..4.
NotMeetMatrix not_meet_matrix(int k);

// q_t = m_t' P_t m_t for t = 1..k, with m_t the prefix marginal of dist.
std::vector<Rational> survival_sequence(const PatternDistribution& dist);
// Same against caller-supplied matrices; pmats[t-1] must be the k=t matrix.
std::vector<Rational> survival_sequence(const PatternDistribution& dist,
                                        const std::vector<NotMeetMatrix>& pmats);

Rational tail_et_from_survival(const std::vector<Rational>& q);
Rational renewal_et_from_survival(const std::vector<Rational>& q);

// Expected t-steps when uniform independent tours continue after the k
// patterned ones: 1 + q_1 + ... + q_{k-1} + 2 q_k.
Rational tstep_et_tail(const PatternDistribution& dist);

// Expected t-steps when the whole patterned block restarts after k failures:
// (1 + q_1 + ... + q_{k-1}) / (1 - q_k).
Rational tstep_et_renewal(const PatternDistribution& dist);

// Coefficients of det(lambda*I - M), ascending degree, computed exactly
// (Faddeev-LeVerrier).
std::vector<Rational> characteristic_polynomial(const std::vector<std::vector<Rational>>& m);

enum class Definiteness { PositiveDefinite, PositiveSemidefinite, Indefinite };

struct DefinitenessReport {
    Definiteness classification;
    // For Indefinite: exact rational witness with witness' M witness < 0.
    std::vector<Rational> witness;
    Rational witness_value;
};

std::string to_string(Definiteness d);

// Exact sign classification of a symmetric rational matrix via its
// characteristic polynomial. Indefinite reports carry a verified witness.
DefinitenessReport definiteness(const std::vector<std::vector<Rational>>& m);
DefinitenessReport definiteness(const NotMeetMatrix& m);

// Numeric eigenvector for the most negative eigenvalue, with coordinates
// grouped when equal within tol. Returns index classes in order of first
// appearance. Throws if no negative eigenvalue.
std::vector<std::vector<int>> negative_eigvec_structure(
    const std::vector<std::vector<Rational>>& m, double tol = 1e-9);
std::vector<std::vector<int>> negative_eigvec_structure(const NotMeetMatrix& m,
                                                        double tol = 1e-9);

}  // namespace rv
