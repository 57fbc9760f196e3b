#pragma once

// Published reference values for the K4 rendezvous analysis. Everything here
// is an expected answer that the workbench recomputes from first principles;
// nothing in src/ reads these.

#include <array>
#include <string>
#include <vector>

#include "rv/polynomial.hpp"
#include "rv/quadratic.hpp"
#include "rv/rational.hpp"

namespace rv::reference {

// 6x6 tour-vs-tour meeting table for lab_I=(2,3,4), lab_II=(1,3,4); 0 = X.
inline constexpr std::array<std::array<int, 6>, 6> kBMatrix{{
    {2, 0, 3, 0, 0, 2},
    {0, 2, 0, 2, 3, 0},
    {3, 0, 1, 1, 0, 0},
    {0, 2, 1, 1, 0, 0},
    {0, 3, 0, 0, 1, 1},
    {2, 0, 0, 0, 1, 1},
}};

// Not-meet matrices over patterns, row-major "num/den" entries.
inline const std::vector<std::vector<std::string>> kP2{
    {"1/2", "1/5"},
    {"1/5", "13/50"},
};

inline const std::vector<std::vector<std::string>> kP3{
    {"1/2", "1/5", "1/5", "1/5", "1/20"},
    {"1/5", "13/50", "2/25", "2/25", "11/100"},
    {"1/5", "2/25", "13/50", "2/25", "11/100"},
    {"1/5", "2/25", "2/25", "13/50", "11/100"},
    {"1/20", "11/100", "11/100", "11/100", "7/50"},
};

inline const std::vector<std::vector<std::string>> kP4{
    {"1/2", "1/5", "1/5", "1/5", "1/20", "1/5", "1/5", "1/20", "1/5", "1/5", "1/20", "1/20",
     "1/20", "1/20", "0"},
    {"1/5", "13/50", "2/25", "2/25", "11/100", "2/25", "2/25", "11/100", "2/25", "2/25",
     "11/100", "1/50", "1/50", "1/50", "3/100"},
    {"1/5", "2/25", "13/50", "2/25", "11/100", "2/25", "2/25", "1/50", "2/25", "2/25", "1/50",
     "11/100", "11/100", "1/50", "3/100"},
    {"1/5", "2/25", "2/25", "13/50", "11/100", "2/25", "2/75", "1/30", "2/75", "2/25", "1/30",
     "1/30", "1/30", "11/100", "23/450"},
    {"1/20", "11/100", "11/100", "11/100", "7/50", "1/50", "1/30", "7/150", "1/30", "1/50",
     "7/150", "7/150", "7/150", "1/20", "14/225"},
    {"1/5", "2/25", "2/25", "2/25", "1/50", "13/50", "2/25", "11/100", "2/25", "2/25", "1/50",
     "11/100", "1/50", "11/100", "3/100"},
    {"1/5", "2/25", "2/25", "2/75", "1/30", "2/25", "13/50", "11/100", "2/75", "2/25", "1/30",
     "1/30", "11/100", "1/30", "23/450"},
    {"1/20", "11/100", "1/50", "1/30", "7/150", "11/100", "11/100", "7/50", "1/30", "1/50",
     "7/150", "7/150", "1/20", "7/150", "14/225"},
    {"1/5", "2/25", "2/25", "2/75", "1/30", "2/25", "2/75", "1/30", "13/50", "2/25", "11/100",
     "11/100", "1/30", "1/30", "23/450"},
    {"1/5", "2/25", "2/25", "2/25", "1/50", "2/25", "2/25", "1/50", "2/25", "13/50", "11/100",
     "1/50", "11/100", "11/100", "3/100"},
    {"1/20", "11/100", "1/50", "1/30", "7/150", "1/50", "1/30", "7/150", "11/100", "11/100",
     "7/50", "1/20", "7/150", "7/150", "14/225"},
    {"1/20", "1/50", "11/100", "1/30", "7/150", "11/100", "1/30", "7/150", "11/100", "1/50",
     "1/20", "7/50", "7/150", "7/150", "14/225"},
    {"1/20", "1/50", "11/100", "1/30", "7/150", "1/50", "11/100", "1/20", "1/30", "11/100",
     "7/150", "7/150", "7/50", "7/150", "14/225"},
    {"1/20", "1/50", "1/50", "11/100", "1/20", "11/100", "1/30", "7/150", "1/30", "11/100",
     "7/150", "7/150", "7/150", "7/50", "14/225"},
    {"0", "3/100", "3/100", "23/450", "14/225", "3/100", "23/450", "14/225", "23/450", "3/100",
     "14/225", "14/225", "14/225", "14/225", "7/90"},
};

inline std::vector<std::vector<Rational>> parse_matrix(
    const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Rational>> m;
    for (const auto& row : rows) {
        std::vector<Rational> r;
        for (const auto& e : row) r.push_back(rat_from_string(e));
        m.push_back(std::move(r));
    }
    return m;
}

// AW expected time (43 - 14p + 25p^2) / (9 (1 + 2p - 3p^2)).
inline RationalFunction aw_et_ratio() {
    return RationalFunction(Poly::from_ints({43, -14, 25}),
                            rat(9) * Poly::from_ints({1, 2, -3}));
}

// AW optimum: p* = (3 sqrt(681) - 77)/4, ET* = (15 + sqrt(681))/12.
inline Quad aw_p_star() { return Quad(rat(-77, 4), rat(3, 4)); }
inline Quad aw_et_star() { return Quad(rat(15, 12), rat(1, 12)); }

// The 12-step strategy's expected meeting time for the y distribution.
inline RationalFunction twelve_step_et_ratio() {
    Poly num = Poly::from_ints(
        {-217648, 389834, -998569, 1420688, -1941235, 1737938, -1329319, 582884, -227773});
    Poly den = rat(3) * Poly::from_ints(
        {-15199, -8008, 36128, -104656, 215870, -315256, 327728, -218608, 82001});
    return RationalFunction(num, den);
}

// Exact improvement over AW at p*: 243(75041961207 + 4700853101 sqrt(681))
// / 327540887401488016.
inline Quad improvement_at_p_star() {
    Rational scale = rat(243) / rat_from_string("327540887401488016");
    return Quad(scale * rat_from_string("75041961207"), scale * rat_from_string("4700853101"));
}

// t-step expected-time targets for the y distribution.
inline Rational y_tail_et() { return rat(2) - rat(23, 16200); }
inline Rational y_renewal_et() { return rat(30375, 15199); }

}  // namespace rv::reference
