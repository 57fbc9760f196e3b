#include "rv/tours.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rv {

void Labeling::validate(int n) const {
    if (home < 1 || home > n) throw std::invalid_argument("home location out of range");
    if (static_cast<int>(letter_to_location.size()) != n - 1)
        throw std::invalid_argument("labeling must cover exactly n-1 locations");
    std::vector<bool> seen(n + 1, false);
    for (int loc : letter_to_location) {
        if (loc < 1 || loc > n) throw std::invalid_argument("labeling location out of range");
        if (loc == home) throw std::invalid_argument("labeling must exclude the player's home");
        if (seen[loc]) throw std::invalid_argument("labeling repeats a location");
        seen[loc] = true;
    }
}

std::vector<Tour> enumerate_tours(int n) {
    if (n != 3 && n != 4) throw std::invalid_argument("only K3 and K4 are supported");
    std::vector<int> letters(n - 1);
    std::iota(letters.begin(), letters.end(), 0);
    std::vector<Tour> tours;
    do {
        tours.push_back(Tour{letters});
    } while (std::next_permutation(letters.begin(), letters.end()));
    return tours;
}

std::vector<Labeling> enumerate_labelings(int home, int n) {
    std::vector<int> locs;
    for (int v = 1; v <= n; ++v)
        if (v != home) locs.push_back(v);
    std::vector<Labeling> out;
    do {
        Labeling lab{home, locs};
        lab.validate(n);
        out.push_back(std::move(lab));
    } while (std::next_permutation(locs.begin(), locs.end()));
    return out;
}

MeetingOutcome meeting_outcome(const BlockAction& act_I, const BlockAction& act_II,
                               const Labeling& lab_I, const Labeling& lab_II, int n) {
    lab_I.validate(n);
    lab_II.validate(n);
    const auto tours = enumerate_tours(n);
    if (!act_I.is_home() && act_I.tour_index >= static_cast<int>(tours.size()))
        throw std::invalid_argument("tour index out of range");
    if (!act_II.is_home() && act_II.tour_index >= static_cast<int>(tours.size()))
        throw std::invalid_argument("tour index out of range");
    for (int step = 1; step <= n - 1; ++step) {
        int pos_I = act_I.is_home() ? lab_I.home
                                    : lab_I.location_of(tours[act_I.tour_index].letters[step - 1]);
        int pos_II = act_II.is_home() ? lab_II.home
                                      : lab_II.location_of(tours[act_II.tour_index].letters[step - 1]);
        if (pos_I == pos_II) return step;
    }
    return kNoMeet;
}

BlockMeetingTable block_meeting_table(const Labeling& lab_I, const Labeling& lab_II) {
    BlockMeetingTable table{lab_I, lab_II, {}};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            table.entries[i][j] =
                meeting_outcome(BlockAction::tour(i), BlockAction::tour(j), lab_I, lab_II);
    return table;
}

int BlockMeetingTable::no_meet_count_in_row(int row) const {
    int c = 0;
    for (int j = 0; j < 6; ++j)
        if (entries[row][j] == kNoMeet) ++c;
    return c;
}

int BlockMeetingTable::no_meet_count_in_col(int col) const {
    int c = 0;
    for (int i = 0; i < 6; ++i)
        if (entries[i][col] == kNoMeet) ++c;
    return c;
}

std::pair<Rational, Rational> average_meeting_stats() {
    const auto labs_I = enumerate_labelings(kHomeI);
    const auto labs_II = enumerate_labelings(kHomeII);
    long meets = 0;
    long step_sum = 0;
    long total = 0;
    for (const auto& li : labs_I)
        for (const auto& lj : labs_II) {
            auto table = block_meeting_table(li, lj);
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j) {
                    ++total;
                    if (table.entries[i][j] != kNoMeet) {
                        ++meets;
                        step_sum += table.entries[i][j];
                    }
                }
        }
    return {rat(meets, total), rat(step_sum, meets)};
}

Rational stayer_tourer_mean_step() {
    const auto labs_I = enumerate_labelings(kHomeI);
    const auto labs_II = enumerate_labelings(kHomeII);
    long step_sum = 0, count = 0;
    for (const auto& li : labs_I)
        for (const auto& lj : labs_II)
            for (int j = 0; j < 6; ++j) {
                MeetingOutcome m =
                    meeting_outcome(BlockAction::home(), BlockAction::tour(j), li, lj);
                if (m == kNoMeet)
                    throw std::logic_error("a tourer always visits the stayer's home");
                step_sum += m;
                ++count;
            }
    return rat(step_sum, count);
}

}  // namespace rv
