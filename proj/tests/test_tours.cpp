#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rv/reference_values.hpp"
#include "rv/tours.hpp"

using namespace rv;

TEST_CASE("tour enumeration is lexicographic") {
    auto tours = enumerate_tours(4);
    REQUIRE(tours.size() == 6);
    std::vector<std::string> names;
    for (const auto& t : tours) names.push_back(t.name());
    CHECK(names == std::vector<std::string>{"abc", "acb", "bac", "bca", "cab", "cba"});
    CHECK(enumerate_tours(3).size() == 2);
    CHECK_THROWS(enumerate_tours(5));
}

TEST_CASE("labeling enumeration") {
    auto labs = enumerate_labelings(kHomeI);
    REQUIRE(labs.size() == 6);
    CHECK(labs.front().name() == "2,3,4");
    CHECK(labs.back().name() == "4,3,2");
    for (const auto& l : labs) CHECK_NOTHROW(l.validate(4));
    Labeling bad{kHomeI, {1, 3, 4}};  // contains its own home
    CHECK_THROWS(bad.validate(4));
    Labeling dup{kHomeI, {2, 2, 4}};
    CHECK_THROWS(dup.validate(4));
}

TEST_CASE("meeting outcomes for home actions") {
    Labeling li{kHomeI, {2, 3, 4}};
    Labeling lj{kHomeII, {1, 3, 4}};
    // Both home: distinct homes, never meet.
    CHECK(meeting_outcome(BlockAction::home(), BlockAction::home(), li, lj) == kNoMeet);
    // One home: the tourer passes through the stayer's home exactly once.
    auto tours = enumerate_tours(4);
    for (int t = 0; t < 6; ++t) {
        MeetingOutcome m = meeting_outcome(BlockAction::home(), BlockAction::tour(t), li, lj);
        CHECK(m >= 1);
        CHECK(m <= 3);
    }
}

TEST_CASE("block meeting table matches the published table") {
    Labeling li{kHomeI, {2, 3, 4}};
    Labeling lj{kHomeII, {1, 3, 4}};
    auto table = block_meeting_table(li, lj);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            CHECK(table.entries[i][j] == reference::kBMatrix[i][j]);
}

TEST_CASE("every labeling pair has 18 non-meeting tour pairs") {
    for (const auto& li : enumerate_labelings(kHomeI))
        for (const auto& lj : enumerate_labelings(kHomeII)) {
            auto table = block_meeting_table(li, lj);
            int no_meet = 0;
            for (int i = 0; i < 6; ++i) {
                no_meet += table.no_meet_count_in_row(i);
                // Each tour avoids exactly half of the opponent's tours.
                CHECK(table.no_meet_count_in_row(i) == 3);
                CHECK(table.no_meet_count_in_col(i) == 3);
            }
            CHECK(no_meet == 18);
        }
}

TEST_CASE("meeting is symmetric under swapping the players") {
    auto tours = enumerate_tours(4);
    for (const auto& li : enumerate_labelings(kHomeI))
        for (const auto& lj : enumerate_labelings(kHomeII))
            for (int a = 0; a < 6; ++a)
                for (int b = 0; b < 6; ++b)
                    CHECK(meeting_outcome(BlockAction::tour(a), BlockAction::tour(b), li, lj) ==
                          meeting_outcome(BlockAction::tour(b), BlockAction::tour(a), lj, li));
}

TEST_CASE("averaged meeting statistics") {
    auto [prob, mean] = average_meeting_stats();
    CHECK(prob == rat(1, 2));
    CHECK(mean == rat(16, 9));
    CHECK(stayer_tourer_mean_step() == rat(2));
}
