#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rv/patterns.hpp"

using namespace rv;

TEST_CASE("pattern validity and enumeration") {
    CHECK(is_valid_pattern("AAAA"));
    CHECK(is_valid_pattern("ABCD"));
    CHECK(!is_valid_pattern("ABCE"));  // skips D
    CHECK(!is_valid_pattern("BAAA"));  // must start with A
    CHECK(!is_valid_pattern(""));

    // Bell numbers 1, 2, 5, 15.
    CHECK(enumerate_patterns(1).size() == 1);
    CHECK(enumerate_patterns(2).size() == 2);
    CHECK(enumerate_patterns(3).size() == 5);
    auto p4 = enumerate_patterns(4);
    REQUIRE(p4.size() == 15);
    CHECK(p4 == std::vector<Pattern>{"AAAA", "AAAB", "AABA", "AABB", "AABC", "ABAA", "ABAB",
                                     "ABAC", "ABBA", "ABBB", "ABBC", "ABCA", "ABCB", "ABCC",
                                     "ABCD"});
    for (const auto& w : p4) CHECK(is_valid_pattern(w));
}

TEST_CASE("canonical pattern of concrete sequences") {
    CHECK(canonical_pattern({5, 5, 5, 5}) == "AAAA");
    CHECK(canonical_pattern({3, 1, 3, 1}) == "ABAB");
    CHECK(canonical_pattern({0, 1, 2, 3}) == "ABCD");
    CHECK(canonical_pattern({7, 2, 2, 7}) == "ABBA");
    CHECK(distinct_letters("ABBC") == 3);
}

TEST_CASE("realization counts are falling factorials") {
    CHECK(realization_count("AAAA") == 6);
    CHECK(realization_count("AABB") == 30);
    CHECK(realization_count("ABBC") == 120);
    CHECK(realization_count("ABCD") == 360);
    // Every concrete 4-tuple of tours realizes exactly one pattern.
    long total = 0;
    for (const auto& w : enumerate_patterns(4)) total += realization_count(w);
    CHECK(total == 6 * 6 * 6 * 6);
}

TEST_CASE("uniform pattern distribution is the law of iid uniform tours") {
    for (int k = 1; k <= 4; ++k) {
        auto u = uniform_pattern_distribution(k);
        CHECK_NOTHROW(u.validate());
        long denom = 1;
        for (int i = 0; i < k; ++i) denom *= 6;
        for (const auto& w : enumerate_patterns(k))
            CHECK(u.prob(w) == rat(realization_count(w), denom));
    }
}

TEST_CASE("the improving distribution") {
    auto y = paper_y_distribution();
    CHECK_NOTHROW(y.validate());
    CHECK(y.prob("AAAB") == rat(1, 12));
    CHECK(y.prob("AABA") == rat(1, 12));
    CHECK(y.prob("ABAA") == rat(1, 12));
    CHECK(y.prob("ABBB") == rat(1, 12));
    CHECK(y.prob("ABCD") == rat(2, 3));
    CHECK(y.prob("AAAA") == 0);
    CHECK(y.as_vector().size() == 15);
}

TEST_CASE("distribution validation rejects bad inputs") {
    PatternDistribution d;
    d.length = 2;
    d.probs["AA"] = rat(1, 2);
    CHECK_THROWS(d.validate());  // total 1/2
    d.probs["AB"] = rat(1, 2);
    CHECK_NOTHROW(d.validate());
    d.probs["AB"] = rat(3, 2);
    d.probs["AA"] = rat(-1, 2);
    CHECK_THROWS(d.validate());  // negative mass
    PatternDistribution bad;
    bad.length = 2;
    bad.probs["ABC"] = rat(1);
    CHECK_THROWS(bad.validate());  // wrong length
}

TEST_CASE("prefix marginals are consistent") {
    // Truncating iid uniform tours gives iid uniform tours.
    for (int t = 1; t <= 4; ++t) {
        auto m = prefix_marginal(uniform_pattern_distribution(4), t);
        for (const auto& w : enumerate_patterns(t))
            CHECK(m.prob(w) == uniform_pattern_distribution(t).prob(w));
    }
    // Marginals of the improving distribution.
    auto y = paper_y_distribution();
    auto m1 = prefix_marginal(y, 1);
    CHECK(m1.prob("A") == 1);
    auto m2 = prefix_marginal(y, 2);
    CHECK(m2.prob("AA") == rat(1, 6));  // AAAB + AABA
    CHECK(m2.prob("AB") == rat(5, 6));
    auto m3 = prefix_marginal(y, 3);
    CHECK(m3.prob("AAA") == rat(1, 12));
    CHECK(m3.prob("AAB") == rat(1, 12));
    CHECK(m3.prob("ABA") == rat(1, 12));
    CHECK(m3.prob("ABB") == rat(1, 12));
    CHECK(m3.prob("ABC") == rat(2, 3));
    // Marginalizing twice equals marginalizing once.
    auto m2_via_3 = prefix_marginal(m3, 2);
    for (const auto& w : enumerate_patterns(2)) CHECK(m2_via_3.prob(w) == m2.prob(w));
    // Marginals always remain distributions.
    for (int t = 1; t <= 4; ++t) CHECK_NOTHROW(prefix_marginal(y, t).validate());
}

TEST_CASE("json round trip") {
    auto y = paper_y_distribution();
    auto back = pattern_distribution_from_json(pattern_distribution_to_json(y));
    CHECK(back.length == 4);
    for (const auto& w : enumerate_patterns(4)) CHECK(back.prob(w) == y.prob(w));
    CHECK_THROWS(pattern_distribution_from_json("{"));
    CHECK_THROWS(pattern_distribution_from_json(R"({"length":2,"probs":{"AA":"1/3"}})"));
}
