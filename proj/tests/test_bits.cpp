#include <doctest.h>

#include <random>

#include "test_helpers.hpp"
#include "vlrs/bits.hpp"

using namespace vlrs;
using vlrs::testing::bs;

TEST_CASE("is_prefix basics") {
    CHECK(is_prefix(bs("-"), bs("10")));
    CHECK(is_prefix(bs("10"), bs("10")));
    CHECK_FALSE(is_prefix(bs("0"), bs("10")));
    CHECK_FALSE(is_prefix(bs("100"), bs("10")));
}

TEST_CASE("mutual prefixes imply equality") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(0, 8), bit(0, 1);
    for (int k = 0; k < 2000; ++k) {
        BitString u, v;
        for (int i = len(rng); i > 0; --i) u.push_back(bit(rng));
        for (int i = len(rng); i > 0; --i) v.push_back(bit(rng));
        if (is_prefix(u, v) && is_prefix(v, u)) CHECK(u == v);
        if (u == v) CHECK((is_prefix(u, v) && is_prefix(v, u)));
    }
}

TEST_CASE("lex_compare") {
    CHECK(lex_compare(bs("0000"), bs("010")) == Ordering::LT);
    CHECK(lex_compare(bs("011"), bs("101")) == Ordering::LT);
    CHECK(lex_compare(bs("-"), bs("-")) == Ordering::EQ);
    CHECK(lex_compare(bs("0"), bs("01")) == Ordering::LT);  // prefix before extension
    CHECK(lex_compare(bs("11"), bs("10")) == Ordering::GT);
}

TEST_CASE("lex_compare is a total order") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> len(0, 6), bit(0, 1);
    auto random_bits = [&] {
        BitString w;
        for (int i = len(rng); i > 0; --i) w.push_back(bit(rng));
        return w;
    };
    for (int k = 0; k < 1000; ++k) {
        BitString u = random_bits(), v = random_bits(), w = random_bits();
        // antisymmetry
        if (lex_compare(u, v) == Ordering::LT) CHECK(lex_compare(v, u) == Ordering::GT);
        if (lex_compare(u, v) == Ordering::EQ) CHECK(u == v);
        // transitivity
        if (lex_compare(u, v) != Ordering::GT && lex_compare(v, w) != Ordering::GT)
            CHECK(lex_compare(u, w) != Ordering::GT);
    }
}

TEST_CASE("is_prefix_free") {
    CHECK(is_prefix_free(std::vector<BitString>{bs("0"), bs("10"), bs("11")}));
    CHECK_FALSE(is_prefix_free(std::vector<BitString>{bs("0"), bs("01")}));
    CHECK(is_prefix_free(std::vector<BitString>{}));
    CHECK_FALSE(is_prefix_free(std::vector<BitString>{bs("01"), bs("01")}));  // duplicate
}

TEST_CASE("kraft_sum exact values") {
    CHECK(kraft_sum(std::vector<BitString>{bs("0"), bs("1")}).is_one());
    CHECK(kraft_sum(std::vector<BitString>{bs("00"), bs("01"), bs("10"), bs("11")}).is_one());
    CHECK(kraft_sum(std::vector<BitString>{bs("0"), bs("10")}) == Dyadic{3, 2});
    CHECK(kraft_sum(std::vector<BitString>{}) == Dyadic{0, 0});
}

TEST_CASE("full prefix codes tile every long word") {
    // A prefix-free set with Kraft sum 1 has exactly one member prefixing
    // any sufficiently long word.
    const std::vector<std::vector<BitString>> sets = {
        {bs("0"), bs("10"), bs("11")},
        {bs("00"), bs("01"), bs("1")},
        {bs("0"), bs("100"), bs("101"), bs("110"), bs("111")},
    };
    for (const auto& set : sets) {
        REQUIRE(is_prefix_free(set));
        REQUIRE(kraft_sum(set).is_one());
        std::size_t k = 0;
        for (const auto& w : set) k = std::max(k, w.size());
        for (const auto& word : [&] {
                 std::vector<BitString> words;
                 for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) {
                     BitString w;
                     for (std::size_t i = 0; i < k; ++i)
                         w.push_back(static_cast<int>((v >> (k - 1 - i)) & 1));
                     words.push_back(w);
                 }
                 return words;
             }()) {
            int hits = 0;
            for (const auto& member : set) hits += is_prefix(member, word);
            CHECK(hits == 1);
        }
    }
}

TEST_CASE("rendering round trip") {
    CHECK(bs("-").str() == "-");
    CHECK(bs("1000011001010").str() == "1000011001010");
    CHECK(BitString::parse(bs("0110").str()) == bs("0110"));
    CHECK_THROWS_AS(BitString::parse("01x"), std::invalid_argument);
}
