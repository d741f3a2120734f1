#include <doctest.h>

#include "test_helpers.hpp"
#include "vlrs/codec.hpp"
#include "vlrs/errors.hpp"

using namespace vlrs;
using namespace vlrs::testing;

TEST_CASE("paper codes validate") {
    for (const auto& code : {code_c1(), code_c2(), code_c3(), code_c4()}) {
        const auto report = validate(code);
        CHECK(report.cond1);
        CHECK(report.cond2);
        CHECK(report.cond3);
        CHECK(report.cond4);
        CHECK(report.decodable);
        CHECK(report.valid());
    }
}

TEST_CASE("self-rewriting rule is not decodable") {
    // a1 0 -> 0 re-creates its own pending input forever.
    Vlrs code{default_labels(2), {rule(0, "0", "0"), rule(1, "-", "1")}};
    const auto report = validate(code);
    CHECK_FALSE(report.decodable);
    CHECK_FALSE(report.valid());
}

TEST_CASE("condition failures are reported") {
    SUBCASE("missing rule") {
        Vlrs code{default_labels(2), {rule(0, "-", "0")}};
        CHECK_FALSE(validate(code).cond1);
    }
    SUBCASE("outputs not prefix-free") {
        Vlrs code{default_labels(2), {rule(0, "-", "0"), rule(1, "-", "01")}};
        CHECK_FALSE(validate(code).cond2);
    }
    SUBCASE("inputs not a full prefix code") {
        Vlrs code{default_labels(2), {rule(0, "0", "10"), rule(1, "-", "0")}};
        CHECK_FALSE(validate(code).cond3);
    }
    SUBCASE("output truncates a foreign input") {
        // b of a1 is a proper prefix of l of a2.
        Vlrs code{default_labels(2),
                  {rule(0, "-", "0"), rule(1, "00", "10"), rule(1, "01", "110"),
                   rule(1, "1", "111")}};
        CHECK_FALSE(validate(code).cond4);
    }
    SUBCASE("empty alphabet") {
        Vlrs code;
        CHECK_FALSE(validate(code).valid());
    }
}

TEST_CASE("delta") {
    CHECK(delta(rule(0, "1", "0")) == 0);
    CHECK(delta(rule(1, "-", "00")) == 2);
    CHECK(delta(rule(0, "-", "0")) == 1);
    CHECK(delta(rule(0, "110", "10")) == -1);
}

TEST_CASE("from_vlc") {
    const auto c1 = from_vlc({bs("0"), bs("10"), bs("11")});
    CHECK(c1 == code_c1());
    CHECK(is_fixed_to_variable(c1));

    const auto flc = from_vlc({bs("00"), bs("01"), bs("10"), bs("11")});
    for (const auto& r : flc.rules) CHECK(delta(r) == 2);
    CHECK(is_fixed_to_variable(flc));

    const auto binary = from_vlc({bs("0"), bs("1")});
    CHECK(binary.rules.size() == 2);
    CHECK_THROWS_AS(from_vlc({bs("0"), bs("01")}), InvalidCodeError);
}

TEST_CASE("suffix-constrained classification") {
    CHECK(is_suffix_constrained(code_c1()));  // eps is a suffix of everything
    CHECK(is_suffix_constrained(code_c2()));
    CHECK_FALSE(is_suffix_constrained(code_c3()));
    CHECK_FALSE(is_suffix_constrained(code_c4()));
}

TEST_CASE("fixed-to-variable classification") {
    CHECK(is_fixed_to_variable(code_c1()));
    CHECK_FALSE(is_fixed_to_variable(code_c2()));
    CHECK_FALSE(is_fixed_to_variable(code_c4()));
}

TEST_CASE("every long word resolves exactly one rule per symbol") {
    for (const auto& code : {code_c2(), code_c3(), code_c4()}) {
        const std::size_t h = code.max_input_len();
        for (int sym = 0; sym < code.symbol_count(); ++sym)
            for (std::uint64_t v = 0; v < (std::uint64_t{1} << h); ++v) {
                BitString w;
                for (std::size_t i = 0; i < h; ++i)
                    w.push_back(static_cast<int>((v >> (h - 1 - i)) & 1));
                int hits = 0;
                for (const auto& r : code.rules)
                    if (r.symbol == sym && is_prefix(r.input, w)) ++hits;
                CHECK(hits == 1);
            }
    }
}

TEST_CASE("simplify merges complete sibling families") {
    Vlrs lex_mu1{default_labels(3),
                 {rule(0, "0", "00"), rule(0, "1", "01"), rule(1, "-", "10"),
                  rule(2, "-", "11")}};
    CHECK(simplify(lex_mu1) == code_c1());
}

TEST_CASE("simplify leaves C1 and C3 unchanged") {
    CHECK(simplify(code_c3()) == code_c3());
    CHECK(simplify(code_c1()) == code_c1());
}

TEST_CASE("simplify preserves encoded bitstreams") {
    Vlrs lex_mu1{default_labels(3),
                 {rule(0, "0", "00"), rule(0, "1", "01"), rule(1, "-", "10"),
                  rule(2, "-", "11")}};
    // Merging a rule family can shorten the termination pattern, so compare
    // the payloads with the termination bits removed.
    auto body = [](const EncodedBlock& block) {
        return block.payload.slice(0, block.payload.size() - block.termination_len);
    };
    for (const auto& code : {lex_mu1, code_c2(), code_c3(), code_c4()}) {
        const Vlrs simplified = simplify(code);
        Codec original(code), reduced(simplified);
        for (int len = 1; len <= 6; ++len)
            for (const auto& seq : all_sequences(code.symbol_count(), len))
                CHECK(body(original.encode(seq)) == body(reduced.encode(seq)));
    }
}

TEST_CASE("simplify rejects invalid codes") {
    Vlrs bad{default_labels(2), {rule(0, "0", "0"), rule(1, "-", "1")}};
    CHECK_THROWS_AS(simplify(bad), InvalidCodeError);
}

TEST_CASE("source model checks") {
    CHECK_NOTHROW(check_source(mu1()));
    CHECK_NOTHROW(check_source(SourceModel{{1.0 - 1e-12, 1e-12}}));
    CHECK_THROWS(check_source(SourceModel{{0.5, 0.0, 0.5}}));
    CHECK_THROWS(check_source(SourceModel{{0.5, 0.4}}));
    CHECK_THROWS(check_source(SourceModel{}));
}
