#include <doctest.h>

#include <random>

#include "test_helpers.hpp"
#include "vlrs/analysis.hpp"
#include "vlrs/constructors.hpp"

using namespace vlrs;
using namespace vlrs::testing;
using doctest::Approx;

TEST_CASE("entropy") {
    CHECK(std::abs(entropy(mu1()) - 1.157) < 0.0005);
    CHECK(entropy(SourceModel{{0.5, 0.5}}) == Approx(1.0));
    CHECK(entropy(SourceModel{{0.25, 0.25, 0.25, 0.25}}) == Approx(2.0));
}

TEST_CASE("VLC transition matrix has source columns") {
    const auto model = rule_transition_matrix(code_c1(), mu1());
    REQUIRE(model.transition.rows() == 3);
    for (int col = 0; col < 3; ++col) {
        CHECK(model.transition(0, col) == Approx(0.7));
        CHECK(model.transition(1, col) == Approx(0.2));
        CHECK(model.transition(2, col) == Approx(0.1));
    }
    CHECK(model.deltas == std::vector<int>{1, 2, 2});
}

TEST_CASE("transition matrices are column-stochastic") {
    for (const auto& code : {code_c1(), code_c2(), code_c3(), code_c4()}) {
        const auto model = rule_transition_matrix(code, mu1());
        for (int col = 0; col < model.transition.cols(); ++col)
            CHECK(model.transition.col(col).sum() == Approx(1.0));
    }
}

TEST_CASE("C4 transition structure") {
    // Rules in (symbol, j) order: a1 1->0, a1 0->10, a2 ->110, a3 ->111.
    const auto model = rule_transition_matrix(code_c4(), mu1());
    REQUIRE(model.transition.rows() == 4);
    // "1" is a prefix of the outputs of rules 1, 2, 3 but not of "0".
    CHECK(model.transition(0, 0) == Approx(0.0));
    CHECK(model.transition(0, 1) == Approx(0.7));
    CHECK(model.transition(0, 2) == Approx(0.7));
    CHECK(model.transition(0, 3) == Approx(0.7));
    // "0" is a prefix of "0" only.
    CHECK(model.transition(1, 0) == Approx(0.7));
    CHECK(model.transition(1, 1) == Approx(0.0));
    // Epsilon-input rules apply everywhere.
    for (int col = 0; col < 4; ++col) {
        CHECK(model.transition(2, col) == Approx(0.2));
        CHECK(model.transition(3, col) == Approx(0.1));
    }
    CHECK(model.deltas == std::vector<int>{0, 1, 3, 3});
}

TEST_CASE("stationary rule distribution of C4") {
    const auto model = rule_transition_matrix(code_c4(), mu1());
    const auto pi = stationary_rule_distribution(model);
    REQUIRE(pi.size() == 4);
    CHECK(std::abs(pi(0) - 0.412) < 0.001);
    CHECK(std::abs(pi(1) - 0.288) < 0.001);
    CHECK(std::abs(pi(2) - 0.200) < 0.001);
    CHECK(std::abs(pi(3) - 0.100) < 0.001);
    CHECK(pi.sum() == Approx(1.0));
}

TEST_CASE("stationary distribution matches simulated rule usage") {
    const auto code = code_c4();
    const auto model = rule_transition_matrix(code, mu1());
    const auto pi = stationary_rule_distribution(model);

    std::mt19937_64 rng(2024);
    std::discrete_distribution<int> sym({0.7, 0.2, 0.1});
    std::vector<int> seq(200000);
    for (auto& s : seq) s = sym(rng);

    Codec codec(code);
    std::vector<int> used;
    reference_encode(code, seq, codec.termination(seq.back()), &used);
    std::vector<double> freq(code.rules.size(), 0.0);
    for (int r : used) freq[static_cast<std::size_t>(r)] += 1.0 / static_cast<double>(used.size());
    for (int r = 0; r < pi.size(); ++r)
        CHECK(std::abs(freq[static_cast<std::size_t>(r)] - pi(r)) < 0.01);
}

TEST_CASE("asymptotic mdl") {
    CHECK(asymptotic_mdl(code_c1(), mu1()) == Approx(1.3));
    CHECK(asymptotic_mdl(code_c2(), mu1()) == Approx(1.3));
    CHECK(std::abs(asymptotic_mdl(code_c4(), mu1()) - 1.188) < 0.001);
    CHECK(asymptotic_mdl(code_c4(), mu1()) >= entropy(mu1()));
}

TEST_CASE("exact mdl matches brute force") {
    for (const auto& code : {code_c1(), code_c2(), code_c3(), code_c4()})
        for (int n = 1; n <= 6; ++n)
            CHECK(exact_mdl(code, mu1(), n) == Approx(brute_force_exact_mdl(code, mu1(), n)));
}

TEST_CASE("exact mdl per symbol approaches the asymptotic rate") {
    const auto code = code_c4();
    const double limit = asymptotic_mdl(code, mu1());
    const double at_40 = exact_mdl(code, mu1(), 40) / 40.0;
    const double at_200 = exact_mdl(code, mu1(), 200) / 200.0;
    CHECK(std::abs(at_200 - limit) < std::abs(at_40 - limit));
    CHECK(std::abs(at_200 - limit) < 0.005);
}

TEST_CASE("marginal bit trace of a mirror code") {
    const auto code = mirror_vlrs(huffman(mu1()));
    const auto trace = marginal_bit_trace(code, mu1(), 12);
    CHECK(trace.alpha == Approx(0.9));
    CHECK(trace.limit == Approx(0.5));
    REQUIRE(trace.f_values.size() == 12);
    for (std::size_t t = 0; t + 1 < trace.f_values.size(); ++t) {
        const double now = std::abs(trace.f_values[t] - 0.5);
        const double next = std::abs(trace.f_values[t + 1] - 0.5);
        CHECK(std::abs(next - 0.8 * now) < 1e-9);
    }
}

TEST_CASE("marginal bit trace rejects non-mirror codes") {
    CHECK_THROWS(marginal_bit_trace(code_c1(), mu1(), 8));
    CHECK_THROWS(marginal_bit_trace(code_c4(), mu1(), 8));
}

TEST_CASE("empirical bit statistics") {
    SUBCASE("mirror code emits nearly balanced bits") {
        const auto code = mirror_vlrs(huffman(mu1()));
        const auto stats = empirical_bit_stats(code, mu1(), 512, 200, 42);
        CHECK(std::abs(stats.zero_fraction - 0.5) < 0.01);
    }
    SUBCASE("plain VLC keeps the source bias") {
        const auto stats = empirical_bit_stats(code_c1(), mu1(), 512, 200, 42);
        // 0.9 zeros per symbol over 1.3 bits per symbol.
        CHECK(std::abs(stats.zero_fraction - 0.9 / 1.3) < 0.01);
    }
    SUBCASE("reproducible for a fixed seed") {
        const auto a = empirical_bit_stats(code_c2(), mu1(), 64, 20, 7);
        const auto b = empirical_bit_stats(code_c2(), mu1(), 64, 20, 7);
        CHECK(a.zero_fraction == b.zero_fraction);
        CHECK(a.per_position == b.per_position);
    }
}
