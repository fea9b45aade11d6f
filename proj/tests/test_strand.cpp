#include <catch2/catch_amalgamated.hpp>

#include "linstrand/strand.hpp"

using namespace linstrand;

namespace {

LabeledGraph running_example() {
    return LabeledGraph(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

} // namespace

TEST_CASE("binomial coefficient conventions") {
    CHECK(binomial(8, 2) == 28);
    CHECK(binomial(4, 1) == 4);
    CHECK(binomial(-1, 0) == 1);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(2, 5) == 0);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
    for (long long a = -2; a <= 25; ++a)
        for (long long b = -2; b <= 25; ++b) CHECK(binomial(a, b) == binomial_pascal(a, b));
}

TEST_CASE("closed formula fixtures") {
    CHECK(linear_strand_formula(7, 2, 2, 1) == 28);
    CHECK(linear_strand_formula(7, 2, 2, 2) == 6);
    CHECK(linear_strand_formula(7, 2, 2, 0) == 28);
    CHECK(linear_strand_formula(7, 2, 2, 3) == 0);
    CHECK(linear_strand_formula(7, 2, 1, 0) == 7);
    CHECK(linear_strand_formula(7, 2, 1, 1) == 4);
    for (unsigned e = 1; e <= 9; ++e)
        CHECK(linear_strand_formula(e, 3, 1, 0) == e);
    CHECK_THROWS_AS(linear_strand_formula(7, 2, 0, 0), std::invalid_argument);
}

TEST_CASE("strand profile of the running example") {
    auto p2 = strand_profile(running_example(), 2);
    CHECK(p2.e == 7);
    CHECK(p2.t == 2);
    REQUIRE(p2.entries.size() == 2 + 2 * 2 + 1); // up to i = m + 2t
    CHECK(p2.entries[0] == 28);
    CHECK(p2.entries[1] == 28);
    CHECK(p2.entries[2] == 6);
    for (std::size_t i = 3; i < p2.entries.size(); ++i) CHECK(p2.entries[i] == 0);

    auto p1 = strand_profile(running_example(), 1);
    CHECK(p1.entries[0] == 7);
    CHECK(p1.entries[1] == 4);
    for (std::size_t i = 2; i < p1.entries.size(); ++i) CHECK(p1.entries[i] == 0);
}

TEST_CASE("triangle-free profiles collapse to the multiset count") {
    LabeledGraph path(4, {{0, 1}, {1, 2}, {2, 3}});
    for (unsigned m = 1; m <= 4; ++m) {
        auto p = strand_profile(path, m);
        CHECK(p.entries[0] == binomial(3 + m - 1, m));
        for (std::size_t i = 1; i < p.entries.size(); ++i) CHECK(p.entries[i] == 0);
    }
}

TEST_CASE("hypothesis gating") {
    CHECK_THROWS_AS(strand_profile(LabeledGraph(4, {{0, 1}, {0, 2}, {0, 3}}), 1),
                    HypothesisError);
    LabeledGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_THROWS_AS(strand_profile(k4, 1), HypothesisError);
    try {
        strand_profile(k4, 1);
    } catch (const HypothesisError& e) {
        CHECK(std::string(e.what()).find("K4") != std::string::npos);
    }
    CHECK_THROWS_AS(strand_profile(running_example(), 0), std::invalid_argument);
}

TEST_CASE("complex ranks fixtures") {
    auto r = strand_complex_ranks(7, 2, 2);
    REQUIRE(r.size() == 3);
    CHECK(r[0] == std::make_pair(0u, BigInt(28)));
    CHECK(r[1] == std::make_pair(1u, BigInt(28)));
    CHECK(r[2] == std::make_pair(2u, BigInt(6)));

    auto t0 = strand_complex_ranks(5, 0, 3);
    REQUIRE(t0.size() == 1);
    CHECK(t0[0] == std::make_pair(0u, binomial(7, 3)));

    auto one = strand_complex_ranks(1, 3, 1);
    REQUIRE(one.size() == 2);
    CHECK(one[0] == std::make_pair(0u, BigInt(1)));
    CHECK(one[1] == std::make_pair(1u, BigInt(6)));
}

TEST_CASE("the two strand derivations agree across the grid") {
    for (unsigned long long e = 0; e <= 12; ++e)
        for (unsigned long long t = 0; t <= 4; ++t)
            for (unsigned m = 1; m <= 5; ++m) {
                auto ranks = strand_complex_ranks(e, t, m);
                for (const auto& [i, rank] : ranks)
                    CHECK(rank == linear_strand_formula(e, t, m, i));
                // formula vanishes beyond the truncation
                for (unsigned i = unsigned(ranks.size()); i <= m + 2 * t + 1; ++i)
                    CHECK(linear_strand_formula(e, t, m, i) == 0);
            }
}

TEST_CASE("profile JSON emission") {
    auto j = strand_profile_json(strand_profile(running_example(), 2));
    CHECK(j["e"] == 7);
    CHECK(j["t"] == 2);
    CHECK(j["m"] == 2);
    REQUIRE(j["strand"].is_array());
    CHECK(j["strand"][0] == 28);
    CHECK(j["strand"][1] == 28);
    CHECK(j["strand"][2] == 6);
    CHECK(j["strand"][3] == 0);
    // huge values go through as decimal strings
    CHECK(json_number(BigInt("123456789012345678901234567890")).is_string());
}
