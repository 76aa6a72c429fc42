#include "resgraph/quotient.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <numeric>

using resgraph::Error;
using resgraph::ErrorCode;
using resgraph::Int;

TEST_CASE("chain recognition") {
    CHECK(resgraph::is_chain(fixtures::rdp_A(5)));
    CHECK(resgraph::is_chain(fixtures::chain({4})));
    CHECK_FALSE(resgraph::is_chain(fixtures::flower(2, 3)));
    auto triangle = resgraph::build_graph({{"a", 3}, {"b", 3}, {"c", 3}},
                                          {{"a", "b"}, {"b", "c"}, {"c", "a"}});
    CHECK_FALSE(resgraph::is_chain(triangle));
}

TEST_CASE("branch fractions") {
    CHECK(resgraph::branch_fraction({2}) == std::make_pair(Int(2), Int(1)));
    CHECK(resgraph::branch_fraction({2, 2, 2, 2}) == std::make_pair(Int(5), Int(4)));
    CHECK(resgraph::branch_fraction({2, 2, 3}) == std::make_pair(Int(7), Int(5)));
    CHECK(resgraph::branch_fraction({3, 2}) == std::make_pair(Int(5), Int(2)));
    CHECK_THROWS_AS(resgraph::branch_fraction({2, 1, 2}), Error);
}

TEST_CASE("fraction expansion") {
    CHECK(resgraph::fraction_to_branch(2, 1) == std::vector<long long>{2});
    CHECK(resgraph::fraction_to_branch(5, 4) == std::vector<long long>({2, 2, 2, 2}));
    CHECK(resgraph::fraction_to_branch(7, 5) == std::vector<long long>({2, 2, 3}));
    try {
        resgraph::fraction_to_branch(4, 2);
        FAIL("non-coprime must be rejected");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotCoprime);
    }
    try {
        resgraph::fraction_to_branch(3, 4);
        FAIL("p < q is required");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OutOfRange);
    }
}

TEST_CASE("fraction round trips") {
    for (long long q = 2; q <= 30; ++q)
        for (long long p = 1; p < q; ++p) {
            if (std::gcd(q, p) != 1) continue;
            auto weights = resgraph::fraction_to_branch(q, p);
            CHECK(resgraph::branch_fraction(weights) == std::make_pair(Int(q), Int(p)));
        }

    // all weight lists in [2,5]^k, k <= 4
    for (int k = 1; k <= 4; ++k) {
        std::vector<long long> w(k, 2);
        for (;;) {
            auto [q, p] = resgraph::branch_fraction(w);
            CHECK(resgraph::fraction_to_branch(q, p) == w);
            int d = 0;
            while (d < k && w[d] == 5) w[d++] = 2;
            if (d == k) break;
            ++w[d];
        }
    }
}

TEST_CASE("chain family formula") {
    // [2]^k ++ [s] has fraction ((k+1)s - k, ks - (k-1))
    for (long long k = 0; k <= 6; ++k)
        for (long long s = 2; s <= 8; ++s) {
            std::vector<long long> w(k, 2);
            w.push_back(s);
            CHECK(resgraph::branch_fraction(w) ==
                  std::make_pair(Int((k + 1) * s - k), Int(k * s - (k - 1))));
        }
}

TEST_CASE("star decomposition") {
    auto sd = resgraph::star_decompose(fixtures::triple_point_d0());
    CHECK(sd.central_weight == 2);
    REQUIRE(sd.branches.size() == 3);
    CHECK(sd.branches[0].q == 2);
    CHECK(sd.branches[0].p == 1);
    CHECK(sd.branches[1].q == 3);
    CHECK(sd.branches[1].p == 2);
    CHECK(sd.branches[2].q == 5);
    CHECK(sd.branches[2].p == 3);
    CHECK(sd.branches[2].weights == std::vector<long long>({2, 3}));

    auto item11 = fixtures::star(2, {{2, 2, 2, 2}, {3}, {2}});
    auto sd11 = resgraph::star_decompose(item11);
    CHECK(sd11.branches[0].q == 2);
    CHECK(sd11.branches[1].q == 3);
    CHECK(sd11.branches[1].p == 1);
    CHECK(sd11.branches[2].q == 5);
    CHECK(sd11.branches[2].p == 4);

    CHECK_THROWS_AS(resgraph::star_decompose(fixtures::rdp_A(4)), Error);
    // two forks
    auto h = resgraph::build_graph(
        {{"a", 2}, {"b", 2}, {"c", 2}, {"d", 2}, {"e", 2}, {"f", 2}, {"g", 2}, {"h", 2}},
        {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"d", "e"}, {"e", "f"}, {"e", "g"}, {"e", "h"}});
    CHECK_THROWS_AS(resgraph::star_decompose(h), Error);
}

TEST_CASE("log-terminal detection with cross-check") {
    CHECK(resgraph::is_log_terminal(fixtures::rdp_A(6)));
    CHECK(resgraph::is_log_terminal(fixtures::chain({2, 3, 4})));
    CHECK(resgraph::is_log_terminal(fixtures::rdp_E(8)));
    CHECK(resgraph::is_log_terminal(fixtures::flower(2, 3)));
    CHECK(resgraph::is_log_terminal(fixtures::quotient_e4_not_ulrich()));
    CHECK(resgraph::is_log_terminal(fixtures::graded_star_colength(2)));

    CHECK_FALSE(resgraph::is_log_terminal(fixtures::flower(3, 4)));
    CHECK_FALSE(resgraph::is_log_terminal(fixtures::triple_point_A(2, 2, 2)));
    // negative-definite star with four branches
    CHECK_FALSE(resgraph::is_log_terminal(fixtures::star(3, {{2, 2}, {2}, {2}, {2}})));

    CHECK_THROWS_AS(resgraph::is_log_terminal(fixtures::chain({1, 2})), Error);
}

TEST_CASE("divisor presentation of star graphs") {
    auto item2 = resgraph::pd_divisor(fixtures::star(2, {{3}, {3}, {2}}));
    CHECK(item2.display == "1/2 P_1 + 2/3 P_2 - 1/3 P_3");
    CHECK(item2.standard_integral_part);
    CHECK(item2.total_degree == resgraph::Rat(5, 6));

    auto item11 = resgraph::pd_divisor(fixtures::star(2, {{2, 2, 2, 2}, {3}, {2}}));
    CHECK(item11.display == "1/2 P_1 + 2/3 P_2 - 4/5 P_3");

    auto family = resgraph::pd_divisor(fixtures::star(2, {{2}, {2}, {3}}));
    CHECK(family.display == "1/2 P_1 + 1/2 P_2 - 1/3 P_3");

    auto wide = resgraph::pd_divisor(fixtures::star(3, {{2}, {2}, {3}}));
    CHECK_FALSE(wide.standard_integral_part);
    CHECK(wide.display == "1/2 P_1 + 1/2 P_2 + 2/3 P_3");
}

TEST_CASE("building stars from divisor data") {
    auto g = resgraph::graph_from_pd(2, {{2, 1}, {3, 1}, {3, 1}});
    CHECK(oracles::isomorphic(g, fixtures::star(2, {{3}, {3}, {2}})));

    // central weight r-1 with r reduced leaves of orders q_j
    auto p = resgraph::graph_from_pd(2, {{2, 1}, {5, 1}, {7, 1}});
    CHECK(oracles::isomorphic(p, fixtures::star(2, {{2}, {5}, {7}})));

    // round trip through star_decompose
    std::vector<std::vector<std::pair<Int, Int>>> fixtures_pd = {
        {{2, 1}, {2, 1}, {3, 1}},
        {{2, 1}, {3, 1}, {4, 1}},
        {{2, 1}, {3, 2}, {5, 3}},
        {{2, 1}, {3, 1}, {5, 4}},
    };
    for (const auto& branches : fixtures_pd) {
        auto h = resgraph::graph_from_pd(2, branches);
        auto sd = resgraph::star_decompose(h);
        REQUIRE(sd.branches.size() == branches.size());
        CHECK(sd.central_weight == 2);
        for (std::size_t i = 0; i < branches.size(); ++i) {
            CHECK(sd.branches[i].q == branches[i].first);
            CHECK(sd.branches[i].p == branches[i].second);
        }
    }

    try {
        resgraph::graph_from_pd(1, {{2, 1}, {2, 1}});
        FAIL("degree zero must be rejected");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegreeNotPositive);
    }
}

TEST_CASE("classification table lookup") {
    auto item5 = resgraph::match_ding(fixtures::star(2, {{3}, {4}, {2}}));
    CHECK(item5.item == 5);

    auto fam = resgraph::match_ding(resgraph::graph_from_pd(2, {{2, 1}, {2, 1}, {5, 3}}));
    CHECK(fam.item == 1);
    CHECK(fam.k == 1);
    CHECK(fam.s == 3);

    auto fam0 = resgraph::match_ding(fixtures::star(2, {{2}, {2}, {3}}));
    CHECK(fam0.item == 1);
    CHECK(fam0.k == 0);
    CHECK(fam0.s == 3);

    // the -3-ended E6 shape carries fractions (2,1),(3,2),(5,3): sporadic row 8
    CHECK(resgraph::match_ding(fixtures::triple_point_d0()).item == 8);

    // quotient with fractions (2,1),(3,1),(5,2): not in the table
    CHECK(resgraph::match_ding(fixtures::quotient_e4_not_ulrich()).item == 0);

    try {
        resgraph::match_ding(fixtures::rdp_E(8));
        FAIL("Gorenstein input must be rejected");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::GorensteinInput);
    }
    try {
        resgraph::match_ding(fixtures::triple_point_A(2, 2, 2));
        FAIL("non-quotient input must be rejected");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotQuotient);
    }
}
