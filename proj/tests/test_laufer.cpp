#include "resgraph/laufer.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <numeric>
#include <random>

using resgraph::Cycle;
using resgraph::Error;
using resgraph::ErrorCode;
using resgraph::Int;

namespace {

Cycle cyc(std::vector<long long> v) {
    std::vector<Int> c(v.begin(), v.end());
    return Cycle{std::move(c)};
}

}  // namespace

TEST_CASE("fundamental cycle of pinned graphs") {
    auto [single, seq1] = resgraph::fundamental_cycle(fixtures::chain({7}));
    CHECK(single == cyc({1}));
    CHECK(seq1.seed == 0);
    CHECK(seq1.steps.empty());

    // E8 with the vertices ordered along the long path, branch vertex last
    auto [e8, seq8] = resgraph::fundamental_cycle(fixtures::rdp_E(8));
    CHECK(e8 == cyc({2, 3, 4, 5, 6, 4, 2, 3}));

    // weight-3 center with four reduced leaves
    auto [zf, seqf] = resgraph::fundamental_cycle(fixtures::flower(3, 4));
    CHECK(zf == cyc({2, 1, 1, 1, 1}));

    CHECK_THROWS_AS(resgraph::fundamental_cycle(fixtures::flower(2, 4)), Error);
}

TEST_CASE("anti-nef test") {
    auto a2 = fixtures::rdp_A(2);
    CHECK(resgraph::is_anti_nef(a2, Cycle::zero(2)));
    CHECK_FALSE(resgraph::is_anti_nef(a2, Cycle::unit(2, 0)));
    auto d0 = fixtures::triple_point_d0();
    auto [zf, seq] = resgraph::fundamental_cycle(d0);
    CHECK(resgraph::is_anti_nef(d0, zf));
}

TEST_CASE("every anti-nef nonzero cycle dominates Z_f (box check)") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = oracles::random_tree(rng, 1 + trial % 4, 4);
        auto m = resgraph::intersection_form(g);
        if (!resgraph::is_negative_definite(m)) continue;
        auto [zf, seq] = resgraph::fundamental_cycle(g);
        auto minimal =
            oracles::box_minimal_solutions(m, std::vector<Int>(g.size(), 0), 8, true);
        REQUIRE(minimal.size() == 1);
        CHECK(minimal[0] == zf);
    }
}

TEST_CASE("rationality on pinned graphs") {
    auto r8 = resgraph::rationality(fixtures::rdp_E(8));
    CHECK(r8.is_rational);
    CHECK(r8.p_f == 0);

    // center -2 with five -3 leaves: Z_f = (3,1,1,1,1,1), p_f = 2
    auto bad = fixtures::star(2, {{3}, {3}, {3}, {3}, {3}});
    auto [zbad, seqbad] = resgraph::fundamental_cycle(bad);
    CHECK(zbad == cyc({3, 1, 1, 1, 1, 1}));
    auto rbad = resgraph::rationality(bad);
    CHECK_FALSE(rbad.is_rational);
    CHECK(rbad.p_f == 2);
    CHECK(rbad.first_violation.has_value());

    CHECK(resgraph::rationality(fixtures::triple_point_d0()).is_rational);
}

TEST_CASE("chi values and additivity") {
    auto single = fixtures::chain({2});
    CHECK(resgraph::chi(single, cyc({1})) == 1);

    auto d0 = fixtures::triple_point_d0();
    auto [zf, seq] = resgraph::fundamental_cycle(d0);
    CHECK(resgraph::chi(d0, zf) == 1);

    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> coeff(0, 5);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = oracles::random_tree(rng, 1 + trial % 6, 4);
        auto m = resgraph::intersection_form(g);
        const int n = g.size();
        auto rand_cycle = [&] {
            std::vector<Int> v(n);
            for (auto& x : v) x = coeff(rng);
            return Cycle{std::move(v)};
        };
        Cycle c = rand_cycle(), d = rand_cycle();
        Int lhs = resgraph::chi(g, c + d);
        Int rhs = resgraph::chi(g, c) + resgraph::chi(g, d) - resgraph::pairing(m, c, d);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("multiplicity") {
    CHECK(resgraph::multiplicity(fixtures::rdp_D(6)) == 2);
    CHECK(resgraph::multiplicity(fixtures::triple_point_d0()) == 3);
    // center weight n-2 with n-1 reduced leaves: Z_f has center coefficient
    // 2, so e = 2 + K.Z_f = 2(n-3)
    for (int n = 4; n <= 8; ++n)
        CHECK(resgraph::multiplicity(fixtures::flower(n - 2, n - 1)) == 2 * (n - 3));
    CHECK_THROWS_AS(resgraph::multiplicity(fixtures::star(2, {{3}, {3}, {3}, {3}, {3}})),
                    Error);
}

TEST_CASE("minimal anti-nef lift") {
    auto d0 = fixtures::triple_point_d0();
    auto [zf, seq] = resgraph::fundamental_cycle(d0);

    auto [lift0, seql] = resgraph::min_antinef_lift(d0, std::vector<Int>(d0.size(), 0),
                                                    Cycle::unit(d0.size(), 0));
    CHECK(lift0 == zf);

    auto e8 = fixtures::rdp_E(8);
    auto [z8, seq8] = resgraph::fundamental_cycle(e8);
    auto k8 = resgraph::canonical_intersections(e8).k;
    auto [f8, seqf8] = resgraph::min_antinef_lift(e8, k8, z8);
    CHECK(f8 == z8);

    std::mt19937 rng(4242);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = oracles::random_tree(rng, 1 + trial % 4, 4);
        auto m = resgraph::intersection_form(g);
        if (!resgraph::is_negative_definite(m)) continue;
        auto k = resgraph::canonical_intersections(g).k;
        auto [zg, s1] = resgraph::fundamental_cycle(g);
        auto [fg, s2] = resgraph::min_antinef_lift(g, k, zg);
        // substitute C = Z_f + D and search the D box, so the oracle sees
        // the same constraint C >= Z_f as the lift
        std::vector<Int> shifted = k;
        auto mz = resgraph::detail::form_times(m, zg);
        for (int i = 0; i < g.size(); ++i) shifted[i] += mz[i];
        auto minimal = oracles::box_minimal_solutions(m, shifted, 10, false);
        REQUIRE(minimal.size() == 1);
        CHECK(zg + minimal[0] == fg);
    }
}

TEST_CASE("trace cycle on pinned graphs") {
    CHECK(resgraph::trace_cycle(fixtures::rdp_E(8)) == Cycle::zero(8));

    auto q = fixtures::quotient_e4_not_ulrich();
    auto [zq, seqq] = resgraph::fundamental_cycle(q);
    CHECK(zq == cyc({1, 1, 2, 1, 1}));
    Cycle f = resgraph::trace_cycle(q);
    CHECK(f == zq + Cycle::unit(5, 1));  // Z_f plus the first -3 curve

    // graded star, n = 2: F = 2 e0 + sum of the three arm curves
    auto s2 = fixtures::graded_star_colength(2);
    CHECK(resgraph::trace_cycle(s2) == cyc({2, 1, 1, 1}));

    CHECK_THROWS_AS(resgraph::trace_cycle(fixtures::chain({1})), Error);
}

TEST_CASE("colength") {
    auto d0 = fixtures::triple_point_d0();
    auto [zf, seq] = resgraph::fundamental_cycle(d0);
    CHECK(resgraph::colength(d0, zf) == 1);

    auto s3 = fixtures::graded_star_colength(3);
    CHECK(resgraph::colength(s3, resgraph::trace_cycle(s3)) == 3);

    auto q = fixtures::quotient_e4_not_ulrich();
    CHECK(resgraph::colength(q, resgraph::trace_cycle(q)) == 2);

    CHECK(resgraph::colength(d0, Cycle::zero(6)) == 0);
    CHECK_THROWS_AS(resgraph::colength(d0, Cycle::unit(6, 2)), Error);
}

TEST_CASE("order independence of the deterministic walks") {
    std::mt19937 rng(987654321);
    int found = 0;
    while (found < 200) {
        int n = 2 + static_cast<int>(rng() % 7);
        auto g = oracles::random_tree(rng, n, 4);
        if (!resgraph::is_negative_definite(g)) continue;
        if (!resgraph::rationality(g).is_rational) continue;
        ++found;

        auto [zf, seq] = resgraph::fundamental_cycle(g);
        Cycle f = resgraph::trace_cycle(g);

        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto h = g.permuted(perm);

        auto [zh, seqh] = resgraph::fundamental_cycle(h);
        Cycle fh = resgraph::trace_cycle(h);
        for (int i = 0; i < n; ++i) {
            CHECK(zh[i] == zf[perm[i]]);
            CHECK(fh[i] == f[perm[i]]);
        }

        // sequence well-formedness: seeded, every recorded value positive
        CHECK(seqh.seed.has_value());
        for (const auto& step : seqh.steps) CHECK(step.value >= 1);
        CHECK(seqh.result == zh);
    }
}

TEST_CASE("local minimality of the trace cycle") {
    std::mt19937 rng(1111);
    int found = 0;
    while (found < 60) {
        auto g = oracles::random_tree(rng, 2 + rng() % 5, 4);
        if (!resgraph::is_negative_definite(g)) continue;
        if (!resgraph::rationality(g).is_rational) continue;
        ++found;
        auto k = resgraph::canonical_intersections(g).k;
        Cycle f = resgraph::trace_cycle(g);
        auto m = resgraph::intersection_form(g);

        // K + F anti-nef
        auto s = resgraph::detail::form_times(m, f);
        for (int i = 0; i < g.size(); ++i) CHECK(k[i] + s[i] <= 0);

        // dropping any curve of the support breaks the condition
        for (int j = 0; j < g.size(); ++j) {
            if (f[j] == 0) continue;
            Cycle less = f - Cycle::unit(g.size(), j);
            auto sl = resgraph::detail::form_times(m, less);
            bool antinef = true;
            for (int i = 0; i < g.size(); ++i)
                if (k[i] + sl[i] > 0) antinef = false;
            CHECK_FALSE(antinef);
        }
    }
}
