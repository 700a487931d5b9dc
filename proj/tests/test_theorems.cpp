#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "homnerve/generators.hpp"
#include "homnerve/theorems.hpp"

using namespace homnerve;

namespace {

const FieldSpec kGF2 = FieldSpec::prime(2);

Cover device_cover() {
    return Cover::of_members({SimplicialComplex::from_facets({{0, 1}}), SimplicialComplex::from_facets({{1, 2}}),
                              SimplicialComplex::from_facets({{0}, {2}})});
}

Cover hollow_triangle_edges() {
    return Cover::of_members({SimplicialComplex::from_facets({{0, 1}}), SimplicialComplex::from_facets({{0, 2}}),
                              SimplicialComplex::from_facets({{1, 2}})});
}

Cover interval_cover(std::vector<std::pair<Vertex, Vertex>> ranges) {
    std::vector<SimplicialComplex> members;
    for (auto [a, b] : ranges) members.push_back(path_interval(a, b));
    return Cover::of_members(std::move(members));
}

}  // namespace

TEST_CASE("combinations are enumerated lexicographically", "[theorems]") {
    std::vector<std::vector<std::size_t>> seen;
    detail::for_each_combination(4, 2, [&](const std::vector<std::size_t>& c) { seen.push_back(c); });
    CHECK(seen == std::vector<std::vector<std::size_t>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    std::size_t count = 0;
    detail::for_each_combination(3, 4, [&](const auto&) { ++count; });
    detail::for_each_combination(3, 0, [&](const auto&) { ++count; });
    CHECK(count == 0);
}

TEST_CASE("device family: nerve is a hollow triangle over a contractible path", "[theorems][t1]") {
    const auto cover = device_cover();
    const auto c = verify_conclusions(cover, 0, kGF2, ConclusionMode::T1);
    CHECK(c.nerve_betti[1] == 1);
    CHECK(c.ambient_betti[1] == 0);
    CHECK(c.rank_N_k1 == 1);
    CHECK(c.rank_X_k1 == 0);
    CHECK_FALSE(c.ineq1_holds);
    CHECK_FALSE(c.holds());

    SECTION("k = 0: the hypothesis fails at A3") {
        const auto h = check_t1_hypothesis(cover, 0, kGF2);
        CHECK_FALSE(h.passed);
        REQUIRE(h.violations.size() == 1);
        CHECK(h.violations[0].labels == std::vector<std::string>{"A3"});
        CHECK(h.violations[0].required_degrees == std::vector<int>{0});
        CHECK(h.violations[0].offending == std::vector<std::pair<int, std::size_t>>{{0, 1}});
    }
    SECTION("k = 1: T1 passes and both inequalities hold") {
        const auto h = check_t1_hypothesis(cover, 1, kGF2);
        CHECK(h.passed);
        const auto r = verify_conclusions(cover, 1, kGF2, ConclusionMode::T1);
        CHECK(r.rank_N_k1 == 0);
        CHECK(r.rank_X_k == 0);
        CHECK(r.rank_N_k == 1);
        CHECK(r.holds());
    }
    SECTION("k = 1: HNT fails because A3 is disconnected") {
        const auto h = check_hnt_hypothesis(cover, 1, kGF2);
        CHECK_FALSE(h.passed);
        REQUIRE_FALSE(h.violations.empty());
        CHECK(h.violations[0].labels == std::vector<std::string>{"A3"});
        CHECK(h.violations[0].required_degrees == std::vector<int>{-1, 0, 1});
        const auto r = verify_conclusions(cover, 1, kGF2, ConclusionMode::HNT);
        CHECK_FALSE(r.holds());
        REQUIRE(r.table.size() == 2);
        CHECK(r.table[1].rank_nerve == 1);
        CHECK(r.table[1].rank_ambient == 0);
    }
}

TEST_CASE("closed edges of the hollow triangle form a good cover", "[theorems][hnt]") {
    const auto cover = hollow_triangle_edges();
    for (int k = 0; k <= 2; ++k) {
        INFO("k = " << k);
        CHECK(check_hnt_hypothesis(cover, k, kGF2).passed);
        CHECK(check_t1_hypothesis(cover, k, kGF2).passed);
        const auto r = verify_conclusions(cover, k, kGF2, ConclusionMode::HNT);
        CHECK(r.holds());
        CHECK(r.nerve_betti == r.ambient_betti);
    }
}

TEST_CASE("checkers reject negative k", "[theorems]") {
    CHECK_THROWS_AS(check_t1_hypothesis(device_cover(), -1, kGF2), InvalidInput);
    CHECK_THROWS_AS(verify_conclusions(device_cover(), -1, kGF2, ConclusionMode::T1), InvalidInput);
}

TEST_CASE("HNT hypothesis implies T1 hypothesis", "[theorems][property]") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 80; ++trial) {
        GenParams p;
        p.seed = rng();
        const auto x = random_complex(p);
        const auto cover = random_cover(x, 3, rng());
        for (int k = 0; k <= 2; ++k)
            if (check_hnt_hypothesis(cover, k, kGF2).passed) CHECK(check_t1_hypothesis(cover, k, kGF2).passed);
    }
}

TEST_CASE("T1 violations are reported in degree k - |sigma| + 1", "[theorems]") {
    const auto cover = device_cover();
    const auto h0 = check_t1_hypothesis(cover, 0, kGF2);
    const auto h2 = check_t1_hypothesis(cover, 2, kGF2);
    CHECK(h0.parameter == 0);
    CHECK(h2.parameter == 2);
    for (const auto& v : h2.violations) CHECK(v.required_degrees.front() == 2 - static_cast<int>(v.indices.size()) + 1);
}

TEST_CASE("helly on intervals", "[theorems][helly]") {
    SECTION("pairwise meeting intervals share a point") {
        const auto r = helly_check(interval_cover({{0, 2}, {1, 3}, {2, 4}}), 1, kGF2, Strength::Weak);
        CHECK(r.hypothesis.passed);
        CHECK(r.ambient_ok);
        CHECK(r.predicted_nonempty);
        CHECK(r.actual_intersection_nonempty);
    }
    SECTION("a disjoint pair breaks the hypothesis") {
        const auto r = helly_check(interval_cover({{0, 1}, {1, 2}, {3, 4}, {0, 4}}), 1, kGF2, Strength::Weak);
        CHECK_FALSE(r.hypothesis.passed);
        CHECK_FALSE(r.predicted_nonempty);
        CHECK_FALSE(r.actual_intersection_nonempty);
    }
    SECTION("device family: no prediction, empty intersection") {
        const auto r = helly_check(device_cover(), 1, kGF2, Strength::Weak);
        CHECK_FALSE(r.hypothesis.passed);
        CHECK_FALSE(r.actual_intersection_nonempty);
    }
    SECTION("a loop in the union defeats the ambient surrogate") {
        const auto r = helly_check(hollow_triangle_edges(), 1, kGF2, Strength::Weak);
        CHECK(r.hypothesis.passed);
        CHECK_FALSE(r.ambient_ok);
        CHECK_FALSE(r.predicted_nonempty);
        CHECK_FALSE(r.actual_intersection_nonempty);
    }
    SECTION("too few members") {
        const auto two = interval_cover({{0, 2}, {1, 3}});
        CHECK_THROWS_AS(helly_check(two, 1, kGF2, Strength::Weak), InvalidInput);
        CHECK_THROWS_AS(helly_check(interval_cover({{0, 2}, {1, 3}, {2, 4}}), 2, kGF2, Strength::Weak),
                        InvalidInput);
        CHECK_THROWS_AS(helly_check(interval_cover({{0, 2}, {1, 3}, {2, 4}}), 0, kGF2, Strength::Weak),
                        InvalidInput);
    }
}

TEST_CASE("helly strong implies helly weak", "[theorems][helly][property]") {
    Prng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const auto cover = random_interval_family(rng);
        const auto strong = helly_check(cover, 1, kGF2, Strength::Strong);
        const auto weak = helly_check(cover, 1, kGF2, Strength::Weak);
        if (strong.hypothesis.passed) CHECK(weak.hypothesis.passed);
        if (weak.predicted_nonempty) CHECK(weak.actual_intersection_nonempty);
    }
}

TEST_CASE("rainbow examples", "[theorems][rainbow]") {
    SECTION("triangle with one extra vertex") {
        ColoredComplex k(SimplicialComplex::from_facets({{0, 1, 2}, {1, 2, 3}}), {{0, 1}, {1, 2}, {2, 3}, {3, 1}});
        const auto r = rainbow_check(k, kGF2, Strength::Weak);
        CHECK(r.hypothesis.passed);
        CHECK(r.predicted_rainbow);
        REQUIRE(r.witness);
        CHECK(*r.witness == Simplex{0, 1, 2});
    }
    SECTION("two monochromatic edges") {
        ColoredComplex k(SimplicialComplex::from_facets({{0, 2}, {1, 3}}), {{0, 1}, {1, 2}, {2, 1}, {3, 2}});
        const auto r = rainbow_check(k, kGF2, Strength::Weak);
        CHECK_FALSE(r.hypothesis.passed);
        REQUIRE(r.hypothesis.violations.size() == 1);
        CHECK(r.hypothesis.violations[0].labels == std::vector<std::string>{"color 1", "color 2"});
        CHECK_FALSE(r.witness);
    }
    SECTION("an empty class fails at s = 1") {
        ColoredComplex k(SimplicialComplex::from_facets({{0, 1}}), {{0, 1}, {1, 1}}, 2, true);
        const auto r = rainbow_check(k, kGF2, Strength::Weak);
        CHECK_FALSE(r.hypothesis.passed);
        CHECK(r.hypothesis.violations[0].indices == std::vector<std::size_t>{2});
        CHECK_FALSE(r.witness);
    }
    SECTION("witness is the lexicographically first rainbow simplex") {
        ColoredComplex k(SimplicialComplex::from_facets({{0, 3}, {1, 2}, {0, 1}}), {{0, 1}, {1, 2}, {2, 1}, {3, 2}});
        CHECK(*rainbow_bruteforce(k) == Simplex{0, 1});
    }
}

TEST_CASE("rainbow strong implies weak, and weak passes have witnesses", "[theorems][rainbow][property]") {
    Prng rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        GenParams p;
        p.seed = rng();
        const auto k = random_complex(p);
        const auto colored = random_coloring(k, 1 + static_cast<int>(uniform_index(rng, 3)), rng);
        const auto strong = rainbow_check(colored, kGF2, Strength::Strong);
        const auto weak = rainbow_check(colored, kGF2, Strength::Weak);
        if (strong.hypothesis.passed) CHECK(weak.hypothesis.passed);
        if (weak.hypothesis.passed) CHECK(weak.witness.has_value());
        CHECK(weak.witness == rainbow_bruteforce(colored));
    }
}
