#include <catch2/catch_amalgamated.hpp>

#include "curvelab/boundary.hpp"
#include "curvelab/generators.hpp"
#include "curvelab/intersect.hpp"

using namespace curvelab;

TEST_CASE("alpha emits simple nested prefixes that extend each other") {
    auto gen = alpha_generator();
    Curve prev;
    for (size_t k = 1; k <= 24; ++k) {
        Curve p = gen.prefix(k);
        CHECK(p.simple);
        CHECK(p.size() == k);
        if (k > 1) CHECK(k_begins_like(p.word, prev.word, k - 1));
        prev = p;
    }
    // embedding to a deeper model preserves the prefix relation
    Curve deep = gen.prefix_at(6, 4);
    CHECK(deep.word.model.depth == 4);
    CHECK(k_begins_like(deep.word, gen.prefix(6).word, 6));
}

TEST_CASE("alpha_k lengths grow strictly") {
    for (uint32_t k = 1; k <= 4; ++k) {
        CHECK(alpha_length(k + 1) > alpha_length(k));
        CHECK(alpha_k_curve(k).size() == alpha_length(k));
    }
}

TEST_CASE("spiral generator winds into its block and misses other rays") {
    auto gen = spiral_generator(0, 2);
    Curve p = gen.prefix(9);
    CHECK(p.simple);
    // short ray straight to b3 avoids the b0 spiral
    Curve r = make_short_ray(make_model(2), Hemisphere::South, {}, 3);
    CHECK(are_disjoint(r, p));
    // but the ray to b0 must cross it
    Curve r0 = make_short_ray(make_model(2), Hemisphere::South, {}, 0);
    CHECK_FALSE(are_disjoint(r0, p));
}

TEST_CASE("plugin without a period exhausts") {
    LongRayGenerator g{"stub", Hemisphere::North, 2, {1, 3}, {}};
    CHECK(g.prefix(2).size() == 2);
    CHECK_THROWS_AS(g.prefix(3), error);
}

TEST_CASE("clique4 members stay pairwise disjoint at growing depth and truncation") {
    auto mems = clique4_generators();
    std::vector<LongRayGenerator> v(mems.begin(), mems.end());
    auto rep = verify_clique(v, {2, 3, 4, 5, 6}, 16);
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) INFO(i << "," << j << " -> " << rep.pairwise[i][j]);
    CHECK(rep.clique);
    // singleton family is a clique without any partner
    auto solo = verify_clique({alpha_generator()}, {2, 4}, 12);
    CHECK(solo.clique);
}

TEST_CASE("duplicated member is trivially disjoint from itself") {
    auto rep = verify_clique({alpha_generator(), alpha_generator()}, {2, 3}, 12);
    CHECK(rep.clique);
}
