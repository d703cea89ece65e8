#include <catch2/catch_amalgamated.hpp>

#include "curvelab/diagram.hpp"

using namespace curvelab;

namespace {
const EquatorModel d1 = make_model(1);
const EquatorModel d2 = make_model(2);
}

TEST_CASE("words of length <= 1 are simple") {
    CHECK(is_simple(CrossingWord{d1, Hemisphere::North, {}, Terminal::short_ray(0)}));
    CHECK(is_simple(CrossingWord{d1, Hemisphere::North, {1}, Terminal::loop()}));
    CHECK(is_simple(CrossingWord{d1, Hemisphere::South, {2}, Terminal::truncated()}));
}

TEST_CASE("double wind around b0 is not simple") {
    CHECK_FALSE(is_simple(CrossingWord{d1, Hemisphere::North, {0, 1, 0, 1}, Terminal::loop()}));
}

TEST_CASE("bigon words inherit simplicity of their reduction") {
    // embedded wiggle: reduces to a single crossing
    CHECK(is_simple(CrossingWord{d1, Hemisphere::North, {0, 0, 0}, Terminal::short_ray(0)}));
    // double wind with an inserted bigon stays non-simple
    CHECK_FALSE(is_simple(CrossingWord{d1, Hemisphere::North, {0, 2, 2, 1, 0, 1}, Terminal::loop()}));
}

TEST_CASE("wrap of b1 with a south exit forces a crossing, loop and closure") {
    // as a loop: both event orders force one self-intersection
    CHECK_FALSE(is_simple(CrossingWord{d2, Hemisphere::North, {1, 2, 1}, Terminal::loop()}));
    // as a truncated prefix the free end tucks away: embeddable
    CHECK(is_simple(CrossingWord{d2, Hemisphere::North, {1, 2, 1}, Terminal::truncated()}));
    // the south-exit wrap stays embeddable while dangling
    CHECK(is_simple(CrossingWord{d2, Hemisphere::South, {1, 3, 1}, Terminal::truncated()}));
    // ... and its loop closure self-crosses
    CHECK_FALSE(is_simple(CrossingWord{d2, Hemisphere::South, {1, 3, 1}, Terminal::loop()}));
}

TEST_CASE("per-gap order: spiral prefixes nest monotonically") {
    // inward spiral around b0: g0 g1 g0 g1 ... as a truncated ray
    CrossingWord w{d1, Hemisphere::North, {0, 1, 0, 1, 0, 1}, Terminal::truncated()};
    CHECK(is_simple(w));
    ChordDiagram d({&w});
    // successive g0 events nest toward b0 (increasing beta on gap 0)
    const auto& order0 = d.gap_order()[0];
    REQUIRE(order0.size() == 3);
    CHECK(d.events()[order0[0]].pos == 0);
    CHECK(d.events()[order0[1]].pos == 2);
    CHECK(d.events()[order0[2]].pos == 4);
}

TEST_CASE("diagram rejects mixed depths") {
    CrossingWord a{d1, Hemisphere::North, {0, 1}, Terminal::loop()};
    CrossingWord b{d2, Hemisphere::North, {0, 1}, Terminal::loop()};
    CHECK_THROWS_AS(ChordDiagram({&a, &b}), error);
}
