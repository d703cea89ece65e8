#include <catch2/catch_amalgamated.hpp>

#include "curvelab/intersect.hpp"
#include "support/oracles.hpp"

using namespace curvelab;
using namespace curvelab::testing;

namespace {
const EquatorModel d1 = make_model(1);
const EquatorModel d2 = make_model(2);
}

TEST_CASE("a curve is disjoint from itself and from its reverse") {
    Curve a = make_loop(d1, Hemisphere::North, {0, 1});
    CHECK(intersection_number(a, a) == 0);
    CHECK(are_disjoint(a, reverse_loop(a)));
    Curve s = make_loop(d2, Hemisphere::South, {1, 3, 2, 4});
    if (s.simple) {
        CHECK(intersection_number(s, s) == 0);
        CHECK(intersection_number(s, reverse_loop(s)) == 0);
    }
}

TEST_CASE("neighboring block loops are disjoint") {
    Curve a = make_loop(d1, Hemisphere::North, {0, 1});
    Curve b = make_loop(d1, Hemisphere::North, {1, 2});
    CHECK(intersection_number(a, b) == 0);
}

TEST_CASE("frozen pair values verified by hand and by brute force") {
    // opposite-hemisphere twins around b0 cross twice
    Curve a = make_loop(d1, Hemisphere::North, {0, 1});
    Curve b = make_loop(d1, Hemisphere::South, {0, 1});
    CHECK(intersection_number(a, b) == 2);
    CHECK(intersection_number(b, a) == 2);
    CHECK(*brute_force_min_crossings(a, b) == 2);

    // a one-crossing loop around b0 misses the two-crossing form
    Curve c = make_loop(d1, Hemisphere::South, {1});
    CHECK(intersection_number(a, c) == 0);
    CHECK(*brute_force_min_crossings(a, c) == 0);

    // a south one-crossing loop must cross a chord spanning past it
    Curve far_loop = make_loop(d2, Hemisphere::North, {0, 3});
    CHECK(intersection_number(make_loop(d2, Hemisphere::South, {1}), far_loop) == 1);
    // while the north fan strip slips past everything here
    Curve strip = make_loop(d2, Hemisphere::North, {0});
    CHECK(intersection_number(strip, far_loop) == 0);
}

TEST_CASE("intersection number is symmetric and refine-invariant on random pairs") {
    std::mt19937_64 rng(20260810);
    const EquatorModel* models[2] = {&d1, &d2};
    int done = 0;
    while (done < 60) {
        const EquatorModel& m = *models[done % 2];
        auto wa = random_tight_word(m, 1 + rng() % 6, rng);
        auto wb = random_tight_word(m, 1 + rng() % 6, rng);
        Curve a, b;
        try {
            a = make_loop(m, rng() % 2 ? Hemisphere::North : Hemisphere::South, wa);
            b = make_loop(m, rng() % 2 ? Hemisphere::North : Hemisphere::South, wb);
        } catch (const error&) {
            continue;
        }
        if (!a.simple || !b.simple) continue;
        size_t ab = intersection_number(a, b);
        CHECK(ab == intersection_number(b, a));
        auto r = refine(m);
        CHECK(intersection_number(refine_curve(a, r), refine_curve(b, r)) == ab);
        ++done;
    }
}

TEST_CASE("records along b are ordered and count-consistent") {
    Curve a = make_loop(d1, Hemisphere::North, {0, 1});
    Curve b = make_loop(d1, Hemisphere::South, {0, 1});
    auto recs = intersections_along(b, a);
    CHECK(recs.size() == intersection_number(a, b));
    for (size_t i = 1; i < recs.size(); ++i)
        CHECK(std::pair(recs[i - 1].b_arc, recs[i - 1].b_rank) <
              std::pair(recs[i].b_arc, recs[i].b_rank));
    // disjoint pair: empty list
    Curve c = make_loop(d1, Hemisphere::North, {1, 2});
    CHECK(intersections_along(c, a).empty());
}

TEST_CASE("splice at the first crossing along b reproduces the frozen example") {
    Curve a = make_loop(d1, Hemisphere::North, {0, 1});
    Curve b = make_loop(d1, Hemisphere::South, {0, 1});
    auto recs = intersections_along(b, a);
    REQUIRE_FALSE(recs.empty());
    auto sp = SplicePoint::at(recs.front());
    CHECK(sp.prefix_of_b + sp.prefix_of_a >= 1);
    Curve s = splice(b, a, sp);
    CHECK(s.kind() == TerminalKind::Loop);
    CHECK(s.simple);
    // frozen: the first crossing sits on b's initial arc against a's middle arc
    CHECK(s.word.start == Hemisphere::South);
    CHECK(s.word.crossings == std::vector<uint32_t>{0});
    // splice output is disjoint from the parent it splits off
    CHECK(are_disjoint(s, a));
}

TEST_CASE("splice length bookkeeping before tightening") {
    Curve a = make_loop(d2, Hemisphere::South, {1, 3});
    Curve b = make_loop(d2, Hemisphere::North, {0, 3});
    auto recs = intersections_along(b, a);
    for (const auto& r : recs) {
        auto sp = SplicePoint::at(r);
        CHECK(b.word.arc_hemisphere(sp.prefix_of_b) == a.word.arc_hemisphere(sp.prefix_of_a));
        CHECK(sp.prefix_of_b <= b.size());
        CHECK(sp.prefix_of_a <= a.size());
    }
}

TEST_CASE("model mismatch is rejected") {
    Curve a = make_loop(d1, Hemisphere::North, {0, 1});
    Curve b = make_loop(d2, Hemisphere::North, {0, 1});
    CHECK_THROWS_AS(intersection_number(a, b), error);
}

TEST_CASE("combinatorial count equals brute-force minimum on random small pairs") {
    std::mt19937_64 rng(99331144);
    int done = 0;
    while (done < 40) {
        auto wa = random_tight_word(d1, 1 + rng() % 5, rng);
        auto wb = random_tight_word(d1, 1 + rng() % 5, rng);
        Curve a, b;
        try {
            a = make_loop(d1, rng() % 2 ? Hemisphere::North : Hemisphere::South, wa);
            b = make_loop(d1, rng() % 2 ? Hemisphere::North : Hemisphere::South, wb);
        } catch (const error&) {
            continue;
        }
        if (!a.simple || !b.simple) continue;
        auto bf = brute_force_min_crossings(a, b);
        if (!bf) continue;
        INFO(oriented_key(a.word) << " vs " << oriented_key(b.word));
        CHECK(intersection_number(a, b) == *bf);
        ++done;
    }
}
