#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "curvelab/curve.hpp"
#include "curvelab/diagram.hpp"

namespace curvelab {

/// Lazy producer of an unbounded crossing sequence standing in for a
/// long ray.  Letters are committed at `base_depth`; prefixes embed to
/// deeper models on demand, and a longer prefix always extends a
/// shorter one.  A generator with an empty period is a plugin prefix
/// and is exhausted past its preamble.
struct LongRayGenerator {
    std::string name;
    Hemisphere start = Hemisphere::South;
    uint32_t base_depth = 2;
    std::vector<uint32_t> preamble;
    std::vector<uint32_t> period;

    std::vector<uint32_t> letters(size_t k) const {
        std::vector<uint32_t> out;
        out.reserve(k);
        for (size_t i = 0; i < k; ++i) {
            if (i < preamble.size()) {
                out.push_back(preamble[i]);
            } else if (!period.empty()) {
                out.push_back(period[(i - preamble.size()) % period.size()]);
            } else {
                fail(errc::resource_limit,
                     "generator '" + name + "' exhausted at " + std::to_string(i) + " crossings");
            }
        }
        return out;
    }

    size_t capacity() const { return period.empty() ? preamble.size() : SIZE_MAX; }

    /// Depth sufficient for the first k crossings (constant for the
    /// committed encodings; plugins may re-declare by widening).
    uint32_t depth_for(size_t) const { return base_depth; }

    /// Number of distinct equatorial segments the full ray visits.
    size_t span() const {
        std::set<uint32_t> gaps(preamble.begin(), preamble.end());
        gaps.insert(period.begin(), period.end());
        return gaps.size();
    }

    Curve prefix(size_t k) const {
        auto m = make_model(depth_for(k));
        Curve c = make_curve(CrossingWord{m, start, letters(k), Terminal::truncated()});
        if (!c.simple)
            fail(errc::invalid_argument, "generator '" + name + "' emits a non-simple prefix");
        if (c.size() != k)
            fail(errc::invalid_argument, "generator '" + name + "' emits a reducible prefix");
        return c;
    }

    /// Prefix embedded into a model at least as deep as the native one.
    Curve prefix_at(size_t k, uint32_t depth) const {
        Curve c = prefix(k);
        if (depth < c.word.model.depth)
            fail(errc::depth_mismatch,
                 "generator prefix needs depth " + std::to_string(c.word.model.depth));
        if (depth == c.word.model.depth) return c;
        return refine_curve(c, refine_to(c.word.model, depth));
    }
};

namespace alpha_detail {

/// The committed master word: a depth-3 tour whose prefix crosses every
/// canonical short ray of the depth-2 budget window (found by exhaustive
/// search over simple canonical extensions), followed by the spiral
/// descending into the leftmost depth-3 block.
inline const std::vector<uint32_t>& master_word() {
    static const std::vector<uint32_t> w = {2, 8, 2, 6, 2, 3, 4, 2, 8, 6, 7, 8,
                                            6, 8, 2, 4, 6, 2, 8, 2, 8, 0, 1};
    return w;
}

inline std::vector<uint32_t> master_slice(size_t len, uint32_t shift_up) {
    const auto& w = master_word();
    std::vector<uint32_t> out(w.begin(), w.begin() + len);
    for (auto& g : out) g <<= shift_up;
    return out;
}

inline std::vector<uint32_t> master_slice_shallow(size_t len, uint32_t shift_down) {
    const auto& w = master_word();
    std::vector<uint32_t> out(w.begin(), w.begin() + len);
    for (auto& g : out) g >>= shift_down;
    return out;
}

} // namespace alpha_detail

/// The committed alpha family: nested rays sharing the master beginning,
/// each resting into a periodic spiral at its own scale.  alpha_k's
/// committed length long(alpha_k) = span() grows strictly in k, and each
/// member begins like the previous one.
inline LongRayGenerator alpha_member(uint32_t k) {
    using namespace alpha_detail;
    LongRayGenerator g;
    g.start = Hemisphere::South;
    switch (k) {
        case 1:
            g.name = "alpha:1";
            g.base_depth = 2;
            g.preamble = master_slice_shallow(5, 1);  // [1,4,1,3,1]
            g.period = {2, 3};
            break;
        case 2:
            g.name = "alpha:2";
            g.base_depth = 3;
            g.preamble = master_slice(23, 0);
            g.period = {0, 1};
            break;
        case 3:
            g.name = "alpha:3";
            g.base_depth = 4;
            g.preamble = master_slice(23, 1);
            g.period = {1, 2};
            break;
        case 4:
            g.name = "alpha:4";
            g.base_depth = 4;
            g.preamble = master_slice(23, 1);
            g.period = {3, 4, 0, 1};
            break;
        default:
            fail(errc::out_of_range, "alpha family committed for k in 1..4");
    }
    return g;
}

/// The limit ray: the full master tour descending into the leftmost
/// block spiral.
inline LongRayGenerator alpha_generator() {
    LongRayGenerator g = alpha_member(2);
    g.name = "alpha";
    return g;
}

/// Deliberately broken encoding for the negative control: the sealing
/// tour is amputated after its ninth crossing and the ray drops into a
/// spiral early, leaking escape corridors.
inline LongRayGenerator alpha_corrupted() {
    LongRayGenerator g;
    g.name = "alpha-corrupt";
    g.start = Hemisphere::South;
    g.base_depth = 3;
    g.preamble = alpha_detail::master_slice(9, 0);
    g.period = {6, 7};
    return g;
}

/// Spiral falling into a single block: winds the two gaps flanking the
/// block forever, never filling anything (a short ray to any other
/// block avoids it).  The standard non-example.
inline LongRayGenerator spiral_generator(uint32_t block, uint32_t depth = 2) {
    auto m = make_model(depth);
    if (block + 1 >= m.block_count)
        fail(errc::out_of_range, "spiral committed for blocks 0..2^depth-2");
    LongRayGenerator g;
    g.name = "spiral-b" + std::to_string(block) + "d" + std::to_string(depth);
    g.start = Hemisphere::South;
    g.base_depth = depth;
    g.period = {block + 1, block};
    return g;
}

/// Four pairwise-disjoint spirals descending into the four even blocks
/// of the depth-3 model, committed as the clique example.
inline std::array<LongRayGenerator, 4> clique4_generators() {
    std::array<LongRayGenerator, 4> out;
    for (uint32_t j = 0; j < 4; ++j) {
        out[j].name = "clique4-" + std::string(1, char('a' + j));
        out[j].start = Hemisphere::South;
        out[j].base_depth = 3;
        out[j].period = {2 * j + 1, 2 * j};
    }
    return out;
}

inline size_t alpha_length(uint32_t k) { return alpha_member(k).span(); }

/// alpha_k's committed beginning (its first long(alpha_k) crossings).
inline Curve alpha_k_curve(uint32_t k) {
    auto g = alpha_member(k);
    return g.prefix(g.span());
}

} // namespace curvelab
