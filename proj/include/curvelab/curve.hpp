#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "curvelab/equator.hpp"
#include "curvelab/error.hpp"

namespace curvelab {

enum class Hemisphere : uint8_t { North, South };

inline Hemisphere other(Hemisphere h) {
    return h == Hemisphere::North ? Hemisphere::South : Hemisphere::North;
}

enum class TerminalKind : uint8_t { Loop, ShortRay, Truncated };

struct Terminal {
    TerminalKind kind = TerminalKind::Loop;
    uint32_t block = 0;  // meaningful for ShortRay only

    static Terminal loop() { return {TerminalKind::Loop, 0}; }
    static Terminal short_ray(uint32_t b) { return {TerminalKind::ShortRay, b}; }
    static Terminal truncated() { return {TerminalKind::Truncated, 0}; }

    friend bool operator==(const Terminal&, const Terminal&) = default;
};

/// A curve code: the sequence of gaps an arc from infinity crosses.
/// The arc starts at infinity inside `start` and alternates hemispheres
/// with each crossing; signed crossing directions are derived from that
/// parity rather than stored.
struct CrossingWord {
    EquatorModel model;
    Hemisphere start = Hemisphere::North;
    std::vector<uint32_t> crossings;
    Terminal terminal;

    friend bool operator==(const CrossingWord&, const CrossingWord&) = default;

    /// Hemisphere of arc j; arcs are numbered 0..crossings.size(), with
    /// arc j running from crossing j-1 to crossing j (anchors at the ends).
    Hemisphere arc_hemisphere(size_t j) const { return (j % 2 == 0) ? start : other(start); }

    /// Hemisphere the curve occupies after all crossings.
    Hemisphere end_hemisphere() const { return arc_hemisphere(crossings.size()); }
};

enum class crossing_dir : uint8_t { north_to_south, south_to_north };

inline crossing_dir direction_at(const CrossingWord& w, size_t i) {
    return w.arc_hemisphere(i) == Hemisphere::North ? crossing_dir::north_to_south
                                                    : crossing_dir::south_to_north;
}

struct SignedCrossing {
    GapId gap;
    crossing_dir dir;
    friend bool operator==(const SignedCrossing&, const SignedCrossing&) = default;
};

/// A validated crossing word with kind tag.  `canonical` is set only by
/// tighten(); a canonical curve is bigon-free, and `simple` / `essential`
/// are then meaningful.
struct Curve {
    CrossingWord word;
    bool canonical = false;
    bool simple = false;
    bool essential = false;

    TerminalKind kind() const { return word.terminal.kind; }
    size_t size() const { return word.crossings.size(); }

    friend bool operator==(const Curve&, const Curve&) = default;
};

namespace detail {

inline void check_ranges(const CrossingWord& w) {
    for (uint32_t g : w.crossings)
        if (g >= w.model.gap_count)
            fail(errc::out_of_range, "gap g" + std::to_string(g) + " out of range at depth " +
                                         std::to_string(w.model.depth));
    if (w.terminal.kind == TerminalKind::ShortRay && w.terminal.block >= w.model.block_count)
        fail(errc::out_of_range, "no block b" + std::to_string(w.terminal.block) + " at depth " +
                                     std::to_string(w.model.depth));
}

/// Remove equator bigons: any two consecutive crossings of the same gap
/// cancel; repeat until none remain.  Order independent (stack reduction).
inline std::vector<uint32_t> reduce_word(const std::vector<uint32_t>& xs) {
    std::vector<uint32_t> out;
    out.reserve(xs.size());
    for (uint32_t g : xs) {
        if (!out.empty() && out.back() == g)
            out.pop_back();
        else
            out.push_back(g);
    }
    return out;
}

/// Full reduction to the geodesic-surrogate word.  Besides equator
/// bigons, a crossing of a gap adjacent to the puncture an end anchors
/// at cuts off a puncture-free corner there, so the end slides across
/// and the crossing cancels: leading crossings of the infinity-adjacent
/// gaps always reduce (flipping the start hemisphere), and so do
/// trailing ones at a loop's far end or at a short ray's block.
inline CrossingWord full_reduce(CrossingWord w) {
    const uint32_t gm = w.model.gap_count - 1;
    bool changed = true;
    while (changed) {
        changed = false;
        auto r = reduce_word(w.crossings);
        if (r.size() != w.crossings.size()) {
            w.crossings = std::move(r);
            changed = true;
        }
        size_t drop = 0;
        while (drop < w.crossings.size() &&
               (w.crossings[drop] == 0 || w.crossings[drop] == gm)) {
            ++drop;
            w.start = other(w.start);
        }
        if (drop) {
            w.crossings.erase(w.crossings.begin(), w.crossings.begin() + drop);
            changed = true;
        }
        if (w.terminal.kind == TerminalKind::Loop) {
            while (!w.crossings.empty() &&
                   (w.crossings.back() == 0 || w.crossings.back() == gm)) {
                w.crossings.pop_back();
                changed = true;
            }
        } else if (w.terminal.kind == TerminalKind::ShortRay) {
            const uint32_t b = w.terminal.block;
            while (!w.crossings.empty() &&
                   (w.crossings.back() == b || w.crossings.back() == b + 1)) {
                w.crossings.pop_back();
                changed = true;
            }
        }
    }
    return w;
}

/// A loop divides the blocks into the two sides of the curve; it is
/// essential iff both sides are nonempty.  Walking the equator east from
/// infinity, the side flips at each crossing event, so block b_i sits on
/// the side given by the parity of the crossings on g_0..g_i.
inline bool loop_separates_blocks(const CrossingWord& w) {
    std::vector<uint32_t> on_gap(w.model.gap_count, 0);
    for (uint32_t g : w.crossings) ++on_gap[g];
    uint32_t side[2] = {0, 0};
    uint32_t parity = 0;
    for (uint32_t b = 0; b < w.model.block_count; ++b) {
        parity = (parity + on_gap[b]) % 2;  // crossings on g_b lie west of block b
        ++side[parity];
    }
    return side[0] > 0 && side[1] > 0;
}

} // namespace detail

bool is_simple(const CrossingWord& word);  // diagram.hpp

/// Structural validation; no tightening.  Rejects out-of-range indices
/// and loops with an empty word (they bound a puncture-free disk).
inline Curve validate(const CrossingWord& word) {
    detail::check_ranges(word);
    if (word.terminal.kind == TerminalKind::Loop && word.crossings.empty())
        fail(errc::non_essential, "empty loop word is contractible");
    Curve c;
    c.word = word;
    return c;
}

/// Reduction of a validated curve to its canonical word; `simple` and
/// `essential` are computed on the result.  A loop whose reduction
/// empties is reported NonEssential.
inline Curve tighten(const Curve& curve) {
    CrossingWord w = detail::full_reduce(curve.word);
    if (w.terminal.kind == TerminalKind::Loop && w.crossings.empty())
        fail(errc::non_essential, "loop reduces to the empty word");
    Curve out;
    out.word = w;
    out.canonical = true;
    out.simple = is_simple(w);
    out.essential = w.terminal.kind == TerminalKind::ShortRay ||
                    (w.terminal.kind == TerminalKind::Loop && detail::loop_separates_blocks(w));
    return out;
}

inline Curve make_curve(const CrossingWord& word) { return tighten(validate(word)); }

inline Curve make_loop(const EquatorModel& m, Hemisphere h, std::vector<uint32_t> xs) {
    return make_curve(CrossingWord{m, h, std::move(xs), Terminal::loop()});
}

inline Curve make_short_ray(const EquatorModel& m, Hemisphere h, std::vector<uint32_t> xs,
                            uint32_t block) {
    return make_curve(CrossingWord{m, h, std::move(xs), Terminal::short_ray(block)});
}

inline Curve make_truncated(const EquatorModel& m, Hemisphere h, std::vector<uint32_t> xs) {
    return make_curve(CrossingWord{m, h, std::move(xs), Terminal::truncated()});
}

/// First k signed crossings from the infinity anchor.
inline std::vector<SignedCrossing> k_prefix(const CrossingWord& w, size_t k) {
    if (w.crossings.size() < k)
        fail(errc::too_short, "word has " + std::to_string(w.crossings.size()) +
                                  " crossings, need " + std::to_string(k));
    std::vector<SignedCrossing> out;
    out.reserve(k);
    for (size_t i = 0; i < k; ++i)
        out.push_back(SignedCrossing{GapId{w.crossings[i]}, direction_at(w, i)});
    return out;
}

/// Push a curve through a refinement map; a relabeling of gaps, hence
/// crossing count, simplicity and canonical form are all preserved.
inline Curve refine_curve(const Curve& c, const RefinementMap& map) {
    if (c.word.model != map.from) fail(errc::depth_mismatch, "curve not at map.from depth");
    Curve out = c;
    out.word.model = map.to;
    for (auto& g : out.word.crossings) g = map.gap_image[g];
    return out;
}

/// Reverse orientation of a loop: traverse from the other infinity end.
inline Curve reverse_loop(const Curve& c) {
    if (c.kind() != TerminalKind::Loop) fail(errc::invalid_argument, "reverse of a non-loop");
    Curve out = c;
    out.word.start = c.word.end_hemisphere();
    std::vector<uint32_t> xs(c.word.crossings.rbegin(), c.word.crossings.rend());
    out.word.crossings = std::move(xs);
    return out;
}

/// Embed a word into a deeper model by the canonical refinement chain.
inline CrossingWord embed_word(const CrossingWord& w, uint32_t depth) {
    if (w.model.depth == depth) return w;
    if (w.model.depth > depth) fail(errc::depth_mismatch, "cannot embed into a shallower model");
    auto map = refine_to(w.model, depth);
    CrossingWord out = w;
    out.model = map.to;
    for (auto& g : out.crossings) g = map.gap_image[g];
    return out;
}

/// Prefix equality of signed crossings after embedding both words to a
/// common depth.
inline bool k_begins_like(const CrossingWord& x, const CrossingWord& y, size_t k) {
    uint32_t d = std::max(x.model.depth, y.model.depth);
    CrossingWord xe = embed_word(x, d);
    CrossingWord ye = embed_word(y, d);
    if (xe.crossings.size() < k || ye.crossings.size() < k)
        fail(errc::too_short, "fewer than k crossings");
    return k_prefix(xe, k) == k_prefix(ye, k);
}

/// Stable text key for an oriented canonical word.
inline std::string oriented_key(const CrossingWord& w) {
    std::string s;
    s += (w.start == Hemisphere::North) ? 'N' : 'S';
    switch (w.terminal.kind) {
        case TerminalKind::Loop: s += 'L'; break;
        case TerminalKind::ShortRay: s += 'R' + std::to_string(w.terminal.block); break;
        case TerminalKind::Truncated: s += 'T'; break;
    }
    for (uint32_t g : w.crossings) {
        s += ' ';
        s += std::to_string(g);
    }
    return s;
}

/// Key that quotients loop orientation (graph vertices are unoriented).
inline std::string unoriented_key(const Curve& c) {
    std::string k = oriented_key(c.word);
    if (c.kind() != TerminalKind::Loop) return k;
    std::string r = oriented_key(reverse_loop(c).word);
    return k < r ? k : r;
}

} // namespace curvelab
