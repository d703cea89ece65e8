#pragma once

#include <cstdint>
#include <vector>

#include "curvelab/error.hpp"

namespace curvelab {

/// Depth-n combinatorial model of the sphere with the punctures
/// infinity, b_0, ..., b_{m-1} (m = 2^n) on the equator.  Between
/// consecutive punctures lie the gaps g_0 ... g_m:
///
///   infinity  g_0  b_0  g_1  b_1 ... g_{m-1}  b_{m-1}  g_m  (back to infinity)
///
/// Each hemisphere is an ideal polygon whose vertices are the punctures
/// and whose sides are the gaps.
struct EquatorModel {
    uint32_t depth = 0;
    uint32_t block_count = 1;  // 2^depth
    uint32_t gap_count = 2;    // block_count + 1

    friend bool operator==(const EquatorModel&, const EquatorModel&) = default;
};

inline constexpr uint32_t kMaxDepth = 16;

struct GapId {
    uint32_t index = 0;
    friend bool operator==(const GapId&, const GapId&) = default;
};

inline EquatorModel make_model(uint32_t depth, uint32_t max_depth = kMaxDepth) {
    if (depth > max_depth)
        fail(errc::resource_limit,
             "depth " + std::to_string(depth) + " exceeds maximum " + std::to_string(max_depth));
    EquatorModel m;
    m.depth = depth;
    m.block_count = 1u << depth;
    m.gap_count = m.block_count + 1;
    return m;
}

/// Injective, order-preserving map of depth-n gaps into depth-(n+1) gaps.
/// Block b_i splits into two blocks with one new gap strictly between
/// them; old gaps keep their flanking punctures.  In indices: depth-n gap
/// g_i maps to depth-(n+1) gap g_{2i}, and the odd-index gaps at depth
/// n+1 are the fresh ones interior to the split blocks.
struct RefinementMap {
    EquatorModel from;
    EquatorModel to;
    std::vector<uint32_t> gap_image;  // indexed by depth-n gap

    GapId apply(GapId g) const {
        if (g.index >= gap_image.size()) fail(errc::out_of_range, "gap beyond model");
        return GapId{gap_image[g.index]};
    }
};

inline RefinementMap refine(const EquatorModel& model, uint32_t max_depth = kMaxDepth) {
    if (model.depth >= max_depth) fail(errc::resource_limit, "refine at maximum depth");
    RefinementMap r;
    r.from = model;
    r.to = make_model(model.depth + 1, max_depth);
    r.gap_image.resize(model.gap_count);
    for (uint32_t i = 0; i < model.gap_count; ++i) r.gap_image[i] = 2 * i;
    return r;
}

/// Composition of single-step refinements from one depth to a deeper one.
inline RefinementMap refine_to(const EquatorModel& model, uint32_t target_depth,
                               uint32_t max_depth = kMaxDepth) {
    if (target_depth < model.depth) fail(errc::invalid_argument, "refine_to shallower depth");
    RefinementMap r;
    r.from = model;
    r.to = make_model(target_depth, max_depth);
    r.gap_image.resize(model.gap_count);
    uint32_t shift = target_depth - model.depth;
    for (uint32_t i = 0; i < model.gap_count; ++i) r.gap_image[i] = i << shift;
    return r;
}

} // namespace curvelab
