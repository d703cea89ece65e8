#pragma once

// Test-only oracles, independent of the library's per-gap ordering rule.
//
// A drawing of a curve set with fixed crossing words is determined by a
// linear order of the events on each gap (fan orders at shared anchors
// never force crossings).  Minimal position is the drawing minimizing
// transverse crossings subject to each curve staying embedded, so brute
// force over all per-gap orders gives the geometric intersection number
// for small instances.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "curvelab/curve.hpp"
#include "curvelab/diagram.hpp"

namespace curvelab::testing {

namespace bf {

struct Endpoint {
    // boundary coordinate pieces: item rank plus an order slot on gaps,
    // fan offsets at anchors mirror the library's assignment
    double beta = 0;
};

struct BChord {
    uint32_t curve;
    Hemisphere hem;
    double b1, b2;
};

inline bool interleaved(double a1, double a2, double b1, double b2) {
    auto inside = [&](double x) { return a1 < a2 ? (x > a1 && x < a2) : (x > a1 || x < a2); };
    return inside(b1) != inside(b2);
}

struct Instance {
    std::vector<const CrossingWord*> words;
    uint32_t R = 0;
    // event lists per gap: (curve, pos)
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> per_gap;

    explicit Instance(std::vector<const CrossingWord*> ws) : words(std::move(ws)) {
        const auto& m = words[0]->model;
        R = 2 * m.block_count + 2;
        per_gap.resize(m.gap_count);
        for (uint32_t c = 0; c < words.size(); ++c)
            for (uint32_t i = 0; i < words[c]->crossings.size(); ++i)
                per_gap[words[c]->crossings[i]].push_back({c, i});
    }

    // betas for a given arrangement (permutation per gap)
    std::vector<BChord> chords(const std::vector<std::vector<uint32_t>>& orders) const {
        std::vector<std::vector<double>> beta(words.size());
        for (uint32_t c = 0; c < words.size(); ++c)
            beta[c].resize(words[c]->crossings.size(), 0.0);
        for (uint32_t g = 0; g < per_gap.size(); ++g) {
            const auto& evs = per_gap[g];
            for (size_t k = 0; k < evs.size(); ++k) {
                auto [c, i] = evs[orders[g][k]];
                beta[c][i] = (2.0 * g + 1) - 0.4 + 0.8 * (double(k) + 1) / (double(evs.size()) + 1);
            }
        }
        std::vector<BChord> out;
        // anchor fans: group ends by (vertex, hemisphere), sort by other
        // endpoint, offset into the vertex corner
        struct FanEnd {
            size_t chord;
            bool at_from;
            double other;
        };
        struct Raw {
            uint32_t curve;
            Hemisphere hem;
            std::optional<double> b1, b2;  // unset = anchor pending
            uint32_t v1 = 0, v2 = 0;
        };
        std::vector<Raw> raw;
        for (uint32_t c = 0; c < words.size(); ++c) {
            const auto& w = *words[c];
            size_t n = w.crossings.size();
            for (size_t j = 0; j <= n; ++j) {
                if (j == n && w.terminal.kind == TerminalKind::Truncated) continue;
                if (j == 0 && j == n && w.terminal.kind == TerminalKind::Loop) continue;
                Raw r;
                r.curve = c;
                r.hem = w.arc_hemisphere(j);
                if (j == 0)
                    r.v1 = 0;
                else
                    r.b1 = beta[c][j - 1];
                if (j == n) {
                    r.v2 = (w.terminal.kind == TerminalKind::Loop) ? 0 : 2 * w.terminal.block + 2;
                } else
                    r.b2 = beta[c][j];
                raw.push_back(r);
            }
        }
        std::vector<std::vector<FanEnd>> fans(size_t(R) * 2);
        for (size_t i = 0; i < raw.size(); ++i) {
            auto& r = raw[i];
            size_t hemoff = r.hem == Hemisphere::South ? 1 : 0;
            if (!r.b1) fans[r.v1 * 2 + hemoff].push_back({i, true, r.b2 ? *r.b2 : double(r.v2)});
            if (!r.b2) fans[r.v2 * 2 + hemoff].push_back({i, false, r.b1 ? *r.b1 : double(r.v1)});
        }
        for (size_t key = 0; key < fans.size(); ++key) {
            auto& g = fans[key];
            if (g.empty()) continue;
            uint32_t v = uint32_t(key / 2);
            bool south = key % 2;
            auto dist = [&](double o) {
                double d = south ? (double(v) - o) : (o - double(v));
                while (d < 0) d += R;
                while (d >= R) d -= R;
                return d;
            };
            std::sort(g.begin(), g.end(), [&](const FanEnd& a, const FanEnd& b) {
                if (dist(a.other) != dist(b.other)) return dist(a.other) < dist(b.other);
                return a.chord < b.chord;
            });
            for (size_t j = 0; j < g.size(); ++j) {
                double off = 0.4 * (double(j) + 1) / (double(g.size()) + 1);
                double b = south ? double(v) + off : double(v) - off;
                if (b < 0) b += R;
                if (b >= R) b -= R;
                (g[j].at_from ? raw[g[j].chord].b1 : raw[g[j].chord].b2) = b;
            }
        }
        for (auto& r : raw) out.push_back(BChord{r.curve, r.hem, *r.b1, *r.b2});
        return out;
    }
};

inline size_t count_pairs(const std::vector<BChord>& ch, uint32_t ca, uint32_t cb) {
    size_t n = 0;
    for (size_t i = 0; i < ch.size(); ++i) {
        if (ch[i].curve != ca) continue;
        for (size_t j = (ca == cb ? i + 1 : 0); j < ch.size(); ++j) {
            if (ch[j].curve != cb || ch[i].hem != ch[j].hem) continue;
            if (interleaved(ch[i].b1, ch[i].b2, ch[j].b1, ch[j].b2)) ++n;
        }
    }
    return n;
}

} // namespace bf

/// Minimal crossings between a and b over all per-gap event orders with
/// both curves embedded; nullopt if the search space exceeds `cap`.
inline std::optional<size_t> brute_force_min_crossings(const Curve& a, const Curve& b,
                                                       size_t cap = 200000) {
    bf::Instance inst({&a.word, &b.word});
    double space = 1;
    for (auto& evs : inst.per_gap) {
        for (size_t k = 2; k <= evs.size(); ++k) space *= double(k);
        if (space > double(cap)) return std::nullopt;
    }
    std::vector<std::vector<uint32_t>> orders(inst.per_gap.size());
    for (size_t g = 0; g < inst.per_gap.size(); ++g) {
        orders[g].resize(inst.per_gap[g].size());
        std::iota(orders[g].begin(), orders[g].end(), 0);
    }
    std::optional<size_t> best;
    // odometer over permutations of every gap
    std::vector<std::vector<uint32_t>> perm = orders;
    size_t g0 = 0;
    std::function<void(size_t)> rec = [&](size_t g) {
        if (g == perm.size()) {
            auto ch = inst.chords(perm);
            if (bf::count_pairs(ch, 0, 0) != 0 || bf::count_pairs(ch, 1, 1) != 0) return;
            size_t c = bf::count_pairs(ch, 0, 1);
            if (!best || c < *best) best = c;
            return;
        }
        std::sort(perm[g].begin(), perm[g].end());
        do {
            rec(g + 1);
        } while (std::next_permutation(perm[g].begin(), perm[g].end()));
    };
    (void)g0;
    rec(0);
    return best;
}

/// Whether some arrangement embeds the single curve (min self-crossings 0).
inline std::optional<bool> brute_force_is_simple(const Curve& c, size_t cap = 200000) {
    bf::Instance inst({&c.word});
    double space = 1;
    for (auto& evs : inst.per_gap) {
        for (size_t k = 2; k <= evs.size(); ++k) space *= double(k);
        if (space > double(cap)) return std::nullopt;
    }
    std::vector<std::vector<uint32_t>> perm(inst.per_gap.size());
    for (size_t g = 0; g < inst.per_gap.size(); ++g) {
        perm[g].resize(inst.per_gap[g].size());
        std::iota(perm[g].begin(), perm[g].end(), 0);
    }
    bool found = false;
    std::function<void(size_t)> rec = [&](size_t g) {
        if (found) return;
        if (g == perm.size()) {
            auto ch = inst.chords(perm);
            if (bf::count_pairs(ch, 0, 0) == 0) found = true;
            return;
        }
        std::sort(perm[g].begin(), perm[g].end());
        do {
            rec(g + 1);
        } while (!found && std::next_permutation(perm[g].begin(), perm[g].end()));
    };
    rec(0);
    return found;
}

/// Seeded random tight word (no adjacent duplicate letters).
inline std::vector<uint32_t> random_tight_word(const EquatorModel& m, size_t len,
                                               std::mt19937_64& rng) {
    std::vector<uint32_t> xs;
    xs.reserve(len);
    std::uniform_int_distribution<uint32_t> first(0, m.gap_count - 1);
    for (size_t i = 0; i < len; ++i) {
        if (xs.empty()) {
            xs.push_back(first(rng));
        } else {
            std::uniform_int_distribution<uint32_t> next(0, m.gap_count - 2);
            uint32_t g = next(rng);
            if (g >= xs.back()) ++g;
            xs.push_back(g);
        }
    }
    return xs;
}

} // namespace curvelab::testing
