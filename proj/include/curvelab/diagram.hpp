#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "curvelab/curve.hpp"

namespace curvelab {

/// Chord diagram of one or two crossing words in minimal position.
///
/// The sphere splits along the equator into two ideal polygons whose
/// vertices are the punctures and whose sides are the gaps.  Boundary
/// items are ranked around either polygon as
///
///   V_inf = 0, g_0 = 1, b_0 = 2, g_1 = 3, ..., g_m = 2m+1.
///
/// Each crossing event is placed on its gap by the itinerary-comparison
/// rule: walk both strands away from the gap (into each hemisphere in
/// turn) until their gap itineraries diverge, then order by the cyclic
/// position of the diverging exits on the polygon boundary.  The walk is
/// encoded as a sort key, one element per polygon traversed, so that
/// lexicographic key order equals left-to-right order along the gap:
/// north-side walks contribute negated ccw distances, south-side walks
/// positive ones (each polygon passage reverses the nesting sense, and
/// so does looking at the equator from the other hemisphere; the two
/// reversals cancel into a constant sign per walk).
///
/// Ties (itineraries never diverge) are parallel strands; they are
/// ordered by a direction-aware tag rule that keeps parallel copies and
/// reverse traversals crossing-free.
///
/// Chords are the per-hemisphere arcs between consecutive events (with
/// anchor endpoints fanned around their vertex).  Crossings are exactly
/// the interleaved chord pairs; dangling arcs of truncated words are
/// free ends and contribute no chords.
namespace diagram_detail {

inline uint32_t gap_rank(uint32_t g) { return 2 * g + 1; }
inline uint32_t block_rank(uint32_t b) { return 2 * b + 2; }

inline uint32_t ccw_dist(Hemisphere poly, uint32_t entry, uint32_t exit, uint32_t R) {
    return poly == Hemisphere::North ? (exit + R - entry) % R : (entry + R - exit) % R;
}

/// Key of the walk from event i of `w` into hemisphere H.
/// Empty key with `dangles` set means the walk immediately enters the
/// dangling arc of a truncated word (a free end: no constraint).
struct WalkKey {
    std::vector<int32_t> elems;
    bool dangles = false;
};

inline WalkKey walk_key(const CrossingWord& w, size_t i, Hemisphere H) {
    const uint32_t R = 2 * w.model.block_count + 2;
    const size_t n = w.crossings.size();
    WalkKey key;
    const int sign = (H == Hemisphere::North) ? -1 : +1;
    Hemisphere poly = H;
    uint32_t entry = gap_rank(w.crossings[i]);
    if (w.arc_hemisphere(i) == H) {
        // backward: traverse arcs i, i-1, ..., 0; exit at start anchor.
        for (size_t j = i;; --j) {
            uint32_t exit = (j == 0) ? 0u : gap_rank(w.crossings[j - 1]);
            key.elems.push_back(sign * static_cast<int32_t>(ccw_dist(poly, entry, exit, R)));
            if (j == 0) break;
            entry = exit;
            poly = other(poly);
        }
    } else {
        // forward: traverse arcs i+1, ..., n; exit at terminal anchor.
        for (size_t j = i + 1;; ++j) {
            if (j == n) {
                if (w.terminal.kind == TerminalKind::Truncated) {
                    key.dangles = key.elems.empty();
                    break;  // free end: the dangling arc imposes nothing
                }
                uint32_t exit = (w.terminal.kind == TerminalKind::Loop)
                                    ? 0u
                                    : block_rank(w.terminal.block);
                key.elems.push_back(sign * static_cast<int32_t>(ccw_dist(poly, entry, exit, R)));
                break;
            }
            uint32_t exit = gap_rank(w.crossings[j]);
            key.elems.push_back(sign * static_cast<int32_t>(ccw_dist(poly, entry, exit, R)));
            entry = exit;
            poly = other(poly);
        }
    }
    return key;
}

inline int lex_cmp(const std::vector<int32_t>& a, const std::vector<int32_t>& b) {
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

} // namespace diagram_detail

struct DiagramEvent {
    uint32_t curve = 0;  // index into the diagram's word list
    uint32_t pos = 0;    // crossing index within the word
    uint32_t gap = 0;
    crossing_dir dir = crossing_dir::north_to_south;
    diagram_detail::WalkKey north, south;
    double beta = 0;  // boundary coordinate once ordered

    bool tip() const { return north.dangles || south.dangles; }
};

enum class endpoint_kind : uint8_t { event, anchor };

struct ChordEnd {
    endpoint_kind kind = endpoint_kind::event;
    uint32_t event = 0;   // index into events (kind == event)
    uint32_t vertex = 0;  // boundary rank of the anchor vertex (kind == anchor)
    double beta = 0;
};

struct Chord {
    uint32_t curve = 0;
    uint32_t arc = 0;  // arc j runs from crossing j-1 to crossing j
    Hemisphere hem = Hemisphere::North;
    ChordEnd from, to;  // `from` is the traversal-start end
};

class ChordDiagram {
public:
    explicit ChordDiagram(std::vector<const CrossingWord*> words) : words_(std::move(words)) {
        if (words_.empty()) fail(errc::invalid_argument, "empty diagram");
        model_ = words_[0]->model;
        for (auto* w : words_)
            if (w->model != model_) fail(errc::depth_mismatch, "diagram words at mixed depths");
        build();
    }

    const EquatorModel& model() const { return model_; }
    const std::vector<DiagramEvent>& events() const { return events_; }
    const std::vector<Chord>& chords() const { return chords_; }
    const std::vector<std::vector<uint32_t>>& gap_order() const { return per_gap_; }

    size_t crossings_between(uint32_t ca, uint32_t cb) const {
        size_t count = 0;
        for (size_t i = 0; i < chords_.size(); ++i) {
            if (chords_[i].curve != ca) continue;
            for (size_t j = 0; j < chords_.size(); ++j) {
                if (chords_[j].curve != cb) continue;
                if (chords_[i].hem != chords_[j].hem) continue;
                if (chords_crossing(chords_[i], chords_[j])) ++count;
            }
        }
        return count;
    }

    size_t self_crossings(uint32_t c) const {
        size_t count = 0;
        for (size_t i = 0; i < chords_.size(); ++i) {
            if (chords_[i].curve != c) continue;
            for (size_t j = i + 1; j < chords_.size(); ++j) {
                if (chords_[j].curve != c || chords_[i].hem != chords_[j].hem) continue;
                if (chords_crossing(chords_[i], chords_[j])) ++count;
            }
        }
        return count;
    }

    // Fan coordinates are distinct even at shared anchors, so the
    // interleave test is total.
    static bool chords_crossing(const Chord& a, const Chord& b) {
        return interleaved(a.from.beta, a.to.beta, b.from.beta, b.to.beta);
    }

    /// Exactly one of {b1, b2} inside the open ccw arc (a1 -> a2).
    static bool interleaved(double a1, double a2, double b1, double b2) {
        auto inside = [&](double x) {
            return a1 < a2 ? (x > a1 && x < a2) : (x > a1 || x < a2);
        };
        return inside(b1) != inside(b2);
    }

private:
    std::vector<const CrossingWord*> words_;
    EquatorModel model_;
    std::vector<DiagramEvent> events_;
    std::vector<std::vector<uint32_t>> per_gap_;  // sorted event ids per gap
    std::vector<Chord> chords_;

    // -1: x left of y along the gap; +1: right; 0: parallel tie.
    int compare_events(const DiagramEvent& x, const DiagramEvent& y) const {
        using diagram_detail::lex_cmp;
        bool use_n = !x.north.dangles && !y.north.dangles;
        bool use_s = !x.south.dangles && !y.south.dangles;
        if (use_n) {
            if (int c = lex_cmp(x.north.elems, y.north.elems)) return c;
            if (use_s)
                if (int c = lex_cmp(x.south.elems, y.south.elems)) return c;
            return 0;
        }
        if (use_s) {
            if (int c = lex_cmp(x.south.elems, y.south.elems)) return c;
            return 0;
        }
        return 0;
    }

    // Tie rule for fully parallel strands: keep each strand's twin on a
    // fixed side of its own traversal.  North-to-south crossings order
    // ascending by (curve, pos), south-to-north descending, and the
    // north-to-south class sits left of the south-to-north class.
    static bool tie_before(const DiagramEvent& x, const DiagramEvent& y) {
        if (x.dir != y.dir) return x.dir == crossing_dir::north_to_south;
        bool xl = std::pair(x.curve, x.pos) < std::pair(y.curve, y.pos);
        return x.dir == crossing_dir::north_to_south ? xl : !xl;
    }

    void build() {
        const uint32_t R = 2 * model_.block_count + 2;
        // events + keys
        for (uint32_t c = 0; c < words_.size(); ++c) {
            const CrossingWord& w = *words_[c];
            for (uint32_t i = 0; i < w.crossings.size(); ++i) {
                DiagramEvent e;
                e.curve = c;
                e.pos = i;
                e.gap = w.crossings[i];
                e.dir = direction_at(w, i);
                e.north = diagram_detail::walk_key(w, i, Hemisphere::North);
                e.south = diagram_detail::walk_key(w, i, Hemisphere::South);
                events_.push_back(std::move(e));
            }
        }
        // per-gap order: sort full-keyed events, then insert tips by their
        // real-side key (a free end defers to wherever its strand pins it).
        per_gap_.assign(model_.gap_count, {});
        for (uint32_t g = 0; g < model_.gap_count; ++g) {
            std::vector<uint32_t> regular, tips;
            for (uint32_t id = 0; id < events_.size(); ++id) {
                if (events_[id].gap != g) continue;
                (events_[id].tip() ? tips : regular).push_back(id);
            }
            std::sort(regular.begin(), regular.end(), [&](uint32_t a, uint32_t b) {
                int c = compare_events(events_[a], events_[b]);
                if (c) return c < 0;
                return tie_before(events_[a], events_[b]);
            });
            for (uint32_t t : tips) {
                size_t slot = 0;
                for (uint32_t r : regular) {
                    int c = compare_events(events_[r], events_[t]);
                    if (c < 0 || (c == 0 && tie_before(events_[r], events_[t]))) ++slot;
                }
                regular.insert(regular.begin() + static_cast<ptrdiff_t>(slot), t);
            }
            size_t n = regular.size();
            for (size_t k = 0; k < n; ++k) {
                events_[regular[k]].beta = static_cast<double>(diagram_detail::gap_rank(g)) -
                                           0.4 + 0.8 * (double(k) + 1) / (double(n) + 1);
            }
            per_gap_[g] = std::move(regular);
        }
        // chords with provisional anchor coordinates (fans fixed below)
        for (uint32_t c = 0; c < words_.size(); ++c) {
            const CrossingWord& w = *words_[c];
            const size_t n = w.crossings.size();
            uint32_t base = 0;
            for (uint32_t k = 0; k < c; ++k) base += static_cast<uint32_t>(words_[k]->crossings.size());
            for (size_t j = 0; j <= n; ++j) {
                bool starts_at_anchor = (j == 0);
                bool ends_at_anchor = (j == n);
                if (ends_at_anchor && w.terminal.kind == TerminalKind::Truncated) continue;
                if (starts_at_anchor && ends_at_anchor && w.terminal.kind == TerminalKind::Loop)
                    continue;  // empty loop word: no chords (rejected upstream anyway)
                Chord ch;
                ch.curve = c;
                ch.arc = static_cast<uint32_t>(j);
                ch.hem = w.arc_hemisphere(j);
                if (starts_at_anchor) {
                    ch.from = ChordEnd{endpoint_kind::anchor, 0, 0, 0.0};
                } else {
                    uint32_t id = base + static_cast<uint32_t>(j - 1);
                    ch.from = ChordEnd{endpoint_kind::event, id, 0, events_[id].beta};
                }
                if (ends_at_anchor) {
                    uint32_t v = (w.terminal.kind == TerminalKind::Loop)
                                     ? 0u
                                     : diagram_detail::block_rank(w.terminal.block);
                    ch.to = ChordEnd{endpoint_kind::anchor, 0, v, 0.0};
                } else {
                    uint32_t id = base + static_cast<uint32_t>(j);
                    ch.to = ChordEnd{endpoint_kind::event, id, 0, events_[id].beta};
                }
                chords_.push_back(ch);
            }
        }
        assign_fans(R);
    }

    // Spread anchor-incident chord ends around their vertex so that the
    // fan never forces a crossing: sort by the ccw distance of the other
    // endpoint and nest accordingly (into the cw side in the north disk,
    // the mirror in the south).
    void assign_fans(uint32_t R) {
        struct FanEnd {
            uint32_t chord;
            bool at_from;
            double other;  // other endpoint coordinate (rank for anchors)
        };
        std::vector<std::vector<FanEnd>> groups;  // keyed by vertex*2 + hem
        groups.resize(static_cast<size_t>(R) * 2);
        for (uint32_t i = 0; i < chords_.size(); ++i) {
            auto& ch = chords_[i];
            auto classify = [&](ChordEnd& end, const ChordEnd& opp, bool at_from) {
                if (end.kind != endpoint_kind::anchor) return;
                double o = (opp.kind == endpoint_kind::event) ? opp.beta
                                                              : static_cast<double>(opp.vertex);
                size_t key = end.vertex * 2 + (ch.hem == Hemisphere::South ? 1 : 0);
                groups[key].push_back(FanEnd{i, at_from, o});
            };
            classify(ch.from, ch.to, true);
            classify(ch.to, ch.from, false);
        }
        for (size_t key = 0; key < groups.size(); ++key) {
            auto& g = groups[key];
            if (g.empty()) continue;
            uint32_t v = static_cast<uint32_t>(key / 2);
            bool south = (key % 2) == 1;
            auto dist = [&](double o) {
                double d = south ? (double(v) - o) : (o - double(v));
                while (d < 0) d += R;
                while (d >= R) d -= R;
                return d;
            };
            std::sort(g.begin(), g.end(), [&](const FanEnd& a, const FanEnd& b) {
                double da = dist(a.other), db = dist(b.other);
                if (da != db) return da < db;
                auto ta = std::pair(chords_[a.chord].curve, chords_[a.chord].arc);
                auto tb = std::pair(chords_[b.chord].curve, chords_[b.chord].arc);
                return ta < tb;
            });
            for (size_t j = 0; j < g.size(); ++j) {
                double off = 0.4 * (double(j) + 1) / (double(g.size()) + 1);
                double beta = south ? (double(v) + off) : (double(v) - off);
                if (beta < 0) beta += R;
                if (beta >= R) beta -= R;
                (g[j].at_from ? chords_[g[j].chord].from : chords_[g[j].chord].to).beta = beta;
            }
        }
    }
};

/// Simplicity of a validated word: whether a chord diagram exists with
/// pairwise non-crossing chords in both hemispheres.  Bigon and corner
/// moves both preserve embeddability, so the check runs on the fully
/// reduced word.
inline bool is_simple(const CrossingWord& word) {
    CrossingWord w = detail::full_reduce(word);
    if (w.crossings.empty()) return true;
    ChordDiagram d({&w});
    return d.self_crossings(0) == 0;
}

} // namespace curvelab
