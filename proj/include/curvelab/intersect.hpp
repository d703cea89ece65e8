#pragma once

#include <algorithm>
#include <vector>

#include "curvelab/diagram.hpp"

namespace curvelab {

/// One transverse crossing between two curves in minimal position,
/// addressed by the arc (chord) it lies on for each curve and its rank
/// among the crossings of that arc, counted from the arc's traversal
/// start.  Records sort along either curve by (arc, rank).
struct IntersectionRecord {
    uint32_t a_arc = 0;
    uint32_t a_rank = 0;
    uint32_t b_arc = 0;
    uint32_t b_rank = 0;
    Hemisphere hem = Hemisphere::North;

    friend bool operator==(const IntersectionRecord&, const IntersectionRecord&) = default;
};

namespace intersect_detail {

inline void require_operand(const Curve& c, const char* role) {
    if (!c.canonical) fail(errc::invalid_argument, std::string(role) + " curve not canonical");
    if (!c.simple) fail(errc::invalid_argument, std::string(role) + " curve not simple");
}

inline void require_same_model(const Curve& a, const Curve& b) {
    if (a.word.model != b.word.model) fail(errc::depth_mismatch, "curves at different depths");
}

/// Crossings of chord `c` with the (pairwise non-crossing) chords in
/// `hits` are nested around c's start endpoint; rank them from there.
/// hit1 precedes hit2 iff both endpoints of hit1 lie in the arc cut off
/// by hit2 on the side of c's start.
inline bool crossing_precedes(const Chord& c, const Chord& h1, const Chord& h2) {
    double p = c.from.beta;
    auto inside = [](double a1, double a2, double x) {
        return a1 < a2 ? (x > a1 && x < a2) : (x > a1 || x < a2);
    };
    // p-side arc of h2: the side of (h2.from, h2.to) containing p.
    bool p_in_fwd = inside(h2.from.beta, h2.to.beta, p);
    auto in_p_side = [&](double x) {
        return p_in_fwd ? inside(h2.from.beta, h2.to.beta, x) : inside(h2.to.beta, h2.from.beta, x);
    };
    return in_p_side(h1.from.beta) && in_p_side(h1.to.beta);
}

} // namespace intersect_detail

/// All crossings of the pair (a, b), unsorted ranks resolved per arc.
/// Requires canonical simple inputs on a common model.
inline std::vector<IntersectionRecord> pair_intersections(const Curve& a, const Curve& b) {
    using namespace intersect_detail;
    require_operand(a, "first");
    require_operand(b, "second");
    require_same_model(a, b);
    ChordDiagram d({&a.word, &b.word});

    struct Hit {
        uint32_t a_chord, b_chord;
    };
    std::vector<Hit> hits;
    std::vector<uint32_t> a_chords, b_chords;
    for (uint32_t i = 0; i < d.chords().size(); ++i)
        (d.chords()[i].curve == 0 ? a_chords : b_chords).push_back(i);
    for (uint32_t i : a_chords)
        for (uint32_t j : b_chords) {
            const Chord& ca = d.chords()[i];
            const Chord& cb = d.chords()[j];
            if (ca.hem != cb.hem) continue;
            if (ChordDiagram::chords_crossing(ca, cb)) hits.push_back({i, j});
        }

    std::vector<IntersectionRecord> out(hits.size());
    for (size_t k = 0; k < hits.size(); ++k) {
        const Chord& ca = d.chords()[hits[k].a_chord];
        const Chord& cb = d.chords()[hits[k].b_chord];
        out[k].a_arc = ca.arc;
        out[k].b_arc = cb.arc;
        out[k].hem = ca.hem;
        // rank along a's arc: count sibling crossings on the same a-chord
        // strictly closer to its start.
        for (size_t l = 0; l < hits.size(); ++l) {
            if (l == k) continue;
            if (hits[l].a_chord == hits[k].a_chord &&
                crossing_precedes(ca, d.chords()[hits[l].b_chord], cb))
                ++out[k].a_rank;
            if (hits[l].b_chord == hits[k].b_chord &&
                crossing_precedes(cb, d.chords()[hits[l].a_chord], ca))
                ++out[k].b_rank;
        }
    }
    return out;
}

/// Minimal-position geometric intersection number.
inline size_t intersection_number(const Curve& a, const Curve& b) {
    using namespace intersect_detail;
    require_operand(a, "first");
    require_operand(b, "second");
    require_same_model(a, b);
    ChordDiagram d({&a.word, &b.word});
    return d.crossings_between(0, 1);
}

inline bool are_disjoint(const Curve& a, const Curve& b) { return intersection_number(a, b) == 0; }

/// Crossings of the pair ordered by traversal along b from infinity
/// (discrete along b; b may be a truncated long-ray prefix).
inline std::vector<IntersectionRecord> intersections_along(const Curve& b, const Curve& a) {
    auto recs = pair_intersections(a, b);
    std::sort(recs.begin(), recs.end(), [](const IntersectionRecord& x, const IntersectionRecord& y) {
        return std::pair(x.b_arc, x.b_rank) < std::pair(y.b_arc, y.b_rank);
    });
    return recs;
}

/// A chosen crossing with the crossing counts each prefix consumes.
struct SplicePoint {
    IntersectionRecord record;
    uint32_t prefix_of_b = 0;  // crossings of b before the point
    uint32_t prefix_of_a = 0;  // crossings of a before the point

    static SplicePoint at(const IntersectionRecord& r) {
        return SplicePoint{r, r.b_arc, r.a_arc};
    }
};

/// The loop (infinity->x along b) followed by (x->infinity backward
/// along a), tightened.  Both prefixes end in the hemisphere of the
/// crossing; the result is a loop starting in b's start hemisphere.
inline Curve splice(const Curve& b, const Curve& a, const SplicePoint& p) {
    using namespace intersect_detail;
    require_same_model(a, b);
    if (p.prefix_of_b > b.size() || p.prefix_of_a > a.size())
        fail(errc::invalid_argument, "splice point beyond curve");
    if (b.word.arc_hemisphere(p.prefix_of_b) != a.word.arc_hemisphere(p.prefix_of_a))
        fail(errc::invalid_argument, "splice prefixes end in different hemispheres");
    CrossingWord w;
    w.model = b.word.model;
    w.start = b.word.start;
    w.terminal = Terminal::loop();
    w.crossings.assign(b.word.crossings.begin(), b.word.crossings.begin() + p.prefix_of_b);
    for (uint32_t i = p.prefix_of_a; i > 0; --i) w.crossings.push_back(a.word.crossings[i - 1]);
    return tighten(validate(w));
}

} // namespace curvelab
