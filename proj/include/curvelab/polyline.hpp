#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "curvelab/diagram.hpp"

namespace curvelab {

/// Explicit planar realization of a curve set, used as the geometric
/// oracle.  Punctures sit on the unit circle; crossing events are placed
/// on their gap segments in chord-diagram order; every arc becomes a
/// straight chord of its hemisphere disk (the two disks are counted
/// independently, so a chord of the south disk is the same segment in a
/// second copy of the disk).  With all endpoints in convex position,
/// two chords of one disk intersect transversally exactly when their
/// endpoints interleave, so counting segment intersections with
/// orientation tests is an independent check of the combinatorial count.
///
/// For output, the south disk is inverted through the unit circle so a
/// curve becomes one connected polyline: north arcs run inside the
/// circle, south arcs outside.
struct Vec2 {
    double x = 0, y = 0;
};

struct RealizedChord {
    uint32_t curve = 0;
    uint32_t arc = 0;
    Hemisphere hem = Hemisphere::North;
    Vec2 p, q;
};

struct Polyline {
    uint32_t curve = 0;
    std::vector<Vec2> points;
};

class Realization {
public:
    explicit Realization(const std::vector<const CrossingWord*>& words)
        : diagram_(words), words_(words) {
        const double R = 2.0 * diagram_.model().block_count + 2.0;
        for (const Chord& ch : diagram_.chords()) {
            RealizedChord rc;
            rc.curve = ch.curve;
            rc.arc = ch.arc;
            rc.hem = ch.hem;
            rc.p = on_circle(ch.from.beta, R);
            rc.q = on_circle(ch.to.beta, R);
            chords_.push_back(rc);
        }
    }

    const ChordDiagram& diagram() const { return diagram_; }
    const std::vector<RealizedChord>& chords() const { return chords_; }

    /// Transverse crossings between two realized curves, by geometry.
    size_t pair_crossings(uint32_t ca, uint32_t cb) const {
        size_t n = 0;
        for (const auto& u : chords_) {
            if (u.curve != ca) continue;
            for (const auto& v : chords_) {
                if (v.curve != cb || u.hem != v.hem) continue;
                if (segments_cross(u.p, u.q, v.p, v.q)) ++n;
            }
        }
        return n;
    }

    size_t self_crossings(uint32_t c) const {
        size_t n = 0;
        for (size_t i = 0; i < chords_.size(); ++i) {
            if (chords_[i].curve != c) continue;
            for (size_t j = i + 1; j < chords_.size(); ++j) {
                if (chords_[j].curve != c || chords_[i].hem != chords_[j].hem) continue;
                if (segments_cross(chords_[i].p, chords_[i].q, chords_[j].p, chords_[j].q)) ++n;
            }
        }
        return n;
    }

    size_t total_self_crossings() const {
        size_t n = 0;
        for (uint32_t c = 0; c < words_.size(); ++c) n += self_crossings(c);
        return n;
    }

    /// One connected polyline per curve: north arcs sampled inside the
    /// unit circle, south arcs reflected outside by inversion.
    std::vector<Polyline> polylines(size_t samples_per_arc = 8) const {
        std::vector<Polyline> out;
        for (uint32_t c = 0; c < words_.size(); ++c) {
            Polyline pl;
            pl.curve = c;
            for (const auto& ch : chords_) {
                if (ch.curve != c) continue;
                for (size_t s = 0; s <= samples_per_arc; ++s) {
                    double t = double(s) / double(samples_per_arc);
                    Vec2 p{ch.p.x + t * (ch.q.x - ch.p.x), ch.p.y + t * (ch.q.y - ch.p.y)};
                    if (ch.hem == Hemisphere::South) p = invert(p);
                    if (!pl.points.empty() && s == 0) continue;  // shared crossing point
                    pl.points.push_back(p);
                }
            }
            out.push_back(std::move(pl));
        }
        return out;
    }

    static Vec2 on_circle(double beta, double R) {
        double theta = 2.0 * M_PI * beta / R;
        return Vec2{std::cos(theta), std::sin(theta)};
    }

    static Vec2 invert(Vec2 p) {
        double r2 = p.x * p.x + p.y * p.y;
        if (r2 < 1e-12) r2 = 1e-12;
        return Vec2{p.x / r2, p.y / r2};
    }

    static double orient(Vec2 a, Vec2 b, Vec2 c) {
        return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    }

    static bool segments_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
        double o1 = orient(a, b, c);
        double o2 = orient(a, b, d);
        double o3 = orient(c, d, a);
        double o4 = orient(c, d, b);
        return ((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0));
    }

private:
    ChordDiagram diagram_;
    std::vector<const CrossingWord*> words_;
    std::vector<RealizedChord> chords_;
};

/// Oracle entry point for a single canonical curve.
inline Realization realize_polyline(const Curve& c) { return Realization({&c.word}); }

inline Realization realize_pair(const Curve& a, const Curve& b) {
    return Realization({&a.word, &b.word});
}

} // namespace curvelab
