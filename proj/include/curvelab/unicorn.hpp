#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvelab/generators.hpp"
#include "curvelab/intersect.hpp"

namespace curvelab {

/// Interpolating sequence of simple loops between two curves, with the
/// splice provenance that produced each interior term.  Consecutive
/// terms are disjoint by construction and this is asserted when paths
/// are built.
struct UnicornPath {
    std::vector<Curve> terms;
    std::vector<SplicePoint> splices;  // splices[i] produced terms[i+1]
    Curve source_a;
    Curve target_b;                 // finite paths only
    std::string generator;          // infinite paths only
    bool infinite_target = false;
    bool complete = true;           // infinite: ended by disjointness
    bool truncation_incomplete = false;  // stabilization or length cap hit
    size_t prefix_checked = 0;      // crossings of the generator examined
};

namespace unicorn_detail {

inline void require_loop_operand(const Curve& c, const char* role) {
    intersect_detail::require_operand(c, role);
    if (c.kind() != TerminalKind::Loop)
        fail(errc::invalid_argument, std::string(role) + " operand must be a loop");
}

inline Curve make_term(const Curve& b_like, const Curve& a_orig, const Curve& prev,
                       const SplicePoint& sp) {
    Curve t = splice(b_like, a_orig, sp);
    if (!t.simple)
        fail(errc::invalid_argument, "unicorn splice produced a non-simple loop (bug signal)");
    if (intersection_number(prev, t) != 0)
        fail(errc::invalid_argument, "unicorn consecutive terms intersect (bug signal)");
    return t;
}

} // namespace unicorn_detail

/// Inductive first-intersection construction: follow b from infinity to
/// the first crossing with the current term and splice there.  Every
/// term is the union of a beginning interval of b and a beginning
/// interval of a, so the induction is a selection chain over the
/// crossings of the original pair: the next point is the first along b
/// among those strictly earlier along a than the last chosen one (the
/// crossings of b with a_k are exactly its crossings with a_k's a-part).
inline UnicornPath unicorn_p2(const Curve& a, const Curve& b) {
    unicorn_detail::require_loop_operand(a, "first");
    unicorn_detail::require_loop_operand(b, "second");
    intersect_detail::require_same_model(a, b);
    UnicornPath path;
    path.source_a = a;
    path.target_b = b;
    path.terms.push_back(a);
    if (oriented_key(a.word) == oriented_key(b.word)) return path;  // degenerate pair collapses
    auto recs = intersections_along(b, a);
    auto along_a = [](const IntersectionRecord& r) { return std::pair(r.a_arc, r.a_rank); };
    Curve ak = a;
    std::optional<std::pair<uint32_t, uint32_t>> bound;  // a-position of the last choice
    size_t cursor = 0;
    while (true) {
        std::optional<size_t> pick;
        for (size_t i = cursor; i < recs.size(); ++i) {
            if (!bound || along_a(recs[i]) < *bound) {
                pick = i;
                break;
            }
        }
        if (!pick) {
            path.terms.push_back(b);
            break;
        }
        bound = along_a(recs[*pick]);
        cursor = *pick + 1;
        auto sp = SplicePoint::at(recs[*pick]);
        Curve next = unicorn_detail::make_term(b, a, ak, sp);
        // crossings of b with the new term are the records beyond the
        // chosen point on both parents; any mismatch with the pair count
        // means the drawn position was not minimal
        size_t expect = 0;
        for (const auto& r : recs)
            if (along_a(r) < *bound) ++expect;
        if (expect != intersection_number(b, next))
            fail(errc::invalid_argument, "unicorn position not minimal (bug signal)");
        path.terms.push_back(next);
        path.splices.push_back(sp);
        ak = next;
    }
    return path;
}

/// Direct construction: splice at every crossing, ordered by the reverse
/// traversal along a, and keep the simple results.  The spliced loop is
/// simple exactly when the two prefixes meet only at the chosen point,
/// i.e. no other crossing precedes it along both parents.
inline UnicornPath unicorn_p1(const Curve& a, const Curve& b) {
    unicorn_detail::require_loop_operand(a, "first");
    unicorn_detail::require_loop_operand(b, "second");
    intersect_detail::require_same_model(a, b);
    UnicornPath path;
    path.source_a = a;
    path.target_b = b;
    path.terms.push_back(a);
    if (oriented_key(a.word) == oriented_key(b.word)) return path;
    auto recs = pair_intersections(a, b);
    std::sort(recs.begin(), recs.end(), [](const IntersectionRecord& x, const IntersectionRecord& y) {
        return std::pair(x.a_arc, x.a_rank) > std::pair(y.a_arc, y.a_rank);
    });
    auto along_a = [](const IntersectionRecord& r) { return std::pair(r.a_arc, r.a_rank); };
    auto along_b = [](const IntersectionRecord& r) { return std::pair(r.b_arc, r.b_rank); };
    for (const auto& r : recs) {
        bool raw_simple = true;
        for (const auto& o : recs) {
            if (&o == &r) continue;
            if (along_a(o) < along_a(r) && along_b(o) < along_b(r)) {
                raw_simple = false;  // the prefixes already met at o
                break;
            }
        }
        if (!raw_simple) continue;
        auto sp = SplicePoint::at(r);
        Curve cand = splice(b, a, sp);
        if (!cand.simple)
            fail(errc::invalid_argument, "simple raw splice tightened non-simple (bug signal)");
        path.terms.push_back(cand);
        path.splices.push_back(sp);
    }
    path.terms.push_back(b);
    return path;
}

namespace unicorn_detail {

/// Selection chain over the crossing records of (a, prefix): the next
/// point is the first along the ray among those strictly earlier along
/// a's side of the previous splice.  Returns at most max_picks records.
inline std::vector<IntersectionRecord> select_chain(const std::vector<IntersectionRecord>& recs,
                                                    size_t max_picks) {
    std::vector<IntersectionRecord> out;
    std::optional<std::pair<uint32_t, uint32_t>> bound;
    size_t cursor = 0;
    while (out.size() < max_picks) {
        std::optional<size_t> pick;
        for (size_t i = cursor; i < recs.size(); ++i) {
            if (!bound || std::pair(recs[i].a_arc, recs[i].a_rank) < *bound) {
                pick = i;
                break;
            }
        }
        if (!pick) break;
        bound = std::pair(recs[*pick].a_arc, recs[*pick].a_rank);
        cursor = *pick + 1;
        out.push_back(recs[*pick]);
    }
    return out;
}

} // namespace unicorn_detail

/// First max_terms terms of P(a, l) against a long-ray generator.  The
/// prefix is extended until the selection chain for the requested terms
/// is unchanged by doubling it once; eventually-periodic generators make
/// this sound, plugins may exhaust and flag the result incomplete.
inline UnicornPath unicorn_infinite(const Curve& a, const LongRayGenerator& l, size_t max_terms,
                                    size_t initial_prefix = 16, size_t prefix_cap = 1 << 13) {
    unicorn_detail::require_loop_operand(a, "first");
    if (max_terms < 1) fail(errc::invalid_argument, "max_terms must be at least 1");
    UnicornPath path;
    path.source_a = a;
    path.infinite_target = true;
    path.generator = l.name;
    path.terms.push_back(a);
    if (max_terms == 1) return path;

    auto chain_at = [&](size_t len) {
        uint32_t depth = std::max(a.word.model.depth, l.depth_for(len));
        Curve ad = a.word.model.depth == depth ? a : refine_curve(a, refine_to(a.word.model, depth));
        Curve pre = l.prefix_at(len, depth);
        auto recs = intersections_along(pre, ad);
        auto chain = unicorn_detail::select_chain(recs, max_terms - 1);
        return std::tuple(chain, ad, pre);
    };

    size_t L = std::min(initial_prefix, l.capacity());
    while (true) {
        size_t L2 = std::min(2 * L, l.capacity());
        auto [c1, ad1, pre1] = chain_at(L);
        path.prefix_checked = L;
        if (L2 <= L) {  // cannot extend further: plugin exhausted
            path.truncation_incomplete = true;
            path.complete = false;
            break;
        }
        auto [c2, ad2, pre2] = chain_at(L2);
        path.prefix_checked = L2;
        bool same = c1.size() == c2.size();
        if (same)
            for (size_t i = 0; i < c1.size(); ++i)
                if (std::tuple(c1[i].a_arc, c1[i].a_rank, c1[i].b_arc) !=
                    std::tuple(c2[i].a_arc, c2[i].a_rank, c2[i].b_arc)) {
                    same = false;
                    break;
                }
        if (same && (c1.size() == max_terms - 1 || L2 >= prefix_cap || L2 >= l.capacity())) {
            Curve prev = ad2;
            for (const auto& r : c2) {
                auto sp = SplicePoint::at(r);
                Curve next = unicorn_detail::make_term(pre2, ad2, prev, sp);
                path.terms.push_back(next);
                path.splices.push_back(sp);
                prev = next;
            }
            path.complete = c2.size() < max_terms - 1;  // ended by disjointness
            break;
        }
        if (L2 >= prefix_cap) {
            path.truncation_incomplete = true;
            path.complete = false;
            break;
        }
        L = L2;
    }
    return path;
}

enum class SubpathVerdict { subpath, adjacent_jump };

/// Dichotomy check: either P(terms[i], terms[j]) equals that segment of
/// the path, or j = i+2 and the endpoints are adjacent.  Anything else
/// is reported as a property violation.
inline SubpathVerdict check_subpath_property(const UnicornPath& path, size_t i, size_t j) {
    if (i >= j || j >= path.terms.size()) fail(errc::out_of_range, "bad term indices");
    UnicornPath sub = unicorn_p2(path.terms[i], path.terms[j]);
    bool equal = sub.terms.size() == j - i + 1;
    if (equal)
        for (size_t k = 0; k < sub.terms.size(); ++k)
            if (oriented_key(sub.terms[k].word) != oriented_key(path.terms[i + k].word)) {
                equal = false;
                break;
            }
    if (equal) return SubpathVerdict::subpath;
    if (j == i + 2 && are_disjoint(path.terms[i], path.terms[j]))
        return SubpathVerdict::adjacent_jump;
    fail(errc::invalid_argument, "unicorn subpath dichotomy violated (bug signal)");
}

/// Verify that for i > k*ceil(p/2) every term k-begins like b, where p
/// is a's crossing count.  Vacuous when the path is short.
inline bool begin_bound_check(const Curve& a, const Curve& b, const UnicornPath& path) {
    size_t p = a.size();
    size_t half = (p + 1) / 2;
    size_t n = path.terms.size();
    if (half == 0) return true;
    for (size_t k = 1; k <= b.size() && k * half + 1 < n; ++k) {
        for (size_t i = k * half + 1; i < n; ++i) {
            const Curve& x = path.terms[i];
            if (x.size() < k) return false;
            if (!k_begins_like(x.word, b.word, k)) return false;
        }
    }
    return true;
}

} // namespace curvelab
