#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvelab/graphlab.hpp"

namespace curvelab {

struct CoverConvergenceReport {
    bool converges = false;
    std::vector<std::optional<size_t>> first_stable;  // I(k) for k = 1..K
};

/// For each k <= K, the least index past which every term k-begins like
/// the generator; converges iff such an index exists for every k.
inline CoverConvergenceReport cover_convergence_check(const std::vector<Curve>& terms,
                                                      const LongRayGenerator& l, size_t K) {
    if (l.capacity() < K) fail(errc::too_short, "generator cannot emit K crossings");
    CoverConvergenceReport rep;
    rep.converges = true;
    Curve ref = l.prefix(std::max<size_t>(K, 1));
    for (size_t k = 1; k <= K; ++k) {
        std::optional<size_t> stable;
        for (size_t i = terms.size(); i-- > 0;) {
            bool begins = false;
            if (terms[i].size() >= k) begins = k_begins_like(terms[i].word, ref.word, k);
            if (!begins) break;
            stable = i;
        }
        rep.first_stable.push_back(stable);
        if (!stable) rep.converges = false;
    }
    return rep;
}

struct CliqueReport {
    std::vector<std::string> members;
    std::vector<uint32_t> depths_tested;
    size_t prefix_length = 0;
    std::vector<std::vector<size_t>> pairwise;  // intersection counts at the deepest truncation
    bool clique = true;  // all off-diagonal entries disjoint at every tested truncation
};

/// Pairwise disjointness of generator truncations at each scheduled
/// depth.  An intersection found at any truncation persists under
/// extension and kills the clique claim permanently; a positive report
/// stays depth-qualified.
inline CliqueReport verify_clique(const std::vector<LongRayGenerator>& members,
                                  const std::vector<uint32_t>& depth_schedule,
                                  size_t prefix_length = 16) {
    if (members.empty()) fail(errc::invalid_argument, "empty member list");
    CliqueReport rep;
    for (auto& g : members) rep.members.push_back(g.name);
    rep.depths_tested = depth_schedule;
    rep.prefix_length = prefix_length;
    rep.pairwise.assign(members.size(), std::vector<size_t>(members.size(), 0));
    for (uint32_t d : depth_schedule) {
        std::vector<Curve> prefixes;
        for (auto& g : members) {
            size_t len = std::min(prefix_length, g.capacity());
            prefixes.push_back(g.prefix_at(len, std::max(d, g.depth_for(len))));
        }
        for (size_t i = 0; i < members.size(); ++i)
            for (size_t j = i + 1; j < members.size(); ++j) {
                uint32_t dd = std::max(prefixes[i].word.model.depth,
                                       prefixes[j].word.model.depth);
                Curve ci = tighten(validate(embed_word(prefixes[i].word, dd)));
                Curve cj = tighten(validate(embed_word(prefixes[j].word, dd)));
                size_t n = intersection_number(ci, cj);
                rep.pairwise[i][j] = rep.pairwise[j][i] = n;
                if (n > 0) rep.clique = false;
            }
    }
    return rep;
}

enum class FillKind { loop_filling, ray_filling };

struct FillingCertificate {
    FillKind kind = FillKind::loop_filling;
    bool positive = false;         // every budget curve of the kind intersects the prefix
    size_t checked_count = 0;
    size_t prefix_length = 0;
    uint32_t depth = 0;
    std::optional<Curve> witness;  // a disjoint curve, when negative
};

/// Exhaustively test every budget curve of the requested kind against a
/// prefix of l.  The certificate asserts only the finite statement it
/// checked: the budget, the count and the prefix length are recorded.
inline FillingCertificate filling_certificate(const LongRayGenerator& l,
                                              const ComplexityBudget& budget, FillKind kind,
                                              size_t prefix_length = 0) {
    ComplexityBudget b = budget;
    b.loops = kind == FillKind::loop_filling;
    b.short_rays = kind == FillKind::ray_filling;
    if (prefix_length == 0) prefix_length = 4 * (size_t(budget.max_crossings) + 2);
    prefix_length = std::min(prefix_length, l.capacity());
    FillingCertificate cert;
    cert.kind = kind;
    cert.prefix_length = prefix_length;
    cert.depth = budget.depth;
    uint32_t depth = std::max(budget.depth, l.depth_for(prefix_length));
    Curve prefix = l.prefix_at(prefix_length, depth);
    cert.positive = true;
    for (auto& c : enumerate_vertices(b)) {
        Curve ce = c.word.model.depth == depth ? c : refine_curve(c, refine_to(c.word.model, depth));
        ++cert.checked_count;
        if (are_disjoint(ce, prefix)) {
            cert.positive = false;
            cert.witness = c;
            break;
        }
    }
    return cert;
}

struct AlphaForcingReport {
    uint32_t k = 0;
    size_t need = 0;            // long(alpha_k)
    size_t prefix_length = 0;   // crossings of alpha_{k+1} examined
    size_t disjoint_count = 0;
    size_t checked_count = 0;
    std::vector<Curve> violations;
    bool corrupted = false;
    bool passed() const { return violations.empty(); }
};

/// Check the forcing chain of the committed alpha family: every budget
/// short ray disjoint from a prefix of alpha_{k+1} must
/// long(alpha_k)-begin like alpha_k.  The paper's property quantifies
/// over rays, so the scan enumerates the budget short rays and embeds
/// them to the generator's depth.  A violation indicts the committed
/// encoding, not the source construction.
inline AlphaForcingReport alpha_forcing_test(uint32_t k, const ComplexityBudget& budget,
                                             bool corrupted = false) {
    if (k < 1 || k > 3) fail(errc::invalid_argument, "forcing gate committed for k in 1..3");
    AlphaForcingReport rep;
    rep.k = k;
    rep.corrupted = corrupted;
    LongRayGenerator small_gen = alpha_member(k);
    LongRayGenerator big_gen = corrupted ? alpha_corrupted() : alpha_member(k + 1);
    rep.need = small_gen.span();
    rep.prefix_length = big_gen.preamble.size() + 12;
    uint32_t depth = std::max({budget.depth, big_gen.base_depth, small_gen.base_depth});
    Curve big = big_gen.prefix_at(rep.prefix_length, depth);
    Curve small = small_gen.prefix_at(rep.need, depth);
    ComplexityBudget b = budget;
    b.loops = false;
    b.short_rays = true;
    uint32_t lift = depth - budget.depth;
    for (auto& c : enumerate_vertices(b)) {
        ++rep.checked_count;
        CrossingWord we = embed_word(c.word, depth);
        we.terminal.block = c.word.terminal.block << lift;
        Curve ce = tighten(validate(we));
        if (!are_disjoint(ce, big)) continue;
        ++rep.disjoint_count;
        bool begins = ce.size() >= rep.need && k_begins_like(ce.word, small.word, rep.need);
        if (!begins) rep.violations.push_back(c);
    }
    return rep;
}

struct GrowthReport {
    UnicornPath path;
    std::vector<DistanceBound> term_distance;  // d(a, x_n) in the budget graph
    std::vector<double> gromov_lower;          // (x_i . x_{i+1})_a lower bounds
    bool bounded_within_2 = true;              // every term within distance 2 of a
};

/// Distance profile of P(a, l) inside a budget window: per-term bounds
/// on d(a, x_n) plus Gromov products of consecutive terms at base a.
/// Non-filling generators show the bounded profile of the 2-neighborhood
/// lemma; the committed alpha shows growth.
inline GrowthReport growth_experiment(const Curve& a, const LongRayGenerator& l, size_t max_terms,
                                      const ComplexityBudget& budget) {
    GrowthReport rep;
    rep.path = unicorn_infinite(a, l, max_terms);
    BudgetGraph g(budget);
    Curve base = rep.path.terms.front();
    for (auto& t : rep.path.terms) {
        DistanceBound d = distance_in(g, base, t);
        rep.bounded_within_2 = rep.bounded_within_2 && d.exact() && *d.upper <= 2;
        rep.term_distance.push_back(std::move(d));
    }
    for (size_t i = 0; i + 1 < rep.path.terms.size(); ++i) {
        GromovProduct p = gromov_product_in(g, base, rep.path.terms[i], rep.path.terms[i + 1]);
        rep.gromov_lower.push_back(p.lower);
    }
    return rep;
}

} // namespace curvelab
