#pragma once

#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

#include "curvelab/intersect.hpp"
#include "curvelab/unicorn.hpp"

namespace curvelab {

/// Finite window of the (infinite-valence) curve graphs: vertices are
/// canonical curves at one depth with a crossing cap.  Every distance
/// or product computed here is exact for this window only and carries
/// its budget.
struct ComplexityBudget {
    uint32_t max_crossings = 2;
    uint32_t depth = 1;
    bool loops = true;
    bool short_rays = false;
    size_t max_vertices = 60000;

    void check() const {
        if (max_crossings < 2) fail(errc::invalid_argument, "budget needs max_crossings >= 2");
        if (depth > kMaxDepth) fail(errc::resource_limit, "budget depth beyond maximum");
    }
};

/// All canonical vertices within the budget: simple essential loops
/// (unoriented) and simple short rays, deterministically ordered.
inline std::vector<Curve> enumerate_vertices(const ComplexityBudget& budget) {
    budget.check();
    auto m = make_model(budget.depth);
    std::vector<Curve> out;
    std::map<std::string, bool> seen;
    size_t visited = 0;
    const size_t visit_cap = 80 * budget.max_vertices;

    auto emit = [&](Curve&& c, const std::string& key) {
        if (seen.emplace(key, true).second) {
            out.push_back(std::move(c));
            if (out.size() > budget.max_vertices)
                fail(errc::resource_limit, "budget enumeration exceeded max_vertices");
        }
    };

    std::vector<uint32_t> word;  // tight by construction in the walk below
    auto close_here = [&](Hemisphere h) {
        if (budget.loops && !word.empty()) {
            Curve c = tighten(validate(CrossingWord{m, h, word, Terminal::loop()}));
            if (c.simple && c.essential) emit(std::move(c), unoriented_key(c));
        }
        if (budget.short_rays) {
            for (uint32_t blk = 0; blk < m.block_count; ++blk) {
                CrossingWord w{m, h, word, Terminal::short_ray(blk)};
                Curve c = tighten(validate(w));
                if (c.simple) emit(std::move(c), oriented_key(c.word));
            }
        }
    };

    std::function<void(Hemisphere)> dfs = [&](Hemisphere h) {
        if (++visited > visit_cap)
            fail(errc::resource_limit, "budget enumeration exceeded visit cap");
        close_here(h);
        if (word.size() == budget.max_crossings) return;
        for (uint32_t g = 0; g < m.gap_count; ++g) {
            if (!word.empty() && word.back() == g) continue;
            word.push_back(g);
            // prune: a non-embeddable prefix cannot extend to a simple curve
            if (is_simple(CrossingWord{m, h, word, Terminal::truncated()})) dfs(h);
            word.pop_back();
        }
    };
    dfs(Hemisphere::North);
    dfs(Hemisphere::South);

    std::sort(out.begin(), out.end(), [](const Curve& a, const Curve& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return unoriented_key(a) < unoriented_key(b);
    });
    return out;
}

/// Budget vertices disjoint from v, excluding v itself.
inline std::vector<Curve> neighbors(const Curve& v, const ComplexityBudget& budget) {
    if (v.word.model.depth != budget.depth)
        fail(errc::depth_mismatch, "vertex not at budget depth");
    std::vector<Curve> out;
    for (auto& u : enumerate_vertices(budget)) {
        if (unoriented_key(u) == unoriented_key(v)) continue;
        if (are_disjoint(u, v)) out.push_back(u);
    }
    return out;
}

/// Budget graph with cached adjacency for repeated BFS queries.  Extra
/// vertices (targets outside the enumeration) can be adjoined.
class BudgetGraph {
public:
    explicit BudgetGraph(const ComplexityBudget& budget)
        : budget_(budget), model_(make_model(budget.depth)), verts_(enumerate_vertices(budget)) {
        for (uint32_t i = 0; i < verts_.size(); ++i) index_[unoriented_key(verts_[i])] = i;
    }

    const ComplexityBudget& budget() const { return budget_; }
    const std::vector<Curve>& vertices() const { return verts_; }

    uint32_t adjoin(const Curve& c) {
        Curve e = c;
        if (e.word.model.depth < budget_.depth)
            e = refine_curve(e, refine_to(e.word.model, budget_.depth));
        if (e.word.model.depth != budget_.depth) fail(errc::depth_mismatch, "vertex too deep");
        std::string key = e.kind() == TerminalKind::Loop ? unoriented_key(e) : oriented_key(e.word);
        auto it = index_.find(key);
        if (it != index_.end()) return it->second;
        uint32_t id = static_cast<uint32_t>(verts_.size());
        verts_.push_back(e);
        index_[key] = id;
        if (adj_built_) {
            adj_.emplace_back();
            for (uint32_t j = 0; j + 1 < verts_.size(); ++j)
                if (are_disjoint(verts_[j], verts_.back())) {
                    adj_[id].push_back(j);
                    adj_[j].push_back(id);
                }
        }
        return id;
    }

    std::optional<uint32_t> find(const Curve& c) const {
        std::string key = c.kind() == TerminalKind::Loop ? unoriented_key(c) : oriented_key(c.word);
        auto it = index_.find(key);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    void build_adjacency() {
        if (adj_built_) return;
        adj_.assign(verts_.size(), {});
        for (uint32_t i = 0; i < verts_.size(); ++i)
            for (uint32_t j = i + 1; j < verts_.size(); ++j)
                if (are_disjoint(verts_[i], verts_[j])) {
                    adj_[i].push_back(j);
                    adj_[j].push_back(i);
                }
        adj_built_ = true;
    }

    /// Distances from src to every vertex (SIZE_MAX if unreachable) and
    /// BFS parents for witness extraction.
    std::pair<std::vector<size_t>, std::vector<uint32_t>> bfs(uint32_t src) {
        build_adjacency();
        std::vector<size_t> dist(verts_.size(), SIZE_MAX);
        std::vector<uint32_t> parent(verts_.size(), UINT32_MAX);
        std::queue<uint32_t> q;
        dist[src] = 0;
        q.push(src);
        while (!q.empty()) {
            uint32_t u = q.front();
            q.pop();
            for (uint32_t v : adj_[u])
                if (dist[v] == SIZE_MAX) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                }
        }
        return {std::move(dist), std::move(parent)};
    }

private:
    ComplexityBudget budget_;
    EquatorModel model_;
    std::vector<Curve> verts_;
    std::unordered_map<std::string, uint32_t> index_;
    std::vector<std::vector<uint32_t>> adj_;
    bool adj_built_ = false;
};

struct DistanceBound {
    size_t lower = 0;
    std::optional<size_t> upper;
    std::optional<size_t> unicorn_upper;  // length-1 of a budget-valid unicorn path
    std::vector<Curve> witness_path;
    std::string method = "budget-lower";
    bool ball_complete = false;

    bool exact() const { return upper && lower == *upper; }
};

/// Budget-graph distance: BFS gives the exact value inside the window;
/// a unicorn path whose terms all fit the budget is recorded as an
/// independent upper bound.  Bounds never claim anything beyond the
/// budget.
inline DistanceBound distance_in(BudgetGraph& g, const Curve& a, const Curve& b) {
    DistanceBound out;
    uint32_t ia = g.adjoin(a);
    uint32_t ib = g.adjoin(b);
    if (ia == ib) {
        out.lower = 0;
        out.upper = 0;
        out.method = "bfs-exact";
        out.ball_complete = true;
        return out;
    }
    auto [dist, parent] = g.bfs(ia);
    if (dist[ib] != SIZE_MAX) {
        out.lower = dist[ib];
        out.upper = dist[ib];
        out.method = "bfs-exact";
        out.ball_complete = true;
        for (uint32_t v = ib; v != UINT32_MAX; v = parent[v])
            out.witness_path.insert(out.witness_path.begin(), g.vertices()[v]);
    } else {
        size_t far = 0;
        for (size_t d : dist)
            if (d != SIZE_MAX) far = std::max(far, d);
        out.lower = far + 1;  // not reachable within the explored window
        out.method = "budget-lower";
    }
    // independent unicorn upper bound for loop pairs
    if (a.kind() == TerminalKind::Loop && b.kind() == TerminalKind::Loop) {
        Curve ea = g.vertices()[ia];
        Curve eb = g.vertices()[ib];
        try {
            UnicornPath p = unicorn_p2(ea, eb);
            bool budget_valid = true;
            for (size_t i = 1; i + 1 < p.terms.size(); ++i)
                if (!p.terms[i].essential || p.terms[i].size() > g.budget().max_crossings)
                    budget_valid = false;
            if (budget_valid) out.unicorn_upper = p.terms.size() - 1;
        } catch (const error&) {
            // keep the BFS result; the bound is optional
        }
    }
    return out;
}

inline DistanceBound distance(const Curve& a, const Curve& b, const ComplexityBudget& budget) {
    BudgetGraph g(budget);
    return distance_in(g, a, b);
}

/// Budget derived from a pair per the slack rule: the larger operand
/// plus a slack radius, geodesics being allowed through slightly more
/// complex vertices.
inline ComplexityBudget pair_budget(const Curve& a, const Curve& b, uint32_t slack = 4,
                                    bool loops = true, bool short_rays = true) {
    ComplexityBudget bud;
    bud.depth = std::max(a.word.model.depth, b.word.model.depth);
    bud.max_crossings =
        std::max<uint32_t>(2, static_cast<uint32_t>(std::max(a.size(), b.size())) + slack);
    bud.loops = loops;
    bud.short_rays = short_rays;
    return bud;
}

struct GromovProduct {
    double lower = 0;
    std::optional<double> upper;
    bool exact = false;
};

/// (x . y)_p from three budget distance bounds; interval-valued when a
/// distance is unresolved, never a silent guess.
inline GromovProduct gromov_product_in(BudgetGraph& g, const Curve& p, const Curve& x,
                                       const Curve& y) {
    DistanceBound dxp = distance_in(g, x, p);
    DistanceBound dyp = distance_in(g, y, p);
    DistanceBound dxy = distance_in(g, x, y);
    GromovProduct out;
    if (dxp.exact() && dyp.exact() && dxy.exact()) {
        out.lower = (double(*dxp.upper) + double(*dyp.upper) - double(*dxy.upper)) / 2.0;
        out.upper = out.lower;
        out.exact = true;
        return out;
    }
    // lower bound uses pessimistic combinations; clamp at zero
    double lo = (double(dxp.lower) + double(dyp.lower)) / 2.0;
    if (dxy.upper) lo -= double(*dxy.upper) / 2.0;
    else lo = 0;
    out.lower = std::max(0.0, lo);
    if (dxp.upper && dyp.upper)
        out.upper = (double(*dxp.upper) + double(*dyp.upper) - double(dxy.lower)) / 2.0;
    return out;
}

/// Empirical four-point-condition defect over a sample: a lower bound
/// for the hyperbolicity constant of the budget window.
inline double estimate_delta(const std::vector<Curve>& sample, const ComplexityBudget& budget) {
    BudgetGraph g(budget);
    std::vector<uint32_t> ids;
    for (auto& c : sample) ids.push_back(g.adjoin(c));
    size_t n = ids.size();
    if (n < 4) return 0.0;
    std::vector<std::vector<size_t>> d(n, std::vector<size_t>(n, 0));
    for (size_t i = 0; i < n; ++i) {
        auto [dist, parent] = g.bfs(ids[i]);
        for (size_t j = 0; j < n; ++j) {
            if (dist[ids[j]] == SIZE_MAX)
                fail(errc::resource_limit, "sample distance unresolved within budget");
            d[i][j] = dist[ids[j]];
        }
    }
    double best = 0;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b)
            for (size_t c = b + 1; c < n; ++c)
                for (size_t e = c + 1; e < n; ++e) {
                    double s1 = double(d[a][b] + d[c][e]);
                    double s2 = double(d[a][c] + d[b][e]);
                    double s3 = double(d[a][e] + d[b][c]);
                    double hi = std::max({s1, s2, s3});
                    double mid = s1 + s2 + s3 - hi - std::min({s1, s2, s3});
                    best = std::max(best, (hi - mid) / 2.0);
                }
    return best;
}

struct QiPairReport {
    size_t d_kind = 0;       // distance among the pair's own kind
    size_t d_srl = 0;        // distance in the short-ray-and-loop graph
    bool upper_ok = false;   // d_srl <= d_kind
    bool lower_ok = false;   // (1/3) d_kind - 2 <= d_srl
    bool resolved = false;
};

/// Compare the single-kind graph metric with the short-ray-and-loop
/// metric on given pairs and check the displayed inequalities; failures
/// of the lower inequality at finite budget are budget artifacts and are
/// reported, not asserted.
inline std::vector<QiPairReport> quasi_isometry_experiment(
    const std::vector<std::pair<Curve, Curve>>& pairs, const ComplexityBudget& budget) {
    ComplexityBudget kind_budget = budget;
    ComplexityBudget srl_budget = budget;
    srl_budget.loops = true;
    srl_budget.short_rays = true;
    std::vector<QiPairReport> out;
    for (auto& [a, b] : pairs) {
        QiPairReport r;
        kind_budget.loops = a.kind() == TerminalKind::Loop;
        kind_budget.short_rays = !kind_budget.loops;
        BudgetGraph gk(kind_budget);
        BudgetGraph gs(srl_budget);
        DistanceBound dk = distance_in(gk, a, b);
        DistanceBound ds = distance_in(gs, a, b);
        if (dk.exact() && ds.exact()) {
            r.resolved = true;
            r.d_kind = *dk.upper;
            r.d_srl = *ds.upper;
            r.upper_ok = r.d_srl <= r.d_kind;
            r.lower_ok = double(r.d_kind) / 3.0 - 2.0 <= double(r.d_srl);
        }
        out.push_back(r);
    }
    return out;
}

} // namespace curvelab
