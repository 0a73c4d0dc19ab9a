#include "hsi/selfref.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hsi/combinatorics.hpp"
#include "hsi/errors.hpp"
#include "hsi/random.hpp"

namespace hsi {

namespace {

Edge make_edge(std::initializer_list<Vertex> roles, const std::vector<Vertex>& residual) {
    Edge e(roles);
    e.insert(e.end(), residual.begin(), residual.end());
    std::sort(e.begin(), e.end());
    return e;
}

std::vector<Vertex> residual_of(const Edge& e, Vertex a, Vertex b) {
    std::vector<Vertex> rest;
    for (Vertex x : e)
        if (x != a && x != b) rest.push_back(x);
    return rest;
}

std::size_t members_in(const Edge& e, const VertexSet& s) {
    return static_cast<std::size_t>(std::count_if(e.begin(), e.end(), [&](Vertex x) { return s.contains(x); }));
}

bool well_formed(const Edge& e, std::size_t d) {
    return e.size() == d && std::adjacent_find(e.begin(), e.end()) == e.end();
}

struct SwapEdges {
    std::array<Edge, 2> removed;
    std::array<Edge, 2> added;
};

SwapEdges edges_for(const SwapRoles& r, SwapDirection direction) {
    const Edge u_uprime = make_edge({r.u, r.u_prime}, r.z);
    const Edge v_vprime = make_edge({r.v, r.v_prime}, r.w);
    const Edge u_v = make_edge({r.u, r.v}, r.z);
    const Edge uprime_vprime = make_edge({r.u_prime, r.v_prime}, r.w);
    if (direction == SwapDirection::forward) return {{u_v, uprime_vprime}, {u_uprime, v_vprime}};
    return {{u_uprime, v_vprime}, {u_v, uprime_vprime}};
}

// Cheap pre-check used while scanning candidates.
bool additions_free(const Hypergraph& g, const SwapRoles& roles, SwapDirection direction) {
    const SwapEdges edges = edges_for(roles, direction);
    return well_formed(edges.added[0], g.d()) && well_formed(edges.added[1], g.d()) &&
           edges.added[0] != edges.added[1] && !g.contains_edge(edges.added[0]) && !g.contains_edge(edges.added[1]);
}

std::vector<Vertex> free_vertices(const Hypergraph& g, const VertexSet& s, const ProtectedRegion& region) {
    std::vector<Vertex> out;
    for (std::size_t x = 0; x < g.n(); ++x) {
        const auto v = static_cast<Vertex>(x);
        if (!s.contains(v) && !region.vertices.contains(v)) out.push_back(v);
    }
    return out;
}

}  // namespace

ProtectedRegion ProtectedRegion::auto_sized(std::size_t n, double c) {
    if (!(c > 0.0 && c < 1.0)) throw UsageError("region exponent c must lie in (0, 1)");
    const auto size = static_cast<std::size_t>(std::llround(std::pow(static_cast<double>(n), c)));
    ProtectedRegion region = prefix(std::min(size, n));
    region.exponent_c = c;
    return region;
}

ProtectedRegion ProtectedRegion::prefix(std::size_t size) {
    return ProtectedRegion{VertexSet::range(size), std::nullopt};
}

bool ProtectedRegion::touches(const Edge& e) const {
    return std::any_of(e.begin(), e.end(), [&](Vertex x) { return vertices.contains(x); });
}

std::vector<Pivot> find_pivots(const Hypergraph& g, const VertexSet& s, const ProtectedRegion& region) {
    check_vertex_set(g, s);
    std::vector<Pivot> pivots;
    for (Vertex v : free_vertices(g, s, region)) {
        const Edge* contact = nullptr;
        std::size_t contacts = 0;
        for (std::uint32_t idx : g.incident(v)) {
            const Edge& e = g.edges()[idx];
            if (members_in(e, s) == 0) continue;
            ++contacts;
            contact = &e;
        }
        if (contacts != 1 || members_in(*contact, s) != 1) continue;
        const Vertex u = *std::find_if(contact->begin(), contact->end(), [&](Vertex x) { return s.contains(x); });
        pivots.push_back({v, u, *contact});
    }
    return pivots;
}

Pivot find_pivot(const Hypergraph& g, const VertexSet& s, const ProtectedRegion& region,
                 std::optional<std::uint64_t> shuffle_seed) {
    std::vector<Pivot> pivots = find_pivots(g, s, region);
    if (pivots.empty()) throw NotFoundError("no pivot vertex outside the protected region");
    if (shuffle_seed) return pivots[Rng(*shuffle_seed).below(pivots.size())];
    return pivots.front();
}

PivotDiagnostics pivot_diagnostics(std::size_t n, std::size_t d, std::size_t k, double p, double c) {
    if (!(p >= 0.0 && p <= 1.0)) throw UsageError("p must lie in [0, 1]");
    if (!(c > 0.0 && c < 1.0)) throw UsageError("c must lie in (0, 1)");
    if (d < 2 || d > n || k < 1 || k >= n) throw UsageError("need 2 <= d <= n and 1 <= k <= n-1");
    const auto h = static_cast<std::size_t>(std::llround(std::pow(static_cast<double>(n), c)));
    if (h + k >= n) throw UsageError("region plus solution leaves no candidate pivot vertex");

    const auto top = static_cast<std::int64_t>(n);
    const auto dd = static_cast<std::int64_t>(d);
    const auto kk = static_cast<std::int64_t>(k);
    const auto hh = static_cast<std::int64_t>(h);
    const auto m = static_cast<double>(count_M(n, k, d));
    const auto single = static_cast<double>(k) * static_cast<double>(binomial(top - 1 - kk, dd - 2));

    PivotDiagnostics out;
    out.prob_Av = p == 0.0 ? 0.0 : single * p * pow_one_minus(p, m - 1.0);
    out.prob_Bv = one_minus_pow_one_minus(p, m);
    const double conditional = out.prob_Bv > 0.0 ? out.prob_Av / out.prob_Bv : 0.0;
    const auto candidates = static_cast<double>(n - h - k);
    out.prob_any_pivot = -std::expm1(candidates * safe_log1p(-conditional));
    out.M_prime = static_cast<double>(binomial(top - 1 - hh, dd - 1)) -
                  static_cast<double>(binomial(top - kk - 1 - hh, dd - 1));
    return out;
}

SwapResult apply_swap(const Hypergraph& g, const SwapRoles& roles, SwapDirection direction,
                      const ProtectedRegion& region) {
    const SwapEdges edges = edges_for(roles, direction);
    for (const auto* group : {&edges.removed, &edges.added}) {
        for (const Edge& e : *group) {
            if (!well_formed(e, g.d())) throw UsageError("swap roles do not form d distinct vertices per edge");
            if (region.touches(e)) throw UsageError("swap touches an edge meeting the protected region");
        }
        if ((*group)[0] == (*group)[1]) throw UsageError("swap edges coincide");
    }
    for (const Edge& e : edges.removed)
        if (!g.contains_edge(e)) throw UsageError("edge to remove is not present");
    for (const Edge& e : edges.added)
        if (g.contains_edge(e)) throw UsageError("edge to add is already present");

    std::vector<Edge> next;
    next.reserve(g.edge_count());
    for (const Edge& e : g.edges())
        if (e != edges.removed[0] && e != edges.removed[1]) next.push_back(e);
    next.push_back(edges.added[0]);
    next.push_back(edges.added[1]);

    SwapRecord record{edges.removed, edges.added, roles, direction, region};
    return {Hypergraph(g.n(), g.d(), std::move(next)), std::move(record)};
}

SwapResult forward_swap(const Hypergraph& g, const VertexSet& s, const ProtectedRegion& region,
                        std::optional<std::uint64_t> shuffle_seed) {
    if (!is_dominating(g, s)) throw UsageError("forward swap needs a dominating set");
    std::vector<Pivot> pivots = find_pivots(g, s, region);
    std::vector<Vertex> partners = free_vertices(g, s, region);
    std::optional<Rng> rng;
    if (shuffle_seed) {
        rng.emplace(*shuffle_seed);
        rng->shuffle(pivots);
    }
    for (const Pivot& pivot : pivots) {
        if (region.touches(pivot.edge)) continue;
        if (rng) rng->shuffle(partners);
        for (Vertex v_prime : partners) {
            if (v_prime == pivot.v) continue;
            for (std::uint32_t idx : g.incident(v_prime)) {
                const Edge& e2 = g.edges()[idx];
                // e2 must carry exactly one member u' of s so the new edge
                // (v, v', w...) leaves v undominated.
                if (region.touches(e2) || members_in(e2, s) != 1) continue;
                if (std::binary_search(e2.begin(), e2.end(), pivot.v)) continue;
                const Vertex u_prime = *std::find_if(e2.begin(), e2.end(), [&](Vertex x) { return s.contains(x); });
                if (u_prime == pivot.u || std::binary_search(pivot.edge.begin(), pivot.edge.end(), u_prime)) continue;
                SwapRoles roles{pivot.u,
                                pivot.v,
                                u_prime,
                                v_prime,
                                residual_of(pivot.edge, pivot.u, pivot.v),
                                residual_of(e2, u_prime, v_prime)};
                if (!additions_free(g, roles, SwapDirection::forward)) continue;
                return apply_swap(g, roles, SwapDirection::forward, region);
            }
        }
    }
    throw NotFoundError("no pivot admits a partner edge for the forward swap");
}

SwapResult backward_swap(const Hypergraph& g, const VertexSet& s, const ProtectedRegion& region,
                         std::optional<std::uint64_t> shuffle_seed) {
    const std::optional<Vertex> missed = is_quasi_dominating(g, s);
    if (!missed) throw UsageError("backward swap needs a quasi-dominating set");
    const Vertex v = *missed;
    if (region.vertices.contains(v)) throw NotFoundError("undominated vertex lies in the protected region");

    // e2 = (v, v', w...): every edge at v avoids s because v is undominated.
    std::vector<std::pair<Vertex, std::uint32_t>> links;
    for (std::uint32_t idx : g.incident(v)) {
        const Edge& e2 = g.edges()[idx];
        if (region.touches(e2)) continue;
        for (Vertex x : e2)
            if (x != v) links.emplace_back(x, idx);
    }
    std::sort(links.begin(), links.end());
    // e1 = (u, u', z...) with u != u' both in s.
    std::vector<std::uint32_t> bridges;
    for (std::uint32_t idx = 0; idx < g.edge_count(); ++idx) {
        const Edge& e1 = g.edges()[idx];
        if (!region.touches(e1) && members_in(e1, s) >= 2) bridges.push_back(idx);
    }
    if (shuffle_seed) {
        Rng rng(*shuffle_seed);
        rng.shuffle(links);
        rng.shuffle(bridges);
    }
    for (const auto& [v_prime, e2_idx] : links) {
        const Edge& e2 = g.edges()[e2_idx];
        for (std::uint32_t e1_idx : bridges) {
            const Edge& e1 = g.edges()[e1_idx];
            for (Vertex u : e1) {
                if (!s.contains(u)) continue;
                for (Vertex u_prime : e1) {
                    if (u_prime == u || !s.contains(u_prime)) continue;
                    SwapRoles roles{u, v, u_prime, v_prime, residual_of(e1, u, u_prime), residual_of(e2, v, v_prime)};
                    if (!additions_free(g, roles, SwapDirection::backward)) continue;
                    return apply_swap(g, roles, SwapDirection::backward, region);
                }
            }
        }
    }
    throw NotFoundError("no edge pair available for the backward swap");
}

SwapResult backward_swap_with_roles(const Hypergraph& g, const SwapRoles& roles, const ProtectedRegion& region) {
    return apply_swap(g, roles, SwapDirection::backward, region);
}

SelfRefPair build_selfref_pair(const ModelParams& params, const ProtectedRegion& region, const PairOptions& options) {
    params.validate();
    std::size_t unique_found = 0;
    std::size_t swap_failures = 0;
    SolveOptions solve = options.solve;
    solve.witness_cap = std::max<std::size_t>(solve.witness_cap, 1);
    for (std::size_t attempt = 0; attempt < options.retry_budget; ++attempt) {
        ModelParams trial = params;
        trial.seed = params.seed ^ attempt;
        Hypergraph g = sample_hypergraph(trial);
        SolveReport yes_report = enumerate_dominating_sets(g, params.k, solve);
        if (!yes_report.unique) continue;
        ++unique_found;
        const VertexSet solution = yes_report.witnesses.front();
        std::optional<SwapResult> swapped;
        try {
            swapped = forward_swap(g, solution, region, options.shuffle_seed);
        } catch (const NotFoundError&) {
            ++swap_failures;
            continue;
        }
        SolveReport no_report = enumerate_dominating_sets(swapped->graph, params.k, solve);
        SelfRefPair pair{std::move(g),
                         std::move(swapped->graph),
                         solution,
                         std::move(swapped->record),
                         std::move(yes_report),
                         std::move(no_report),
                         trial.seed,
                         attempt + 1,
                         false};
        pair.flipped = pair.no_report.count == 0;
        return pair;
    }
    throw NotFoundError("no self-referential pair after " + std::to_string(options.retry_budget) +
                        " attempts (unique instances: " + std::to_string(unique_found) +
                        ", forward swap failures: " + std::to_string(swap_failures) + ")");
}

}  // namespace hsi
