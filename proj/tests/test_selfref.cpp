#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hsi/errors.hpp"
#include "hsi/model.hpp"
#include "hsi/selfref.hpp"

using namespace hsi;

namespace {

std::vector<std::size_t> degrees(const Hypergraph& g) {
    std::vector<std::size_t> out(g.n());
    for (std::size_t v = 0; v < g.n(); ++v) out[v] = vertex_edge_degree(g, static_cast<Vertex>(v));
    return out;
}

std::vector<Edge> protected_edges(const Hypergraph& g, const ProtectedRegion& region) {
    std::vector<Edge> out;
    for (const Edge& e : g.edges())
        if (region.touches(e)) out.push_back(e);
    return out;
}

}  // namespace

TEST_CASE("protected region sizing") {
    const ProtectedRegion r = ProtectedRegion::auto_sized(60, 0.5);
    CHECK(r.vertices.size() == 8);
    CHECK(r.exponent_c == doctest::Approx(0.5));
    CHECK(r.touches(Edge{7, 20, 30}));
    CHECK_FALSE(r.touches(Edge{8, 20, 30}));
    CHECK(ProtectedRegion::prefix(0).vertices.empty());
    CHECK_THROWS_AS(ProtectedRegion::auto_sized(60, 1.0), UsageError);
}

TEST_CASE("find pivot") {
    const Hypergraph g(7, 3, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}});
    const Pivot a = find_pivot(g, VertexSet{0}, ProtectedRegion{});
    CHECK(a.v == 1);
    CHECK(a.u == 0);
    CHECK(a.edge == Edge{0, 1, 2});

    const Pivot b = find_pivot(g, VertexSet{0}, ProtectedRegion{VertexSet{1, 2}, std::nullopt});
    CHECK(b.v == 3);
    CHECK(b.edge == Edge{0, 3, 4});

    CHECK_THROWS_AS(find_pivot(g, VertexSet::range(7), ProtectedRegion{}), NotFoundError);
    CHECK(find_pivots(g, VertexSet{0}, ProtectedRegion{}).size() == 6);

    const Pivot c = find_pivot(g, VertexSet{0}, ProtectedRegion{}, 99);
    CHECK(find_pivot(g, VertexSet{0}, ProtectedRegion{}, 99).v == c.v);
}

TEST_CASE("pivot diagnostics") {
    const PivotDiagnostics d = pivot_diagnostics(7, 3, 1, 0.5, 0.5);
    CHECK(d.prob_Av == doctest::Approx(0.15625).epsilon(1e-14));
    CHECK(d.prob_Bv == doctest::Approx(1 - 1.0 / 32).epsilon(1e-14));
    // h = round(sqrt 7) = 3: M' = C(3,2) - C(2,2)
    CHECK(d.M_prime == doctest::Approx(2.0));
    CHECK(d.prob_any_pivot == doctest::Approx(1 - std::pow(1 - 0.15625 / (31.0 / 32), 3)).epsilon(1e-12));

    const PivotDiagnostics zero = pivot_diagnostics(7, 3, 1, 0.0, 0.5);
    CHECK(zero.prob_Av == 0.0);
    CHECK(zero.prob_Bv == 0.0);

    for (std::size_t n : {20, 40, 80})
        for (std::size_t k : {1, 2, 4})
            for (double p : {0.001, 0.01, 0.1, 0.5, 0.9}) {
                const PivotDiagnostics x = pivot_diagnostics(n, 3, k, p, 0.5);
                CHECK(x.prob_Av <= x.prob_Bv + 1e-15);
                CHECK(x.prob_any_pivot >= 0.0);
                CHECK(x.prob_any_pivot <= 1.0);
                CHECK(x.M_prime >= 0.0);
            }
    CHECK_THROWS_AS(pivot_diagnostics(7, 3, 1, 1.5, 0.5), UsageError);
}

TEST_CASE("symmetry mapping on the two-edge picture") {
    // roles u=1, v=2, z=3, u'=4, v'=5, w=6
    const VertexSet s{0, 1, 4};
    const Hypergraph g(7, 3, {{1, 2, 3}, {4, 5, 6}});
    const SwapResult fwd = forward_swap(g, s, ProtectedRegion{});
    CHECK(fwd.record.roles == SwapRoles{1, 2, 4, 5, {3}, {6}});
    CHECK(fwd.record.removed[0] == Edge{1, 2, 3});
    CHECK(fwd.record.removed[1] == Edge{4, 5, 6});
    CHECK(fwd.record.added[0] == Edge{1, 3, 4});
    CHECK(fwd.record.added[1] == Edge{2, 5, 6});
    CHECK(fwd.graph.edges() == std::vector<Edge>{{1, 3, 4}, {2, 5, 6}});
    CHECK(fwd.record.direction == SwapDirection::forward);
    CHECK_FALSE(domination_status(fwd.graph, s).dominated[2]);

    const SwapResult back = backward_swap_with_roles(fwd.graph, fwd.record.roles, ProtectedRegion{});
    CHECK(back.graph == g);
    CHECK(back.record.added[0] == Edge{1, 2, 3});
    CHECK(back.record.added[1] == Edge{4, 5, 6});
}

TEST_CASE("backward swap repairs a quasi-dominating set") {
    const VertexSet s{0, 1, 4};
    const Hypergraph g(7, 3, {{0, 5, 6}, {1, 3, 4}, {2, 5, 6}});
    REQUIRE(is_quasi_dominating(g, s) == std::optional<Vertex>(2));
    const SwapResult r = backward_swap(g, s, ProtectedRegion{});
    CHECK(domination_status(r.graph, s).undominated.empty());
    CHECK(r.graph.edges() == std::vector<Edge>{{0, 5, 6}, {1, 2, 3}, {4, 5, 6}});
    CHECK(degrees(r.graph) == degrees(g));

    const Hypergraph isolated(4, 2, {{0, 1}, {0, 2}});
    CHECK_THROWS_AS(backward_swap(isolated, VertexSet{0}, ProtectedRegion{}), NotFoundError);
    CHECK_THROWS_AS(backward_swap(isolated, VertexSet{0, 3}, ProtectedRegion{}), UsageError);
}

TEST_CASE("forward swap rejects candidates whose addition already exists") {
    const VertexSet s{0, 1, 4};
    const Hypergraph g(7, 3, {{1, 2, 3}, {1, 3, 4}, {4, 5, 6}});
    const SwapResult r = forward_swap(g, s, ProtectedRegion{});
    CHECK(r.record.roles.u == 4);
    CHECK(r.record.roles.v == 5);
    CHECK(r.record.roles.u_prime == 1);
    CHECK(r.record.roles.v_prime == 2);
    CHECK(r.record.added[0] == Edge{1, 4, 6});
    CHECK(r.record.added[1] == Edge{2, 3, 5});
}

TEST_CASE("apply swap validation") {
    const Hypergraph g(7, 3, {{1, 2, 3}, {4, 5, 6}});
    const SwapRoles roles{1, 2, 4, 5, {3}, {6}};
    CHECK_THROWS_AS(apply_swap(g, roles, SwapDirection::backward, ProtectedRegion{}), UsageError);
    CHECK_THROWS_AS(apply_swap(g, roles, SwapDirection::forward, ProtectedRegion{VertexSet{6}, std::nullopt}),
                    UsageError);
    CHECK_THROWS_AS(apply_swap(g, SwapRoles{1, 2, 4, 5, {3}, {5}}, SwapDirection::forward, ProtectedRegion{}),
                    UsageError);
    CHECK_NOTHROW(apply_swap(g, roles, SwapDirection::forward, ProtectedRegion{VertexSet{0}, std::nullopt}));
}

TEST_CASE("self-referential pairs") {
    ModelParams params;
    params.n = 24;
    params.d = 3;
    params.k = 2;
    params.p = calibrate_p(24, 3, 2, 0.5).p;
    params.seed = 2024;
    const ProtectedRegion region = ProtectedRegion::prefix(5);

    PairOptions none;
    none.retry_budget = 0;
    CHECK_THROWS_AS(build_selfref_pair(params, region, none), NotFoundError);

    std::size_t built = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        params.seed = 7919 * seed + 1;
        SelfRefPair pair;
        try {
            pair = build_selfref_pair(params, region);
        } catch (const NotFoundError&) {
            continue;
        }
        ++built;
        CHECK(pair.yes_report.unique);
        CHECK(is_dominating(pair.yes, pair.solution));
        CHECK_FALSE(is_dominating(pair.no, pair.solution));
        CHECK(pair.flipped == (pair.no_report.count == 0));
        CHECK(degrees(pair.yes) == degrees(pair.no));
        CHECK(pair.yes.edge_count() == pair.no.edge_count());
        CHECK(protected_edges(pair.yes, region) == protected_edges(pair.no, region));
        CHECK_FALSE(domination_status(pair.no, pair.solution).dominated[pair.record.roles.v]);
        const SwapResult back = backward_swap_with_roles(pair.no, pair.record.roles, region);
        CHECK(back.graph == pair.yes);

        ModelParams again = params;
        again.seed = pair.instance_seed;
        CHECK(sample_hypergraph(again) == pair.yes);
        const SelfRefPair twice = build_selfref_pair(params, region);
        CHECK(twice.record.roles == pair.record.roles);
    }
    CHECK(built >= 10);
}
