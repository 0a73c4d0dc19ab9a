#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hsi/hypergraph.hpp"
#include "hsi/model.hpp"
#include "hsi/solvers.hpp"

namespace hsi {

/// Vertex set V_H of the induced subgraph that swaps must leave untouched.
struct ProtectedRegion {
    VertexSet vertices;
    std::optional<double> exponent_c;

    /// V_H = {0, ..., round(n^c) - 1}.
    static ProtectedRegion auto_sized(std::size_t n, double c);
    /// V_H = {0, ..., size - 1}.
    static ProtectedRegion prefix(std::size_t size);

    bool touches(const Edge& e) const;
};

enum class SwapDirection { forward, backward };

/// Role vertices of one symmetry mapping.
///
/// forward:  (u, v, z...), (u', v', w...)  ->  (u, u', z...), (v, v', w...)
/// backward: (u, u', z...), (v, v', w...)  ->  (u, v, z...), (u', v', w...)
///
/// The residual tuples z... and w... travel with u and with v' respectively,
/// so applying backward with the roles of a forward record undoes it.
struct SwapRoles {
    Vertex u = 0;
    Vertex v = 0;
    Vertex u_prime = 0;
    Vertex v_prime = 0;
    std::vector<Vertex> z;
    std::vector<Vertex> w;

    friend bool operator==(const SwapRoles&, const SwapRoles&) = default;
};

struct SwapRecord {
    std::array<Edge, 2> removed;
    std::array<Edge, 2> added;
    SwapRoles roles;
    SwapDirection direction = SwapDirection::forward;
    ProtectedRegion region;
};

struct SwapResult {
    Hypergraph graph;
    SwapRecord record;
};

/// v outside V_H and S whose only contact with S is one edge holding exactly
/// one member u of S.
struct Pivot {
    Vertex v = 0;
    Vertex u = 0;
    Edge edge;
};

struct PivotDiagnostics {
    double prob_Av = 0.0;
    double prob_Bv = 0.0;
    double prob_any_pivot = 0.0;
    double M_prime = 0.0;
};

/// All pivots, ordered by v.
std::vector<Pivot> find_pivots(const Hypergraph& g, const VertexSet& s, const ProtectedRegion& region);

/// Lowest pivot, or a uniformly chosen one when shuffle_seed is given.
/// Throws NotFoundError when there is none.
Pivot find_pivot(const Hypergraph& g, const VertexSet& s, const ProtectedRegion& region,
                 std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// Analytic Pr(A_v), Pr(B_v), Pr(some pivot exists) and M' for a region of
/// round(n^c) vertices.
PivotDiagnostics pivot_diagnostics(std::size_t n, std::size_t d, std::size_t k, double p, double c);

/// Applies the swap described by `roles` without any solution-set checks.
/// Throws UsageError if a removed edge is absent, an added edge is present or
/// malformed, or a touched edge meets the region.
SwapResult apply_swap(const Hypergraph& g, const SwapRoles& roles, SwapDirection direction,
                      const ProtectedRegion& region);

/// Kills the dominating set s: picks a pivot (v, u, e1) and a partner edge
/// e2 = (u', v', w...) and swaps them so v loses its only link to s.
SwapResult forward_swap(const Hypergraph& g, const VertexSet& s, const ProtectedRegion& region,
                        std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// Repairs the quasi-dominating set s by linking its undominated vertex to a
/// member of s.
SwapResult backward_swap(const Hypergraph& g, const VertexSet& s, const ProtectedRegion& region,
                         std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// Inverse of a forward swap.
SwapResult backward_swap_with_roles(const Hypergraph& g, const SwapRoles& roles, const ProtectedRegion& region);

struct PairOptions {
    std::size_t retry_budget = 100;
    SolveOptions solve;
    std::optional<std::uint64_t> shuffle_seed;
};

struct SelfRefPair {
    Hypergraph yes;
    Hypergraph no;
    VertexSet solution;
    SwapRecord record;
    SolveReport yes_report;
    SolveReport no_report;
    std::uint64_t instance_seed = 0;
    std::size_t attempts = 0;
    /// G_no has no size-k dominating set.
    bool flipped = false;
};

/// Samples instances with seeds params.seed ^ attempt until one has a unique
/// size-k dominating set admitting a forward swap, then re-solves the
/// swapped instance.
SelfRefPair build_selfref_pair(const ModelParams& params, const ProtectedRegion& region,
                               const PairOptions& options = {});

}  // namespace hsi
