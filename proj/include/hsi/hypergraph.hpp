#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace hsi {

using Vertex = std::uint32_t;
using Edge = std::vector<Vertex>;

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    /// Sorts the input; throws UsageError on duplicates.
    explicit VertexSet(std::vector<Vertex> members);
    VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

    /// {0, 1, ..., n-1}
    static VertexSet range(std::size_t n);

    const std::vector<Vertex>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(Vertex v) const noexcept;
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }
    Vertex operator[](std::size_t i) const { return members_[i]; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

/// Instances with at most this many vertices get per-vertex closed
/// neighborhood bitmasks; the enumeration solvers require them.
inline constexpr std::size_t kMaskVertexLimit = 4096;

/// d-uniform hypergraph on vertices 0..n-1. Immutable after construction.
///
/// Edges are kept in lexicographic order, each ascending. The constructor
/// canonicalizes vertex order inside each edge and the order of edges, and
/// rejects everything else that breaks the invariants (wrong arity, repeated
/// vertex, out-of-range id, duplicate edge) with UsageError.
class Hypergraph {
public:
    Hypergraph() : Hypergraph(0, 2, {}) {}
    Hypergraph(std::size_t n, std::size_t d, std::vector<Edge> edges);

    std::size_t n() const noexcept { return n_; }
    std::size_t d() const noexcept { return d_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    bool contains_edge(const Edge& sorted_edge) const;
    /// Indices into edges() of the edges containing u.
    std::span<const std::uint32_t> incident(Vertex u) const;

    bool has_masks() const noexcept { return words_ > 0 || n_ == 0; }
    std::size_t mask_words() const noexcept { return words_; }
    /// Bitmask of the closed neighborhood S_u (bit v set iff v in S_u).
    std::span<const std::uint64_t> mask(Vertex u) const;

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.n_ == b.n_ && a.d_ == b.d_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_;
    std::size_t d_;
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> incidence_offsets_;
    std::vector<std::uint32_t> incidence_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> masks_;
};

struct DominationStatus {
    std::vector<bool> dominated;
    VertexSet undominated;
};

/// Family {S_u}; sets[u] is the closed neighborhood of u.
struct HittingFamily {
    std::vector<VertexSet> sets;
};

/// Throws UsageError unless u < n.
void check_vertex(const Hypergraph& g, Vertex u);
/// Throws UsageError unless every member of s is < n.
void check_vertex_set(const Hypergraph& g, const VertexSet& s);

VertexSet closed_neighborhood(const Hypergraph& g, Vertex u);
std::size_t vertex_edge_degree(const Hypergraph& g, Vertex u);

DominationStatus domination_status(const Hypergraph& g, const VertexSet& s);
bool is_dominating(const Hypergraph& g, const VertexSet& s);
/// The single undominated vertex, if exactly one exists.
std::optional<Vertex> is_quasi_dominating(const Hypergraph& g, const VertexSet& s);

HittingFamily to_hitting_instance(const Hypergraph& g);
/// True iff s meets every member of the family.
bool hits_all(const HittingFamily& family, const VertexSet& s);

}  // namespace hsi
