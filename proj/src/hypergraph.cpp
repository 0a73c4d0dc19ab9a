#include "hsi/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "hsi/errors.hpp"

namespace hsi {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
        throw UsageError("vertex set contains a repeated vertex");
    }
}

VertexSet VertexSet::range(std::size_t n) {
    std::vector<Vertex> all(n);
    for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);
    VertexSet s;
    s.members_ = std::move(all);
    return s;
}

bool VertexSet::contains(Vertex v) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), v);
}

Hypergraph::Hypergraph(std::size_t n, std::size_t d, std::vector<Edge> edges)
    : n_(n), d_(d), edges_(std::move(edges)) {
    if (d_ < 2) throw UsageError("edge arity d must be at least 2");
    if (!edges_.empty() && d_ > n_) throw UsageError("edge arity d exceeds vertex count n");
    for (Edge& e : edges_) {
        if (e.size() != d_) {
            throw UsageError("edge has " + std::to_string(e.size()) + " vertices, expected " +
                             std::to_string(d_));
        }
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
            throw UsageError("edge repeats a vertex");
        }
        if (e.back() >= n_) throw UsageError("edge vertex " + std::to_string(e.back()) + " out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw UsageError("duplicate edge");
    }

    incidence_offsets_.assign(n_ + 1, 0);
    for (const Edge& e : edges_)
        for (Vertex v : e) ++incidence_offsets_[v + 1];
    for (std::size_t v = 0; v < n_; ++v) incidence_offsets_[v + 1] += incidence_offsets_[v];
    incidence_.resize(incidence_offsets_[n_]);
    std::vector<std::uint32_t> fill(incidence_offsets_.begin(), incidence_offsets_.end() - 1);
    for (std::uint32_t idx = 0; idx < edges_.size(); ++idx)
        for (Vertex v : edges_[idx]) incidence_[fill[v]++] = idx;

    if (n_ > 0 && n_ <= kMaskVertexLimit) {
        words_ = (n_ + 63) / 64;
        masks_.assign(n_ * words_, 0);
        for (std::size_t u = 0; u < n_; ++u) {
            std::uint64_t* row = masks_.data() + u * words_;
            row[u / 64] |= std::uint64_t{1} << (u % 64);
            for (std::uint32_t idx : incident(static_cast<Vertex>(u)))
                for (Vertex v : edges_[idx]) row[v / 64] |= std::uint64_t{1} << (v % 64);
        }
    }
}

bool Hypergraph::contains_edge(const Edge& sorted_edge) const {
    return std::binary_search(edges_.begin(), edges_.end(), sorted_edge);
}

std::span<const std::uint32_t> Hypergraph::incident(Vertex u) const {
    return {incidence_.data() + incidence_offsets_[u], incidence_.data() + incidence_offsets_[u + 1]};
}

std::span<const std::uint64_t> Hypergraph::mask(Vertex u) const {
    return {masks_.data() + u * words_, words_};
}

void check_vertex(const Hypergraph& g, Vertex u) {
    if (u >= g.n()) {
        throw UsageError("vertex " + std::to_string(u) + " out of range for n=" + std::to_string(g.n()));
    }
}

void check_vertex_set(const Hypergraph& g, const VertexSet& s) {
    if (!s.empty()) check_vertex(g, s.members().back());
}

VertexSet closed_neighborhood(const Hypergraph& g, Vertex u) {
    check_vertex(g, u);
    std::vector<Vertex> out{u};
    for (std::uint32_t idx : g.incident(u))
        for (Vertex v : g.edges()[idx]) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return VertexSet(std::move(out));
}

std::size_t vertex_edge_degree(const Hypergraph& g, Vertex u) {
    check_vertex(g, u);
    return g.incident(u).size();
}

DominationStatus domination_status(const Hypergraph& g, const VertexSet& s) {
    check_vertex_set(g, s);
    DominationStatus status;
    status.dominated.assign(g.n(), false);
    for (Vertex u : s) {
        status.dominated[u] = true;
        for (std::uint32_t idx : g.incident(u))
            for (Vertex v : g.edges()[idx]) status.dominated[v] = true;
    }
    std::vector<Vertex> missed;
    for (std::size_t v = 0; v < g.n(); ++v)
        if (!status.dominated[v]) missed.push_back(static_cast<Vertex>(v));
    status.undominated = VertexSet(std::move(missed));
    return status;
}

bool is_dominating(const Hypergraph& g, const VertexSet& s) {
    return domination_status(g, s).undominated.empty();
}

std::optional<Vertex> is_quasi_dominating(const Hypergraph& g, const VertexSet& s) {
    const DominationStatus status = domination_status(g, s);
    if (status.undominated.size() != 1) return std::nullopt;
    return status.undominated[0];
}

HittingFamily to_hitting_instance(const Hypergraph& g) {
    HittingFamily family;
    family.sets.reserve(g.n());
    for (std::size_t u = 0; u < g.n(); ++u) family.sets.push_back(closed_neighborhood(g, static_cast<Vertex>(u)));
    return family;
}

bool hits_all(const HittingFamily& family, const VertexSet& s) {
    return std::all_of(family.sets.begin(), family.sets.end(), [&](const VertexSet& target) {
        return std::any_of(target.begin(), target.end(), [&](Vertex v) { return s.contains(v); });
    });
}

}  // namespace hsi
