#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hsi/hypergraph.hpp"
#include "hsi/parallel.hpp"

namespace hsi {

struct SolveOptions {
    std::size_t witness_cap = 16;
    /// Maximum number of k-subsets the enumeration may visit.
    std::uint64_t budget = 1'000'000'000;
    Execution execution = Execution::parallel;
};

struct SolveReport {
    std::size_t k = 0;
    std::uint64_t count = 0;
    /// Lowest colex ranks first, at most witness_cap of them.
    std::vector<VertexSet> witnesses;
    /// Quasi enumeration only: the undominated vertex of each witness.
    std::vector<Vertex> missed;
    bool unique = false;
    std::uint64_t subsets_examined = 0;
    double elapsed_seconds = 0.0;
};

/// Exact count of size-k dominating sets. Every k-subset is visited in colex
/// order; no pruning. Throws SizeError if C(n,k) exceeds the budget.
SolveReport enumerate_dominating_sets(const Hypergraph& g, std::size_t k, const SolveOptions& options = {});

/// Exact count of size-k sets leaving exactly one vertex undominated.
SolveReport enumerate_quasi_dominating_sets(const Hypergraph& g, std::size_t k, const SolveOptions& options = {});

/// Existence only: branches on the undominated vertex with the smallest
/// closed neighborhood and prunes when the remaining picks cannot cover what
/// is left.
bool has_dominating_set(const Hypergraph& g, std::size_t k);

/// True iff every edge meets s.
bool is_vertex_cover(const Hypergraph& g, const VertexSet& s);

}  // namespace hsi
