#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "hsi/hypergraph.hpp"

namespace hsi {

/// Ensemble description for G_d(n, p) with target dominating-set size k.
struct ModelParams {
    std::size_t n = 0;
    std::size_t d = 3;
    std::size_t k = 1;
    double p = 0.0;
    /// Target E[X]; only meaningful when p came from calibration.
    std::optional<double> delta;
    std::uint64_t seed = 0;

    /// Throws UsageError unless 2 <= d <= n, 1 <= k <= n, 0 <= p <= 1 and
    /// 0 < delta < 1 (when set).
    void validate() const;
};

/// Edges through a fixed vertex that touch a fixed k-set not containing it:
/// C(n-1, d-1) - C(n-1-k, d-1).
std::uint64_t count_M(std::size_t n, std::size_t k, std::size_t d);

/// Same for the union of two k-sets overlapping in i vertices:
/// C(n-1, d-1) - C(n-1-(2k-i), d-1).
std::uint64_t count_Mi(std::size_t n, std::size_t k, std::size_t i, std::size_t d);

/// Number of vertices outside both sets, n - 2k + i; throws UsageError if
/// negative.
std::size_t outside_count(std::size_t n, std::size_t k, std::size_t i);

/// 1 - exp(-(d-2)! / n^(d-2)). Throws DomainError for d < 3.
double asymptotic_p(std::size_t n, std::size_t d);

struct Calibration {
    double p = 0.0;
    double expected = 0.0;  // E[X] at p
    double residual = 0.0;  // |E[X] - delta|
    int iterations = 0;
};

/// Bisection for p with |E[X](p) - delta| <= tol * delta.
Calibration calibrate_p(std::size_t n, std::size_t d, std::size_t k, double delta, double tol = 1e-9);

/// max(1, round(ln n)). Throws UsageError for n < 2.
std::size_t choose_k(std::size_t n);

/// Colex rank -> ascending d-subset of {0..n-1}.
Edge unrank_subset(std::uint64_t rank, std::size_t d);
/// Inverse of unrank_subset for an ascending subset.
std::uint64_t rank_subset(const Edge& sorted_subset);

/// Samples G_d(n, p) deterministically from params.seed. Every d-subset is
/// present independently with probability p; presence is decided by
/// geometric skipping through the colex ranks 0..C(n,d)-1.
Hypergraph sample_hypergraph(const ModelParams& params);

}  // namespace hsi
