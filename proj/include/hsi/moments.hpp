#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace hsi {

/// First and second moment of X, the number of size-k dominating sets.
struct MomentReport {
    double expected_count = 0.0;
    /// F(0..k): contribution of ordered pairs overlapping in i vertices.
    /// F(0) uses the closed form C(n,k) C(n-k,k) (1-q0)^(2n-2k).
    std::vector<double> f_terms;
    double second_moment = 0.0;
    double ratio_to_square = 0.0;
    double q0 = 0.0;
    /// The i = 0 pair term evaluated with q00 = (1-p)^{M_0} like every other
    /// overlap, and the second moment obtained with it. Equal to F(0) and
    /// second_moment when M_0 = 2M (always at d = 2).
    double f0_general = 0.0;
    double general_second_moment = 0.0;
};

enum class Regime { vertex_cover, dominating_set };

struct CorrelationRatio {
    double value = 1.0;
    double log_value = 0.0;
    Regime regime = Regime::dominating_set;
    /// exp{(ln^2 n)^(2-i/k) / n^(1-i/k)}, dominating-set regime only.
    std::optional<double> asymptotic_surrogate;
};

struct QuasiExpectation {
    double expected = 0.0;
    /// E[N] / E[X] = (n-k) q0 / (1-q0)
    double ratio_to_expected_count = 0.0;
};

/// Per-overlap terms of E[N^2] for quasi-dominating sets.
struct QuasiTerm {
    std::size_t i = 0;
    std::size_t m = 0;  // n - 2k + i
    double q00 = 0.0;
    double q11 = 0.0;
    double phi = 0.0;
    double p1 = 0.0, p2 = 0.0, p3 = 0.0, p4 = 0.0;
    double w = 0.0;  // P1 + P2 + P3 + 2 P4
    /// phi * w, accumulated in log space
    double contribution = 0.0;
    /// m < 2: no ordered pair of distinct outside vertices, P2 forced to 0.
    bool pair_term_empty = false;
};

struct QuasiMomentReport {
    double expected_quasi = 0.0;
    double q0 = 0.0;
    std::vector<QuasiTerm> terms;
    double second_moment = 0.0;
};

struct SolvabilityBounds {
    double lower = 0.0;       // delta / (1 + delta)
    double upper = 0.0;       // delta
    double uniqueness = 0.0;  // delta (1 - delta) / (1 + delta)
};

double log_expected_count(std::size_t n, std::size_t d, std::size_t k, double p);
/// C(n,k) (1 - (1-p)^M)^(n-k)
double expected_count(std::size_t n, std::size_t d, std::size_t k, double p);

/// Requires n >= 2k.
MomentReport second_moment(std::size_t n, std::size_t d, std::size_t k, double p);

CorrelationRatio ds_correlation_ratio(std::size_t n, std::size_t d, std::size_t k, std::size_t i, double p);

/// Probability that a fixed k-set meets every edge: (1-p)^C(n-k, d).
double vc_cover_prob(std::size_t n, std::size_t k, double p, std::size_t d);
/// (1-p)^(-C(n-2k+i, d))
CorrelationRatio vc_correlation_ratio(std::size_t n, std::size_t k, std::size_t i, double p, std::size_t d);

QuasiExpectation quasi_expected(std::size_t n, std::size_t d, std::size_t k, double p);
/// Requires n >= 2k.
QuasiMomentReport quasi_second_moment(std::size_t n, std::size_t d, std::size_t k, double p);

SolvabilityBounds solvability_bounds(double delta);

}  // namespace hsi
