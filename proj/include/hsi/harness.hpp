#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hsi/model.hpp"
#include "hsi/moments.hpp"
#include "hsi/parallel.hpp"
#include "hsi/solvers.hpp"

namespace hsi {

enum class Verdict { within_3se, outside, report_only };

const char* to_string(Verdict verdict);

struct EstimateRecord {
    std::string name;
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
    double formula_value = 0.0;
    std::optional<double> bound_lo;
    std::optional<double> bound_hi;
    Verdict verdict = Verdict::report_only;
};

/// within_3se iff |estimate - formula| <= 3 se (exact equality when se = 0).
Verdict judge(double estimate, double std_error, double formula_value);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Wilson score interval for a binomial proportion.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.959963984540054);

/// Mean and standard error of the mean.
struct SampleMean {
    double mean = 0.0;
    double std_error = 0.0;
};
SampleMean sample_mean(const std::vector<std::uint64_t>& values);

struct CountExperiment {
    EstimateRecord record;
    std::vector<std::uint64_t> counts;  // per trial, trial-index order
};

struct SolvableExperiment {
    EstimateRecord solvable;  // Pr(X > 0)
    EstimateRecord unique;    // Pr(X = 1)
    /// Hard gate: Pr(X > 0) <= mean X + 3 se(mean X); bound_hi holds the
    /// right-hand side.
    EstimateRecord markov;
    bool markov_ok = false;
    std::vector<std::uint64_t> counts;
};

struct PairCorrelationExperiment {
    EstimateRecord record;
    std::uint64_t joint = 0;
    std::uint64_t first = 0;
    std::uint64_t second = 0;
};

struct QuasiExperiment {
    EstimateRecord mean;
    /// Pr(quasi-dominating set exists | no dominating set), report-only.
    std::optional<EstimateRecord> conditional;
    std::vector<std::uint64_t> quasi_counts;
    std::vector<std::uint64_t> dominating_counts;
};

struct TrendExperiment {
    std::vector<EstimateRecord> records;
    std::vector<double> excess;  // E[X^2]/E[X]^2 - (1 + 1/delta)
    bool non_increasing = true;
};

struct HarnessOptions {
    Execution execution = Execution::parallel;
    std::uint64_t budget = 1'000'000'000;
};

/// Seed of trial t: params.seed ^ t.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial);

/// Mean exact dominating-set count vs E[X]; enforced at d = 2.
CountExperiment mc_expected_count(const ModelParams& params, std::uint64_t trials, const HarnessOptions& options = {});

SolvableExperiment mc_solvable_and_unique(const ModelParams& params, std::uint64_t trials,
                                          const HarnessOptions& options = {});

/// Fixed S1 = {0..k-1}, S2 = {k-i..2k-i-1}. Enforced for the vertex-cover
/// regime, and for dominating sets only at d = 2 with i = k. Throws DegenerateEstimateError
/// when a marginal estimate is zero.
PairCorrelationExperiment mc_pair_correlation(const ModelParams& params, std::size_t i, std::uint64_t trials,
                                              Regime regime, const HarnessOptions& options = {});

/// Mean exact quasi count vs E[N]; enforced at d = 2. With
/// require_conditional, throws DegenerateEstimateError when no trial lacks a
/// dominating set.
QuasiExperiment mc_quasi_frequency(const ModelParams& params, std::uint64_t trials, bool require_conditional = true,
                                   const HarnessOptions& options = {});

/// Analytic E[X^2]/E[X]^2 at calibrated p along a ladder of n (each entry
/// needs delta set; p is ignored and recalibrated).
TrendExperiment ratio_trend(const std::vector<ModelParams>& ladder);

inline constexpr const char* kCsvSchema = "# hsi-estimates v1";

/// Schema line, header, one row per record. Doubles use %.17g, absent bounds
/// are empty fields.
void write_csv(std::ostream& out, const std::vector<EstimateRecord>& records);

}  // namespace hsi
