#include "hsi/harness.hpp"

#include <cmath>
#include <cstdio>

#include "hsi/errors.hpp"

namespace hsi {

namespace {

template <typename Result, typename Fn>
std::vector<Result> map_trials(std::uint64_t trials, Execution execution, Fn&& fn) {
    std::vector<Result> out(trials);
    const auto count = static_cast<std::int64_t>(trials);
    if (execution == Execution::serial) {
        for (std::int64_t t = 0; t < count; ++t) out[t] = fn(static_cast<std::uint64_t>(t));
        return out;
    }
#pragma omp parallel for schedule(dynamic, 16) num_threads(worker_count())
    for (std::int64_t t = 0; t < count; ++t) out[t] = fn(static_cast<std::uint64_t>(t));
    return out;
}

Hypergraph sample_trial(const ModelParams& params, std::uint64_t t) {
    ModelParams trial = params;
    trial.seed = trial_seed(params.seed, t);
    return sample_hypergraph(trial);
}

SolveOptions trial_solve(const HarnessOptions& options) {
    SolveOptions solve;
    solve.witness_cap = 0;
    solve.budget = options.budget;
    solve.execution = Execution::serial;  // trials are the parallel axis
    return solve;
}

bool masks_cover(const Hypergraph& g, const VertexSet& s) {
    const std::size_t words = g.mask_words();
    std::vector<std::uint64_t> acc(words, 0);
    for (Vertex u : s) {
        const auto row = g.mask(u);
        for (std::size_t w = 0; w < words; ++w) acc[w] |= row[w];
    }
    for (std::size_t v = 0; v < g.n(); ++v)
        if (!((acc[v / 64] >> (v % 64)) & 1U)) return false;
    return true;
}

double proportion_se(std::uint64_t hits, std::uint64_t trials) {
    const double f = static_cast<double>(hits) / static_cast<double>(trials);
    return std::sqrt(f * (1.0 - f) / static_cast<double>(trials));
}

std::optional<double> bound_delta(const ModelParams& params) {
    if (params.delta) return params.delta;
    const double ex = expected_count(params.n, params.d, params.k, params.p);
    if (ex > 0.0 && ex < 1.0) return ex;
    return std::nullopt;
}

void append_number(std::string& line, double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    line += buffer;
}

}  // namespace

const char* to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::within_3se: return "within-3SE";
        case Verdict::outside: return "outside";
        case Verdict::report_only: return "report-only";
    }
    return "?";
}

Verdict judge(double estimate, double std_error, double formula_value) {
    const double gap = std::abs(estimate - formula_value);
    if (std_error == 0.0) {
        return gap <= 1e-12 * std::max(1.0, std::abs(formula_value)) ? Verdict::within_3se : Verdict::outside;
    }
    return gap <= 3.0 * std_error ? Verdict::within_3se : Verdict::outside;
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
    if (trials == 0) throw DegenerateEstimateError("Wilson interval of zero trials");
    const double t = static_cast<double>(trials);
    const double f = static_cast<double>(successes) / t;
    const double z2 = z * z;
    const double center = (f + z2 / (2.0 * t)) / (1.0 + z2 / t);
    const double half = z * std::sqrt(f * (1.0 - f) / t + z2 / (4.0 * t * t)) / (1.0 + z2 / t);
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

SampleMean sample_mean(const std::vector<std::uint64_t>& values) {
    if (values.empty()) throw DegenerateEstimateError("mean of zero trials");
    const auto t = static_cast<double>(values.size());
    double sum = 0.0;
    for (std::uint64_t v : values) sum += static_cast<double>(v);
    const double mean = sum / t;
    double squares = 0.0;
    for (std::uint64_t v : values) squares += (static_cast<double>(v) - mean) * (static_cast<double>(v) - mean);
    const double variance = values.size() > 1 ? squares / (t - 1.0) : 0.0;
    return {mean, std::sqrt(variance / t)};
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial) { return master_seed ^ trial; }

CountExperiment mc_expected_count(const ModelParams& params, std::uint64_t trials, const HarnessOptions& options) {
    params.validate();
    const SolveOptions solve = trial_solve(options);
    CountExperiment out;
    out.counts = map_trials<std::uint64_t>(trials, options.execution, [&](std::uint64_t t) {
        return enumerate_dominating_sets(sample_trial(params, t), params.k, solve).count;
    });
    const SampleMean m = sample_mean(out.counts);
    out.record = {"expected_count", m.mean, m.std_error, trials,
                  expected_count(params.n, params.d, params.k, params.p), std::nullopt, std::nullopt,
                  Verdict::report_only};
    if (params.d == 2) out.record.verdict = judge(m.mean, m.std_error, out.record.formula_value);
    return out;
}

SolvableExperiment mc_solvable_and_unique(const ModelParams& params, std::uint64_t trials,
                                          const HarnessOptions& options) {
    params.validate();
    const SolveOptions solve = trial_solve(options);
    SolvableExperiment out;
    out.counts = map_trials<std::uint64_t>(trials, options.execution, [&](std::uint64_t t) {
        return enumerate_dominating_sets(sample_trial(params, t), params.k, solve).count;
    });
    std::uint64_t solvable = 0, unique = 0;
    for (std::uint64_t c : out.counts) {
        solvable += c > 0;
        unique += c == 1;
    }
    const SampleMean m = sample_mean(out.counts);
    const double formula = expected_count(params.n, params.d, params.k, params.p);
    const std::optional<double> delta = bound_delta(params);

    out.solvable = {"pr_solvable", static_cast<double>(solvable) / static_cast<double>(trials),
                    proportion_se(solvable, trials), trials, formula, std::nullopt, std::nullopt, Verdict::report_only};
    out.unique = {"pr_unique", static_cast<double>(unique) / static_cast<double>(trials),
                  proportion_se(unique, trials), trials, formula, std::nullopt, std::nullopt, Verdict::report_only};
    if (delta) {
        const SolvabilityBounds bounds = solvability_bounds(*delta);
        out.solvable.bound_lo = bounds.lower;
        out.solvable.bound_hi = bounds.upper;
        out.unique.formula_value = bounds.uniqueness;
        out.unique.bound_lo = bounds.uniqueness;
    }
    const double markov_limit = m.mean + 3.0 * m.std_error;
    out.markov_ok = out.solvable.estimate <= markov_limit;
    out.markov = {"markov_gate", out.solvable.estimate, m.std_error, trials, m.mean, std::nullopt, markov_limit,
                  out.markov_ok ? Verdict::within_3se : Verdict::outside};
    return out;
}

PairCorrelationExperiment mc_pair_correlation(const ModelParams& params, std::size_t i, std::uint64_t trials,
                                              Regime regime, const HarnessOptions& options) {
    params.validate();
    const std::size_t k = params.k;
    if (i > k || 2 * k - i > params.n) throw UsageError("overlap needs i <= k and 2k - i <= n");
    std::vector<Vertex> first(k), second(k);
    for (std::size_t j = 0; j < k; ++j) {
        first[j] = static_cast<Vertex>(j);
        second[j] = static_cast<Vertex>(k - i + j);
    }
    const VertexSet s1(first), s2(second);

    struct Outcome {
        bool a = false, b = false;
    };
    const auto outcomes = map_trials<Outcome>(trials, options.execution, [&](std::uint64_t t) {
        const Hypergraph g = sample_trial(params, t);
        if (regime == Regime::vertex_cover) return Outcome{is_vertex_cover(g, s1), is_vertex_cover(g, s2)};
        return Outcome{masks_cover(g, s1), masks_cover(g, s2)};
    });

    PairCorrelationExperiment out;
    for (const Outcome& o : outcomes) {
        out.first += o.a;
        out.second += o.b;
        out.joint += o.a && o.b;
    }
    if (out.first == 0 || out.second == 0) throw DegenerateEstimateError("a marginal estimate is zero");
    const auto t = static_cast<double>(trials);
    const double pj = static_cast<double>(out.joint) / t;
    const double p1 = static_cast<double>(out.first) / t;
    const double p2 = static_cast<double>(out.second) / t;
    const double ratio = pj / (p1 * p2);
    // Delta method on ln R = ln pj - ln p1 - ln p2 with the multinomial
    // covariance of the three indicators (joint implies both marginals).
    double log_var = 0.0;
    if (out.joint > 0) {
        const double v_jj = pj * (1 - pj), v_11 = p1 * (1 - p1), v_22 = p2 * (1 - p2);
        const double c_j1 = pj - pj * p1, c_j2 = pj - pj * p2, c_12 = pj - p1 * p2;
        log_var = v_jj / (pj * pj) + v_11 / (p1 * p1) + v_22 / (p2 * p2) - 2 * c_j1 / (pj * p1) -
                  2 * c_j2 / (pj * p2) + 2 * c_12 / (p1 * p2);
        log_var = std::max(0.0, log_var) / t;
    }
    const CorrelationRatio formula = regime == Regime::vertex_cover
                                         ? vc_correlation_ratio(params.n, k, i, params.p, params.d)
                                         : ds_correlation_ratio(params.n, params.d, k, i, params.p);
    out.record = {regime == Regime::vertex_cover ? "vc_pair_ratio" : "ds_pair_ratio",
                  ratio, ratio * std::sqrt(log_var), trials, formula.value, std::nullopt, std::nullopt,
                  Verdict::report_only};
    // The dominating-set ratio is exact only at d = 2 with i = k; for i < k an
    // edge between S1 \ S2 and S2 \ S1 serves both sets.
    if (regime == Regime::vertex_cover || (params.d == 2 && i == k)) {
        out.record.verdict = judge(out.record.estimate, out.record.std_error, out.record.formula_value);
    }
    return out;
}

QuasiExperiment mc_quasi_frequency(const ModelParams& params, std::uint64_t trials, bool require_conditional,
                                   const HarnessOptions& options) {
    params.validate();
    const SolveOptions solve = trial_solve(options);
    struct Counts {
        std::uint64_t quasi = 0, dominating = 0;
    };
    const auto counts = map_trials<Counts>(trials, options.execution, [&](std::uint64_t t) {
        const Hypergraph g = sample_trial(params, t);
        return Counts{enumerate_quasi_dominating_sets(g, params.k, solve).count,
                      enumerate_dominating_sets(g, params.k, solve).count};
    });
    QuasiExperiment out;
    std::uint64_t unsolvable = 0, rescued = 0;
    for (const Counts& c : counts) {
        out.quasi_counts.push_back(c.quasi);
        out.dominating_counts.push_back(c.dominating);
        if (c.dominating == 0) {
            ++unsolvable;
            rescued += c.quasi > 0;
        }
    }
    const SampleMean m = sample_mean(out.quasi_counts);
    out.mean = {"expected_quasi", m.mean, m.std_error, trials,
                quasi_expected(params.n, params.d, params.k, params.p).expected, std::nullopt, std::nullopt,
                Verdict::report_only};
    if (params.d == 2) out.mean.verdict = judge(m.mean, m.std_error, out.mean.formula_value);
    if (unsolvable == 0) {
        if (require_conditional) throw DegenerateEstimateError("no trial lacked a dominating set");
        return out;
    }
    const Interval ci = wilson_interval(rescued, unsolvable);
    out.conditional = EstimateRecord{"pr_quasi_given_unsolvable",
                                     static_cast<double>(rescued) / static_cast<double>(unsolvable),
                                     proportion_se(rescued, unsolvable),
                                     unsolvable,
                                     1.0,
                                     ci.lo,
                                     ci.hi,
                                     Verdict::report_only};
    return out;
}

TrendExperiment ratio_trend(const std::vector<ModelParams>& ladder) {
    TrendExperiment out;
    for (const ModelParams& params : ladder) {
        if (!params.delta) throw UsageError("ratio trend needs delta");
        const Calibration cal = calibrate_p(params.n, params.d, params.k, *params.delta);
        const MomentReport moments = second_moment(params.n, params.d, params.k, cal.p);
        const double reference = 1.0 + 1.0 / *params.delta;
        out.records.push_back({"ratio_n" + std::to_string(params.n), moments.ratio_to_square, 0.0, 0, reference,
                               std::nullopt, std::nullopt, Verdict::report_only});
        out.excess.push_back(moments.ratio_to_square - reference);
    }
    for (std::size_t j = 1; j < out.excess.size(); ++j) {
        if (out.excess[j] > out.excess[j - 1] + 1e-12 * std::abs(out.excess[j - 1])) out.non_increasing = false;
    }
    return out;
}

void write_csv(std::ostream& out, const std::vector<EstimateRecord>& records) {
    out << kCsvSchema << '\n' << "name,estimate,std_error,trials,formula_value,bound_lo,bound_hi,verdict\n";
    for (const EstimateRecord& r : records) {
        std::string line = r.name + ",";
        append_number(line, r.estimate);
        line += ',';
        append_number(line, r.std_error);
        line += ',' + std::to_string(r.trials) + ',';
        append_number(line, r.formula_value);
        line += ',';
        if (r.bound_lo) append_number(line, *r.bound_lo);
        line += ',';
        if (r.bound_hi) append_number(line, *r.bound_hi);
        line += ',';
        line += to_string(r.verdict);
        out << line << '\n';
    }
}

}  // namespace hsi
