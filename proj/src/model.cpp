#include "hsi/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hsi/combinatorics.hpp"
#include "hsi/errors.hpp"
#include "hsi/moments.hpp"
#include "hsi/random.hpp"

namespace hsi {

void ModelParams::validate() const {
    if (d < 2) throw UsageError("d must be at least 2");
    if (d > n) throw UsageError("d must not exceed n");
    if (k < 1 || k > n) throw UsageError("k must lie in [1, n]");
    if (!(p >= 0.0 && p <= 1.0)) throw UsageError("p must lie in [0, 1]");
    if (delta && !(*delta > 0.0 && *delta < 1.0)) throw UsageError("delta must lie in (0, 1)");
}

std::uint64_t count_M(std::size_t n, std::size_t k, std::size_t d) {
    if (d < 2) throw UsageError("d must be at least 2");
    if (k >= n) throw UsageError("count_M requires k <= n-1");
    const auto top = static_cast<std::int64_t>(n) - 1;
    return binomial(top, static_cast<std::int64_t>(d) - 1) -
           binomial(top - static_cast<std::int64_t>(k), static_cast<std::int64_t>(d) - 1);
}

std::uint64_t count_Mi(std::size_t n, std::size_t k, std::size_t i, std::size_t d) {
    if (d < 2) throw UsageError("d must be at least 2");
    if (i > k) throw UsageError("overlap i must not exceed k");
    // 2k - i = n is allowed: no vertex lies outside both sets and the
    // subtracted binomial is empty.
    if (2 * k - i > n || n == 0) throw UsageError("count_Mi requires 2k - i <= n");
    const auto top = static_cast<std::int64_t>(n) - 1;
    return binomial(top, static_cast<std::int64_t>(d) - 1) -
           binomial(top - static_cast<std::int64_t>(2 * k - i), static_cast<std::int64_t>(d) - 1);
}

std::size_t outside_count(std::size_t n, std::size_t k, std::size_t i) {
    if (i > k) throw UsageError("overlap i must not exceed k");
    if (n + i < 2 * k) {
        throw UsageError("n - 2k + i is negative (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                         ", i=" + std::to_string(i) + ")");
    }
    return n + i - 2 * k;
}

double asymptotic_p(std::size_t n, std::size_t d) {
    if (d < 3) throw DomainError("asymptotic p applies only for d >= 3");
    if (n == 0) throw UsageError("n must be positive");
    const double dd = static_cast<double>(d);
    const double log_rate = std::lgamma(dd - 1.0) - (dd - 2.0) * std::log(static_cast<double>(n));
    return -std::expm1(-std::exp(log_rate));
}

Calibration calibrate_p(std::size_t n, std::size_t d, std::size_t k, double delta, double tol) {
    if (!(delta > 0.0 && delta < 1.0)) throw UsageError("delta must lie in (0, 1)");
    if (!(tol > 0.0)) throw UsageError("tolerance must be positive");
    if (d < 2 || d > n) throw UsageError("need 2 <= d <= n");
    if (k < 1 || k >= n) throw UsageError("calibration needs 1 <= k <= n-1");

    const double target = delta;
    auto evaluate = [&](double p) { return expected_count(n, d, k, p); };

    double lo = 0.0;
    double hi = d >= 3 ? std::min(1.0, 50.0 * asymptotic_p(n, d)) : 1.0;
    if (evaluate(hi) < target) hi = 1.0;
    if (evaluate(1.0) < target) {
        throw InfeasibleError("E[X] stays below delta for every p (C(n,k) < delta)");
    }

    Calibration result;
    for (int it = 1; it <= 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double value = evaluate(mid);
        result = {mid, value, std::abs(value - target), it};
        if (result.residual <= tol * target) return result;
        if (value < target) lo = mid;
        else hi = mid;
        if (!(lo < mid || mid < hi)) break;
    }
    throw InfeasibleError("bisection could not reach relative tolerance " + std::to_string(tol) +
                          " (best residual " + std::to_string(result.residual) + ")");
}

std::size_t choose_k(std::size_t n) {
    if (n < 2) throw UsageError("choose_k needs n >= 2");
    const auto rounded = static_cast<std::size_t>(std::llround(std::log(static_cast<double>(n))));
    return std::max<std::size_t>(1, rounded);
}

Edge unrank_subset(std::uint64_t rank, std::size_t d) {
    Edge out(d);
    // Largest c with C(c, j) <= rank, for j = d..1; c is bounded above by the
    // previous choice.
    std::int64_t upper = 0;
    // find an initial upper bound where C(upper, d) > rank
    upper = static_cast<std::int64_t>(d);
    while (binomial(upper, static_cast<std::int64_t>(d)) <= rank) upper *= 2;
    for (std::size_t j = d; j >= 1; --j) {
        std::int64_t lo = static_cast<std::int64_t>(j) - 1;  // C(j-1, j) = 0 <= rank
        std::int64_t hi = upper;                              // C(hi, j) > rank
        while (hi - lo > 1) {
            const std::int64_t mid = lo + (hi - lo) / 2;
            if (binomial(mid, static_cast<std::int64_t>(j)) <= rank) lo = mid;
            else hi = mid;
        }
        out[j - 1] = static_cast<Vertex>(lo);
        rank -= binomial(lo, static_cast<std::int64_t>(j));
        upper = lo;
    }
    return out;
}

std::uint64_t rank_subset(const Edge& sorted_subset) {
    std::uint64_t rank = 0;
    for (std::size_t j = 0; j < sorted_subset.size(); ++j) {
        rank += binomial(sorted_subset[j], static_cast<std::int64_t>(j) + 1);
    }
    return rank;
}

Hypergraph sample_hypergraph(const ModelParams& params) {
    params.validate();
    const std::uint64_t total = binomial(static_cast<std::int64_t>(params.n), static_cast<std::int64_t>(params.d));
    std::vector<Edge> edges;
    if (params.p <= 0.0 || total == 0) return Hypergraph(params.n, params.d, {});
    if (params.p >= 1.0) {
        edges.reserve(total);
        for (std::uint64_t r = 0; r < total; ++r) edges.push_back(unrank_subset(r, params.d));
        return Hypergraph(params.n, params.d, std::move(edges));
    }

    Rng rng(params.seed);
    const double log_q = std::log1p(-params.p);
    std::uint64_t next = 0;  // lowest rank not yet decided
    while (next < total) {
        const double skip = std::floor(std::log(rng.uniform_open_zero()) / log_q);
        if (skip >= static_cast<double>(total - next)) break;
        next += static_cast<std::uint64_t>(skip);
        edges.push_back(unrank_subset(next, params.d));
        ++next;
    }
    return Hypergraph(params.n, params.d, std::move(edges));
}

}  // namespace hsi
