#include "hsi/moments.hpp"

#include <cmath>
#include <limits>

#include "hsi/combinatorics.hpp"
#include "hsi/errors.hpp"
#include "hsi/model.hpp"

namespace hsi {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// count * log_x with 0 * (-inf) = 0, i.e. x^0 = 1 for every x.
double scaled(double count, double log_x) {
    return count == 0.0 ? 0.0 : count * log_x;
}

// log(1 - e^a) for a <= 0.
double log1mexp(double a) {
    if (a == 0.0) return kNegInf;
    return a > -0.6931471805599453 ? std::log(-std::expm1(a)) : std::log1p(-std::exp(a));
}

double log_choose(std::size_t top, std::size_t bottom) {
    return log_binomial(static_cast<double>(top), static_cast<double>(bottom));
}

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw UsageError("p must lie in [0, 1]");
}

void check_shape(std::size_t n, std::size_t d, std::size_t k) {
    if (d < 2) throw UsageError("d must be at least 2");
    if (d > n) throw UsageError("d must not exceed n");
    if (k > n) throw UsageError("k must not exceed n");
}

// Logs of the quantities shared by the pair formulas at overlap i.
struct PairLogs {
    double log_q0;          // ln (1-p)^M
    double log_not_q0;      // ln (1 - q0)
    double log_q00;         // ln (1-p)^{M_i}
    double log_gap;         // ln (q0 - q00)
    double log_q11;         // ln (1 - 2 q0 + q00)
    double q0, q00, q11;
};

PairLogs pair_logs(std::size_t n, std::size_t d, std::size_t k, std::size_t i, double p) {
    const auto m = static_cast<double>(count_M(n, k, d));
    const auto mi = static_cast<double>(count_Mi(n, k, i, d));
    PairLogs out{};
    out.log_q0 = log_pow_one_minus(p, m);
    out.log_not_q0 = log1mexp(out.log_q0);
    out.log_q00 = log_pow_one_minus(p, mi);
    // q0 - q00 = q0 (1 - (1-p)^{M_i - M})
    out.log_gap = out.log_q0 + log1mexp(log_pow_one_minus(p, mi - m));
    out.q0 = std::exp(out.log_q0);
    out.q00 = std::exp(out.log_q00);
    const double gap = std::exp(out.log_gap);
    // q11 = (1 - q0) - (q0 - q00)
    if (out.q0 < 0.25) {
        out.log_q11 = safe_log1p(-(out.q0 + gap));
    } else {
        const double rest = std::exp(out.log_not_q0) - gap;
        out.log_q11 = rest > 0.0 ? std::log(rest) : kNegInf;
    }
    out.q11 = std::exp(out.log_q11);
    return out;
}

}  // namespace

double log_expected_count(std::size_t n, std::size_t d, std::size_t k, double p) {
    check_shape(n, d, k);
    check_probability(p);
    if (k == n) return 0.0;
    const auto m = static_cast<double>(count_M(n, k, d));
    const double log_not_q0 = log1mexp(log_pow_one_minus(p, m));
    return log_choose(n, k) + scaled(static_cast<double>(n - k), log_not_q0);
}

double expected_count(std::size_t n, std::size_t d, std::size_t k, double p) {
    const double log_value = log_expected_count(n, d, k, p);
    // Evaluate directly when C(n,k) is an exact double and the result is a
    // normal number, so small cases such as 3 * 0.5^2 come out exact.
    if (k < n && log_choose(n, k) < 36.0 && std::abs(log_value) < 700.0) {
        const auto m = static_cast<double>(count_M(n, k, d));
        const double q0 = pow_one_minus(p, m);
        const double not_q0 = q0 <= 0.5 ? 1.0 - q0 : -std::expm1(log_pow_one_minus(p, m));
        return static_cast<double>(binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k))) *
               std::pow(not_q0, static_cast<double>(n - k));
    }
    return std::exp(log_value);
}

MomentReport second_moment(std::size_t n, std::size_t d, std::size_t k, double p) {
    check_shape(n, d, k);
    check_probability(p);
    if (k == 0 || n < 2 * k) throw UsageError("second moment needs 1 <= k and n >= 2k");

    MomentReport report;
    const double log_ex = log_expected_count(n, d, k, p);
    report.expected_count = std::exp(log_ex);
    report.f_terms.assign(k + 1, 0.0);
    const double log_ck = log_choose(n, k);
    for (std::size_t i = 0; i <= k; ++i) {
        const PairLogs logs = pair_logs(n, d, k, i, p);
        if (i == 0) report.q0 = logs.q0;
        const auto outside = static_cast<double>(outside_count(n, k, i));
        const double log_pairs = log_ck + log_choose(k, i) + log_choose(n - k, k - i);
        const double log_general = log_pairs + scaled(2.0 * static_cast<double>(k - i), logs.log_not_q0) +
                                   scaled(outside, logs.log_q11);
        double log_term = log_general;
        if (i == 0) {
            report.f0_general = std::exp(log_general);
            log_term = log_pairs + scaled(2.0 * static_cast<double>(n - k), logs.log_not_q0);
        }
        report.f_terms[i] = std::exp(log_term);
    }
    for (double f : report.f_terms) report.second_moment += f;
    report.general_second_moment = report.second_moment - report.f_terms[0] + report.f0_general;
    report.ratio_to_square = report.second_moment / (report.expected_count * report.expected_count);
    return report;
}

CorrelationRatio ds_correlation_ratio(std::size_t n, std::size_t d, std::size_t k, std::size_t i, double p) {
    check_shape(n, d, k);
    check_probability(p);
    if (k == 0) throw UsageError("k must be positive");
    const std::size_t outside = outside_count(n, k, i);

    CorrelationRatio ratio;
    ratio.regime = Regime::dominating_set;
    const double ln_n = std::log(static_cast<double>(n));
    const double frac = static_cast<double>(i) / static_cast<double>(k);
    ratio.asymptotic_surrogate =
        std::exp(std::pow(ln_n * ln_n, 2.0 - frac) / std::pow(static_cast<double>(n), 1.0 - frac));
    if (outside == 0) return ratio;

    const PairLogs logs = pair_logs(n, d, k, i, p);
    if (logs.log_not_q0 == kNegInf) throw DomainError("correlation ratio undefined: Pr(S dominating) = 0");
    ratio.log_value = static_cast<double>(outside) * (logs.log_q11 - 2.0 * logs.log_not_q0);
    ratio.value = std::exp(ratio.log_value);
    return ratio;
}

double vc_cover_prob(std::size_t n, std::size_t k, double p, std::size_t d) {
    check_probability(p);
    if (k > n) throw UsageError("k must not exceed n");
    if (d < 2) throw UsageError("d must be at least 2");
    const auto inside = static_cast<double>(binomial(static_cast<std::int64_t>(n - k), static_cast<std::int64_t>(d)));
    return pow_one_minus(p, inside);
}

CorrelationRatio vc_correlation_ratio(std::size_t n, std::size_t k, std::size_t i, double p, std::size_t d) {
    check_probability(p);
    if (d < 2) throw UsageError("d must be at least 2");
    const std::size_t outside = outside_count(n, k, i);
    const auto shared = static_cast<double>(binomial(static_cast<std::int64_t>(outside), static_cast<std::int64_t>(d)));
    CorrelationRatio ratio;
    ratio.regime = Regime::vertex_cover;
    if (shared == 0.0) return ratio;
    if (p >= 1.0) throw DomainError("vertex-cover ratio undefined at p = 1");
    ratio.log_value = -log_pow_one_minus(p, shared);
    ratio.value = std::exp(ratio.log_value);
    return ratio;
}

QuasiExpectation quasi_expected(std::size_t n, std::size_t d, std::size_t k, double p) {
    check_shape(n, d, k);
    check_probability(p);
    if (k >= n) throw UsageError("quasi-dominating sets need k <= n-1");
    const auto m = static_cast<double>(count_M(n, k, d));
    const double log_q0 = log_pow_one_minus(p, m);
    const double log_not_q0 = log1mexp(log_q0);
    const double rest = static_cast<double>(n - k - 1);
    QuasiExpectation out;
    out.expected = std::exp(log_choose(n, k) + std::log(static_cast<double>(n - k)) + log_q0 +
                            scaled(rest, log_not_q0));
    out.ratio_to_expected_count = std::exp(std::log(static_cast<double>(n - k)) + log_q0 - log_not_q0);
    return out;
}

QuasiMomentReport quasi_second_moment(std::size_t n, std::size_t d, std::size_t k, double p) {
    check_shape(n, d, k);
    check_probability(p);
    if (k == 0 || n < 2 * k) throw UsageError("quasi second moment needs 1 <= k and n >= 2k");
    if (k >= n) throw UsageError("quasi-dominating sets need k <= n-1");

    QuasiMomentReport report;
    report.expected_quasi = quasi_expected(n, d, k, p).expected;
    const double log_ck = log_choose(n, k);
    for (std::size_t i = 0; i <= k; ++i) {
        const PairLogs logs = pair_logs(n, d, k, i, p);
        if (i == 0) report.q0 = logs.q0;
        QuasiTerm t;
        t.i = i;
        t.m = outside_count(n, k, i);
        t.q00 = logs.q00;
        t.q11 = logs.q11;
        const double log_phi = log_ck + log_choose(k, i) + log_choose(n - k, k - i);
        t.phi = std::exp(log_phi);

        const auto m = static_cast<double>(t.m);
        const auto free = static_cast<double>(k - i);  // |A| = |B|
        const double log_a = scaled(2.0 * free, logs.log_not_q0);

        double log_p1 = kNegInf, log_p2 = kNegInf, log_p3 = kNegInf, log_p4 = kNegInf;
        if (t.m >= 1) {
            log_p1 = std::log(m) + logs.log_q00 + scaled(m - 1.0, logs.log_q11) + log_a;
        }
        if (t.m >= 2) {
            log_p2 = std::log(m) + std::log(m - 1.0) + 2.0 * logs.log_gap + scaled(m - 2.0, logs.log_q11) + log_a;
        } else {
            t.pair_term_empty = true;
        }
        if (free >= 1.0) {
            log_p3 = 2.0 * std::log(free) + 2.0 * logs.log_q0 + scaled(m, logs.log_q11) +
                     scaled(2.0 * free - 2.0, logs.log_not_q0);
            if (t.m >= 1) {
                log_p4 = std::log(free) + std::log(m) + logs.log_q0 + logs.log_gap + scaled(m - 1.0, logs.log_q11) +
                         scaled(2.0 * free - 1.0, logs.log_not_q0);
            }
        }
        t.p1 = std::exp(log_p1);
        t.p2 = std::exp(log_p2);
        t.p3 = std::exp(log_p3);
        t.p4 = std::exp(log_p4);
        t.w = t.p1 + t.p2 + t.p3 + 2.0 * t.p4;
        t.contribution = std::exp(log_phi + log_p1) + std::exp(log_phi + log_p2) + std::exp(log_phi + log_p3) +
                         2.0 * std::exp(log_phi + log_p4);
        report.second_moment += t.contribution;
        report.terms.push_back(t);
    }
    return report;
}

SolvabilityBounds solvability_bounds(double delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw UsageError("delta must lie in (0, 1)");
    return {delta / (1.0 + delta), delta, delta * (1.0 - delta) / (1.0 + delta)};
}

}  // namespace hsi
