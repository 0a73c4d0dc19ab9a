#pragma once

// Test-only ground truth computed by brute force over every edge
// configuration of tiny instances, independent of the library's formula and
// bitmask code paths.

#include <cstdint>
#include <vector>

namespace oracle {

struct PairTruth {
    double joint = 0.0;
    double first = 0.0;
    double second = 0.0;
    double ratio() const { return joint / (first * second); }
};

/// Pascal-triangle binomial.
std::uint64_t choose(unsigned top, unsigned bottom);

/// Sum over all 2^C(n,d) edge sets of Pr(G) * #{size-k dominating sets}.
double expected_dominating(unsigned n, unsigned d, unsigned k, double p);
/// Same for quasi-dominating sets.
double expected_quasi(unsigned n, unsigned d, unsigned k, double p);
/// Pr({0..k-1} meets every edge).
double vc_cover(unsigned n, unsigned d, unsigned k, double p);
/// S1 = {0..k-1}, S2 = {k-i..2k-i-1}, both vertex covers.
PairTruth vc_pair(unsigned n, unsigned d, unsigned k, unsigned i, double p);
/// Same sets, both dominating.
PairTruth ds_pair(unsigned n, unsigned d, unsigned k, unsigned i, double p);

/// Direct evaluation of C(n,k) (1-(1-p)^M)^(n-k) in long double with
/// Pascal binomials; no log space.
long double first_moment_direct(unsigned n, unsigned d, unsigned k, long double p);

/// Exact pair ratio for dominating sets at d = 2 when |S1 \ S2| = 1:
/// the single A-B edge is shared between the two domination requirements.
double ds_pair_ratio_d2_one_apart(unsigned n, unsigned k, double p);

}  // namespace oracle
