#pragma once

#include <cstdint>

namespace hsi {

// Exact binomial C(top, bottom); 0 when bottom > top. Throws SizeError on
// uint64 overflow.
std::uint64_t binomial(std::int64_t top, std::int64_t bottom);

// ln C(top, bottom) via lgamma; -inf when bottom > top or bottom < 0.
double log_binomial(double top, double bottom);

// (1-p)^exponent with exact handling of exponent 0 and p in {0, 1}.
double pow_one_minus(double p, double exponent);

// ln((1-p)^exponent) = exponent * log1p(-p); 0 when exponent == 0.
double log_pow_one_minus(double p, double exponent);

// 1 - (1-p)^exponent without cancellation for tiny p * exponent.
double one_minus_pow_one_minus(double p, double exponent);

// log(1 + x) - accepts x == -1 (gives -inf).
double safe_log1p(double x);

}  // namespace hsi
