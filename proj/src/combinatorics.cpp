#include "hsi/combinatorics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hsi/errors.hpp"

namespace hsi {

std::uint64_t binomial(std::int64_t top, std::int64_t bottom) {
    if (bottom < 0 || top < 0 || bottom > top) return 0;
    if (bottom > top - bottom) bottom = top - bottom;
    std::uint64_t result = 1;
    for (std::int64_t j = 1; j <= bottom; ++j) {
        // result * (top - bottom + j) / j stays integral at every step; divide
        // by gcd first to delay overflow.
        std::uint64_t num = static_cast<std::uint64_t>(top - bottom + j);
        std::uint64_t den = static_cast<std::uint64_t>(j);
        std::uint64_t g = std::uint64_t{1};
        {
            std::uint64_t a = result, b = den;
            while (b != 0) {
                const std::uint64_t t = a % b;
                a = b;
                b = t;
            }
            g = a;
        }
        const std::uint64_t reduced = result / g;
        den /= g;
        num /= den;  // den now divides num
        std::uint64_t next = 0;
        if (__builtin_mul_overflow(reduced, num, &next)) {
            throw SizeError("binomial C(" + std::to_string(top) + "," + std::to_string(bottom) +
                            ") overflows 64 bits");
        }
        result = next;
    }
    return result;
}

double log_binomial(double top, double bottom) {
    if (bottom < 0 || bottom > top) return -std::numeric_limits<double>::infinity();
    return std::lgamma(top + 1) - std::lgamma(bottom + 1) - std::lgamma(top - bottom + 1);
}

double log_pow_one_minus(double p, double exponent) {
    if (exponent == 0) return 0.0;
    if (p >= 1.0) return -std::numeric_limits<double>::infinity();
    return exponent * std::log1p(-p);
}

double pow_one_minus(double p, double exponent) {
    return std::exp(log_pow_one_minus(p, exponent));
}

double one_minus_pow_one_minus(double p, double exponent) {
    return -std::expm1(log_pow_one_minus(p, exponent));
}

double safe_log1p(double x) {
    if (x <= -1.0) return -std::numeric_limits<double>::infinity();
    return std::log1p(x);
}

}  // namespace hsi
