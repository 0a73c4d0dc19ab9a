#pragma once

#include <stdexcept>
#include <string>

namespace hsi {

// Bad arguments or malformed input (out-of-range vertex, invalid set, bad file).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A formula was asked for outside the regime where it is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Count overflow or an enumeration budget that would be exceeded.
class SizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

// No pivot, no swap partner, no self-referential pair within the retry budget.
class NotFoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Calibration target unreachable for the given (n, d, k).
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A Monte-Carlo estimate whose denominator or conditioning event was empty.
class DegenerateEstimateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hsi
