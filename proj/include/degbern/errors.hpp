#pragma once

#include <stdexcept>
#include <string>

namespace degbern {

/// Raised when a rational is built with a zero denominator or divided by zero.
class zero_denominator : public std::domain_error {
public:
    zero_denominator() : std::domain_error("degbern: zero denominator") {}
};

/// Raised by exact division when the divisor does not divide the dividend
/// inside the coefficient ring, or when a series has a non-invertible
/// leading coefficient.
class not_divisible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Binary series operations on operands of different truncation orders.
class order_mismatch : public std::invalid_argument {
public:
    order_mismatch(std::size_t lhs, std::size_t rhs)
        : std::invalid_argument("degbern: series orders differ (" + std::to_string(lhs) + " vs " +
                                std::to_string(rhs) + ")") {}
};

/// Composition with an inner series whose constant term is nonzero.
class composition_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Misuse of a valuated series: integrating across a pole, or asking for
/// more precision than the value carries.
class representation_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace degbern
