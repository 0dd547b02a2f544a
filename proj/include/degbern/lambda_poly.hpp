#pragma once

#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "degbern/rational.hpp"

namespace degbern {

/// Dense polynomial in the formal parameter λ with rational coefficients.
///
/// Coefficient i multiplies λ^i. The stored vector never has a trailing zero,
/// so the zero polynomial is the empty vector and equality is structural.
class LambdaPoly {
public:
    LambdaPoly() = default;
    LambdaPoly(const Rational& c); // NOLINT(google-explicit-constructor)
    template <std::integral I>
    LambdaPoly(I c) : LambdaPoly(Rational(c)) {} // NOLINT(google-explicit-constructor)
    explicit LambdaPoly(std::vector<Rational> coeffs);

    /// The polynomial λ.
    static LambdaPoly lambda();

    /// -1 for the zero polynomial.
    [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
    /// Coefficient of λ^i; zero beyond the degree.
    [[nodiscard]] Rational coeff(std::size_t i) const;
    [[nodiscard]] std::span<const Rational> coeffs() const { return coeffs_; }

    /// Horner evaluation.
    [[nodiscard]] Rational evaluate(const Rational& at) const;

    LambdaPoly& operator+=(const LambdaPoly& rhs);
    LambdaPoly& operator-=(const LambdaPoly& rhs);
    LambdaPoly& operator*=(const LambdaPoly& rhs);

    friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
    friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
    friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);
    friend LambdaPoly operator-(const LambdaPoly& a);
    friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) = default;

    /// Quotient a/b when b divides a in Q[λ]; throws not_divisible otherwise
    /// (and zero_denominator when b is zero).
    friend LambdaPoly exact_divide(const LambdaPoly& a, const LambdaPoly& b);

    /// "c0 + c1*L + c2*L^2 + ..." with zero terms dropped and unit
    /// coefficients elided; "0" for the zero polynomial.
    [[nodiscard]] std::string to_string() const;
    /// Parses the grammar produced by to_string. Terms may come in any order
    /// and repeat; they are summed.
    static LambdaPoly parse(std::string_view text);

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LambdaPoly& p);

/// λ^{n-1}(1)_{n,1/λ} = (λ-1)(λ-2)...(λ-(n-1)) as a polynomial in λ.
/// Throws std::domain_error for n == 0.
LambdaPoly lambda_product(unsigned n);

} // namespace degbern
