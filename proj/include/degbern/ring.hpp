#pragma once

#include <concepts>
#include <string>
#include <string_view>

#include "degbern/lambda_poly.hpp"
#include "degbern/rational.hpp"

namespace degbern {

// Ring hooks for Rational. LambdaPoly's exact_divide is its hidden friend.

inline bool is_zero(const Rational& q) { return q.is_zero(); }
inline bool is_unit(const Rational& q) { return !q.is_zero(); }
inline Rational exact_divide(const Rational& a, const Rational& b) { return a / b; }
inline std::string render(const Rational& q) { return q.to_string(); }

inline bool is_zero(const LambdaPoly& p) { return p.is_zero(); }
/// Units of Q[λ] are the nonzero constants.
inline bool is_unit(const LambdaPoly& p) { return p.is_constant() && !p.is_zero(); }
inline std::string render(const LambdaPoly& p) { return p.to_string(); }

/// Commutative ring with exact arithmetic, embeddings of the integers and the
/// rationals, and division restricted to the divisible case.
template <typename R>
concept CoefficientRing = std::regular<R> && std::constructible_from<R, const Rational&> &&
                          std::constructible_from<R, long> &&
                          requires(const R a, const R b) {
                              { a + b } -> std::convertible_to<R>;
                              { a - b } -> std::convertible_to<R>;
                              { a * b } -> std::convertible_to<R>;
                              { -a } -> std::convertible_to<R>;
                              { is_zero(a) } -> std::same_as<bool>;
                              { is_unit(a) } -> std::same_as<bool>;
                              { exact_divide(a, b) } -> std::convertible_to<R>;
                              { render(a) } -> std::same_as<std::string>;
                          };

static_assert(CoefficientRing<Rational>);
static_assert(CoefficientRing<LambdaPoly>);

/// Parses a ring element from its canonical rendering.
template <CoefficientRing R>
R parse_element(std::string_view text);

template <>
inline Rational parse_element<Rational>(std::string_view text) {
    return Rational::parse(text);
}

template <>
inline LambdaPoly parse_element<LambdaPoly>(std::string_view text) {
    return LambdaPoly::parse(text);
}

/// Value at λ = 0. Rationals carry no λ, so they are returned unchanged.
inline Rational at_lambda_zero(const Rational& q) { return q; }
inline Rational at_lambda_zero(const LambdaPoly& p) { return p.coeff(0); }

} // namespace degbern
