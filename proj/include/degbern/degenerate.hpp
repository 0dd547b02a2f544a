#pragma once

#include <cstddef>
#include <vector>

#include "degbern/series.hpp"

namespace degbern {

/// (x)_n = x(x-1)...(x-n+1); 1 when n == 0.
template <CoefficientRing R>
R falling_factorial(const R& x, unsigned n) {
    R acc(1L);
    for (unsigned i = 0; i < n; ++i) {
        acc = acc * (x - R(static_cast<long>(i)));
    }
    return acc;
}

/// (x)_{n,λ} = x(x-λ)(x-2λ)...(x-(n-1)λ); 1 when n == 0.
template <CoefficientRing R>
R deg_falling_factorial(const R& x, unsigned n, const R& lambda) {
    R acc(1L);
    for (unsigned i = 0; i < n; ++i) {
        acc = acc * (x - R(static_cast<long>(i)) * lambda);
    }
    return acc;
}

/// (λ-1)(λ-2)...(λ-(n-1)) evaluated in the ring, which is λ^{n-1}(1)_{n,1/λ}
/// with the 1/λ cleared. Throws std::domain_error for n == 0.
template <CoefficientRing R>
R lambda_product_at(unsigned n, const R& lambda) {
    if (n == 0) {
        throw std::domain_error("degbern: lambda_product is defined for n >= 1");
    }
    R acc(1L);
    for (unsigned j = 1; j < n; ++j) {
        acc = acc * (lambda - R(static_cast<long>(j)));
    }
    return acc;
}

namespace detail {

template <CoefficientRing R>
R inverse_factorial(unsigned n) {
    return R(Rational(1) / factorial(n));
}

} // namespace detail

/// e_λ^x(t) = (1+λt)^{x/λ} = Σ (x)_{n,λ} t^n/n!.
template <CoefficientRing R>
TruncatedSeries<R> deg_exp_series(const R& x, const R& lambda, std::size_t order) {
    std::vector<R> c;
    c.reserve(order + 1);
    R ff(1L);
    for (std::size_t n = 0; n <= order; ++n) {
        c.push_back(detail::inverse_factorial<R>(static_cast<unsigned>(n)) * ff);
        ff = ff * (x - R(static_cast<long>(n)) * lambda);
    }
    return TruncatedSeries<R>(std::move(c));
}

/// log_λ(1+t) = Σ_{n>=1} λ^{n-1}(1)_{n,1/λ} t^n/n!, the compositional
/// inverse of e_λ(t) - 1.
template <CoefficientRing R>
TruncatedSeries<R> deg_log_series(const R& lambda, std::size_t order) {
    std::vector<R> c(order + 1, R(0L));
    R prod(1L);
    for (std::size_t n = 1; n <= order; ++n) {
        c[n] = detail::inverse_factorial<R>(static_cast<unsigned>(n)) * prod;
        prod = prod * (lambda - R(static_cast<long>(n)));
    }
    return TruncatedSeries<R>(std::move(c));
}

/// Checks e_λ(log_λ(1+t)) == 1 + t through t^N.
template <CoefficientRing R>
bool deg_log_inverse_check(const R& lambda, std::size_t order) {
    const auto lhs = compose(deg_exp_series(R(1L), lambda, order), deg_log_series(lambda, order));
    return lhs == TruncatedSeries<R>::constant(order, R(1L)) + TruncatedSeries<R>::variable(order);
}

/// l_{k,λ}(x) = Σ_{n>=1} (-λ)^{n-1}(1)_{n,1/λ} x^n / ((n-1)! n^k) for any
/// integer k; the numerator is ∏_{j<n}(j-λ).
template <CoefficientRing R>
TruncatedSeries<R> deg_polylog_series(long k, const R& lambda, std::size_t order) {
    std::vector<R> c(order + 1, R(0L));
    R prod(1L);
    for (std::size_t n = 1; n <= order; ++n) {
        const Rational scale =
            Rational(1) / factorial(static_cast<unsigned>(n - 1)) * Rational(static_cast<long>(n)).pow(-k);
        c[n] = R(scale) * prod;
        prod = prod * (R(static_cast<long>(n)) - lambda);
    }
    return TruncatedSeries<R>(std::move(c));
}

/// Checks d/dx l_{k,λ}(x) == l_{k-1,λ}(x)/x through x^{N-1}.
template <CoefficientRing R>
bool deg_polylog_derivative_check(long k, const R& lambda, std::size_t order) {
    const auto lhs = derive(deg_polylog_series(k, lambda, order));
    const auto lower = deg_polylog_series(k - 1, lambda, order);
    for (std::size_t n = 0; n < order; ++n) {
        if (lhs[n] != lower[n + 1]) {
            return false;
        }
    }
    return true;
}

// Classical reference series.

/// e^{xt}.
template <CoefficientRing R>
TruncatedSeries<R> exp_series(const R& x, std::size_t order) {
    std::vector<R> c;
    c.reserve(order + 1);
    R power(1L);
    for (std::size_t n = 0; n <= order; ++n) {
        c.push_back(detail::inverse_factorial<R>(static_cast<unsigned>(n)) * power);
        power = power * x;
    }
    return TruncatedSeries<R>(std::move(c));
}

/// log(1+t) = Σ (-1)^{n-1} t^n / n.
template <CoefficientRing R>
TruncatedSeries<R> log1p_series(std::size_t order) {
    std::vector<R> c(order + 1, R(0L));
    for (std::size_t n = 1; n <= order; ++n) {
        c[n] = R(Rational(n % 2 == 1 ? 1L : -1L, static_cast<long>(n)));
    }
    return TruncatedSeries<R>(std::move(c));
}

/// Li_k(x) = Σ x^n / n^k.
template <CoefficientRing R>
TruncatedSeries<R> polylog_series(long k, std::size_t order) {
    std::vector<R> c(order + 1, R(0L));
    for (std::size_t n = 1; n <= order; ++n) {
        c[n] = R(Rational(static_cast<long>(n)).pow(-k));
    }
    return TruncatedSeries<R>(std::move(c));
}

} // namespace degbern
