#pragma once

// Test-only generators and independent oracles. Nothing here calls the code
// paths it is used to check.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "degbern/lambda_poly.hpp"
#include "degbern/rational.hpp"
#include "degbern/sequences.hpp"

namespace degbern::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed = 0x5eed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational(long bound = 20, long max_den = 12) {
        return {integer(-bound, bound), integer(1, max_den)};
    }

    LambdaPoly poly(long max_degree = 4) {
        std::vector<Rational> c;
        const long d = integer(0, max_degree);
        for (long i = 0; i <= d; ++i) {
            c.push_back(rational(9, 7));
        }
        return LambdaPoly(std::move(c));
    }

private:
    std::mt19937_64 rng_;
};

/// Generalized binomial C(alpha, n) = alpha(alpha-1)...(alpha-n+1)/n!, by
/// direct accumulation of the ratio C(alpha, n)/C(alpha, n-1).
inline std::vector<Rational> binomial_series(const Rational& alpha, std::size_t order) {
    std::vector<Rational> c{Rational(1)};
    for (std::size_t n = 1; n <= order; ++n) {
        c.push_back(c.back() * (alpha - Rational(static_cast<long>(n - 1))) / Rational(static_cast<long>(n)));
    }
    return c;
}

/// S_2(n,k) by enumerating restricted growth strings, i.e. every set
/// partition of {1..n}. Feasible up to n ~ 11.
inline std::vector<std::vector<long>> stirling2_by_partitions(int n_max) {
    std::vector<std::vector<long>> table(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        table[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, 0);
        if (n == 0) {
            table[0][0] = 1;
            continue;
        }
        std::vector<int> a(static_cast<std::size_t>(n), 0);
        std::function<void(int, int)> rec = [&](int i, int blocks) {
            if (i == n) {
                ++table[static_cast<std::size_t>(n)][static_cast<std::size_t>(blocks)];
                return;
            }
            for (int b = 0; b <= blocks; ++b) {
                a[static_cast<std::size_t>(i)] = b;
                rec(i + 1, b == blocks ? blocks + 1 : blocks);
            }
        };
        a[0] = 0;
        rec(1, 1);
    }
    return table;
}

/// Classical Bernoulli numbers with B_1 = -1/2 via the Akiyama–Tanigawa
/// transform (which yields B_1 = +1/2; the sign is flipped afterwards).
inline std::vector<Rational> bernoulli_akiyama_tanigawa(std::size_t order) {
    std::vector<Rational> out;
    std::vector<Rational> a(order + 1);
    for (std::size_t m = 0; m <= order; ++m) {
        a[m] = Rational(1, static_cast<long>(m + 1));
        for (std::size_t j = m; j >= 1; --j) {
            a[j - 1] = Rational(static_cast<long>(j)) * (a[j - 1] - a[j]);
        }
        out.push_back(a[0]);
    }
    if (order >= 1) {
        out[1] = -out[1];
    }
    return out;
}

/// Signed Stirling numbers of the first kind by multiplying out
/// x(x-1)...(x-n+1) with plain integer arithmetic.
inline std::vector<std::vector<long>> stirling1_by_expansion(int n_max) {
    std::vector<std::vector<long>> out;
    std::vector<long> poly{1};
    for (int n = 0; n <= n_max; ++n) {
        out.push_back(poly);
        std::vector<long> next(poly.size() + 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= static_cast<long>(n) * poly[i];
        }
        poly = next;
    }
    return out;
}

/// The k = 2 single-integral form
///   (1/(1 - e_λ(-x))) ∫_0^x t/(1 - e_λ(-t)) e_λ^{1-λ}(-t) dt
/// rewritten through β_{l,λ}(1-λ): the integrand is Σ β_{l,λ}(1-λ)(-1)^l t^l/l!,
/// so the integral is Σ β_{l,λ}(1-λ)(-1)^l x^{l+1}/(l+1)!.
template <typename R>
std::vector<R> k2_single_integral(const R& lambda, std::size_t order) {
    const std::size_t p = order + 1;
    const auto shifted = carlitz_values(lambda, R(1L) - lambda, p);
    std::vector<R> integral(p + 1, R(0L));
    for (std::size_t l = 0; l < p; ++l) {
        const R sign(l % 2 == 0 ? 1L : -1L);
        integral[l + 1] = sign * shifted[l] * R(Rational(1) / factorial(static_cast<unsigned>(l + 1)));
    }
    std::vector<R> d(p + 1, R(0L));
    R ff(1L);
    for (std::size_t n = 1; n <= p; ++n) {
        ff = ff * (R(1L) - R(static_cast<long>(n - 1)) * lambda);
        const R sign(n % 2 == 1 ? 1L : -1L);
        d[n] = sign * ff * R(Rational(1) / factorial(static_cast<unsigned>(n)));
    }
    const auto num = ValuatedSeries<R>::from_series(TruncatedSeries<R>(integral));
    const auto den = ValuatedSeries<R>::from_series(TruncatedSeries<R>(d));
    return egf_values((num / den).to_series(order));
}

} // namespace degbern::testing
