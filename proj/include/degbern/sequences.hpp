#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "degbern/degenerate.hpp"
#include "degbern/valuated.hpp"

namespace degbern {

enum class Family {
    bernoulli,
    carlitz,
    poly_bernoulli,
    stirling1,
    stirling2,
    deg_stirling1,
    deg_stirling2,
    deg_polylog_coeffs,
};

/// Algorithm that produced a value. Every family has at least two.
enum class Path {
    generating_function,
    recurrence,
    finite_sum,
    linear_inversion,
    falling_factorial_expansion,
    explicit_sum,
    iterated_integral,
    series_definition,
};

std::string_view family_name(Family f);
/// Throws std::invalid_argument for an unknown name.
Family parse_family(std::string_view name);
std::string_view path_name(Path p);
Path parse_path(std::string_view name);

/// Exact value of a named sequence together with the path that computed it.
template <CoefficientRing R>
struct SequenceValue {
    Family family;
    long n;
    std::optional<long> k;
    R value;
    Path path;
};

/// Lower-triangular table T(n, k), 0 <= k <= n <= max_n. Reads outside the
/// triangle return zero.
template <CoefficientRing R>
class Triangle {
public:
    explicit Triangle(std::size_t max_n) : max_n_(max_n), rows_(max_n + 1) {
        for (std::size_t n = 0; n <= max_n; ++n) {
            rows_[n].assign(n + 1, R(0L));
        }
    }

    [[nodiscard]] std::size_t max_n() const { return max_n_; }

    R operator()(long n, long k) const {
        if (n < 0 || k < 0 || k > n || n > static_cast<long>(max_n_)) {
            return R(0L);
        }
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

    /// Throws std::out_of_range outside the triangle.
    void set(std::size_t n, std::size_t k, R value) { rows_.at(n).at(k) = std::move(value); }

    friend bool operator==(const Triangle&, const Triangle&) = default;

private:
    std::size_t max_n_;
    std::vector<std::vector<R>> rows_;
};

/// n! * c_n for every coefficient: the sequence an exponential generating
/// function encodes.
template <CoefficientRing R>
std::vector<R> egf_values(const TruncatedSeries<R>& s) {
    std::vector<R> out;
    out.reserve(s.order() + 1);
    for (std::size_t n = 0; n <= s.order(); ++n) {
        out.push_back(R(factorial(static_cast<unsigned>(n))) * s[n]);
    }
    return out;
}

namespace detail {

/// Table whose column k is n! [t^n] f(t)^k / k!, f having zero constant term.
template <CoefficientRing R>
Triangle<R> egf_power_table(const TruncatedSeries<R>& f) {
    const std::size_t order = f.order();
    Triangle<R> table(order);
    auto pow = TruncatedSeries<R>::constant(order, R(1L));
    for (std::size_t k = 0; k <= order; ++k) {
        const R inv_kfact(Rational(1) / factorial(static_cast<unsigned>(k)));
        for (std::size_t n = k; n <= order; ++n) {
            table.set(n, k, R(factorial(static_cast<unsigned>(n))) * inv_kfact * pow[n]);
        }
        pow = pow * f;
    }
    return table;
}

template <CoefficientRing R>
R sign(std::size_t n) {
    return R(n % 2 == 0 ? 1L : -1L);
}

/// 1 - e_λ(-t).
template <CoefficientRing R>
TruncatedSeries<R> one_minus_exp_neg(const R& lambda, std::size_t order) {
    return TruncatedSeries<R>::constant(order, R(1L)) -
           scale_argument(deg_exp_series(R(1L), lambda, order), R(-1L));
}

/// Coefficient list of a polynomial in x (index = power of x).
template <CoefficientRing R>
using XPoly = std::vector<R>;

template <CoefficientRing R>
XPoly<R> times_linear(const XPoly<R>& p, const R& root) {
    // p(x) * (x - root)
    XPoly<R> out(p.size() + 1, R(0L));
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i + 1] = out[i + 1] + p[i];
        out[i] = out[i] - root * p[i];
    }
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Stirling numbers

/// S_2(n,k) from (e^t - 1)^k / k!.
template <CoefficientRing R = Rational>
Triangle<R> stirling2_gf(std::size_t order) {
    return detail::egf_power_table(exp_series(R(1L), order) - TruncatedSeries<R>::constant(order, R(1L)));
}

/// S_2(n+1,k) = k S_2(n,k) + S_2(n,k-1).
template <CoefficientRing R = Rational>
Triangle<R> stirling2_recurrence(std::size_t order) {
    Triangle<R> t(order);
    t.set(0, 0, R(1L));
    for (std::size_t n = 0; n < order; ++n) {
        for (std::size_t k = 1; k <= n + 1; ++k) {
            const long kk = static_cast<long>(k);
            const long nn = static_cast<long>(n);
            t.set(n + 1, k, R(kk) * t(nn, kk) + t(nn, kk - 1));
        }
    }
    return t;
}

/// Signed S_1(n,k) from (log(1+t))^k / k!.
template <CoefficientRing R = Rational>
Triangle<R> stirling1_gf(std::size_t order) {
    return detail::egf_power_table(log1p_series<R>(order));
}

/// Signed S_1(n,k) as the x^k coefficient of (x)_n.
template <CoefficientRing R = Rational>
Triangle<R> stirling1_falling(std::size_t order) {
    Triangle<R> t(order);
    detail::XPoly<R> p{R(1L)};
    for (std::size_t n = 0; n <= order; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            t.set(n, k, p[k]);
        }
        p = detail::times_linear(p, R(static_cast<long>(n)));
    }
    return t;
}

/// S_{2,λ}(n,k) from (e_λ(t) - 1)^k / k!.
template <CoefficientRing R>
Triangle<R> deg_stirling2_gf(const R& lambda, std::size_t order) {
    return detail::egf_power_table(deg_exp_series(R(1L), lambda, order) -
                                   TruncatedSeries<R>::constant(order, R(1L)));
}

/// S_{2,λ}(n,k) = (1/k!) Σ_j (-1)^{k-j} C(k,j) (j)_{n,λ}.
template <CoefficientRing R>
Triangle<R> deg_stirling2_sum(const R& lambda, std::size_t order) {
    Triangle<R> t(order);
    for (std::size_t n = 0; n <= order; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            R acc(0L);
            for (std::size_t j = 0; j <= k; ++j) {
                const R term = R(binomial(static_cast<long>(k), static_cast<long>(j))) *
                               deg_falling_factorial(R(static_cast<long>(j)), static_cast<unsigned>(n), lambda);
                acc = (k - j) % 2 == 0 ? acc + term : acc - term;
            }
            t.set(n, k, R(Rational(1) / factorial(static_cast<unsigned>(k))) * acc);
        }
    }
    return t;
}

/// S_{1,λ}(n,k) from (log_λ(1+t))^k / k!.
template <CoefficientRing R>
Triangle<R> deg_stirling1_gf(const R& lambda, std::size_t order) {
    return detail::egf_power_table(deg_log_series(lambda, order));
}

/// S_{1,λ}(n+1,k) = S_{1,λ}(n,k-1) + (λk - n) S_{1,λ}(n,k), S_{1,λ}(0,0) = 1.
template <CoefficientRing R>
Triangle<R> deg_stirling1_recurrence(const R& lambda, std::size_t order) {
    Triangle<R> t(order);
    t.set(0, 0, R(1L));
    for (std::size_t n = 0; n < order; ++n) {
        const long nn = static_cast<long>(n);
        for (long k = 0; k <= nn + 1; ++k) {
            t.set(n + 1, static_cast<std::size_t>(k),
                  t(nn, k - 1) + (lambda * R(k) - R(nn)) * t(nn, k));
        }
    }
    return t;
}

/// S_{1,λ}(n,k) by solving (x)_n = Σ_k S_{1,λ}(n,k) (x)_{k,λ} in the monomial
/// basis. (x)_{k,λ} is monic of degree k, so the system is unit triangular.
template <CoefficientRing R>
Triangle<R> deg_stirling1_inversion(const R& lambda, std::size_t order) {
    std::vector<detail::XPoly<R>> basis;
    basis.reserve(order + 1);
    basis.push_back({R(1L)});
    for (std::size_t k = 1; k <= order; ++k) {
        basis.push_back(detail::times_linear(basis.back(), R(static_cast<long>(k - 1)) * lambda));
    }
    Triangle<R> t(order);
    detail::XPoly<R> target{R(1L)};
    for (std::size_t n = 0; n <= order; ++n) {
        detail::XPoly<R> residual = target;
        for (std::size_t k = n + 1; k-- > 0;) {
            const R c = residual[k];
            t.set(n, k, c);
            for (std::size_t i = 0; i <= k; ++i) {
                residual[i] = residual[i] - c * basis[k][i];
            }
        }
        target = detail::times_linear(target, R(static_cast<long>(n)));
    }
    return t;
}

template <CoefficientRing R = Rational>
R stirling2(long n, long k) {
    return n < 0 ? R(0L) : stirling2_gf<R>(static_cast<std::size_t>(n))(n, k);
}

template <CoefficientRing R = Rational>
R stirling1(long n, long k) {
    return n < 0 ? R(0L) : stirling1_gf<R>(static_cast<std::size_t>(n))(n, k);
}

template <CoefficientRing R>
R deg_stirling2(long n, long k, const R& lambda) {
    return n < 0 ? R(0L) : deg_stirling2_gf(lambda, static_cast<std::size_t>(n))(n, k);
}

template <CoefficientRing R>
R deg_stirling1(long n, long k, const R& lambda) {
    return n < 0 ? R(0L) : deg_stirling1_gf(lambda, static_cast<std::size_t>(n))(n, k);
}

// ---------------------------------------------------------------------------
// Bernoulli families

/// Classical B_n (B_1 = -1/2) from Σ_{j<=n} C(n+1, j) B_j = 0.
std::vector<Rational> bernoulli_numbers(std::size_t order);

/// B_n(x) = Σ_j C(n,j) B_j x^{n-j} for n = 0..order.
std::vector<Rational> bernoulli_poly_values(const Rational& x, std::size_t order);

/// B_n(x) from t e^{xt} / (e^t - 1).
std::vector<Rational> bernoulli_gf_values(const Rational& x, std::size_t order);

/// t e_λ^x(t) / (e_λ(t) - 1) through t^N. The 1/t cancels exactly, handled
/// by valuated division.
template <CoefficientRing R>
TruncatedSeries<R> carlitz_series(const R& lambda, const R& x, std::size_t order) {
    const std::size_t p = order + 1;
    const auto t = TruncatedSeries<R>::variable(p);
    const auto numer = ValuatedSeries<R>::from_series(t * deg_exp_series(x, lambda, p));
    const auto denom = ValuatedSeries<R>::from_series(deg_exp_series(R(1L), lambda, p) -
                                                      TruncatedSeries<R>::constant(p, R(1L)));
    return (numer / denom).to_series(order);
}

/// β_{n,λ}(x) for n = 0..order.
template <CoefficientRing R>
std::vector<R> carlitz_values(const R& lambda, const R& x, std::size_t order) {
    return egf_values(carlitz_series(lambda, x, order));
}

template <CoefficientRing R>
R carlitz_beta_poly(long n, const R& lambda, const R& x) {
    return carlitz_values(lambda, x, static_cast<std::size_t>(n)).back();
}

/// l_{k,λ}(1 - e_λ(-t)) / (1 - e_λ(-t)) through t^N.
template <CoefficientRing R>
TruncatedSeries<R> poly_bernoulli_series(long k, const R& lambda, std::size_t order) {
    const std::size_t p = order + 1;
    const auto d = detail::one_minus_exp_neg(lambda, p);
    const auto numer = ValuatedSeries<R>::from_series(compose(deg_polylog_series(k, lambda, p), d));
    return (numer / ValuatedSeries<R>::from_series(d)).to_series(order);
}

/// β^{(k)}_{n,λ}, n = 0..order, from the generating function.
template <CoefficientRing R>
std::vector<R> poly_bernoulli_gf(long k, const R& lambda, std::size_t order) {
    return egf_values(poly_bernoulli_series(k, lambda, order));
}

/// β^{(k)}_{n,λ} = (-1)^n Σ_m ∏_{j=1}^m(λ-j) / (m+1)^k S_{2,λ}(n,m), given the
/// S_{2,λ} table to read from.
template <CoefficientRing R>
std::vector<R> poly_bernoulli_explicit(long k, const R& lambda, const Triangle<R>& s2) {
    const std::size_t order = s2.max_n();
    std::vector<R> weights;
    weights.reserve(order + 1);
    for (std::size_t m = 0; m <= order; ++m) {
        weights.push_back(R(Rational(static_cast<long>(m + 1)).pow(-k)) *
                          lambda_product_at(static_cast<unsigned>(m + 1), lambda));
    }
    std::vector<R> out;
    out.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        R acc(0L);
        for (std::size_t m = 0; m <= n; ++m) {
            acc = acc + weights[m] * s2(static_cast<long>(n), static_cast<long>(m));
        }
        out.push_back(detail::sign<R>(n) * acc);
    }
    return out;
}

template <CoefficientRing R>
std::vector<R> poly_bernoulli_explicit(long k, const R& lambda, std::size_t order) {
    return poly_bernoulli_explicit(k, lambda, deg_stirling2_gf(lambda, order));
}

/// β^{(k)}_{n,λ} through the iterated integral
///   L_1 = t,  L_j = ∫ g L_{j-1},  g = e_λ^{1-λ}(-t) / (1 - e_λ(-t)),
/// which builds L_k = l_{k,λ}(1 - e_λ(-t)); the result is L_k / (1 - e_λ(-t)).
/// There are k-1 integrations; for k = 2 this is the single integral
/// ∫ t g dt. Throws std::domain_error for k < 2.
template <CoefficientRing R>
std::vector<R> poly_bernoulli_iterated_integral(long k, const R& lambda, std::size_t order) {
    if (k < 2) {
        throw std::domain_error("degbern: the iterated-integral representation needs k >= 2");
    }
    const std::size_t p = order + 1;
    const auto d = ValuatedSeries<R>::from_series(detail::one_minus_exp_neg(lambda, p));
    const auto e = ValuatedSeries<R>::from_series(
        scale_argument(deg_exp_series(R(1L) - lambda, lambda, p), R(-1L)));
    const auto g = e / d;
    auto acc = ValuatedSeries<R>::from_series(TruncatedSeries<R>::variable(p));
    for (long j = 1; j < k; ++j) {
        acc = integrate(g * acc);
    }
    return egf_values((acc / d).to_series(order));
}

/// β^{(k)}_{n,λ}(x) = Σ_l C(n,l) β^{(k)}_{l,λ} (-1)^{n-l} (x)_{n-l,λ}, from the
/// number sequence.
template <CoefficientRing R>
std::vector<R> poly_bernoulli_poly_sum(const std::vector<R>& numbers, const R& lambda, const R& x) {
    const std::size_t order = numbers.size() - 1;
    std::vector<R> ff;
    ff.reserve(order + 1);
    for (std::size_t j = 0; j <= order; ++j) {
        ff.push_back(detail::sign<R>(j) * deg_falling_factorial(x, static_cast<unsigned>(j), lambda));
    }
    std::vector<R> out;
    out.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        R acc(0L);
        for (std::size_t l = 0; l <= n; ++l) {
            acc = acc + R(binomial(static_cast<long>(n), static_cast<long>(l))) * numbers[l] * ff[n - l];
        }
        out.push_back(acc);
    }
    return out;
}

/// β^{(k)}_{n,λ}(x) from the generating function times e_λ^x(-t).
template <CoefficientRing R>
std::vector<R> poly_bernoulli_poly_gf(long k, const R& lambda, const R& x, std::size_t order) {
    return egf_values(poly_bernoulli_series(k, lambda, order) *
                      scale_argument(deg_exp_series(x, lambda, order), R(-1L)));
}

template <CoefficientRing R>
R poly_bernoulli(long n, long k, const R& lambda) {
    return poly_bernoulli_gf(k, lambda, static_cast<std::size_t>(n)).back();
}

template <CoefficientRing R>
R poly_bernoulli_iterated_integral(long n, long k, const R& lambda) {
    return poly_bernoulli_iterated_integral(k, lambda, static_cast<std::size_t>(n)).back();
}

template <CoefficientRing R>
R poly_bernoulli_poly(long n, long k, const R& lambda, const R& x) {
    return poly_bernoulli_poly_gf(k, lambda, x, static_cast<std::size_t>(n)).back();
}

/// Classical poly-Bernoulli numbers: Li_k(1 - e^{-t}) / (1 - e^{-t}).
std::vector<Rational> classical_poly_bernoulli(long k, std::size_t order);

/// d/dx e_λ(-x) == -e_λ^{1-λ}(-x) through x^{N-1}, the two sides built
/// independently.
template <CoefficientRing R>
bool lemma2_check(const R& lambda, std::size_t order) {
    const auto lhs = derive(scale_argument(deg_exp_series(R(1L), lambda, order), R(-1L)));
    const auto rhs = -scale_argument(deg_exp_series(R(1L) - lambda, lambda, order), R(-1L));
    for (std::size_t n = 0; n < order; ++n) {
        if (lhs[n] != rhs[n]) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Memoized tables

enum class TableId { deg_stirling1, deg_stirling2, carlitz, carlitz_shifted, poly_bernoulli };

std::string_view table_name(TableId id);
TableId parse_table(std::string_view name);

/// Every table the identity checks read, computed once for a fixed λ and
/// order. Immutable after construction apart from corrupt(), which exists
/// for fault injection and must run before the object is shared.
template <CoefficientRing R>
class SequenceTables {
public:
    /// Poly-Bernoulli numbers are tabulated for k_min..k_max and always for
    /// k = 1 and k = 2.
    SequenceTables(R lambda, std::size_t order, long k_min, long k_max)
        : lambda_(std::move(lambda)),
          order_(order),
          s2_(deg_stirling2_gf(lambda_, order)),
          s1_(deg_stirling1_gf(lambda_, order)),
          carlitz_(carlitz_values(lambda_, R(0L), order)),
          carlitz_shifted_(carlitz_values(lambda_, R(1L) - lambda_, order)) {
        for (long k = k_min; k <= k_max; ++k) {
            poly_bernoulli_.emplace(k, poly_bernoulli_gf(k, lambda_, order));
        }
        for (const long k : {1L, 2L}) {
            if (!poly_bernoulli_.contains(k)) {
                poly_bernoulli_.emplace(k, poly_bernoulli_gf(k, lambda_, order));
            }
        }
    }

    const R& lambda() const { return lambda_; }
    [[nodiscard]] std::size_t order() const { return order_; }
    /// S_{2,λ}, generating-function path.
    const Triangle<R>& deg_stirling2() const { return s2_; }
    /// S_{1,λ}, generating-function path.
    const Triangle<R>& deg_stirling1() const { return s1_; }
    /// β_{n,λ}.
    const std::vector<R>& carlitz() const { return carlitz_; }
    /// β_{n,λ}(1-λ).
    const std::vector<R>& carlitz_shifted() const { return carlitz_shifted_; }
    /// β^{(k)}_{n,λ}, generating-function path. Throws std::out_of_range for
    /// an untabulated k.
    const std::vector<R>& poly_bernoulli(long k) const { return poly_bernoulli_.at(k); }
    [[nodiscard]] bool has_poly_bernoulli(long k) const { return poly_bernoulli_.contains(k); }

    /// Adds 1 to one entry. For triangles (n, m) is the cell; for sequences m
    /// is ignored except for poly_bernoulli, where it selects k.
    void corrupt(TableId id, long n, long m) {
        const auto bump = [](R& v) { v = v + R(1L); };
        const auto idx = static_cast<std::size_t>(n);
        switch (id) {
        case TableId::deg_stirling2:
            s2_.set(idx, static_cast<std::size_t>(m), s2_(n, m) + R(1L));
            break;
        case TableId::deg_stirling1:
            s1_.set(idx, static_cast<std::size_t>(m), s1_(n, m) + R(1L));
            break;
        case TableId::carlitz:
            bump(carlitz_.at(idx));
            break;
        case TableId::carlitz_shifted:
            bump(carlitz_shifted_.at(idx));
            break;
        case TableId::poly_bernoulli:
            bump(poly_bernoulli_.at(m).at(idx));
            break;
        }
    }

private:
    R lambda_;
    std::size_t order_;
    Triangle<R> s2_;
    Triangle<R> s1_;
    std::vector<R> carlitz_;
    std::vector<R> carlitz_shifted_;
    std::map<long, std::vector<R>> poly_bernoulli_;
};

} // namespace degbern
