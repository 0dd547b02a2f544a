#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "degbern/errors.hpp"
#include "degbern/ring.hpp"

namespace degbern {

/// Formal power series c_0 + c_1 t + ... + c_N t^N, exact through t^N.
///
/// The order N is fixed at construction. Binary operations insist on equal
/// orders and throw order_mismatch otherwise; use truncate() to lower an
/// order explicitly.
template <CoefficientRing R>
class TruncatedSeries {
public:
    /// The zero series of the given order.
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, R(0L)) {}

    /// Order is coeffs.size() - 1.
    explicit TruncatedSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) {
            throw std::invalid_argument("degbern: a truncated series needs at least one coefficient");
        }
    }

    static TruncatedSeries constant(std::size_t order, const R& c) {
        TruncatedSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    /// The series t (just 0 when order == 0).
    static TruncatedSeries variable(std::size_t order) {
        TruncatedSeries s(order);
        if (order >= 1) {
            s.coeffs_[1] = R(1L);
        }
        return s;
    }

    [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
    const R& operator[](std::size_t n) const { return coeffs_.at(n); }
    [[nodiscard]] std::span<const R> coeffs() const { return coeffs_; }

    [[nodiscard]] bool is_zero() const {
        for (const R& c : coeffs_) {
            if (!degbern::is_zero(c)) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        require_same_order(a, b);
        TruncatedSeries r = a;
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
            r.coeffs_[i] = r.coeffs_[i] + b.coeffs_[i];
        }
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        require_same_order(a, b);
        TruncatedSeries r = a;
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
            r.coeffs_[i] = r.coeffs_[i] - b.coeffs_[i];
        }
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a) {
        TruncatedSeries r = a;
        for (R& c : r.coeffs_) {
            c = -c;
        }
        return r;
    }

    friend TruncatedSeries operator*(const R& scalar, const TruncatedSeries& a) {
        TruncatedSeries r = a;
        for (R& c : r.coeffs_) {
            c = scalar * c;
        }
        return r;
    }

    /// Cauchy product, exact through t^N.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        require_same_order(a, b);
        const std::size_t n = a.order();
        TruncatedSeries r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (degbern::is_zero(a.coeffs_[i])) {
                continue;
            }
            for (std::size_t j = 0; i + j <= n; ++j) {
                r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    static void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.order() != b.order()) {
            throw order_mismatch(a.order(), b.order());
        }
    }

private:
    std::vector<R> coeffs_;
};

/// Series quotient q with q*b == a through t^N. The constant term of b must
/// be a unit of the ring; otherwise not_divisible is thrown.
template <CoefficientRing R>
TruncatedSeries<R> divide(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    TruncatedSeries<R>::require_same_order(a, b);
    if (!is_unit(b[0])) {
        throw not_divisible("degbern: series divisor has non-invertible constant term " + render(b[0]));
    }
    const std::size_t n = a.order();
    std::vector<R> q;
    q.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        R acc = a[i];
        for (std::size_t j = 0; j < i; ++j) {
            acc = acc - q[j] * b[i - j];
        }
        q.push_back(exact_divide(acc, b[0]));
    }
    return TruncatedSeries<R>(std::move(q));
}

/// f(g(t)) through t^N by Horner's scheme. g must have zero constant term.
template <CoefficientRing R>
TruncatedSeries<R> compose(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
    TruncatedSeries<R>::require_same_order(f, g);
    if (!is_zero(g[0])) {
        throw composition_error("degbern: inner series of a composition must have zero constant term");
    }
    const std::size_t n = f.order();
    auto acc = TruncatedSeries<R>::constant(n, f[n]);
    for (std::size_t i = n; i-- > 0;) {
        acc = acc * g + TruncatedSeries<R>::constant(n, f[i]);
    }
    return acc;
}

/// Antiderivative with zero constant term. The input's t^N coefficient has
/// nowhere to go and is dropped, so the order is preserved.
template <CoefficientRing R>
TruncatedSeries<R> integrate(const TruncatedSeries<R>& a) {
    const std::size_t n = a.order();
    std::vector<R> r(n + 1, R(0L));
    for (std::size_t i = 1; i <= n; ++i) {
        r[i] = R(Rational(1, static_cast<long>(i))) * a[i - 1];
    }
    return TruncatedSeries<R>(std::move(r));
}

/// Term-wise derivative. The t^N coefficient of the result is unknown and set
/// to zero, so only coefficients through t^{N-1} are meaningful.
template <CoefficientRing R>
TruncatedSeries<R> derive(const TruncatedSeries<R>& a) {
    const std::size_t n = a.order();
    std::vector<R> r(n + 1, R(0L));
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = R(static_cast<long>(i + 1)) * a[i + 1];
    }
    return TruncatedSeries<R>(std::move(r));
}

/// Substitutes t -> c t, i.e. multiplies coefficient n by c^n.
template <CoefficientRing R>
TruncatedSeries<R> scale_argument(const TruncatedSeries<R>& a, const R& c) {
    std::vector<R> r;
    r.reserve(a.order() + 1);
    R power(1L);
    for (std::size_t i = 0; i <= a.order(); ++i) {
        r.push_back(power * a[i]);
        power = power * c;
    }
    return TruncatedSeries<R>(std::move(r));
}

/// Drops coefficients above t^order. Throws std::invalid_argument when asked
/// to raise the order.
template <CoefficientRing R>
TruncatedSeries<R> truncate(const TruncatedSeries<R>& a, std::size_t order) {
    if (order > a.order()) {
        throw std::invalid_argument("degbern: truncate cannot raise the order of a series");
    }
    return TruncatedSeries<R>(std::vector<R>(a.coeffs().begin(), a.coeffs().begin() + order + 1));
}

/// a^k for k >= 0.
template <CoefficientRing R>
TruncatedSeries<R> power(const TruncatedSeries<R>& a, unsigned k) {
    auto acc = TruncatedSeries<R>::constant(a.order(), R(1L));
    for (unsigned i = 0; i < k; ++i) {
        acc = acc * a;
    }
    return acc;
}

/// Debug rendering "c0 + c1 t + c2 t^2 + ..." using the scalar rendering for
/// each coefficient; zero coefficients are skipped.
template <CoefficientRing R>
std::string to_string(const TruncatedSeries<R>& a) {
    std::string out;
    for (std::size_t i = 0; i <= a.order(); ++i) {
        if (is_zero(a[i])) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        const std::string c = render(a[i]);
        const bool compound = c.find_first_of(" ") != std::string::npos;
        if (i == 0) {
            out += c;
            continue;
        }
        out += compound ? "(" + c + ")" : c;
        out += i == 1 ? " t" : " t^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

} // namespace degbern
