#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "degbern/series.hpp"

namespace degbern {

/// t^offset * unit(t) with unit(0) != 0, which lets quotients such as
/// e(t)/(1 - e_λ(-t)) carry a 1/t factor without leaving the power-series
/// world.
///
/// The unit is exact through t^M, so the whole value is exact through
/// t^{offset + M}; precision() reports that bound. Products and quotients
/// combine offsets and keep the smaller unit order. Zero has its own
/// representation and only remembers its precision.
template <CoefficientRing R>
class ValuatedSeries {
public:
    /// Throws representation_error when unit(0) is zero.
    ValuatedSeries(long offset, TruncatedSeries<R> unit) : offset_(offset), unit_(std::move(unit)) {
        if (degbern::is_zero((*unit_)[0])) {
            throw representation_error("degbern: valuated series unit must have a nonzero constant term");
        }
    }

    /// The zero series, known to vanish through t^precision.
    static ValuatedSeries zero(long precision) { return ValuatedSeries(precision); }

    /// Factors out the valuation. A series of order N with valuation e gets a
    /// unit of order N - e.
    static ValuatedSeries from_series(const TruncatedSeries<R>& a) {
        const std::size_t n = a.order();
        std::size_t e = 0;
        while (e <= n && degbern::is_zero(a[e])) {
            ++e;
        }
        if (e > n) {
            return zero(static_cast<long>(n));
        }
        std::vector<R> unit(a.coeffs().begin() + static_cast<std::ptrdiff_t>(e), a.coeffs().end());
        return {static_cast<long>(e), TruncatedSeries<R>(std::move(unit))};
    }

    [[nodiscard]] bool is_zero() const { return !unit_.has_value(); }
    /// Meaningless for the zero series.
    [[nodiscard]] long offset() const { return offset_; }
    const TruncatedSeries<R>& unit() const { return unit_.value(); }
    /// Highest power of t through which the value is exact.
    [[nodiscard]] long precision() const {
        return is_zero() ? zero_precision_ : offset_ + static_cast<long>(unit_->order());
    }

    friend ValuatedSeries operator*(const ValuatedSeries& a, const ValuatedSeries& b) {
        if (a.is_zero() || b.is_zero()) {
            const long p = a.is_zero() ? a.precision() + (b.is_zero() ? b.precision() + 1 : b.offset())
                                       : b.precision() + a.offset();
            return zero(p);
        }
        const std::size_t m = std::min(a.unit_->order(), b.unit_->order());
        return {a.offset_ + b.offset_, truncate(*a.unit_, m) * truncate(*b.unit_, m)};
    }

    /// Throws zero_denominator for a zero divisor and not_divisible when the
    /// divisor's leading coefficient is not a ring unit.
    friend ValuatedSeries operator/(const ValuatedSeries& a, const ValuatedSeries& b) {
        if (b.is_zero()) {
            throw zero_denominator();
        }
        if (a.is_zero()) {
            return zero(a.precision() - b.offset_);
        }
        const std::size_t m = std::min(a.unit_->order(), b.unit_->order());
        return {a.offset_ - b.offset_, divide(truncate(*a.unit_, m), truncate(*b.unit_, m))};
    }

    /// Antiderivative with zero constant term. A negative offset is a genuine
    /// pole (the unit has a nonzero constant term), so it is rejected.
    friend ValuatedSeries integrate(const ValuatedSeries& a) {
        if (a.is_zero()) {
            return zero(a.precision() + 1);
        }
        if (a.offset_ < 0) {
            throw representation_error("degbern: cannot integrate a series with a pole of order " +
                                       std::to_string(-a.offset_));
        }
        const TruncatedSeries<R>& u = *a.unit_;
        std::vector<R> r;
        r.reserve(u.order() + 1);
        for (std::size_t j = 0; j <= u.order(); ++j) {
            r.push_back(R(Rational(1, a.offset_ + static_cast<long>(j) + 1)) * u[j]);
        }
        return {a.offset_ + 1, TruncatedSeries<R>(std::move(r))};
    }

    /// Expands back to an ordinary series of the requested order. Throws
    /// representation_error for a pole or when the value is not known that far.
    [[nodiscard]] TruncatedSeries<R> to_series(std::size_t order) const {
        if (precision() < static_cast<long>(order)) {
            throw representation_error("degbern: valuated series is exact only through t^" +
                                       std::to_string(precision()) + ", requested t^" +
                                       std::to_string(order));
        }
        TruncatedSeries<R> zero_series(order);
        if (is_zero()) {
            return zero_series;
        }
        if (offset_ < 0) {
            throw representation_error("degbern: series with a pole has no power-series expansion");
        }
        std::vector<R> c(zero_series.coeffs().begin(), zero_series.coeffs().end());
        for (std::size_t j = 0; offset_ + static_cast<long>(j) <= static_cast<long>(order); ++j) {
            c[static_cast<std::size_t>(offset_) + j] = (*unit_)[j];
        }
        return TruncatedSeries<R>(std::move(c));
    }

private:
    explicit ValuatedSeries(long zero_precision) : zero_precision_(zero_precision) {}

    long offset_ = 0;
    std::optional<TruncatedSeries<R>> unit_;
    long zero_precision_ = 0;
};

} // namespace degbern
