#include "degbern/sequences.hpp"

#include <array>
#include <utility>

namespace degbern {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 8> kFamilies{{
    {Family::bernoulli, "bernoulli"},
    {Family::carlitz, "carlitz"},
    {Family::poly_bernoulli, "poly-bernoulli"},
    {Family::stirling1, "stirling1"},
    {Family::stirling2, "stirling2"},
    {Family::deg_stirling1, "deg-stirling1"},
    {Family::deg_stirling2, "deg-stirling2"},
    {Family::deg_polylog_coeffs, "deg-polylog-coeffs"},
}};

constexpr std::array<std::pair<Path, std::string_view>, 8> kPaths{{
    {Path::generating_function, "gf"},
    {Path::recurrence, "recurrence"},
    {Path::finite_sum, "sum"},
    {Path::linear_inversion, "inversion"},
    {Path::falling_factorial_expansion, "falling"},
    {Path::explicit_sum, "explicit"},
    {Path::iterated_integral, "iterated-integral"},
    {Path::series_definition, "series"},
}};

constexpr std::array<std::pair<TableId, std::string_view>, 5> kTables{{
    {TableId::deg_stirling1, "deg-stirling1"},
    {TableId::deg_stirling2, "deg-stirling2"},
    {TableId::carlitz, "carlitz"},
    {TableId::carlitz_shifted, "carlitz-shifted"},
    {TableId::poly_bernoulli, "poly-bernoulli"},
}};

template <typename E, std::size_t N>
std::string_view lookup_name(const std::array<std::pair<E, std::string_view>, N>& table, E value) {
    for (const auto& [e, name] : table) {
        if (e == value) {
            return name;
        }
    }
    return "?";
}

template <typename E, std::size_t N>
E lookup_value(const std::array<std::pair<E, std::string_view>, N>& table, std::string_view name,
               const char* what) {
    for (const auto& [e, n] : table) {
        if (n == name) {
            return e;
        }
    }
    throw std::invalid_argument(std::string("degbern: unknown ") + what + " '" + std::string(name) + "'");
}

} // namespace

std::string_view family_name(Family f) { return lookup_name(kFamilies, f); }
Family parse_family(std::string_view name) { return lookup_value(kFamilies, name, "family"); }
std::string_view path_name(Path p) { return lookup_name(kPaths, p); }
Path parse_path(std::string_view name) { return lookup_value(kPaths, name, "path"); }
std::string_view table_name(TableId id) { return lookup_name(kTables, id); }
TableId parse_table(std::string_view name) { return lookup_value(kTables, name, "table"); }

std::vector<Rational> bernoulli_numbers(std::size_t order) {
    std::vector<Rational> b{Rational(1)};
    for (std::size_t n = 1; n <= order; ++n) {
        Rational acc;
        for (std::size_t j = 0; j < n; ++j) {
            acc += binomial(static_cast<long>(n + 1), static_cast<long>(j)) * b[j];
        }
        b.push_back(-acc / Rational(static_cast<long>(n + 1)));
    }
    return b;
}

std::vector<Rational> bernoulli_poly_values(const Rational& x, std::size_t order) {
    const auto b = bernoulli_numbers(order);
    std::vector<Rational> out;
    out.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        Rational acc;
        for (std::size_t j = 0; j <= n; ++j) {
            acc += binomial(static_cast<long>(n), static_cast<long>(j)) * b[j] *
                   x.pow(static_cast<long>(n - j));
        }
        out.push_back(acc);
    }
    return out;
}

std::vector<Rational> bernoulli_gf_values(const Rational& x, std::size_t order) {
    const std::size_t p = order + 1;
    const auto t = TruncatedSeries<Rational>::variable(p);
    const auto numer = ValuatedSeries<Rational>::from_series(t * exp_series(x, p));
    const auto denom = ValuatedSeries<Rational>::from_series(exp_series(Rational(1), p) -
                                                             TruncatedSeries<Rational>::constant(p, 1));
    return egf_values((numer / denom).to_series(order));
}

std::vector<Rational> classical_poly_bernoulli(long k, std::size_t order) {
    const std::size_t p = order + 1;
    const auto d = TruncatedSeries<Rational>::constant(p, 1) - exp_series(Rational(-1), p);
    const auto numer = ValuatedSeries<Rational>::from_series(compose(polylog_series<Rational>(k, p), d));
    return egf_values((numer / ValuatedSeries<Rational>::from_series(d)).to_series(order));
}

} // namespace degbern
