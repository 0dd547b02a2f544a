#include "doctest.h"

#include "degbern/degenerate.hpp"
#include "degbern/valuated.hpp"
#include "support.hpp"

using namespace degbern;
using degbern::testing::Gen;
using QS = TruncatedSeries<Rational>;
using PS = TruncatedSeries<LambdaPoly>;

namespace {

QS qs(std::vector<Rational> c) { return QS(std::move(c)); }

QS random_series(Gen& gen, std::size_t order, bool zero_constant = false) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i <= order; ++i) {
        c.push_back(i == 0 && zero_constant ? Rational(0) : gen.rational(6, 5));
    }
    return QS(std::move(c));
}

} // namespace

TEST_CASE("series construction") {
    CHECK(QS(3).order() == 3);
    CHECK(QS(3).is_zero());
    CHECK(QS::variable(2) == qs({0, 1, 0}));
    CHECK(QS::variable(0) == qs({0}));
    CHECK_THROWS_AS(QS(std::vector<Rational>{}), std::invalid_argument);
}

TEST_CASE("series_mul examples") {
    CHECK(qs({1, 1, 0}) * qs({1, -1, 0}) == qs({1, 0, -1}));
    // (Σ t^n/n!)^2 by direct convolution of 1, 1, 1/2: [1, 2, 1/2 + 1 + 1/2].
    const auto e = qs({1, 1, Rational(1, 2)});
    CHECK(e * e == qs({1, 2, 2}));
    CHECK((e * QS(2)).is_zero());
    CHECK_THROWS_AS(QS(2) * QS(3), order_mismatch);
    CHECK_THROWS_AS(QS(2) + QS(3), order_mismatch);
}

TEST_CASE("series_div examples") {
    CHECK(divide(QS::constant(3, 1), qs({1, -1, 0, 0})) == qs({1, 1, 1, 1}));
    // t/(e^t - 1) at N = 2: divide (e^t - 1)/t = 1 + t/2 + t^2/6 into 1.
    CHECK(divide(QS::constant(2, 1), qs({1, Rational(1, 2), Rational(1, 6)})) ==
          qs({1, Rational(-1, 2), Rational(1, 12)}));
    const auto a = qs({3, 1, 4, 1});
    CHECK(divide(a, a) == QS::constant(3, 1));
    CHECK_THROWS_AS(divide(a, qs({0, 1, 0, 0})), not_divisible);
    CHECK_THROWS_AS(divide(a, QS(2)), order_mismatch);
}

TEST_CASE("series_div rejects a non-constant leading coefficient over Q[lambda]") {
    const LambdaPoly l = LambdaPoly::lambda();
    const PS b(std::vector<LambdaPoly>{l, LambdaPoly(1)});
    CHECK_THROWS_AS(divide(PS::constant(1, LambdaPoly(1)), b), not_divisible);
    const PS c(std::vector<LambdaPoly>{LambdaPoly(2), l});
    const auto q = divide(PS::constant(1, LambdaPoly(1)), c);
    CHECK(q[0] == LambdaPoly(Rational(1, 2)));
    CHECK(q[1] == LambdaPoly(Rational(-1, 4)) * l);
}

TEST_CASE("series_compose examples") {
    const auto f = qs({1, 1, 1});
    CHECK(compose(f, QS::variable(2)) == f);
    // (t + t^2)^2 = t^2 + 2t^3 + t^4.
    CHECK(compose(qs({0, 0, 1, 0}), qs({0, 1, 1, 0})) == qs({0, 0, 1, 2}));
    // log(1 + (e^t - 1)) = t.
    const std::size_t n = 8;
    const auto expm1 = exp_series(Rational(1), n) - QS::constant(n, 1);
    CHECK(compose(log1p_series<Rational>(n), expm1) == QS::variable(n));
    CHECK_THROWS_AS(compose(f, qs({1, 1, 0})), composition_error);
    CHECK_THROWS_AS(compose(f, QS::variable(3)), order_mismatch);
}

TEST_CASE("series_integrate and series_derive examples") {
    CHECK(integrate(QS::constant(2, 1)) == qs({0, 1, 0}));
    CHECK(integrate(qs({1, 1, 0})) == qs({0, 1, Rational(1, 2)}));
    CHECK(integrate(QS(3)).is_zero());
    CHECK(derive(qs({0, 0, 1, 0})) == qs({0, 2, 0, 0}));
    const auto e = exp_series(Rational(1), 5);
    auto e_top_dropped = std::vector<Rational>(e.coeffs().begin(), e.coeffs().end());
    e_top_dropped.back() = 0;
    CHECK(derive(e) == QS(e_top_dropped));
    CHECK(derive(QS::constant(4, 7)).is_zero());
}

TEST_CASE("scale_argument and truncate") {
    CHECK(scale_argument(qs({1, 1, 1, 1}), Rational(-1)) == qs({1, -1, 1, -1}));
    CHECK(scale_argument(qs({1, 1, 1}), Rational(2)) == qs({1, 2, 4}));
    CHECK(truncate(qs({1, 2, 3}), 1) == qs({1, 2}));
    CHECK_THROWS_AS(truncate(qs({1, 2}), 3), std::invalid_argument);
}

TEST_CASE("series debug rendering") {
    CHECK(to_string(qs({1, 0, Rational(-1, 2)})) == "1 + -1/2 t^2");
    CHECK(to_string(QS(2)) == "0");
    const LambdaPoly l = LambdaPoly::lambda();
    CHECK(to_string(PS(std::vector<LambdaPoly>{LambdaPoly(0), l - LambdaPoly(1)})) == "(-1 + L) t");
}

TEST_CASE("series properties on random inputs") {
    Gen gen(41);
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = static_cast<std::size_t>(gen.integer(0, 7));
        const auto a = random_series(gen, n);
        const auto b = random_series(gen, n);
        const auto c = random_series(gen, n);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        if (!b[0].is_zero()) {
            CHECK(divide(a, b) * b == a);
        }
        auto zeroed_top = std::vector<Rational>(a.coeffs().begin(), a.coeffs().end());
        zeroed_top.back() = 0;
        CHECK(derive(integrate(a)) == QS(zeroed_top));
        auto minus_constant = std::vector<Rational>(a.coeffs().begin(), a.coeffs().end());
        minus_constant[0] = 0;
        CHECK(integrate(derive(a)) == QS(minus_constant));
    }
}

TEST_CASE("composition is associative") {
    Gen gen(43);
    for (int i = 0; i < 25; ++i) {
        const std::size_t n = static_cast<std::size_t>(gen.integer(1, 6));
        const auto f = random_series(gen, n);
        const auto g = random_series(gen, n, true);
        const auto h = random_series(gen, n, true);
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    }
}

TEST_CASE("valuated series examples") {
    using V = ValuatedSeries<Rational>;
    const V a(-1, qs({1, 1}));
    const V b(1, qs({1, 0}));
    const auto p = a * b;
    CHECK(p.offset() == 0);
    CHECK(p.unit() == qs({1, 1}));

    const auto v = V::from_series(qs({0, 1, 1}));
    CHECK(v.offset() == 1);
    CHECK(v.unit() == qs({1, 1}));
    CHECK(v.precision() == 2);

    // 1 - e_λ(-t): offset 1 and unit constant term (1)_{1,λ} = 1.
    const LambdaPoly l = LambdaPoly::lambda();
    const auto d = PS::constant(6, LambdaPoly(1)) -
                   scale_argument(deg_exp_series(LambdaPoly(1), l, 6), LambdaPoly(-1));
    const auto vd = ValuatedSeries<LambdaPoly>::from_series(d);
    CHECK(vd.offset() == 1);
    CHECK(vd.unit()[0] == LambdaPoly(1));

    CHECK_THROWS_AS(V(0, qs({0, 1})), representation_error);
}

TEST_CASE("valuated zero, precision and errors") {
    using V = ValuatedSeries<Rational>;
    const auto z = V::from_series(QS(4));
    CHECK(z.is_zero());
    CHECK(z.precision() == 4);
    CHECK(z.to_series(4).is_zero());
    CHECK(integrate(z).precision() == 5);
    CHECK((z * V(2, qs({1, 1}))).precision() == 6);
    CHECK_THROWS_AS(V(1, qs({1})) / z, zero_denominator);

    const V pole(-1, qs({1, 1, 1}));
    CHECK_THROWS_AS(integrate(pole), representation_error);
    CHECK_THROWS_AS((void)pole.to_series(0), representation_error);
    CHECK_THROWS_AS((void)V(0, qs({1, 1})).to_series(2), representation_error);

    // ∫ (1 + t) = t + t^2/2, precision grows by one.
    const auto r = integrate(V(0, qs({1, 1})));
    CHECK(r.offset() == 1);
    CHECK(r.to_series(2) == qs({0, 1, Rational(1, 2)}));
}

TEST_CASE("valuation law on random valuated series") {
    using V = ValuatedSeries<Rational>;
    Gen gen(47);
    for (int i = 0; i < 30; ++i) {
        auto unit = [&] {
            auto s = random_series(gen, 4);
            std::vector<Rational> c(s.coeffs().begin(), s.coeffs().end());
            if (c[0].is_zero()) {
                c[0] = 1;
            }
            return QS(c);
        };
        const V a(gen.integer(-3, 3), unit());
        const V b(gen.integer(-3, 3), unit());
        CHECK((a * b).offset() == a.offset() + b.offset());
        CHECK((a / b).offset() == a.offset() - b.offset());
        CHECK(((a / b) * b).unit() == a.unit());
    }
}
