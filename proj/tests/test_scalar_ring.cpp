#include "doctest.h"

#include "degbern/errors.hpp"
#include "degbern/ring.hpp"
#include "support.hpp"

using namespace degbern;
using degbern::testing::Gen;

TEST_CASE("rational construction reduces and normalizes sign") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(2, 4).to_string() == "1/2");
    CHECK(Rational(3, -6).to_string() == "-1/2");
    const Rational zero(0, 7);
    CHECK(zero.numerator() == 0);
    CHECK(zero.denominator() == 1);
    CHECK(zero.to_string() == "0");
    CHECK_THROWS_AS(Rational(1, 0), zero_denominator);
    CHECK_THROWS_AS(Rational(1) / Rational(0), zero_denominator);
}

TEST_CASE("rational arithmetic matches cross multiplication") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(-3, 4).pow(2) == Rational(9, 16));
    CHECK(Rational(2, 3).pow(-3) == Rational(27, 8));
    CHECK_THROWS_AS((void)Rational(0).pow(-1), zero_denominator);
    CHECK(factorial(5) == Rational(120));
    CHECK(binomial(6, 2) == Rational(15));
    CHECK(binomial(3, 5) == Rational(0));
}

TEST_CASE("rational parse accepts the rendered grammar and rejects junk") {
    CHECK(Rational::parse("-7/21") == Rational(-1, 3));
    CHECK(Rational::parse(" 5 ") == Rational(5));
    CHECK(Rational::parse("+3/4") == Rational(3, 4));
    CHECK_THROWS_AS(Rational::parse("1/0"), zero_denominator);
    CHECK_THROWS_AS(Rational::parse("1/-2"), parse_error);
    CHECK_THROWS_AS(Rational::parse("abc"), parse_error);
    CHECK_THROWS_AS(Rational::parse(""), parse_error);
    CHECK_THROWS_AS(Rational::parse("1.5"), parse_error);
}

TEST_CASE("rational ring axioms on random triples") {
    Gen gen(11);
    for (int i = 0; i < 200; ++i) {
        const Rational a = gen.rational();
        const Rational b = gen.rational();
        const Rational c = gen.rational();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(Rational::parse(a.to_string()) == a);
    }
}

TEST_CASE("lambda polynomial canonical form") {
    const LambdaPoly l = LambdaPoly::lambda();
    CHECK((l - l).is_zero());
    CHECK((l - l).degree() == -1);
    CHECK(LambdaPoly(std::vector<Rational>{1, 2, 0, 0}).degree() == 1);
    CHECK((l * l - LambdaPoly(3) * l + LambdaPoly(2)) == (l - LambdaPoly(1)) * (l - LambdaPoly(2)));
}

TEST_CASE("poly_eval examples") {
    const LambdaPoly l = LambdaPoly::lambda();
    CHECK((l - LambdaPoly(1)).evaluate(0) == Rational(-1));
    CHECK((l * l + LambdaPoly(Rational(1, 2))).evaluate(Rational(1, 2)) == Rational(3, 4));
    CHECK((l * l - LambdaPoly(3) * l + LambdaPoly(2)).evaluate(2) == Rational(0));
}

TEST_CASE("lambda_product examples") {
    const LambdaPoly l = LambdaPoly::lambda();
    CHECK(lambda_product(1) == LambdaPoly(1));
    // (λ-1)(λ-2) expanded by hand.
    CHECK(lambda_product(3) == LambdaPoly(std::vector<Rational>{2, -3, 1}));
    CHECK(lambda_product(4).evaluate(0) == Rational(-6));
    CHECK_THROWS_AS(lambda_product(0), std::domain_error);
    CHECK(lambda_product(5).degree() == 4);
}

TEST_CASE("lambda_product agrees with the direct product at random rationals") {
    Gen gen(3);
    for (unsigned n = 1; n <= 20; ++n) {
        const Rational q = gen.rational();
        Rational direct(1);
        for (unsigned j = 1; j < n; ++j) {
            direct *= q - Rational(static_cast<long>(j));
        }
        CHECK(lambda_product(n).evaluate(q) == direct);
        CHECK(lambda_product(n).evaluate(0) == (n % 2 == 1 ? factorial(n - 1) : -factorial(n - 1)));
    }
}

TEST_CASE("lambda polynomial ring laws and evaluation homomorphism") {
    Gen gen(17);
    for (int i = 0; i < 100; ++i) {
        const LambdaPoly p = gen.poly();
        const LambdaPoly q = gen.poly();
        const LambdaPoly r = gen.poly();
        const Rational x = gen.rational();
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p * q) * r == p * (q * r));
        CHECK((p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x));
        CHECK((p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x));
    }
}

TEST_CASE("exact division succeeds only when divisible") {
    Gen gen(23);
    for (int i = 0; i < 50; ++i) {
        const LambdaPoly p = gen.poly();
        const LambdaPoly q = gen.poly();
        if (q.is_zero()) {
            continue;
        }
        CHECK(exact_divide(p * q, q) == p);
    }
    const LambdaPoly l = LambdaPoly::lambda();
    CHECK_THROWS_AS(exact_divide(l + LambdaPoly(1), l), not_divisible);
    CHECK_THROWS_AS(exact_divide(LambdaPoly(1), l), not_divisible);
    CHECK_THROWS_AS(exact_divide(l, LambdaPoly()), zero_denominator);
    CHECK(is_unit(LambdaPoly(Rational(-2, 3))));
    CHECK_FALSE(is_unit(l));
    CHECK_FALSE(is_unit(LambdaPoly()));
}

TEST_CASE("lambda polynomial rendering") {
    const LambdaPoly l = LambdaPoly::lambda();
    CHECK(LambdaPoly().to_string() == "0");
    CHECK((l - LambdaPoly(1)).to_string() == "-1 + L");
    CHECK((LambdaPoly(1) - l).to_string() == "1 - L");
    CHECK((-l).to_string() == "-L");
    CHECK((LambdaPoly(Rational(1, 6)) - LambdaPoly(Rational(1, 6)) * l * l).to_string() == "1/6 - 1/6*L^2");
    CHECK((LambdaPoly(Rational(-3, 2)) * l * l * l).to_string() == "-3/2*L^3");
}

TEST_CASE("lambda polynomial parser") {
    const LambdaPoly l = LambdaPoly::lambda();
    CHECK(LambdaPoly::parse("-1 + L") == l - LambdaPoly(1));
    CHECK(LambdaPoly::parse("L^2 + L + L") == l * l + LambdaPoly(2) * l);
    CHECK(LambdaPoly::parse("1-L") == LambdaPoly(1) - l);
    CHECK(LambdaPoly::parse("0") == LambdaPoly());
    CHECK(LambdaPoly::parse("-2/4*L^3") == LambdaPoly(Rational(-1, 2)) * l * l * l);
    CHECK_THROWS_AS(LambdaPoly::parse(""), parse_error);
    CHECK_THROWS_AS(LambdaPoly::parse("L L"), parse_error);
    CHECK_THROWS_AS(LambdaPoly::parse("2*"), parse_error);
    CHECK_THROWS_AS(LambdaPoly::parse("x"), parse_error);
    CHECK_THROWS_AS(LambdaPoly::parse("1 +"), parse_error);
}

TEST_CASE("lambda polynomial rendering round-trips through the parser") {
    Gen gen(29);
    for (int i = 0; i < 200; ++i) {
        const LambdaPoly p = gen.poly(6);
        CHECK(LambdaPoly::parse(p.to_string()) == p);
        CHECK(parse_element<LambdaPoly>(render(p)) == p);
    }
}
