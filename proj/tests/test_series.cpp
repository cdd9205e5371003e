#include <doctest.h>

#include <vector>

#include "gmchase/series.hpp"

using namespace gmchase;

namespace {

SeriesPoly poly(std::vector<Rational> coefficients) {
    return SeriesPoly(std::move(coefficients));
}

}  // namespace

TEST_CASE("polynomials trim to a canonical form") {
    CHECK(poly({Rational(1), Rational(0)}) == poly({Rational(1)}));
    CHECK(poly({Rational(0), Rational(0)}).is_zero());
    CHECK(poly({}).degree() == -1);
    CHECK(SeriesPoly::monomial(Rational(0), 3).is_zero());
    CHECK(SeriesPoly::constant(Rational(7)).degree() == 0);
}

TEST_CASE("polynomial arithmetic") {
    const SeriesPoly one_plus_x = poly({Rational(1), Rational(1)});
    CHECK(one_plus_x * one_plus_x == poly({Rational(1), Rational(2), Rational(1)}));
    CHECK(one_plus_x + poly({Rational(-1), Rational(-1)}) == SeriesPoly{});
    CHECK(one_plus_x.scaled(Rational(1, 2)) == poly({Rational(1, 2), Rational(1, 2)}));
    CHECK(one_plus_x.shifted(2) == poly({Rational(0), Rational(0), Rational(1), Rational(1)}));
    CHECK((one_plus_x * SeriesPoly{}).is_zero());
    CHECK(one_plus_x.coeff(5) == 0);
    CHECK(one_plus_x.coeff(-1) == 0);
}

TEST_CASE("inverse of 1 - z is the all-ones series") {
    std::vector<SeriesPoly> kernel(6);
    kernel[0] = SeriesPoly::constant(Rational(1));
    kernel[1] = SeriesPoly::constant(Rational(-1));
    const TruncatedSeries inv = TruncatedSeries(5, std::move(kernel)).inverse();
    for (int n = 0; n <= 5; ++n) CHECK(inv.coeff(n) == SeriesPoly::constant(Rational(1)));
}

TEST_CASE("inverse of 1 - x z carries x^n at z^n") {
    std::vector<SeriesPoly> kernel(5);
    kernel[0] = SeriesPoly::constant(Rational(1));
    kernel[1] = SeriesPoly::monomial(Rational(-1), 1);
    const TruncatedSeries inv = TruncatedSeries(4, std::move(kernel)).inverse();
    for (int n = 0; n <= 4; ++n) CHECK(inv.coeff(n) == SeriesPoly::monomial(Rational(1), n));
}

TEST_CASE("inverse of (1 - z)^f gives the negative binomial coefficients") {
    for (int f = 1; f <= 6; ++f) {
        std::vector<SeriesPoly> kernel(9);
        kernel[0] = SeriesPoly::constant(Rational(1));
        kernel[1] = SeriesPoly::constant(Rational(-1));
        const TruncatedSeries series = TruncatedSeries(8, std::move(kernel)).pow(f).inverse();
        for (int n = 0; n <= 8; ++n)
            CHECK(series.coeff(n) ==
                  SeriesPoly::constant(Rational(binomial(f - 1 + n, f - 1), Int(1))));
    }
}

TEST_CASE("a series times its inverse is one") {
    // 1 - 2z + 3z^2 (scalar head, mixed tail).
    std::vector<SeriesPoly> kernel(7);
    kernel[0] = SeriesPoly::constant(Rational(1));
    kernel[1] = SeriesPoly::monomial(Rational(-2), 1);
    kernel[2] = SeriesPoly::constant(Rational(3));
    const TruncatedSeries series(6, std::move(kernel));
    const TruncatedSeries product = series * series.inverse();
    CHECK(product.coeff(0) == SeriesPoly::constant(Rational(1)));
    for (int n = 1; n <= 6; ++n) CHECK(product.coeff(n).is_zero());
}

TEST_CASE("pow matches repeated multiplication") {
    std::vector<SeriesPoly> kernel(5);
    kernel[0] = SeriesPoly::constant(Rational(1));
    kernel[1] = SeriesPoly::monomial(Rational(1), 1);
    const TruncatedSeries base(4, std::move(kernel));
    TruncatedSeries manual = TruncatedSeries::one(4);
    for (int e = 0; e <= 5; ++e) {
        const TruncatedSeries fast = base.pow(e);
        for (int n = 0; n <= 4; ++n) CHECK(fast.coeff(n) == manual.coeff(n));
        manual = manual * base;
    }
    CHECK(base.pow(0).coeff(0) == SeriesPoly::constant(Rational(1)));
}

TEST_CASE("inverse requires a nonzero scalar constant term") {
    std::vector<SeriesPoly> zero_head(3);
    zero_head[1] = SeriesPoly::constant(Rational(1));
    CHECK_THROWS_AS(TruncatedSeries(2, std::move(zero_head)).inverse(), std::invalid_argument);

    std::vector<SeriesPoly> poly_head(3);
    poly_head[0] = SeriesPoly::monomial(Rational(1), 1);
    CHECK_THROWS_AS(TruncatedSeries(2, std::move(poly_head)).inverse(), std::invalid_argument);
}

TEST_CASE("truncated multiplication drops everything above the order") {
    std::vector<SeriesPoly> kernel(2);
    kernel[0] = SeriesPoly::constant(Rational(1));
    kernel[1] = SeriesPoly::constant(Rational(1));
    const TruncatedSeries series(1, std::move(kernel));
    const TruncatedSeries squared = series * series;
    CHECK(squared.order() == 1);
    CHECK(squared.coeff(0) == SeriesPoly::constant(Rational(1)));
    CHECK(squared.coeff(1) == SeriesPoly::constant(Rational(2)));
}
