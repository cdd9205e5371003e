#pragma once

#include <vector>

#include "gmchase/rational.hpp"

namespace gmchase {

/// Dense polynomial in one indeterminate with exact rational
/// coefficients, indexed from degree 0. Trailing zeros are trimmed, so
/// the representation is canonical; the zero polynomial stores nothing.
class SeriesPoly {
public:
    SeriesPoly() = default;
    explicit SeriesPoly(std::vector<Rational> coefficients);

    static SeriesPoly constant(Rational value);
    static SeriesPoly monomial(Rational value, int degree);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Tight degree; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    /// Coefficient of x^degree; 0 outside the stored range.
    Rational coeff(int degree) const;

    SeriesPoly operator+(const SeriesPoly& other) const;
    SeriesPoly operator*(const SeriesPoly& other) const;
    SeriesPoly scaled(const Rational& factor) const;
    /// Multiply by x^by.
    SeriesPoly shifted(int by) const;

    bool operator==(const SeriesPoly&) const = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Power series in z truncated at a fixed order, with SeriesPoly (in x)
/// coefficients. Supports what coefficient extraction needs: truncated
/// multiplication, nonnegative integer powers, and inversion of a series
/// whose constant term is a nonzero scalar.
class TruncatedSeries {
public:
    TruncatedSeries(int order, std::vector<SeriesPoly> coefficients);

    static TruncatedSeries one(int order);

    int order() const noexcept { return order_; }
    const SeriesPoly& coeff(int z_degree) const { return coeffs_.at(z_degree); }

    TruncatedSeries operator*(const TruncatedSeries& other) const;
    TruncatedSeries pow(int exponent) const;
    TruncatedSeries inverse() const;

private:
    int order_;
    std::vector<SeriesPoly> coeffs_;  // size order_ + 1
};

}  // namespace gmchase
