#include "gmchase/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace gmchase {

SeriesPoly::SeriesPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

SeriesPoly SeriesPoly::constant(Rational value) {
    std::vector<Rational> c;
    c.push_back(std::move(value));
    return SeriesPoly(std::move(c));
}

SeriesPoly SeriesPoly::monomial(Rational value, int degree) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be nonnegative");
    std::vector<Rational> c(static_cast<size_t>(degree) + 1);
    c[degree] = std::move(value);
    return SeriesPoly(std::move(c));
}

void SeriesPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational SeriesPoly::coeff(int degree) const {
    if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[degree];
}

SeriesPoly SeriesPoly::operator+(const SeriesPoly& other) const {
    std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
    return SeriesPoly(std::move(out));
}

SeriesPoly SeriesPoly::operator*(const SeriesPoly& other) const {
    if (is_zero() || other.is_zero()) return {};
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;  // the kernels here are monomial-heavy
        for (size_t j = 0; j < other.coeffs_.size(); ++j) {
            if (other.coeffs_[j] == 0) continue;
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return SeriesPoly(std::move(out));
}

SeriesPoly SeriesPoly::scaled(const Rational& factor) const {
    if (factor == 0) return {};
    std::vector<Rational> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * factor;
    return SeriesPoly(std::move(out));
}

SeriesPoly SeriesPoly::shifted(int by) const {
    if (by < 0) throw std::invalid_argument("shift must be nonnegative");
    if (is_zero() || by == 0) return *this;
    std::vector<Rational> out(coeffs_.size() + static_cast<size_t>(by));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i + by] = coeffs_[i];
    return SeriesPoly(std::move(out));
}

TruncatedSeries::TruncatedSeries(int order, std::vector<SeriesPoly> coefficients)
    : order_(order), coeffs_(std::move(coefficients)) {
    if (order_ < 0) throw std::invalid_argument("truncation order must be nonnegative");
    coeffs_.resize(static_cast<size_t>(order_) + 1);
}

TruncatedSeries TruncatedSeries::one(int order) {
    std::vector<SeriesPoly> c(1);
    c[0] = SeriesPoly::constant(Rational(1));
    return TruncatedSeries(order, std::move(c));
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
    if (other.order_ != order_) throw std::invalid_argument("truncation order mismatch");
    std::vector<SeriesPoly> out(static_cast<size_t>(order_) + 1);
    for (int i = 0; i <= order_; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (int j = 0; i + j <= order_; ++j) {
            if (other.coeffs_[j].is_zero()) continue;
            out[i + j] = out[i + j] + coeffs_[i] * other.coeffs_[j];
        }
    }
    return TruncatedSeries(order_, std::move(out));
}

TruncatedSeries TruncatedSeries::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("exponent must be nonnegative");
    TruncatedSeries result = one(order_);
    TruncatedSeries base = *this;
    while (exponent > 0) {
        if (exponent & 1) result = result * base;
        exponent >>= 1;
        if (exponent) base = base * base;
    }
    return result;
}

TruncatedSeries TruncatedSeries::inverse() const {
    const SeriesPoly& head = coeffs_[0];
    if (head.is_zero() || head.degree() != 0)
        throw std::invalid_argument("series inverse needs a nonzero scalar constant term");
    const Rational inv_head = Rational(1) / head.coeff(0);
    std::vector<SeriesPoly> out(static_cast<size_t>(order_) + 1);
    out[0] = SeriesPoly::constant(inv_head);
    // b_n = -(a_1 b_{n-1} + ... + a_n b_0) / a_0
    for (int n = 1; n <= order_; ++n) {
        SeriesPoly acc;
        for (int k = 1; k <= n; ++k) {
            if (coeffs_[k].is_zero() || out[n - k].is_zero()) continue;
            acc = acc + coeffs_[k] * out[n - k];
        }
        out[n] = acc.scaled(-inv_head);
    }
    return TruncatedSeries(order_, std::move(out));
}

}  // namespace gmchase
