#include "gmchase/rational.hpp"

namespace gmchase {

Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    // Each partial product is divisible by i + 1, so division stays exact.
    for (long long i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

std::string to_string(const Int& value) {
    return value.str();
}

std::string to_string(const Rational& value) {
    const Int den = denominator(value);
    if (den == 1) return numerator(value).str();
    return numerator(value).str() + "/" + den.str();
}

double to_double(const Rational& value) {
    return value.convert_to<double>();
}

}  // namespace gmchase
