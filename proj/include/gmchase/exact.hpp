#pragma once

#include <map>
#include <vector>

#include "gmchase/rational.hpp"
#include "gmchase/series.hpp"

namespace gmchase {

/// Finite pmf with exact rational masses on consecutive integers
/// starting at offset. Construction checks nonnegativity, exact
/// normalization, and tight support (first and last masses nonzero).
class ExactPmf {
public:
    ExactPmf(long long offset, std::vector<Rational> masses);

    long long offset() const noexcept { return offset_; }
    long long size() const noexcept { return static_cast<long long>(masses_.size()); }
    long long max_value() const noexcept { return offset_ + size() - 1; }
    const std::vector<Rational>& masses() const noexcept { return masses_; }

    /// P(value); 0 outside the support.
    Rational at(long long value) const;

    Rational mean() const;

    bool operator==(const ExactPmf&) const = default;

private:
    long long offset_;
    std::vector<Rational> masses_;
};

/// Exact E[(X - E X)^order]; 1 for order 0 and 0 for order 1.
Rational central_moment(const ExactPmf& pmf, int order);

struct MomentSet {
    Rational mean;
    Rational variance;
    Rational mu3;
    Rational mu4;

    bool operator==(const MomentSet&) const = default;
};

/// Request count of one fixed faithful man:
/// P(i) = C(f+c-i, f-1) / C(c+f, c) on {1, ..., c+1}.
ExactPmf single_pmf(int cheating, int faithful);

/// Total requests over all faithful men:
/// P(i) = C(i-1, f-1) / C(c+f, c) on {f, ..., c+f}.
ExactPmf total_pmf(int cheating, int faithful);

/// Closed forms for mean, variance, and the 3rd/4th central moments of
/// the single-man law.
MomentSet single_moments_closed(int cheating, int faithful);

/// Closed forms for the total-requests law: f times the single mean, the
/// same variance and fourth moment, the third moment with flipped sign.
MomentSet total_moments_closed(int cheating, int faithful);

/// Probability generating function of the single-man law, extracted as
/// the z^c coefficient of 1/((1-xz)(1-z)^f) scaled by c!f!/(c+f)! and
/// shifted by one power of x. Coefficients equal single_pmf masses.
SeriesPoly pgf_single(int cheating, int faithful);

/// Same mechanism for the total law: z^c coefficient of
/// 1/((1-z)(1-xz)^f), shifted by x^f. Coefficients equal total_pmf.
SeriesPoly pgf_total(int cheating, int faithful);

/// Exhaustive tally of the ordered request vector (a_1, ..., a_f) of the
/// faithful men over every scenario. The feasible support is exactly
/// {a_i >= 1, sum (a_i - 1) <= c}.
std::map<std::vector<int>, long long> joint_pathlength_census(
    int cheating, int faithful, long long max_scenarios = 1000000);

/// Total-variation distance between single_pmf(k*f, f) and the geometric
/// law with success probability 1/(k+1) on {1, 2, ...}, restricted to the
/// pmf support {1, ..., k*f+1}; geometric mass beyond the support is
/// lumped into one virtual cell that counts fully toward the distance.
Rational geometric_limit_distance(int k, int faithful);

}  // namespace gmchase
