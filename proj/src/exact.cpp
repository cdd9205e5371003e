#include "gmchase/exact.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "gmchase/chase.hpp"
#include "gmchase/errors.hpp"
#include "gmchase/scenario.hpp"

namespace gmchase {

namespace {

void require_faithful(int cheating, int faithful) {
    if (cheating < 0)
        raise(errc::negative_count, "c must be nonnegative, got " + std::to_string(cheating));
    if (faithful < 1)
        raise(errc::no_faithful,
              "the distribution needs at least one faithful man, got f=" + std::to_string(faithful));
}

}  // namespace

ExactPmf::ExactPmf(long long offset, std::vector<Rational> masses)
    : offset_(offset), masses_(std::move(masses)) {
    if (masses_.empty()) throw std::invalid_argument("pmf needs at least one mass");
    Rational sum(0);
    for (const auto& mass : masses_) {
        if (mass < 0) throw std::invalid_argument("pmf has a negative mass");
        sum += mass;
    }
    if (sum != 1)
        throw std::invalid_argument("pmf masses sum to " + to_string(sum) + ", not 1");
    if (masses_.front() == 0 || masses_.back() == 0)
        throw std::invalid_argument("pmf support is not tight");
}

Rational ExactPmf::at(long long value) const {
    if (value < offset_ || value > max_value()) return Rational(0);
    return masses_[static_cast<size_t>(value - offset_)];
}

Rational ExactPmf::mean() const {
    Rational acc(0);
    for (long long i = 0; i < size(); ++i) acc += Rational(offset_ + i) * masses_[i];
    return acc;
}

Rational central_moment(const ExactPmf& pmf, int order) {
    if (order < 0) throw std::invalid_argument("moment order must be nonnegative");
    if (order == 0) return Rational(1);
    const Rational mu = pmf.mean();
    Rational acc(0);
    for (long long i = 0; i < pmf.size(); ++i) {
        const Rational deviation = Rational(pmf.offset() + i) - mu;
        Rational power(1);
        for (int r = 0; r < order; ++r) power *= deviation;
        acc += pmf.masses()[i] * power;
    }
    return acc;
}

ExactPmf single_pmf(int cheating, int faithful) {
    require_faithful(cheating, faithful);
    const Int denom = binomial(cheating + faithful, cheating);
    std::vector<Rational> masses;
    masses.reserve(static_cast<size_t>(cheating) + 1);
    for (int i = 1; i <= cheating + 1; ++i)
        masses.emplace_back(binomial(faithful + cheating - i, faithful - 1), denom);
    return ExactPmf(1, std::move(masses));
}

ExactPmf total_pmf(int cheating, int faithful) {
    require_faithful(cheating, faithful);
    const Int denom = binomial(cheating + faithful, cheating);
    std::vector<Rational> masses;
    masses.reserve(static_cast<size_t>(cheating) + 1);
    for (int i = faithful; i <= cheating + faithful; ++i)
        masses.emplace_back(binomial(i - 1, faithful - 1), denom);
    return ExactPmf(faithful, std::move(masses));
}

MomentSet single_moments_closed(int cheating, int faithful) {
    require_faithful(cheating, faithful);
    const Int c = cheating;
    const Int f = faithful;
    const Int s = c + f + 1;
    using boost::multiprecision::pow;
    const Rational mean(s, f + 1);
    const Rational variance(s * c * f, pow(Int(f + 1), 2) * (f + 2));
    const Rational mu3(s * c * f * (2 * c * f + f * f - 2 * c - 1),
                       pow(Int(f + 1), 3) * (f + 2) * (f + 3));
    const Int quartic = 9 * c * c * f * f + 9 * c * f * f * f + f * f * f * f - 3 * c * c * f +
                        6 * c * f * f - 3 * f * f * f + 6 * c * c + 3 * c * f - 9 * f * f +
                        6 * c - 5 * f;
    const Rational mu4(s * c * f * quartic, pow(Int(f + 1), 4) * (f + 2) * (f + 3) * (f + 4));
    return MomentSet{mean, variance, mu3, mu4};
}

MomentSet total_moments_closed(int cheating, int faithful) {
    const MomentSet single = single_moments_closed(cheating, faithful);
    // The total law shares the single-man variance and fourth moment; its
    // third moment flips sign and its mean is f times larger.
    return MomentSet{Rational(faithful) * single.mean, single.variance, -single.mu3, single.mu4};
}

namespace {

// 1 - x z truncated at `order`.
TruncatedSeries one_minus_xz(int order) {
    std::vector<SeriesPoly> k(static_cast<size_t>(order) + 1);
    k[0] = SeriesPoly::constant(Rational(1));
    if (order >= 1) k[1] = SeriesPoly::monomial(Rational(-1), 1);
    return TruncatedSeries(order, std::move(k));
}

// 1 - z truncated at `order`.
TruncatedSeries one_minus_z(int order) {
    std::vector<SeriesPoly> k(static_cast<size_t>(order) + 1);
    k[0] = SeriesPoly::constant(Rational(1));
    if (order >= 1) k[1] = SeriesPoly::constant(Rational(-1));
    return TruncatedSeries(order, std::move(k));
}

}  // namespace

SeriesPoly pgf_single(int cheating, int faithful) {
    require_faithful(cheating, faithful);
    const int order = cheating;
    const TruncatedSeries kernel =
        one_minus_xz(order).inverse() * one_minus_z(order).pow(faithful).inverse();
    const Rational norm(Int(1), binomial(cheating + faithful, cheating));
    return kernel.coeff(order).shifted(1).scaled(norm);
}

SeriesPoly pgf_total(int cheating, int faithful) {
    require_faithful(cheating, faithful);
    const int order = cheating;
    const TruncatedSeries kernel =
        one_minus_xz(order).pow(faithful).inverse() * one_minus_z(order).inverse();
    const Rational norm(Int(1), binomial(cheating + faithful, cheating));
    return kernel.coeff(order).shifted(faithful).scaled(norm);
}

std::map<std::vector<int>, long long> joint_pathlength_census(int cheating, int faithful,
                                                              long long max_scenarios) {
    const Int count = scenario_count(cheating, faithful);
    if (count > max_scenarios)
        raise(errc::too_large, "(c+f)!/f! = " + to_string(count) +
                                   " scenarios exceed the enumeration limit " +
                                   std::to_string(max_scenarios));
    std::map<std::vector<int>, long long> census;
    ScenarioStream stream(cheating, faithful);
    while (auto s = stream.next()) {
        std::vector<int> lengths;
        lengths.reserve(faithful);
        for (int man = cheating + 1; man <= cheating + faithful; ++man)
            lengths.push_back(chase_one(*s, man).requests());
        ++census[lengths];
    }
    return census;
}

Rational geometric_limit_distance(int k, int faithful) {
    if (k < 1)
        raise(errc::out_of_range, "k must be a positive integer, got " + std::to_string(k));
    const ExactPmf pmf = single_pmf(k * faithful, faithful);
    const Rational ratio(k, k + 1);
    Rational geometric(Int(1), Int(k + 1));  // mass at 1
    Rational l1(0);
    for (long long i = 1; i <= pmf.max_value(); ++i) {
        l1 += abs(pmf.at(i) - geometric);
        geometric *= ratio;
    }
    // Geometric mass beyond the pmf support lands in a virtual cell where
    // the exact law has nothing, so it counts in full.
    const Rational tail = geometric * (k + 1);
    return (l1 + tail) / 2;
}

}  // namespace gmchase
