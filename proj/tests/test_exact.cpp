#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "gmchase/chase.hpp"
#include "gmchase/errors.hpp"
#include "gmchase/exact.hpp"
#include "gmchase/scenario.hpp"

using namespace gmchase;

namespace {

// Enumeration oracle for the pmfs: chase every scenario and count.
std::map<long long, long long> enumerate_single_counts(int c, int f) {
    std::map<long long, long long> counts;
    ScenarioStream stream(c, f);
    while (auto s = stream.next()) ++counts[chase_one(*s, c + 1).requests()];
    return counts;
}

std::map<long long, long long> enumerate_total_counts(int c, int f) {
    std::map<long long, long long> counts;
    ScenarioStream stream(c, f);
    while (auto s = stream.next()) ++counts[match_all(*s).total_requests()];
    return counts;
}

}  // namespace

TEST_CASE("ExactPmf enforces its invariants") {
    CHECK_THROWS_AS(ExactPmf(1, {}), std::invalid_argument);
    CHECK_THROWS_AS(ExactPmf(1, {Rational(1, 2), Rational(1, 4)}), std::invalid_argument);
    CHECK_THROWS_AS(ExactPmf(1, {Rational(3, 2), Rational(-1, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(ExactPmf(1, {Rational(0), Rational(1)}), std::invalid_argument);
    CHECK_THROWS_AS(ExactPmf(1, {Rational(1), Rational(0)}), std::invalid_argument);
    const ExactPmf ok(3, {Rational(1, 2), Rational(0), Rational(1, 2)});
    CHECK(ok.offset() == 3);
    CHECK(ok.max_value() == 5);
    CHECK(ok.at(4) == 0);
    CHECK(ok.at(2) == 0);
    CHECK(ok.at(6) == 0);
}

TEST_CASE("single_pmf small cases") {
    const ExactPmf point = single_pmf(0, 3);
    CHECK(point.offset() == 1);
    CHECK(point.size() == 1);
    CHECK(point.at(1) == 1);

    const ExactPmf half = single_pmf(1, 1);
    CHECK(half.at(1) == Rational(1, 2));
    CHECK(half.at(2) == Rational(1, 2));

    const ExactPmf two_thirds = single_pmf(1, 2);
    CHECK(two_thirds.at(1) == Rational(2, 3));
    CHECK(two_thirds.at(2) == Rational(1, 3));

    CHECK_THROWS_AS(single_pmf(1, 0), DomainError);
    CHECK_THROWS_AS(single_pmf(-1, 1), DomainError);
}

TEST_CASE("total_pmf small cases") {
    const ExactPmf point = total_pmf(0, 5);
    CHECK(point.offset() == 5);
    CHECK(point.size() == 1);

    const ExactPmf uniform = total_pmf(3, 1);
    for (int i = 1; i <= 4; ++i) CHECK(uniform.at(i) == Rational(1, 4));

    const ExactPmf skew = total_pmf(1, 2);
    CHECK(skew.at(2) == Rational(1, 3));
    CHECK(skew.at(3) == Rational(2, 3));

    CHECK_THROWS_AS(total_pmf(2, 0), DomainError);
}

TEST_CASE("pmfs match the enumeration oracle exactly") {
    for (int c = 0; c <= 5; ++c) {
        for (int f = 1; f <= 5; ++f) {
            if (scenario_count(c, f) > 20000) continue;
            const Int total = scenario_count(c, f);
            const ExactPmf single = single_pmf(c, f);
            for (const auto& [value, count] : enumerate_single_counts(c, f))
                CHECK(single.at(value) == Rational(count, total));
            const ExactPmf tot = total_pmf(c, f);
            for (const auto& [value, count] : enumerate_total_counts(c, f))
                CHECK(tot.at(value) == Rational(count, total));
        }
    }
}

TEST_CASE("central_moment basics") {
    const ExactPmf pmf = single_pmf(1, 2);
    CHECK(central_moment(pmf, 0) == 1);
    CHECK(central_moment(pmf, 1) == 0);
    CHECK(central_moment(pmf, 3) == Rational(2, 27));
    // Symmetric two-point law: odd central moments vanish.
    CHECK(central_moment(single_pmf(1, 1), 5) == 0);
    CHECK_THROWS_AS(central_moment(pmf, -1), std::invalid_argument);
}

TEST_CASE("single closed-form moments, hand-checked") {
    const MomentSet m11 = single_moments_closed(1, 1);
    CHECK(m11.mean == Rational(3, 2));
    CHECK(m11.variance == Rational(1, 4));
    CHECK(m11.mu3 == 0);
    CHECK(m11.mu4 == Rational(1, 16));

    const MomentSet m12 = single_moments_closed(1, 2);
    CHECK(m12.mean == Rational(4, 3));
    CHECK(m12.variance == Rational(2, 9));
    CHECK(m12.mu3 == Rational(2, 27));
    CHECK(m12.mu4 == Rational(2, 27));

    CHECK_THROWS_AS(single_moments_closed(1, 0), DomainError);
}

TEST_CASE("total closed-form moments, hand-checked") {
    const MomentSet m12 = total_moments_closed(1, 2);
    CHECK(m12.mean == Rational(8, 3));
    CHECK(m12.variance == Rational(2, 9));
    CHECK(m12.mu3 == Rational(-2, 27));  // sign flips relative to the single law

    const MomentSet none = total_moments_closed(0, 4);
    CHECK(none.mean == 4);
    CHECK(none.variance == 0);
    CHECK(none.mu3 == 0);
    CHECK(none.mu4 == 0);
}

TEST_CASE("closed forms equal numeric moments on a sweep") {
    for (int c = 0; c <= 12; ++c) {
        for (int f = 1; f <= 12; ++f) {
            const ExactPmf sp = single_pmf(c, f);
            const MomentSet sm = single_moments_closed(c, f);
            CHECK(sm.mean == sp.mean());
            CHECK(sm.variance == central_moment(sp, 2));
            CHECK(sm.mu3 == central_moment(sp, 3));
            CHECK(sm.mu4 == central_moment(sp, 4));

            const ExactPmf tp = total_pmf(c, f);
            const MomentSet tm = total_moments_closed(c, f);
            CHECK(tm.mean == tp.mean());
            CHECK(tm.variance == central_moment(tp, 2));
            CHECK(tm.mu3 == central_moment(tp, 3));
            CHECK(tm.mu4 == central_moment(tp, 4));

            CHECK(tm.mean == Rational(f) * sm.mean);
            CHECK(tm.variance == sm.variance);
        }
    }
}

TEST_CASE("moment invariants hold: variance and mu4 nonnegative") {
    for (int c = 0; c <= 20; c += 4) {
        for (int f = 1; f <= 20; f += 3) {
            const MomentSet m = single_moments_closed(c, f);
            CHECK(m.variance >= 0);
            CHECK(m.mu4 >= 0);
        }
    }
}

TEST_CASE("pgf_single known expansions") {
    const SeriesPoly p11 = pgf_single(1, 1);
    CHECK(p11.coeff(0) == 0);
    CHECK(p11.coeff(1) == Rational(1, 2));
    CHECK(p11.coeff(2) == Rational(1, 2));
    CHECK(p11.degree() == 2);

    CHECK(pgf_single(0, 1) == SeriesPoly::monomial(Rational(1), 1));

    const SeriesPoly p31 = pgf_single(3, 1);
    const ExactPmf pmf31 = single_pmf(3, 1);
    for (int i = 1; i <= 4; ++i) CHECK(p31.coeff(i) == pmf31.at(i));

    CHECK_THROWS_AS(pgf_single(2, 0), DomainError);
}

TEST_CASE("pgf_total known expansions") {
    const SeriesPoly p31 = pgf_total(3, 1);
    for (int i = 1; i <= 4; ++i) CHECK(p31.coeff(i) == Rational(1, 4));

    CHECK(pgf_total(0, 3) == SeriesPoly::monomial(Rational(1), 3));

    const SeriesPoly p12 = pgf_total(1, 2);
    CHECK(p12.coeff(2) == Rational(1, 3));
    CHECK(p12.coeff(3) == Rational(2, 3));
    CHECK(p12.degree() == 3);
}

TEST_CASE("pgf coefficients equal pmf masses on a sweep") {
    for (int c = 0; c <= 10; ++c) {
        for (int f = 1; f <= 10; ++f) {
            const SeriesPoly ps = pgf_single(c, f);
            const ExactPmf sp = single_pmf(c, f);
            CHECK(ps.degree() == static_cast<int>(sp.max_value()));
            for (int i = 0; i <= ps.degree(); ++i) CHECK(ps.coeff(i) == sp.at(i));

            const SeriesPoly pt = pgf_total(c, f);
            const ExactPmf tp = total_pmf(c, f);
            CHECK(pt.degree() == static_cast<int>(tp.max_value()));
            for (int i = 0; i <= pt.degree(); ++i) CHECK(pt.coeff(i) == tp.at(i));
        }
    }
}

TEST_CASE("joint_pathlength_census small cases") {
    const auto census11 = joint_pathlength_census(1, 1);
    CHECK(census11.size() == 2);
    CHECK(census11.at({1}) == 1);
    CHECK(census11.at({2}) == 1);

    const auto census03 = joint_pathlength_census(0, 3);
    CHECK(census03.size() == 1);
    CHECK(census03.at({1, 1, 1}) == 1);

    const auto census21 = joint_pathlength_census(2, 1);
    CHECK(census21.size() == 3);
    CHECK(census21.at({1}) == 2);
    CHECK(census21.at({2}) == 2);
    CHECK(census21.at({3}) == 2);
}

TEST_CASE("census support and constancy on a sweep") {
    for (int c = 0; c <= 4; ++c) {
        for (int f = 1; f <= 3; ++f) {
            const auto census = joint_pathlength_census(c, f);
            // Support is all vectors with entries >= 1 and slack <= c; its
            // size is C(c+f, f).
            CHECK(Int(census.size()) == binomial(c + f, f));
            long long slack_max = 0;
            const long long constant = census.begin()->second;
            long long total = 0;
            for (const auto& [vec, count] : census) {
                long long slack = 0;
                for (int a : vec) {
                    CHECK(a >= 1);
                    slack += a - 1;
                }
                CHECK(slack <= c);
                slack_max = std::max(slack_max, slack);
                CHECK(count == constant);
                total += count;
            }
            if (c > 0) CHECK(slack_max == c);
            CHECK(Int(total) == scenario_count(c, f));
        }
    }
}

TEST_CASE("census rejects oversized enumerations") {
    try {
        joint_pathlength_census(5, 5, 100);
        FAIL("expected TooLarge");
    } catch (const DomainError& e) {
        CHECK(e.code() == errc::too_large);
    }
}

TEST_CASE("geometric limit distance, hand-evaluated base case") {
    // pmf (1/2, 1/2) against Ge(1/2) masses (1/2, 1/4) with a 1/4 lump.
    CHECK(geometric_limit_distance(1, 1) == Rational(1, 4));
}

TEST_CASE("geometric limit distance decreases in f") {
    for (int k : {1, 2}) {
        Rational previous(1);
        for (int f : {5, 10, 20, 40}) {
            const Rational d = geometric_limit_distance(k, f);
            CHECK(d > 0);
            CHECK(d < previous);
            previous = d;
        }
    }
}

TEST_CASE("geometric limit distance rejects bad parameters") {
    CHECK_THROWS_AS(geometric_limit_distance(0, 5), DomainError);
    CHECK_THROWS_AS(geometric_limit_distance(1, 0), DomainError);
}
