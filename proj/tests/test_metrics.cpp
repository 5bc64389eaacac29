#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "citevol/metrics.hpp"

using namespace citevol;
using doctest::Approx;

namespace {

// |a - b| within rel of the larger magnitude, with an absolute floor near zero.
bool close(double a, double b, double rel = 1e-12) {
    const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= rel * scale;
}

}  // namespace

TEST_CASE("citation_average") {
    CHECK(metrics::citation_average(std::vector<std::uint32_t>(50, 3)) == 3.0);
    CHECK(metrics::citation_average(std::vector<std::uint32_t>{0}) == 0.0);
    CHECK(metrics::citation_average(std::vector<std::uint32_t>{10, 5, 3, 0, 0, 0}) == 3.0);
    CHECK_THROWS_WITH_AS(metrics::citation_average(std::vector<std::uint32_t>{}),
                         "empty journal", std::invalid_argument);
}

TEST_CASE("one-paper volatility, exact and shorthand forms") {
    CHECK(metrics::volatility_exact(100, 3.0, 50) == 97.0 / 51.0);
    CHECK(metrics::volatility_exact(100, 3.0, 50000) == 97.0 / 50001.0);
    CHECK(metrics::volatility_exact(7, 7.0, 123) == 0.0);

    CHECK(metrics::volatility_approx(100, 3.0, 50) == 97.0 / 50.0);
    CHECK(metrics::volatility_approx(100, 3.0, 50000) ==
          Approx(metrics::volatility_exact(100, 3.0, 50000)).epsilon(1e-4));

    CHECK_THROWS_AS(metrics::volatility_exact(100, 3.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(metrics::volatility_exact(-1, 3.0, 50), std::invalid_argument);
    CHECK_THROWS_AS(metrics::volatility_approx(100, 3.0, 0), std::invalid_argument);
}

TEST_CASE("relative volatility") {
    CHECK(metrics::relative_volatility(100, 3.0, 50) == 97.0 / 153.0);
    CHECK(metrics::relative_volatility(100, 3.0, 500) == Approx(0.0645).epsilon(1e-3));
    CHECK(metrics::relative_volatility(3, 3.0, 50) == 0.0);
    CHECK_THROWS_WITH_AS(metrics::relative_volatility(100, 0.0, 50),
                         doctest::Contains("zero initial citation average"),
                         std::invalid_argument);
}

TEST_CASE("high-citation shorthand is a share of the prior total") {
    CHECK(metrics::relative_volatility_high_c(100, 150) == Approx(2.0 / 3.0));
    CHECK(metrics::relative_volatility_high_c(0, 150) == 0.0);
    CHECK(metrics::relative_volatility_high_c(2708, 3698) == Approx(0.73).epsilon(0.01));
    CHECK_THROWS_AS(metrics::relative_volatility_high_c(100, 0), std::invalid_argument);
}

TEST_CASE("benefit and penalty cases") {
    CHECK(metrics::benefit_case_high(100, 2000) == 0.05);
    CHECK(metrics::benefit_case_high(1000, 20000) == 0.05);
    CHECK(metrics::benefit_case_high(0, 17) == 0.0);
    CHECK(metrics::penalty_case_low(3.0, 50) == -0.06);
    CHECK(metrics::penalty_case_low(10.0, 500) == -0.02);
    CHECK(metrics::penalty_case_low(0.0, 17) == 0.0);
    CHECK_THROWS_AS(metrics::penalty_case_low(-1.0, 17), std::invalid_argument);
}

TEST_CASE("phi index") {
    const SubjectStats all("all", 2.92, 8.12);
    CHECK(metrics::phi_index(2.92, 171, all) == 0.0);
    CHECK(metrics::phi_index(21.63, 171, all) == Approx(30.13).epsilon(1e-3));
    const SubjectStats unit("u", 1.0, 4.0);
    CHECK(metrics::phi_index(5.0, 1, unit) == 1.0);
    CHECK_THROWS_AS(metrics::phi_index(1.0, 0, all), std::invalid_argument);
}

TEST_CASE("five-number summary and fences") {
    const auto s = metrics::median_and_summary(std::vector<std::uint32_t>{0, 0, 1, 2, 10});
    CHECK(s.min == 0.0);
    CHECK(s.q1 == 0.0);
    CHECK(s.median == 1.0);
    CHECK(s.q3 == 2.0);
    CHECK(s.max == 10.0);
    CHECK(s.iqr == 2.0);
    CHECK(s.lower_fence == -3.0);
    CHECK(s.upper_fence == 5.0);

    const auto single = metrics::median_and_summary(std::vector<std::uint32_t>{7});
    CHECK(single.min == 7.0);
    CHECK(single.q1 == 7.0);
    CHECK(single.median == 7.0);
    CHECK(single.q3 == 7.0);
    CHECK(single.max == 7.0);
    CHECK(single.iqr == 0.0);
    CHECK(single.lower_fence == 7.0);
    CHECK(single.upper_fence == 7.0);

    CHECK_THROWS_AS(metrics::median_and_summary(std::vector<std::uint32_t>{}),
                    std::invalid_argument);
}

TEST_CASE("quantiles interpolate between ranks") {
    const auto s = metrics::median_and_summary(std::vector<std::uint32_t>{1, 2, 3, 4});
    CHECK(s.q1 == 1.75);
    CHECK(s.median == 2.5);
    CHECK(s.q3 == 3.25);
}

TEST_CASE("median shrugs off an outlier the mean cannot") {
    const std::vector<std::uint32_t> skewed{0, 0, 0, 0, 100};
    const auto s = metrics::median_and_summary(skewed);
    CHECK(s.median == 0.0);
    CHECK(metrics::citation_average(skewed) == 20.0);

    // Growing the single outlier moves the mean but not the quartiles.
    const std::vector<std::uint32_t> grown{0, 0, 0, 0, 100000};
    const auto g = metrics::median_and_summary(grown);
    CHECK(g.median == s.median);
    CHECK(g.q1 == s.q1);
    CHECK(g.q3 == s.q3);
    CHECK(metrics::citation_average(grown) > metrics::citation_average(skewed));
}

TEST_CASE("volatility sign follows the citation-vs-average comparison") {
    std::mt19937_64 rng(20260818);
    std::uniform_int_distribution<std::int64_t> draw_c(0, 100000);
    std::uniform_int_distribution<std::int64_t> draw_n(1, 1000000);
    std::uniform_real_distribution<double> draw_f(0.0, 500.0);
    for (int i = 0; i < 2000; ++i) {
        const auto c = draw_c(rng);
        const auto n1 = draw_n(rng);
        const double f1 = draw_f(rng);
        const double d = metrics::volatility_exact(c, f1, n1);
        if (static_cast<double>(c) > f1) CHECK(d > 0.0);
        if (static_cast<double>(c) < f1) CHECK(d < 0.0);
        if (static_cast<double>(c) == f1) CHECK(d == 0.0);
    }
}

TEST_CASE("volatility grows with c and shrinks with journal size") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> draw_c(0, 100000);
    std::uniform_int_distribution<std::int64_t> draw_n(1, 1000000);
    std::uniform_real_distribution<double> draw_f(0.0, 500.0);
    for (int i = 0; i < 2000; ++i) {
        const auto c = draw_c(rng);
        const auto n1 = draw_n(rng);
        const double f1 = draw_f(rng);
        CHECK(metrics::volatility_exact(c + 1, f1, n1) > metrics::volatility_exact(c, f1, n1));
        if (static_cast<double>(c) != f1) {
            CHECK(std::fabs(metrics::volatility_exact(c, f1, n1 + 1)) <
                  std::fabs(metrics::volatility_exact(c, f1, n1)));
        }
    }
}

TEST_CASE("scaled volatility is independent of journal size") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> draw_c(0, 100000);
    std::uniform_int_distribution<std::int64_t> draw_n(1, 100000);
    std::uniform_real_distribution<double> draw_f(0.0, 500.0);
    for (int i = 0; i < 2000; ++i) {
        const auto c = draw_c(rng);
        const auto n1 = draw_n(rng);
        const double f1 = draw_f(rng);
        const double lhs = metrics::volatility_exact(c, f1, 10 * n1 + 9) *
                           (10.0 * static_cast<double>(n1) + 10.0);
        const double rhs =
            metrics::volatility_exact(c, f1, n1) * (static_cast<double>(n1) + 1.0);
        CHECK(close(lhs, rhs));
    }
}

TEST_CASE("relative volatility is the exact form divided by the prior average") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::int64_t> draw_c(0, 100000);
    std::uniform_int_distribution<std::int64_t> draw_n(1, 1000000);
    std::uniform_real_distribution<double> draw_f(0.001, 500.0);
    for (int i = 0; i < 2000; ++i) {
        const auto c = draw_c(rng);
        const auto n1 = draw_n(rng);
        const double f1 = draw_f(rng);
        CHECK(close(metrics::relative_volatility(c, f1, n1),
                    metrics::volatility_exact(c, f1, n1) / f1));
    }
}

TEST_CASE("shorthand error identities") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::int64_t> draw_c(0, 100000);
    std::uniform_int_distribution<std::int64_t> draw_n(1, 100000);
    std::uniform_real_distribution<double> draw_f(0.001, 500.0);
    for (int i = 0; i < 2000; ++i) {
        const auto c = draw_c(rng);
        const auto n1 = draw_n(rng);
        const double f1 = draw_f(rng);

        // The large-journal shorthand overshoots by exactly (c - f1)/(n1 (n1+1)).
        const double exact = metrics::volatility_exact(c, f1, n1);
        const double approx = metrics::volatility_approx(c, f1, n1);
        const double gap = (static_cast<double>(c) - f1) /
                           (static_cast<double>(n1) * (static_cast<double>(n1) + 1.0));
        CHECK(close(approx - exact, gap));
        // The bound is attained with equality, so allow rounding noise on it.
        CHECK(std::fabs(exact - approx) <= std::fabs(gap) * (1.0 + 1e-12) + 1e-15);

        // The shorthand splits exactly into its benefit and penalty halves.
        CHECK(close(approx,
                    metrics::benefit_case_high(c, n1) + metrics::penalty_case_low(f1, n1)));
        CHECK(metrics::benefit_case_high(c, n1) == metrics::volatility_approx(c, 0.0, n1));
        CHECK(metrics::penalty_case_low(f1, n1) == metrics::volatility_approx(0, f1, n1));
    }
}

TEST_CASE("citation-share shorthand overshoots by a known amount") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<std::int64_t> draw_c(0, 100000);
    std::uniform_int_distribution<std::int64_t> draw_n(1, 100000);
    std::uniform_int_distribution<std::int64_t> draw_total(1, 1000000);
    for (int i = 0; i < 2000; ++i) {
        const auto c = draw_c(rng);
        const auto n1 = draw_n(rng);
        const auto c1 = draw_total(rng);
        const double f1 = static_cast<double>(c1) / static_cast<double>(n1);
        const double shorthand = metrics::relative_volatility_high_c(c, c1);
        const double exact = metrics::relative_volatility(c, f1, n1);
        const double gap = (static_cast<double>(c) + static_cast<double>(c1)) /
                           (static_cast<double>(c1) * (static_cast<double>(n1) + 1.0));
        CHECK(shorthand >= exact);
        CHECK(close(shorthand - exact, gap, 1e-9));
    }
}

TEST_CASE("phi scales with the square root of journal size") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> draw_f(0.0, 100.0);
    std::uniform_int_distribution<std::size_t> draw_n(1, 10000);
    std::uniform_int_distribution<int> draw_k(2, 9);
    const SubjectStats s("all", 2.92, 8.12);
    for (int i = 0; i < 2000; ++i) {
        const double f = draw_f(rng);
        const std::size_t n = draw_n(rng);
        const int k = draw_k(rng);
        CHECK(close(metrics::phi_index(f, static_cast<std::size_t>(k) * n, s),
                    std::sqrt(static_cast<double>(k)) * metrics::phi_index(f, n, s)));
    }
}
