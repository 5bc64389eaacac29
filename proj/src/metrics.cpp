#include "citevol/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace citevol::metrics {

namespace {

void require_nonnegative_c(std::int64_t c) {
    if (c < 0) throw std::invalid_argument("citation count must be non-negative");
}

void require_positive_n(std::int64_t n1) {
    if (n1 < 1) throw std::invalid_argument("journal size must be at least 1");
}

// Rank h = (n - 1) p + 1 over the ascending sort, linearly interpolated.
double quantile(const std::vector<double>& ascending, double p) {
    const std::size_t n = ascending.size();
    if (n == 1) return ascending[0];
    const double h = (static_cast<double>(n) - 1.0) * p + 1.0;
    const auto lo = static_cast<std::size_t>(h);  // 1-based floor; h >= 1
    const double frac = h - static_cast<double>(lo);
    if (lo >= n) return ascending[n - 1];
    return ascending[lo - 1] + frac * (ascending[lo] - ascending[lo - 1]);
}

}  // namespace

double citation_average(std::span<const std::uint32_t> citations) {
    if (citations.empty()) throw std::invalid_argument("empty journal");
    std::uint64_t total = 0;
    for (std::uint32_t c : citations) total += c;
    return static_cast<double>(total) / static_cast<double>(citations.size());
}

double volatility_exact(std::int64_t c, double f1, std::int64_t n1) {
    require_nonnegative_c(c);
    require_positive_n(n1);
    return (static_cast<double>(c) - f1) / (static_cast<double>(n1) + 1.0);
}

double volatility_approx(std::int64_t c, double f1, std::int64_t n1) {
    require_nonnegative_c(c);
    require_positive_n(n1);
    return (static_cast<double>(c) - f1) / static_cast<double>(n1);
}

double relative_volatility(std::int64_t c, double f1, std::int64_t n1) {
    require_nonnegative_c(c);
    require_positive_n(n1);
    if (!(f1 > 0.0)) {
        throw std::invalid_argument(
            "relative volatility is undefined for a zero initial citation average");
    }
    return (static_cast<double>(c) - f1) / (f1 * (static_cast<double>(n1) + 1.0));
}

double relative_volatility_high_c(std::int64_t c, std::int64_t c1_total) {
    require_nonnegative_c(c);
    if (c1_total < 1) {
        throw std::invalid_argument("prior citation total must be at least 1");
    }
    return static_cast<double>(c) / static_cast<double>(c1_total);
}

double benefit_case_high(std::int64_t c, std::int64_t n1) {
    require_nonnegative_c(c);
    require_positive_n(n1);
    return static_cast<double>(c) / static_cast<double>(n1);
}

double penalty_case_low(double f1, std::int64_t n1) {
    require_positive_n(n1);
    if (f1 < 0.0) throw std::invalid_argument("citation average must be non-negative");
    return -f1 / static_cast<double>(n1);
}

double phi_index(double f, std::size_t n2y, const SubjectStats& subject) {
    if (n2y < 1) throw std::invalid_argument("journal size must be at least 1");
    // SubjectStats guarantees sigma > 0.
    return (f - subject.mu()) * std::sqrt(static_cast<double>(n2y)) / subject.sigma();
}

FiveNumberSummary median_and_summary(std::span<const std::uint32_t> citations) {
    if (citations.empty()) throw std::invalid_argument("empty journal");
    std::vector<double> sorted(citations.begin(), citations.end());
    std::sort(sorted.begin(), sorted.end());

    FiveNumberSummary s;
    s.min = sorted.front();
    s.q1 = quantile(sorted, 0.25);
    s.median = quantile(sorted, 0.5);
    s.q3 = quantile(sorted, 0.75);
    s.max = sorted.back();
    s.iqr = s.q3 - s.q1;
    s.lower_fence = s.q1 - 1.5 * s.iqr;
    s.upper_fence = s.q3 + 1.5 * s.iqr;
    return s;
}

}  // namespace citevol::metrics
