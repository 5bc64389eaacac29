#pragma once

#include <cstdint>
#include <span>

#include "citevol/model.hpp"

namespace citevol::metrics {

// Average citations per paper. Errors on an empty list.
double citation_average(std::span<const std::uint32_t> citations);

// Change in a journal's citation average when one paper with c citations
// joins n1 papers averaging f1: (c - f1) / (n1 + 1). Positive iff c > f1.
double volatility_exact(std::int64_t c, double f1, std::int64_t n1);

// Large-journal shorthand (c - f1) / n1. Differs from the exact value by
// exactly (c - f1) / (n1 (n1 + 1)).
double volatility_approx(std::int64_t c, double f1, std::int64_t n1);

// Volatility as a fraction of the prior average: (c - f1) / (f1 (n1 + 1)).
// Requires f1 > 0.
double relative_volatility(std::int64_t c, double f1, std::int64_t n1);

// Shorthand for c >> f1: the new paper's citations over the journal's prior
// citation total c1_total. Requires c1_total >= 1.
double relative_volatility_high_c(std::int64_t c, std::int64_t c1_total);

// Best-case gain when c dominates f1: c / n1.
double benefit_case_high(std::int64_t c, std::int64_t n1);

// Worst-case drop from an uncited paper: -f1 / n1.
double penalty_case_low(double f1, std::int64_t n1);

// Size-adjusted standardized citation average:
// (f - mu_s) * sqrt(n2y) / sigma_s. Requires n2y >= 1.
double phi_index(double f, std::size_t n2y, const SubjectStats& subject);

// Five-number summary with Tukey fences. Quantiles interpolate at rank
// h = (n - 1) p + 1 over the ascending sort.
struct FiveNumberSummary {
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
    double iqr = 0.0;
    double lower_fence = 0.0;
    double upper_fence = 0.0;

    bool operator==(const FiveNumberSummary&) const = default;
};

FiveNumberSummary median_and_summary(std::span<const std::uint32_t> citations);

}  // namespace citevol::metrics
