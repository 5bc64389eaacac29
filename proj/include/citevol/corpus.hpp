#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "citevol/model.hpp"

namespace citevol::corpus {

// Removes the journal's top-cited paper and reports the drop in its citation
// average. For n2y == 1 the final state is empty, f_star = 0, delta_f = f.
VolatilityReport remove_top(const JournalProfile& profile);

// Outcome of removing the k top-cited papers. relative_boost =
// (f - f_minus_k) / f_minus_k, absent when f_minus_k == 0.
struct TopKRemoval {
    std::string journal_id;
    std::size_t k = 0;
    double f = 0.0;
    double f_minus_k = 0.0;
    std::optional<double> relative_boost;

    bool operator==(const TopKRemoval&) const = default;
};

// Requires 1 <= k < n2y; removing every paper is an error.
TopKRemoval remove_top_k(const JournalProfile& profile, std::size_t k);

enum class ThresholdMode { absolute, relative };

// One row of a threshold census. fraction = count / total input reports.
struct ThresholdRow {
    double threshold = 0.0;
    std::uint64_t count = 0;
    double fraction = 0.0;

    bool operator==(const ThresholdRow&) const = default;
};

// Counts reports whose delta_f (absolute mode) or delta_f_r (relative mode)
// strictly exceeds each threshold. Relative mode skips reports without
// delta_f_r; the fraction denominator is always the full report count.
std::vector<ThresholdRow> threshold_table(const std::vector<VolatilityReport>& reports,
                                          const std::vector<double>& thresholds,
                                          ThresholdMode mode);

enum class RankKey { absolute, relative };

struct RankedReport {
    std::size_t rank = 0;
    VolatilityReport report;

    bool operator==(const RankedReport&) const = default;
};

// Top-n reports by delta_f or delta_f_r, descending, ties broken by
// journal_id ascending. Relative key skips reports without delta_f_r.
std::vector<RankedReport> rank_by_volatility(const std::vector<VolatilityReport>& reports,
                                             RankKey key, std::size_t top_n);

// Thresholds used for CorpusStats tail counts.
const std::vector<std::uint32_t>& tail_thresholds();

// Corpus-wide mean, population standard deviation, and tail counts over all
// papers. Errors on an empty corpus.
CorpusStats global_stats(const std::map<std::string, JournalProfile>& profiles);

struct TailFit {
    double exponent = 0.0;
    std::size_t tail_count = 0;

    bool operator==(const TailFit&) const = default;
};

// Maximum-likelihood power-law exponent over counts >= cutoff, with the
// half-step correction for integer counts:
//   alpha = 1 + n / sum(ln(c_i / (cutoff - 0.5))).
// Requires at least 10 tail samples; the error names the count found.
TailFit tail_exponent(const std::map<std::string, JournalProfile>& profiles,
                      std::uint32_t cutoff);

// Least-squares slope of log delta_f against log n2y within one c_star group.
struct BandFit {
    std::uint32_t c_star = 0;
    std::size_t group_size = 0;
    double slope = 0.0;
    bool skipped = false;
    std::string note;

    bool operator==(const BandFit&) const = default;
};

// For each requested c_star, fits the log-log slope over reports with that
// c_star, f_star <= f_star_cap, and delta_f > 0. Groups with fewer than 3
// usable reports (or no size spread) are skipped with a note instead of
// fitted. Since delta_f = (c_star - f_star)/n2y, a tightly capped group has
// slope near -1.
std::vector<BandFit> parallel_band_check(const std::vector<VolatilityReport>& reports,
                                         const std::vector<std::uint32_t>& c_star_values,
                                         double f_star_cap);

}  // namespace citevol::corpus
