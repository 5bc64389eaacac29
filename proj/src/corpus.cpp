#include "citevol/corpus.hpp"

#include <algorithm>
#include <cmath>

namespace citevol::corpus {

VolatilityReport remove_top(const JournalProfile& profile) {
    const auto& counts = profile.citations_sorted();
    const std::size_t n2y = profile.n2y();

    VolatilityReport report;
    report.journal_id = profile.journal_id();
    report.n2y = n2y;
    report.c_star = counts.front();
    report.f = profile.citation_average();
    if (n2y == 1) {
        report.f_star = 0.0;  // initial state has no papers
    } else {
        const std::uint64_t rest = profile.total_citations() - report.c_star;
        report.f_star = static_cast<double>(rest) / static_cast<double>(n2y - 1);
    }
    // Identical to the one-paper volatility at (c_star, f_star, n2y - 1):
    // adding the top paper back to the initial state is the removal, reversed.
    report.delta_f = (static_cast<double>(report.c_star) - report.f_star) /
                     static_cast<double>(n2y);
    if (report.f_star > 0.0) report.delta_f_r = report.delta_f / report.f_star;
    report.only_cited_flag = report.f_star == 0.0;
    report.zero_cited_flag = report.f == 0.0;
    return report;
}

TopKRemoval remove_top_k(const JournalProfile& profile, std::size_t k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (k >= profile.n2y()) {
        throw std::invalid_argument("cannot remove all papers (k >= n2y)");
    }
    const auto& counts = profile.citations_sorted();
    std::uint64_t top = 0;
    for (std::size_t i = 0; i < k; ++i) top += counts[i];

    TopKRemoval result;
    result.journal_id = profile.journal_id();
    result.k = k;
    result.f = profile.citation_average();
    result.f_minus_k = static_cast<double>(profile.total_citations() - top) /
                       static_cast<double>(profile.n2y() - k);
    if (result.f_minus_k > 0.0) {
        result.relative_boost = (result.f - result.f_minus_k) / result.f_minus_k;
    }
    return result;
}

std::vector<ThresholdRow> threshold_table(const std::vector<VolatilityReport>& reports,
                                          const std::vector<double>& thresholds,
                                          ThresholdMode mode) {
    std::vector<ThresholdRow> rows;
    rows.reserve(thresholds.size());
    const double total = static_cast<double>(reports.size());
    for (double t : thresholds) {
        std::uint64_t count = 0;
        for (const auto& report : reports) {
            if (mode == ThresholdMode::relative) {
                if (report.delta_f_r && *report.delta_f_r > t) ++count;
            } else if (report.delta_f > t) {
                ++count;
            }
        }
        rows.push_back({t, count, total > 0.0 ? static_cast<double>(count) / total : 0.0});
    }
    return rows;
}

std::vector<RankedReport> rank_by_volatility(const std::vector<VolatilityReport>& reports,
                                             RankKey key, std::size_t top_n) {
    std::vector<const VolatilityReport*> eligible;
    eligible.reserve(reports.size());
    for (const auto& report : reports) {
        if (key == RankKey::relative && !report.delta_f_r) continue;
        eligible.push_back(&report);
    }
    const auto value = [key](const VolatilityReport* r) {
        return key == RankKey::absolute ? r->delta_f : *r->delta_f_r;
    };
    std::sort(eligible.begin(), eligible.end(),
              [&](const VolatilityReport* a, const VolatilityReport* b) {
                  if (value(a) != value(b)) return value(a) > value(b);
                  return a->journal_id < b->journal_id;
              });
    if (eligible.size() > top_n) eligible.resize(top_n);

    std::vector<RankedReport> ranked;
    ranked.reserve(eligible.size());
    for (std::size_t i = 0; i < eligible.size(); ++i) {
        ranked.push_back({i + 1, *eligible[i]});
    }
    return ranked;
}

const std::vector<std::uint32_t>& tail_thresholds() {
    static const std::vector<std::uint32_t> thresholds{
        0,   1,   2,   5,   10,  20,   30,   40,   50,   100,
        200, 300, 400, 500, 1000, 1500, 2000, 2500, 3000, 4000};
    return thresholds;
}

CorpusStats global_stats(const std::map<std::string, JournalProfile>& profiles) {
    if (profiles.empty()) throw DataError("empty corpus");
    const auto& thresholds = tail_thresholds();

    CorpusStats stats;
    stats.journal_count = profiles.size();
    std::uint64_t total = 0;
    unsigned __int128 total_sq = 0;
    std::vector<std::uint64_t> buckets(thresholds.size(), 0);
    for (const auto& [id, profile] : profiles) {
        stats.paper_count += profile.n2y();
        total += profile.total_citations();
        for (std::uint32_t c : profile.citations_sorted()) {
            total_sq += static_cast<unsigned __int128>(c) * c;
            // Largest threshold not exceeding c; threshold 0 catches every paper.
            const auto it = std::upper_bound(thresholds.begin(), thresholds.end(), c);
            ++buckets[static_cast<std::size_t>(it - thresholds.begin()) - 1];
        }
    }
    const double n = static_cast<double>(stats.paper_count);
    stats.mu = static_cast<double>(total) / n;
    const double mean_sq = static_cast<double>(total_sq) / n;
    stats.sigma = std::sqrt(std::max(0.0, mean_sq - stats.mu * stats.mu));

    std::uint64_t cumulative = 0;
    std::vector<std::uint64_t> at_least(thresholds.size(), 0);
    for (std::size_t i = thresholds.size(); i-- > 0;) {
        cumulative += buckets[i];
        at_least[i] = cumulative;
    }
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
        stats.tail_counts.emplace_back(thresholds[i], at_least[i]);
    }
    return stats;
}

TailFit tail_exponent(const std::map<std::string, JournalProfile>& profiles,
                      std::uint32_t cutoff) {
    if (cutoff < 1) throw std::invalid_argument("cutoff must be at least 1");
    const double scale = static_cast<double>(cutoff) - 0.5;
    double log_sum = 0.0;
    std::size_t n = 0;
    for (const auto& [id, profile] : profiles) {
        for (std::uint32_t c : profile.citations_sorted()) {
            if (c < cutoff) break;  // counts are sorted non-increasing
            log_sum += std::log(static_cast<double>(c) / scale);
            ++n;
        }
    }
    if (n < 10) {
        throw DataError("power-law fit needs at least 10 tail samples, found " +
                        std::to_string(n));
    }
    return {1.0 + static_cast<double>(n) / log_sum, n};
}

std::vector<BandFit> parallel_band_check(const std::vector<VolatilityReport>& reports,
                                         const std::vector<std::uint32_t>& c_star_values,
                                         double f_star_cap) {
    std::vector<BandFit> fits;
    fits.reserve(c_star_values.size());
    for (std::uint32_t c_star : c_star_values) {
        std::vector<double> xs;
        std::vector<double> ys;
        for (const auto& report : reports) {
            if (report.c_star != c_star || report.f_star > f_star_cap) continue;
            if (!(report.delta_f > 0.0)) continue;  // log axis
            xs.push_back(std::log(static_cast<double>(report.n2y)));
            ys.push_back(std::log(report.delta_f));
        }
        BandFit fit;
        fit.c_star = c_star;
        fit.group_size = xs.size();
        if (xs.size() < 3) {
            fit.skipped = true;
            fit.note = "needs at least 3 reports under the cap, found " +
                       std::to_string(xs.size());
            fits.push_back(std::move(fit));
            continue;
        }
        double mean_x = 0.0;
        double mean_y = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            mean_x += xs[i];
            mean_y += ys[i];
        }
        mean_x /= static_cast<double>(xs.size());
        mean_y /= static_cast<double>(xs.size());
        double sxx = 0.0;
        double sxy = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
            sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
        }
        if (sxx <= 0.0) {
            fit.skipped = true;
            fit.note = "all group members share one journal size";
            fits.push_back(std::move(fit));
            continue;
        }
        fit.slope = sxy / sxx;
        fits.push_back(std::move(fit));
    }
    return fits;
}

}  // namespace citevol::corpus
