#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "citevol/corpus.hpp"
#include "citevol/model.hpp"

namespace citevol::report {

// Every table renders twice: a space-aligned UTF-8 text table and a JSON-lines
// stream carrying the same rows at full precision. Text rounding: averages and
// their deltas to 2 decimals, relative deltas to whole percent (the four-row
// ladder style keeps 3 decimals on averages and extends tiny deltas to two
// significant digits).
struct RenderedTable {
    std::string text;
    std::string jsonl;
};

// Ranked journals (rank, journal, delta_f, c_star, delta_f_r, f, f_star, n2y).
RenderedTable render_table(const std::vector<corpus::RankedReport>& rows);

// Threshold census (threshold, count, share of all journals).
RenderedTable render_table(const std::vector<corpus::ThresholdRow>& rows,
                           corpus::ThresholdMode mode);

// Tail census (threshold, papers cited at least that often).
RenderedTable render_table(const std::vector<std::pair<std::uint32_t, std::uint64_t>>& rows);

// One what-if row: journal of n1 papers and c1 citations receives one paper
// with c citations.
struct WhatIfRow {
    std::string journal_id;
    std::uint64_t n1 = 0;
    std::uint64_t c1 = 0;
    double f1 = 0.0;
    std::int64_t c = 0;
    double f2 = 0.0;
    double delta_f = 0.0;
    std::optional<double> delta_f_r;  // fraction; absent when f1 == 0

    bool operator==(const WhatIfRow&) const = default;
};

// Applies the same hypothetical paper to every profile, sorted by journal_id.
std::vector<WhatIfRow> what_if_rows(const std::map<std::string, JournalProfile>& profiles,
                                    std::int64_t c);

// What-if ladder (journal, n1, c1, f1, c, f2, delta_f, delta_f_r).
RenderedTable render_table(const std::vector<WhatIfRow>& rows);

enum class PlotAxes { delta_vs_size, reldelta_vs_size, delta_vs_f, cstar_vs_f };

struct PlotPoint {
    std::string journal_id;
    double x = 0.0;
    double y = 0.0;
    std::optional<double> bubble;

    bool operator==(const PlotPoint&) const = default;
};

// Straight line in log10 space: log10(y) = slope * log10(x) + intercept.
struct ReferenceLine {
    std::string label;
    double slope = 1.0;
    double intercept = 0.0;
    bool dashed = false;

    bool operator==(const ReferenceLine&) const = default;
};

struct PlotData {
    PlotAxes axes = PlotAxes::delta_vs_size;
    bool log_log = true;
    std::vector<PlotPoint> points;
    std::vector<ReferenceLine> reference_lines;
    std::uint64_t excluded = 0;  // points.size() + excluded == reports in

    bool operator==(const PlotData&) const = default;
};

// Builds plot-ready points from removal reports. All four axes are drawn
// log-log, so journals with f_star = 0, f = 0, or delta_f = 0 are excluded
// and counted. delta_vs_f carries bubble sizes (n2y) and the constant
// relative-volatility reference lines delta_f = r f / (1 + r) for r = 100%,
// 50%, 25%, plus the dashed delta_f = f boundary reached only at f_star = 0.
PlotData export_plot_data(const std::vector<VolatilityReport>& reports, PlotAxes axes);

// JSON-lines emission: one metadata line (axes, flags, exclusions, reference
// lines), then one line per point.
std::string plot_data_jsonl(const PlotData& data);

enum class VolatilityForm { exact, approx };

// grid[i][j] = volatility at (n1_values[i], c_values[j]) for a fixed f1,
// suitable for external contour rendering. Both ranges must be non-empty.
std::vector<std::vector<double>> surface_grid(double f1,
                                              const std::vector<std::int64_t>& n1_values,
                                              const std::vector<std::int64_t>& c_values,
                                              VolatilityForm form = VolatilityForm::exact);

struct ScatterOptions {
    std::string title;
    std::string x_label;
    std::string y_label;
};

// Deterministic SVG 1.1 scatter plot on a fixed 800x600 canvas. Identical
// input yields identical bytes. Errors on empty data.
std::string render_scatter_svg(const PlotData& data, const ScatterOptions& options = {});

}  // namespace citevol::report
