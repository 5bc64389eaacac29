#include "citevol/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "citevol/metrics.hpp"

namespace citevol::report {

namespace {

std::string fmt(const char* format, double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, value);
    return buf;
}

std::string fmt2(double v) { return fmt("%.2f", v); }

// Whole-percent rendering of a fraction (0.394 -> "39%").
std::string fmt_percent_whole(double fraction) { return fmt("%.0f", fraction * 100.0) + "%"; }

// Threshold-census share: one decimal, two below 0.1% so small shares stay visible.
std::string fmt_share(double fraction) {
    const double pct = fraction * 100.0;
    return fmt(pct >= 0.1 ? "%.1f" : "%.2f", pct) + "%";
}

// Ladder-style delta: three decimals, extended (up to six) until the value
// shows at least two significant digits, so tiny deltas do not flatten to 0.00x.
std::string fmt_delta(double v) {
    if (v == 0.0) return "0";
    for (int prec = 3;; ++prec) {
        std::string s = fmt(("%." + std::to_string(prec) + "f").c_str(), v);
        int significant = 0;
        bool leading = true;
        for (char ch : s) {
            if (ch < '0' || ch > '9') continue;
            if (leading && ch == '0') continue;
            leading = false;
            ++significant;
        }
        if (significant >= 2 || prec == 6) return s;
    }
}

// Ladder-style relative delta in percent: one decimal from 10% up, else two.
std::string fmt_ladder_percent(double fraction) {
    const double pct = fraction * 100.0;
    return fmt(pct >= 10.0 ? "%.1f" : "%.2f", pct) + "%";
}

enum class Align { left, right };

std::string layout_text(const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows,
                        const std::vector<Align>& align) {
    std::vector<std::size_t> widths(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) widths[i] = header[i].size();
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            widths[i] = std::max(widths[i], row[i].size());
        }
    }
    std::string out;
    const auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const std::size_t pad = widths[i] - cells[i].size();
            if (i > 0) out += "  ";
            if (align[i] == Align::right) out.append(pad, ' ');
            out += cells[i];
            if (align[i] == Align::left && i + 1 < cells.size()) out.append(pad, ' ');
        }
        out += '\n';
    };
    emit(header);
    for (const auto& row : rows) emit(row);
    return out;
}

std::string jsonl_of(const std::vector<nlohmann::json>& rows) {
    std::string out;
    for (const auto& row : rows) {
        out += row.dump();
        out += '\n';
    }
    return out;
}

const char* axes_name(PlotAxes axes) {
    switch (axes) {
        case PlotAxes::delta_vs_size: return "delta_vs_size";
        case PlotAxes::reldelta_vs_size: return "reldelta_vs_size";
        case PlotAxes::delta_vs_f: return "delta_vs_f";
        case PlotAxes::cstar_vs_f: return "cstar_vs_f";
    }
    return "unknown";
}

std::string xml_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

}  // namespace

RenderedTable render_table(const std::vector<corpus::RankedReport>& rows) {
    if (rows.empty()) throw std::invalid_argument("no rows to render");
    std::vector<std::vector<std::string>> cells;
    std::vector<nlohmann::json> json_rows;
    for (const auto& [rank, r] : rows) {
        cells.push_back({std::to_string(rank), r.journal_id, fmt2(r.delta_f),
                         std::to_string(r.c_star),
                         r.delta_f_r ? fmt_percent_whole(*r.delta_f_r) : "-", fmt2(r.f),
                         fmt2(r.f_star), std::to_string(r.n2y)});
        nlohmann::json j{{"rank", rank},          {"journal_id", r.journal_id},
                         {"delta_f", r.delta_f},  {"c_star", r.c_star},
                         {"delta_f_r", nullptr},  {"f", r.f},
                         {"f_star", r.f_star},    {"n2y", r.n2y}};
        if (r.delta_f_r) j["delta_f_r"] = *r.delta_f_r;
        json_rows.push_back(std::move(j));
    }
    const std::vector<std::string> header{"rank", "journal", "Δf(c*)", "c*",
                                          "Δf_r(c*)", "f", "f*", "N2Y"};
    const std::vector<Align> align{Align::right, Align::left,  Align::right, Align::right,
                                   Align::right, Align::right, Align::right, Align::right};
    return {layout_text(header, cells, align), jsonl_of(json_rows)};
}

RenderedTable render_table(const std::vector<corpus::ThresholdRow>& rows,
                           corpus::ThresholdMode mode) {
    if (rows.empty()) throw std::invalid_argument("no rows to render");
    const bool relative = mode == corpus::ThresholdMode::relative;
    std::vector<std::vector<std::string>> cells;
    std::vector<nlohmann::json> json_rows;
    for (const auto& row : rows) {
        cells.push_back({relative ? fmt("%g", row.threshold * 100.0) + "%"
                                  : fmt("%g", row.threshold),
                         std::to_string(row.count), fmt_share(row.fraction)});
        json_rows.push_back({{"threshold", row.threshold},
                             {"count", row.count},
                             {"fraction", row.fraction}});
    }
    const std::vector<std::string> header{relative ? "Δf_r(c*) >" : "Δf(c*) >", "journals",
                                          "% all journals"};
    const std::vector<Align> align{Align::right, Align::right, Align::right};
    return {layout_text(header, cells, align), jsonl_of(json_rows)};
}

RenderedTable render_table(const std::vector<std::pair<std::uint32_t, std::uint64_t>>& rows) {
    if (rows.empty()) throw std::invalid_argument("no rows to render");
    std::vector<std::vector<std::string>> cells;
    std::vector<nlohmann::json> json_rows;
    for (const auto& [threshold, count] : rows) {
        cells.push_back({std::to_string(threshold), std::to_string(count)});
        json_rows.push_back({{"threshold", threshold}, {"count", count}});
    }
    const std::vector<std::string> header{"c_t", "papers with c ≥ c_t"};
    const std::vector<Align> align{Align::right, Align::right};
    return {layout_text(header, cells, align), jsonl_of(json_rows)};
}

std::vector<WhatIfRow> what_if_rows(const std::map<std::string, JournalProfile>& profiles,
                                    std::int64_t c) {
    std::vector<WhatIfRow> rows;
    rows.reserve(profiles.size());
    for (const auto& [id, profile] : profiles) {
        WhatIfRow row;
        row.journal_id = id;
        row.n1 = profile.n2y();
        row.c1 = profile.total_citations();
        row.f1 = profile.citation_average();
        row.c = c;
        row.delta_f = metrics::volatility_exact(c, row.f1, static_cast<std::int64_t>(row.n1));
        row.f2 = row.f1 + row.delta_f;
        if (row.f1 > 0.0) {
            row.delta_f_r =
                metrics::relative_volatility(c, row.f1, static_cast<std::int64_t>(row.n1));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

RenderedTable render_table(const std::vector<WhatIfRow>& rows) {
    if (rows.empty()) throw std::invalid_argument("no rows to render");
    std::vector<std::vector<std::string>> cells;
    std::vector<nlohmann::json> json_rows;
    for (const auto& row : rows) {
        cells.push_back({row.journal_id, std::to_string(row.n1), std::to_string(row.c1),
                         fmt("%g", row.f1), std::to_string(row.c), fmt_delta(row.f2),
                         fmt_delta(row.delta_f),
                         row.delta_f_r ? fmt_ladder_percent(*row.delta_f_r) : "-"});
        nlohmann::json j{{"journal_id", row.journal_id},
                         {"n1", row.n1},
                         {"c1", row.c1},
                         {"f1", row.f1},
                         {"c", row.c},
                         {"f2", row.f2},
                         {"delta_f", row.delta_f},
                         {"delta_f_r", nullptr}};
        if (row.delta_f_r) j["delta_f_r"] = *row.delta_f_r;
        json_rows.push_back(std::move(j));
    }
    const std::vector<std::string> header{"journal", "N1", "C1", "f1",
                                          "c", "f2", "Δf(c)", "Δf_r(c)"};
    const std::vector<Align> align{Align::left,  Align::right, Align::right, Align::right,
                                   Align::right, Align::right, Align::right, Align::right};
    return {layout_text(header, cells, align), jsonl_of(json_rows)};
}

PlotData export_plot_data(const std::vector<VolatilityReport>& reports, PlotAxes axes) {
    PlotData data;
    data.axes = axes;
    data.log_log = true;
    for (const auto& report : reports) {
        // Log axes: journals with an empty final or initial state, or no
        // movement at all, have no finite log-log position.
        if (report.f_star == 0.0 || report.f == 0.0 || !(report.delta_f > 0.0)) {
            ++data.excluded;
            continue;
        }
        PlotPoint point;
        point.journal_id = report.journal_id;
        switch (axes) {
            case PlotAxes::delta_vs_size:
                point.x = static_cast<double>(report.n2y);
                point.y = report.delta_f;
                break;
            case PlotAxes::reldelta_vs_size:
                point.x = static_cast<double>(report.n2y);
                point.y = *report.delta_f_r;
                break;
            case PlotAxes::delta_vs_f:
                point.x = report.f;
                point.y = report.delta_f;
                point.bubble = static_cast<double>(report.n2y);
                break;
            case PlotAxes::cstar_vs_f:
                point.x = report.f;
                point.y = static_cast<double>(report.c_star);
                break;
        }
        data.points.push_back(std::move(point));
    }
    if (axes == PlotAxes::delta_vs_f) {
        // Constant relative volatility delta_f = r f / (1 + r): unit slope in
        // log-log with intercept log10(r / (1 + r)).
        for (double r : {1.0, 0.5, 0.25}) {
            data.reference_lines.push_back({fmt("%g", r * 100.0) + "%", 1.0,
                                            std::log10(r / (1.0 + r)), false});
        }
        // delta_f = f: the boundary attained only when f_star = 0, which no
        // plotted point can reach.
        data.reference_lines.push_back({"f* = 0", 1.0, 0.0, true});
    }
    return data;
}

std::string plot_data_jsonl(const PlotData& data) {
    nlohmann::json lines = nlohmann::json::array();
    for (const auto& line : data.reference_lines) {
        lines.push_back({{"label", line.label},
                         {"slope", line.slope},
                         {"intercept", line.intercept},
                         {"dashed", line.dashed}});
    }
    nlohmann::json meta{{"axes", axes_name(data.axes)},
                        {"log_log", data.log_log},
                        {"points", data.points.size()},
                        {"excluded", data.excluded},
                        {"reference_lines", lines}};
    std::string out = meta.dump() + "\n";
    for (const auto& point : data.points) {
        nlohmann::json j{{"journal_id", point.journal_id}, {"x", point.x}, {"y", point.y}};
        if (point.bubble) j["bubble"] = *point.bubble;
        out += j.dump() + "\n";
    }
    return out;
}

std::vector<std::vector<double>> surface_grid(double f1,
                                              const std::vector<std::int64_t>& n1_values,
                                              const std::vector<std::int64_t>& c_values,
                                              VolatilityForm form) {
    if (n1_values.empty() || c_values.empty()) {
        throw std::invalid_argument("surface grid needs non-empty ranges");
    }
    std::vector<std::vector<double>> grid(n1_values.size(),
                                          std::vector<double>(c_values.size()));
    for (std::size_t i = 0; i < n1_values.size(); ++i) {
        for (std::size_t j = 0; j < c_values.size(); ++j) {
            grid[i][j] = form == VolatilityForm::exact
                             ? metrics::volatility_exact(c_values[j], f1, n1_values[i])
                             : metrics::volatility_approx(c_values[j], f1, n1_values[i]);
        }
    }
    return grid;
}

std::string render_scatter_svg(const PlotData& data, const ScatterOptions& options) {
    if (data.points.empty()) throw std::invalid_argument("no points to draw");

    constexpr double kLeft = 70.0;
    constexpr double kRight = 780.0;
    constexpr double kTop = 40.0;
    constexpr double kBottom = 550.0;

    const auto view = [&](double v) { return data.log_log ? std::log10(v) : v; };

    double x_lo = view(data.points[0].x);
    double x_hi = x_lo;
    double y_lo = view(data.points[0].y);
    double y_hi = y_lo;
    double bubble_max = 0.0;
    for (const auto& p : data.points) {
        x_lo = std::min(x_lo, view(p.x));
        x_hi = std::max(x_hi, view(p.x));
        y_lo = std::min(y_lo, view(p.y));
        y_hi = std::max(y_hi, view(p.y));
        if (p.bubble) bubble_max = std::max(bubble_max, *p.bubble);
    }
    const auto pad = [](double& lo, double& hi) {
        const double span = hi - lo;
        if (span <= 0.0) {
            lo -= 0.5;
            hi += 0.5;
        } else {
            lo -= 0.05 * span;
            hi += 0.05 * span;
        }
    };
    pad(x_lo, x_hi);
    pad(y_lo, y_hi);

    const auto sx = [&](double v) {
        return kLeft + (view(v) - x_lo) / (x_hi - x_lo) * (kRight - kLeft);
    };
    const auto sy = [&](double v) {
        return kBottom - (view(v) - y_lo) / (y_hi - y_lo) * (kBottom - kTop);
    };
    const auto coord = [](double v) { return fmt("%.2f", v); };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" "
           "height=\"600\" viewBox=\"0 0 800 600\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"#ffffff\"/>\n";

    // Gridlines with labels: decades on log axes, five even steps otherwise.
    const auto tick_values = [&](double lo, double hi) {
        std::vector<double> ticks;
        if (data.log_log) {
            for (double d = std::ceil(lo); d <= std::floor(hi) + 1e-9; d += 1.0) {
                ticks.push_back(d);
            }
        } else {
            for (int i = 0; i <= 5; ++i) ticks.push_back(lo + (hi - lo) * i / 5.0);
        }
        return ticks;
    };
    for (double t : tick_values(x_lo, x_hi)) {
        const double px = kLeft + (t - x_lo) / (x_hi - x_lo) * (kRight - kLeft);
        svg += "<line x1=\"" + coord(px) + "\" y1=\"" + coord(kTop) + "\" x2=\"" + coord(px) +
               "\" y2=\"" + coord(kBottom) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        const double label = data.log_log ? std::pow(10.0, t) : t;
        svg += "<text x=\"" + coord(px) + "\" y=\"" + coord(kBottom + 18.0) +
               "\" font-size=\"12\" text-anchor=\"middle\" fill=\"#333333\">" +
               xml_escape(fmt("%g", label)) + "</text>\n";
    }
    for (double t : tick_values(y_lo, y_hi)) {
        const double py = kBottom - (t - y_lo) / (y_hi - y_lo) * (kBottom - kTop);
        svg += "<line x1=\"" + coord(kLeft) + "\" y1=\"" + coord(py) + "\" x2=\"" +
               coord(kRight) + "\" y2=\"" + coord(py) +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        const double label = data.log_log ? std::pow(10.0, t) : t;
        svg += "<text x=\"" + coord(kLeft - 8.0) + "\" y=\"" + coord(py + 4.0) +
               "\" font-size=\"12\" text-anchor=\"end\" fill=\"#333333\">" +
               xml_escape(fmt("%g", label)) + "</text>\n";
    }
    svg += "<rect x=\"" + coord(kLeft) + "\" y=\"" + coord(kTop) + "\" width=\"" +
           coord(kRight - kLeft) + "\" height=\"" + coord(kBottom - kTop) +
           "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

    // Reference lines live in log10 space; clip each segment to the view box.
    if (data.log_log) {
        for (const auto& line : data.reference_lines) {
            double ax = x_lo;
            double ay = line.slope * ax + line.intercept;
            double bx = x_hi;
            double by = line.slope * bx + line.intercept;
            const auto clip = [&](double& px, double& py, double other_x, double other_y) {
                if (py < y_lo || py > y_hi) {
                    const double target = py < y_lo ? y_lo : y_hi;
                    const double t = (target - other_y) / (py - other_y);
                    px = other_x + t * (px - other_x);
                    py = target;
                }
            };
            if ((ay < y_lo && by < y_lo) || (ay > y_hi && by > y_hi)) continue;
            clip(ax, ay, bx, by);
            clip(bx, by, ax, ay);
            const double x1 = kLeft + (ax - x_lo) / (x_hi - x_lo) * (kRight - kLeft);
            const double y1 = kBottom - (ay - y_lo) / (y_hi - y_lo) * (kBottom - kTop);
            const double x2 = kLeft + (bx - x_lo) / (x_hi - x_lo) * (kRight - kLeft);
            const double y2 = kBottom - (by - y_lo) / (y_hi - y_lo) * (kBottom - kTop);
            svg += "<line x1=\"" + coord(x1) + "\" y1=\"" + coord(y1) + "\" x2=\"" + coord(x2) +
                   "\" y2=\"" + coord(y2) + "\" stroke=\"#888888\" stroke-width=\"1\"" +
                   (line.dashed ? " stroke-dasharray=\"6 4\"" : "") + "/>\n";
            svg += "<text x=\"" + coord(x2 - 4.0) + "\" y=\"" + coord(y2 - 6.0) +
                   "\" font-size=\"11\" text-anchor=\"end\" fill=\"#888888\">" +
                   xml_escape(line.label) + "</text>\n";
        }
    }

    for (const auto& p : data.points) {
        double radius = 3.0;
        if (p.bubble && bubble_max > 0.0) {
            radius = 2.0 + 8.0 * std::sqrt(*p.bubble / bubble_max);
        }
        svg += "<circle cx=\"" + coord(sx(p.x)) + "\" cy=\"" + coord(sy(p.y)) + "\" r=\"" +
               coord(radius) + "\" fill=\"#2266aa\" fill-opacity=\"0.6\"/>\n";
    }

    if (!options.title.empty()) {
        svg += "<text x=\"400\" y=\"24\" font-size=\"16\" text-anchor=\"middle\" "
               "fill=\"#111111\">" +
               xml_escape(options.title) + "</text>\n";
    }
    if (!options.x_label.empty()) {
        svg += "<text x=\"425\" y=\"588\" font-size=\"13\" text-anchor=\"middle\" "
               "fill=\"#111111\">" +
               xml_escape(options.x_label) + "</text>\n";
    }
    if (!options.y_label.empty()) {
        svg += "<text x=\"16\" y=\"295\" font-size=\"13\" text-anchor=\"middle\" "
               "fill=\"#111111\" transform=\"rotate(-90 16 295)\">" +
               xml_escape(options.y_label) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace citevol::report
