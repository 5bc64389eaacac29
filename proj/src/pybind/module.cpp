#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "citevol/corpus.hpp"
#include "citevol/ingest.hpp"
#include "citevol/metrics.hpp"
#include "citevol/model.hpp"
#include "citevol/report.hpp"
#include "citevol/synth.hpp"

namespace py = pybind11;
using namespace citevol;

namespace {

ingest::Format format_of(const std::string& name) {
    if (name == "delimited") return ingest::Format::delimited;
    if (name == "jsonl") return ingest::Format::jsonl;
    throw std::invalid_argument("unknown format: " + name);
}

corpus::ThresholdMode mode_of(const std::string& name) {
    if (name == "absolute") return corpus::ThresholdMode::absolute;
    if (name == "relative") return corpus::ThresholdMode::relative;
    throw std::invalid_argument("unknown threshold mode: " + name);
}

corpus::RankKey key_of(const std::string& name) {
    if (name == "absolute") return corpus::RankKey::absolute;
    if (name == "relative") return corpus::RankKey::relative;
    throw std::invalid_argument("unknown rank key: " + name);
}

report::PlotAxes axes_of(const std::string& name) {
    if (name == "delta_vs_size") return report::PlotAxes::delta_vs_size;
    if (name == "reldelta_vs_size") return report::PlotAxes::reldelta_vs_size;
    if (name == "delta_vs_f") return report::PlotAxes::delta_vs_f;
    if (name == "cstar_vs_f") return report::PlotAxes::cstar_vs_f;
    throw std::invalid_argument("unknown plot axes: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Citation-average volatility analytics";

    py::register_exception<DataError>(m, "DataError", PyExc_ValueError);

    py::class_<PaperRecord>(m, "PaperRecord")
        .def(py::init<std::string, std::string, std::uint32_t>(), py::arg("journal_id"),
             py::arg("paper_id"), py::arg("citations"))
        .def_readwrite("journal_id", &PaperRecord::journal_id)
        .def_readwrite("paper_id", &PaperRecord::paper_id)
        .def_readwrite("citations", &PaperRecord::citations)
        .def("__eq__", [](const PaperRecord& a, const PaperRecord& b) { return a == b; })
        .def("__repr__", [](const PaperRecord& r) {
            return "PaperRecord(" + r.journal_id + ", " + r.paper_id + ", " +
                   std::to_string(r.citations) + ")";
        });

    py::class_<JournalProfile>(m, "JournalProfile")
        .def(py::init<std::string, std::vector<std::uint32_t>>(), py::arg("journal_id"),
             py::arg("citations"))
        .def_property_readonly("journal_id", &JournalProfile::journal_id)
        .def_property_readonly("n2y", &JournalProfile::n2y)
        .def_property_readonly("total_citations", &JournalProfile::total_citations)
        .def_property_readonly("citation_average", &JournalProfile::citation_average)
        .def_property_readonly("citations_sorted", &JournalProfile::citations_sorted)
        .def("__eq__", [](const JournalProfile& a, const JournalProfile& b) { return a == b; })
        .def("__repr__", [](const JournalProfile& p) {
            return "JournalProfile(" + p.journal_id() + ", " + std::to_string(p.n2y()) +
                   " papers)";
        });

    py::class_<VolatilityReport>(m, "VolatilityReport")
        .def_readonly("journal_id", &VolatilityReport::journal_id)
        .def_readonly("c_star", &VolatilityReport::c_star)
        .def_readonly("f", &VolatilityReport::f)
        .def_readonly("f_star", &VolatilityReport::f_star)
        .def_readonly("delta_f", &VolatilityReport::delta_f)
        .def_readonly("delta_f_r", &VolatilityReport::delta_f_r)
        .def_readonly("n2y", &VolatilityReport::n2y)
        .def_readonly("only_cited_flag", &VolatilityReport::only_cited_flag)
        .def_readonly("zero_cited_flag", &VolatilityReport::zero_cited_flag)
        .def("__eq__",
             [](const VolatilityReport& a, const VolatilityReport& b) { return a == b; });

    py::class_<CorpusStats>(m, "CorpusStats")
        .def_readonly("paper_count", &CorpusStats::paper_count)
        .def_readonly("journal_count", &CorpusStats::journal_count)
        .def_readonly("mu", &CorpusStats::mu)
        .def_readonly("sigma", &CorpusStats::sigma)
        .def_readonly("tail_counts", &CorpusStats::tail_counts);

    py::class_<SubjectStats>(m, "SubjectStats")
        .def(py::init<std::string, double, double>(), py::arg("subject_id"), py::arg("mu"),
             py::arg("sigma"))
        .def_property_readonly("subject_id", &SubjectStats::subject_id)
        .def_property_readonly("mu", &SubjectStats::mu)
        .def_property_readonly("sigma", &SubjectStats::sigma);

    py::class_<LowCitationMixture>(m, "LowCitationMixture")
        .def(py::init([](double geometric_ratio, double tail_fraction) {
                 return LowCitationMixture{geometric_ratio, tail_fraction};
             }),
             py::arg("geometric_ratio") = LowCitationMixture{}.geometric_ratio,
             py::arg("tail_fraction") = LowCitationMixture{}.tail_fraction)
        .def_readwrite("geometric_ratio", &LowCitationMixture::geometric_ratio)
        .def_readwrite("tail_fraction", &LowCitationMixture::tail_fraction);

    py::class_<SynthConfig>(m, "SynthConfig")
        .def(py::init<std::uint64_t, std::uint64_t, std::array<std::uint32_t, 3>, double,
                      std::uint32_t, LowCitationMixture>(),
             py::arg("seed"), py::arg("journal_count"),
             py::arg("size_quartiles") = SynthConfig::kDefaultQuartiles,
             py::arg("tail_exponent") = 3.0, py::arg("tail_cutoff") = 10,
             py::arg("low_citation_mixture") = LowCitationMixture{})
        .def_property_readonly("seed", &SynthConfig::seed)
        .def_property_readonly("journal_count", &SynthConfig::journal_count)
        .def_property_readonly("size_quartiles", &SynthConfig::size_quartiles)
        .def_property_readonly("tail_exponent", &SynthConfig::tail_exponent)
        .def_property_readonly("tail_cutoff", &SynthConfig::tail_cutoff)
        .def_property_readonly("low_citation_mixture", &SynthConfig::low_citation_mixture);

    py::class_<ingest::CleaningLog>(m, "CleaningLog")
        .def_readonly("rows_in", &ingest::CleaningLog::rows_in)
        .def_readonly("rows_out", &ingest::CleaningLog::rows_out)
        .def_readonly("duplicates_removed", &ingest::CleaningLog::duplicates_removed)
        .def_readonly("journals_dropped", &ingest::CleaningLog::journals_dropped);

    py::class_<corpus::TopKRemoval>(m, "TopKRemoval")
        .def_readonly("journal_id", &corpus::TopKRemoval::journal_id)
        .def_readonly("k", &corpus::TopKRemoval::k)
        .def_readonly("f", &corpus::TopKRemoval::f)
        .def_readonly("f_minus_k", &corpus::TopKRemoval::f_minus_k)
        .def_readonly("relative_boost", &corpus::TopKRemoval::relative_boost);

    py::class_<corpus::ThresholdRow>(m, "ThresholdRow")
        .def_readonly("threshold", &corpus::ThresholdRow::threshold)
        .def_readonly("count", &corpus::ThresholdRow::count)
        .def_readonly("fraction", &corpus::ThresholdRow::fraction);

    py::class_<corpus::RankedReport>(m, "RankedReport")
        .def_readonly("rank", &corpus::RankedReport::rank)
        .def_readonly("report", &corpus::RankedReport::report);

    py::class_<corpus::TailFit>(m, "TailFit")
        .def_readonly("exponent", &corpus::TailFit::exponent)
        .def_readonly("tail_count", &corpus::TailFit::tail_count);

    py::class_<corpus::BandFit>(m, "BandFit")
        .def_readonly("c_star", &corpus::BandFit::c_star)
        .def_readonly("group_size", &corpus::BandFit::group_size)
        .def_readonly("slope", &corpus::BandFit::slope)
        .def_readonly("skipped", &corpus::BandFit::skipped)
        .def_readonly("note", &corpus::BandFit::note);

    py::class_<metrics::FiveNumberSummary>(m, "FiveNumberSummary")
        .def_readonly("min", &metrics::FiveNumberSummary::min)
        .def_readonly("q1", &metrics::FiveNumberSummary::q1)
        .def_readonly("median", &metrics::FiveNumberSummary::median)
        .def_readonly("q3", &metrics::FiveNumberSummary::q3)
        .def_readonly("max", &metrics::FiveNumberSummary::max)
        .def_readonly("iqr", &metrics::FiveNumberSummary::iqr)
        .def_readonly("lower_fence", &metrics::FiveNumberSummary::lower_fence)
        .def_readonly("upper_fence", &metrics::FiveNumberSummary::upper_fence);

    py::class_<report::WhatIfRow>(m, "WhatIfRow")
        .def_readonly("journal_id", &report::WhatIfRow::journal_id)
        .def_readonly("n1", &report::WhatIfRow::n1)
        .def_readonly("c1", &report::WhatIfRow::c1)
        .def_readonly("f1", &report::WhatIfRow::f1)
        .def_readonly("c", &report::WhatIfRow::c)
        .def_readonly("f2", &report::WhatIfRow::f2)
        .def_readonly("delta_f", &report::WhatIfRow::delta_f)
        .def_readonly("delta_f_r", &report::WhatIfRow::delta_f_r);

    m.def(
        "citation_average",
        [](const std::vector<std::uint32_t>& citations) {
            return metrics::citation_average(citations);
        },
        py::arg("citations"));
    m.def("volatility_exact", &metrics::volatility_exact, py::arg("c"), py::arg("f1"),
          py::arg("n1"));
    m.def("volatility_approx", &metrics::volatility_approx, py::arg("c"), py::arg("f1"),
          py::arg("n1"));
    m.def("relative_volatility", &metrics::relative_volatility, py::arg("c"), py::arg("f1"),
          py::arg("n1"));
    m.def("relative_volatility_high_c", &metrics::relative_volatility_high_c, py::arg("c"),
          py::arg("c1_total"));
    m.def("benefit_case_high", &metrics::benefit_case_high, py::arg("c"), py::arg("n1"));
    m.def("penalty_case_low", &metrics::penalty_case_low, py::arg("f1"), py::arg("n1"));
    m.def("phi_index", &metrics::phi_index, py::arg("f"), py::arg("n2y"), py::arg("subject"));
    m.def(
        "median_and_summary",
        [](const std::vector<std::uint32_t>& citations) {
            return metrics::median_and_summary(citations);
        },
        py::arg("citations"));

    m.def(
        "parse_corpus",
        [](const std::string& path, const std::string& format) {
            return ingest::parse_corpus(path, format_of(format));
        },
        py::arg("path"), py::arg("format") = "delimited");
    m.def(
        "clean",
        [](const std::vector<PaperRecord>& records, const std::vector<std::string>& drop) {
            return ingest::clean(records, drop);
        },
        py::arg("records"), py::arg("drop_list") = std::vector<std::string>{});
    m.def("aggregate", &ingest::aggregate, py::arg("records"));

    m.def("remove_top", &corpus::remove_top, py::arg("profile"));
    m.def("remove_top_k", &corpus::remove_top_k, py::arg("profile"), py::arg("k"));
    m.def(
        "threshold_table",
        [](const std::vector<VolatilityReport>& reports, const std::vector<double>& thresholds,
           const std::string& mode) {
            return corpus::threshold_table(reports, thresholds, mode_of(mode));
        },
        py::arg("reports"), py::arg("thresholds"), py::arg("mode") = "absolute");
    m.def(
        "rank_by_volatility",
        [](const std::vector<VolatilityReport>& reports, const std::string& key,
           std::size_t top_n) { return corpus::rank_by_volatility(reports, key_of(key), top_n); },
        py::arg("reports"), py::arg("key") = "absolute", py::arg("top_n") = 50);
    m.def("global_stats", &corpus::global_stats, py::arg("profiles"));
    m.def("tail_exponent", &corpus::tail_exponent, py::arg("profiles"), py::arg("cutoff") = 10);
    m.def(
        "parallel_band_check",
        [](const std::vector<VolatilityReport>& reports,
           const std::vector<std::uint32_t>& c_star_values, double f_star_cap) {
            return corpus::parallel_band_check(reports, c_star_values, f_star_cap);
        },
        py::arg("reports"), py::arg("c_star_values"), py::arg("f_star_cap"));

    m.def("generate", &synth::generate, py::arg("config"));
    m.def("generate_profiles", &synth::generate_profiles, py::arg("config"));
    m.def("table1_corpus", &synth::table1_corpus);

    m.def("what_if_rows", &report::what_if_rows, py::arg("profiles"), py::arg("c"));
    m.def(
        "surface_grid",
        [](double f1, const std::vector<std::int64_t>& n1_values,
           const std::vector<std::int64_t>& c_values, const std::string& form) {
            return report::surface_grid(f1, n1_values, c_values,
                                        form == "approx" ? report::VolatilityForm::approx
                                                         : report::VolatilityForm::exact);
        },
        py::arg("f1"), py::arg("n1_values"), py::arg("c_values"), py::arg("form") = "exact");
    m.def(
        "render_scatter_svg",
        [](const std::vector<VolatilityReport>& reports, const std::string& axes,
           const std::string& title, const std::string& x_label, const std::string& y_label) {
            const auto data = report::export_plot_data(reports, axes_of(axes));
            return report::render_scatter_svg(data, {title, x_label, y_label});
        },
        py::arg("reports"), py::arg("axes"), py::arg("title") = "", py::arg("x_label") = "",
        py::arg("y_label") = "");

    m.attr("__version__") = "0.1.0";
}
