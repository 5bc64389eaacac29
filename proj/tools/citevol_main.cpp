#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "citevol/corpus.hpp"
#include "citevol/ingest.hpp"
#include "citevol/metrics.hpp"
#include "citevol/model.hpp"
#include "citevol/report.hpp"
#include "citevol/serialize.hpp"
#include "citevol/synth.hpp"

namespace {

namespace fs = std::filesystem;
using namespace citevol;

// Four significant figures; exact zero prints bare.
std::string sig4(double v) {
    if (v == 0.0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%#.4g", v);
    return buf;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    out << content;
}

struct AnalyzeArgs {
    std::string input;
    std::string format = "delimited";
    std::string out_dir;
    std::vector<double> abs_thresholds{0.1, 0.25, 0.5, 0.75, 1, 1.5, 2, 3, 4, 5, 10, 50};
    std::vector<double> rel_thresholds_pct{10,  20,  25,  30,  40,  50,  60, 70,
                                           75,  80,  90,  100, 200, 300, 400};
    std::size_t top_n = 50;
    std::size_t top_k = 4;
    std::vector<std::string> drop;
};

ingest::Format parse_format(const std::string& name) {
    if (name == "delimited") return ingest::Format::delimited;
    if (name == "jsonl") return ingest::Format::jsonl;
    throw std::invalid_argument("unknown format: " + name);
}

std::map<std::string, JournalProfile> load_profiles(const std::string& input,
                                                    ingest::Format format,
                                                    const std::vector<std::string>& drop,
                                                    ingest::CleaningLog* log_out) {
    ingest::CorpusReader reader(input, format);
    ingest::CleaningFilter filter(drop);
    ingest::Aggregator aggregator;
    PaperRecord record;
    while (reader.next(record)) {
        if (filter.admit(record)) aggregator.add(record);
    }
    if (log_out != nullptr) *log_out = filter.log();
    auto profiles = aggregator.finish();
    if (profiles.empty()) throw DataError("empty corpus: no records after cleaning");
    return profiles;
}

report::ScatterOptions scatter_options(report::PlotAxes axes) {
    using report::PlotAxes;
    switch (axes) {
        case PlotAxes::delta_vs_size:
            return {"Top-paper removal: drop vs journal size", "N2Y", "Δf(c*)"};
        case PlotAxes::reldelta_vs_size:
            return {"Top-paper removal: relative drop vs journal size", "N2Y", "Δf_r(c*)"};
        case PlotAxes::delta_vs_f:
            return {"Top-paper removal: drop vs citation average", "f", "Δf(c*)"};
        case PlotAxes::cstar_vs_f:
            return {"Top citation count vs citation average", "f", "c*"};
    }
    return {};
}

const char* plot_basename(report::PlotAxes axes) {
    using report::PlotAxes;
    switch (axes) {
        case PlotAxes::delta_vs_size: return "plot_delta_vs_size";
        case PlotAxes::reldelta_vs_size: return "plot_reldelta_vs_size";
        case PlotAxes::delta_vs_f: return "plot_delta_vs_f";
        case PlotAxes::cstar_vs_f: return "plot_cstar_vs_f";
    }
    return "plot";
}

int run_whatif(std::int64_t size, double f1, std::int64_t cites, bool relative) {
    const double delta = metrics::volatility_exact(cites, f1, size);
    std::cout << "Δf = " << sig4(delta) << "\n";
    if (relative) {
        const double rel = metrics::relative_volatility(cites, f1, size);
        std::cout << "Δf_r = " << (rel == 0.0 ? "0" : sig4(rel * 100.0)) << "%\n";
    }
    return 0;
}

int run_analyze(const AnalyzeArgs& args) {
    const ingest::Format format = parse_format(args.format);
    fs::create_directories(args.out_dir);
    const fs::path out(args.out_dir);

    ingest::CleaningLog log;
    const auto profiles = load_profiles(args.input, format, args.drop, &log);
    write_file(out / "cleaning_log.json", nlohmann::json(log).dump(2) + "\n");

    const CorpusStats stats = corpus::global_stats(profiles);
    write_file(out / "corpus_stats.json", nlohmann::json(stats).dump(2) + "\n");
    const auto tail_table = report::render_table(stats.tail_counts);
    write_file(out / "tail_counts.txt", tail_table.text);
    write_file(out / "tail_counts.jsonl", tail_table.jsonl);

    std::vector<VolatilityReport> reports;
    reports.reserve(profiles.size());
    std::string reports_jsonl;
    for (const auto& [id, profile] : profiles) {
        reports.push_back(corpus::remove_top(profile));
        reports_jsonl += nlohmann::json(reports.back()).dump() + "\n";
    }
    write_file(out / "volatility_reports.jsonl", reports_jsonl);

    const auto abs_rows =
        corpus::threshold_table(reports, args.abs_thresholds, corpus::ThresholdMode::absolute);
    const auto abs_table = report::render_table(abs_rows, corpus::ThresholdMode::absolute);
    write_file(out / "threshold_absolute.txt", abs_table.text);
    write_file(out / "threshold_absolute.jsonl", abs_table.jsonl);

    std::vector<double> rel_thresholds;
    for (double pct : args.rel_thresholds_pct) rel_thresholds.push_back(pct / 100.0);
    const auto rel_rows =
        corpus::threshold_table(reports, rel_thresholds, corpus::ThresholdMode::relative);
    const auto rel_table = report::render_table(rel_rows, corpus::ThresholdMode::relative);
    write_file(out / "threshold_relative.txt", rel_table.text);
    write_file(out / "threshold_relative.jsonl", rel_table.jsonl);

    const auto top_abs = corpus::rank_by_volatility(reports, corpus::RankKey::absolute,
                                                    args.top_n);
    if (!top_abs.empty()) {
        const auto table = report::render_table(top_abs);
        write_file(out / "top_absolute.txt", table.text);
        write_file(out / "top_absolute.jsonl", table.jsonl);
    }
    const auto top_rel = corpus::rank_by_volatility(reports, corpus::RankKey::relative,
                                                    args.top_n);
    if (!top_rel.empty()) {
        const auto table = report::render_table(top_rel);
        write_file(out / "top_relative.txt", table.text);
        write_file(out / "top_relative.jsonl", table.jsonl);
    }

    // Share of journals whose citation average sits more than 50% above the
    // average of their papers below the top k.
    nlohmann::json boosts = nlohmann::json::array();
    for (std::size_t k = 1; k <= args.top_k; ++k) {
        std::uint64_t boosted = 0;
        for (const auto& [id, profile] : profiles) {
            if (profile.n2y() <= k) continue;
            const auto removal = corpus::remove_top_k(profile, k);
            if (removal.relative_boost && *removal.relative_boost > 0.5) ++boosted;
        }
        boosts.push_back({{"k", k},
                          {"journals_boosted", boosted},
                          {"fraction", static_cast<double>(boosted) /
                                           static_cast<double>(profiles.size())}});
    }
    write_file(out / "topk_boosts.json",
               nlohmann::json{{"boost_threshold", 0.5}, {"rows", boosts}}.dump(2) + "\n");

    for (const auto axes : {report::PlotAxes::delta_vs_size, report::PlotAxes::reldelta_vs_size,
                            report::PlotAxes::delta_vs_f, report::PlotAxes::cstar_vs_f}) {
        const auto data = report::export_plot_data(reports, axes);
        const std::string base = plot_basename(axes);
        write_file(out / (base + ".jsonl"), report::plot_data_jsonl(data));
        if (!data.points.empty()) {
            write_file(out / (base + ".svg"),
                       report::render_scatter_svg(data, scatter_options(axes)));
        }
    }

    std::cout << "analyzed " << stats.paper_count << " papers in " << stats.journal_count
              << " journals; outputs in " << out.string() << "\n";
    return 0;
}

int run_synth(std::uint64_t seed, std::uint64_t journals, const std::string& out_path,
              const std::vector<std::uint32_t>& quartiles, double tail_exponent,
              std::uint32_t tail_cutoff, double geometric_ratio, double tail_fraction) {
    std::array<std::uint32_t, 3> q = SynthConfig::kDefaultQuartiles;
    if (!quartiles.empty()) {
        if (quartiles.size() != 3) {
            throw std::invalid_argument("--quartiles needs exactly 3 values");
        }
        q = {quartiles[0], quartiles[1], quartiles[2]};
    }
    const SynthConfig config(seed, journals, q, tail_exponent, tail_cutoff,
                             {geometric_ratio, tail_fraction});
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw DataError("cannot write " + out_path);
    out << ingest::kDelimitedHeader << '\n';
    synth::Generator generator(config);
    PaperRecord record;
    std::uint64_t rows = 0;
    while (generator.next(record)) {
        out << ingest::delimited_row(record) << '\n';
        ++rows;
    }
    std::cout << "wrote " << rows << " records for " << journals << " journals to " << out_path
              << "\n";
    return 0;
}

int run_phi(const std::string& input, const std::string& format_name,
            const std::string& subjects_path, const std::string& out_dir) {
    const ingest::Format format = parse_format(format_name);
    const auto profiles = load_profiles(input, format, {}, nullptr);

    std::map<std::string, SubjectStats> subjects;
    std::map<std::string, std::string> journal_subject;
    bool degenerate_single = false;
    if (subjects_path.empty()) {
        // Single-subject default: baseline from this corpus itself.
        const CorpusStats stats = corpus::global_stats(profiles);
        if (stats.sigma > 0.0) {
            subjects.emplace("all", SubjectStats("all", stats.mu, stats.sigma));
        } else {
            // Every paper shares one citation count, so every journal sits
            // exactly at the baseline.
            degenerate_single = true;
        }
        for (const auto& [id, profile] : profiles) journal_subject[id] = "all";
    } else {
        std::ifstream in(subjects_path, std::ios::binary);
        if (!in) throw DataError("cannot open subjects file: " + subjects_path);
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
            for (const auto& entry : j.at("subjects")) {
                auto stats = entry.get<SubjectStats>();
                subjects.emplace(stats.subject_id(), std::move(stats));
            }
            for (const auto& [jid, sid] : j.at("journals").items()) {
                journal_subject[jid] = sid.get<std::string>();
            }
        } catch (const nlohmann::json::exception& e) {
            throw DataError("invalid subjects file: " + std::string(e.what()));
        } catch (const std::invalid_argument& e) {
            throw DataError("invalid subjects file: " + std::string(e.what()));
        }
    }

    struct PhiRow {
        std::string journal_id;
        std::string subject_id;
        double f = 0.0;
        std::size_t n2y = 0;
        double phi = 0.0;
    };
    std::vector<PhiRow> rows;
    for (const auto& [id, profile] : profiles) {
        const auto mapped = journal_subject.find(id);
        if (mapped == journal_subject.end()) {
            throw DataError("journal not in subject mapping: " + id);
        }
        PhiRow row{id, mapped->second, profile.citation_average(), profile.n2y(), 0.0};
        if (degenerate_single) {
            rows.push_back(std::move(row));
            continue;
        }
        const auto subject = subjects.find(mapped->second);
        if (subject == subjects.end()) {
            throw DataError("journal mapped to unknown subject: " + id + " -> " +
                            mapped->second);
        }
        row.phi = metrics::phi_index(row.f, row.n2y, subject->second);
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const PhiRow& a, const PhiRow& b) {
        if (a.phi != b.phi) return a.phi > b.phi;
        return a.journal_id < b.journal_id;
    });

    const auto fmt2 = [](double v) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.2f", v);
        return std::string(buf);
    };
    std::size_t id_width = std::string("journal").size();
    for (const auto& row : rows) id_width = std::max(id_width, row.journal_id.size());
    std::string text = "journal";
    text.append(id_width - 7, ' ');
    text += "        f    N2Y        Φ\n";
    std::string jsonl;
    for (const auto& row : rows) {
        char line[256];
        std::snprintf(line, sizeof(line), "%-*s  %7s  %5zu  %7s\n", static_cast<int>(id_width),
                      row.journal_id.c_str(), fmt2(row.f).c_str(), row.n2y,
                      fmt2(row.phi).c_str());
        text += line;
        jsonl += nlohmann::json{{"journal_id", row.journal_id},
                                {"subject_id", row.subject_id},
                                {"f", row.f},
                                {"n2y", row.n2y},
                                {"phi", row.phi}}
                     .dump() +
                 "\n";
    }
    std::cout << text;
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        write_file(fs::path(out_dir) / "phi.txt", text);
        write_file(fs::path(out_dir) / "phi.jsonl", jsonl);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Citation-average volatility analytics"};
    app.require_subcommand(1);

    auto* whatif = app.add_subcommand(
        "whatif", "Effect of one hypothetical paper on a journal's citation average");
    std::int64_t w_size = 0;
    double w_if = 0.0;
    std::int64_t w_cites = 0;
    bool w_relative = false;
    whatif->add_option("--size", w_size, "Journal size before the paper (N1)")->required();
    whatif->add_option("--if", w_if, "Citation average before the paper (f1)")->required();
    whatif->add_option("--cites", w_cites, "Citations of the hypothetical paper (c)")
        ->required();
    whatif->add_flag("--relative", w_relative, "Also print the relative change (needs f1 > 0)");

    auto* analyze = app.add_subcommand(
        "analyze", "Full corpus analysis: profiles, removal reports, tables, plot data");
    AnalyzeArgs a;
    analyze->add_option("--input", a.input, "Corpus file")->required();
    analyze->add_option("--format", a.format, "Input format: delimited or jsonl")
        ->check(CLI::IsMember({"delimited", "jsonl"}));
    analyze->add_option("--out", a.out_dir, "Output directory")->required();
    analyze->add_option("--thresholds", a.abs_thresholds,
                        "Absolute thresholds for the census table");
    analyze->add_option("--rel-thresholds", a.rel_thresholds_pct,
                        "Relative thresholds, in percent");
    analyze->add_option("--top", a.top_n, "Rows in the top-N rankings");
    analyze->add_option("--topk", a.top_k, "Largest k for the top-k boost census");
    analyze->add_option("--drop", a.drop, "Journal ids to drop during cleaning");

    auto* synth_cmd = app.add_subcommand("synth", "Write a synthetic citation corpus");
    std::uint64_t s_seed = 0;
    std::uint64_t s_journals = 0;
    std::string s_out;
    std::vector<std::uint32_t> s_quartiles;
    double s_tail_exponent = 3.0;
    std::uint32_t s_tail_cutoff = 10;
    double s_ratio = LowCitationMixture{}.geometric_ratio;
    double s_tail_fraction = LowCitationMixture{}.tail_fraction;
    synth_cmd->add_option("--seed", s_seed, "Generator seed")->required();
    synth_cmd->add_option("--journals", s_journals, "Number of journals")->required();
    synth_cmd->add_option("--out", s_out, "Output file (delimited format)")->required();
    synth_cmd->add_option("--quartiles", s_quartiles, "Journal-size quartiles (3 values)");
    synth_cmd->add_option("--tail-exponent", s_tail_exponent, "Power-law density exponent");
    synth_cmd->add_option("--tail-cutoff", s_tail_cutoff, "Smallest tail citation count");
    synth_cmd->add_option("--geometric-ratio", s_ratio, "Sub-cutoff geometric ratio");
    synth_cmd->add_option("--tail-fraction", s_tail_fraction, "Share of papers in the tail");

    auto* phi = app.add_subcommand(
        "phi", "Size-adjusted standardized citation averages, highest first");
    std::string p_input;
    std::string p_format = "delimited";
    std::string p_subjects;
    std::string p_out;
    phi->add_option("--input", p_input, "Corpus file")->required();
    phi->add_option("--format", p_format, "Input format: delimited or jsonl")
        ->check(CLI::IsMember({"delimited", "jsonl"}));
    phi->add_option("--subjects", p_subjects,
                    "Subject baselines JSON (defaults to one corpus-wide subject)");
    phi->add_option("--out", p_out, "Optional output directory for phi.txt / phi.jsonl");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(whatif)) return run_whatif(w_size, w_if, w_cites, w_relative);
        if (app.got_subcommand(analyze)) return run_analyze(a);
        if (app.got_subcommand(synth_cmd)) {
            return run_synth(s_seed, s_journals, s_out, s_quartiles, s_tail_exponent,
                             s_tail_cutoff, s_ratio, s_tail_fraction);
        }
        if (app.got_subcommand(phi)) return run_phi(p_input, p_format, p_subjects, p_out);
    } catch (const citevol::DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
