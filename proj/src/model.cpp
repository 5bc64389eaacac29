#include "citevol/model.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "citevol/serialize.hpp"

namespace citevol {

JournalProfile::JournalProfile(std::string journal_id, std::vector<std::uint32_t> citations)
    : journal_id_(std::move(journal_id)), citations_(std::move(citations)) {
    if (journal_id_.empty()) {
        throw std::invalid_argument("journal profile requires a journal id");
    }
    if (citations_.empty()) {
        throw std::invalid_argument("empty journal: profile needs at least one paper");
    }
    std::sort(citations_.begin(), citations_.end(), std::greater<>());
    for (std::uint32_t c : citations_) total_ += c;
    average_ = static_cast<double>(total_) / static_cast<double>(citations_.size());
}

SubjectStats::SubjectStats(std::string subject_id, double mu, double sigma)
    : subject_id_(std::move(subject_id)), mu_(mu), sigma_(sigma) {
    if (subject_id_.empty()) {
        throw std::invalid_argument("subject stats require a subject id");
    }
    if (!std::isfinite(mu_) || !std::isfinite(sigma_)) {
        throw std::invalid_argument("subject stats must be finite");
    }
    if (sigma_ <= 0.0) {
        throw std::invalid_argument("subject sigma must be positive");
    }
}

SynthConfig::SynthConfig(std::uint64_t seed, std::uint64_t journal_count,
                         std::array<std::uint32_t, 3> size_quartiles, double tail_exponent,
                         std::uint32_t tail_cutoff, LowCitationMixture low_citation_mixture)
    : seed_(seed),
      journal_count_(journal_count),
      size_quartiles_(size_quartiles),
      tail_exponent_(tail_exponent),
      tail_cutoff_(tail_cutoff),
      mixture_(low_citation_mixture) {
    if (journal_count_ < 1) {
        throw std::invalid_argument("journal count must be at least 1");
    }
    if (size_quartiles_[0] < 1 || size_quartiles_[0] >= size_quartiles_[1] ||
        size_quartiles_[1] >= size_quartiles_[2]) {
        throw std::invalid_argument("size quartiles must be strictly increasing and positive");
    }
    if (!(tail_exponent_ > 1.0)) {
        throw std::invalid_argument("tail exponent must exceed 1");
    }
    if (tail_cutoff_ < 1) {
        throw std::invalid_argument("tail cutoff must be at least 1");
    }
    if (!(mixture_.geometric_ratio > 0.0) || !(mixture_.geometric_ratio < 1.0)) {
        throw std::invalid_argument("geometric ratio must lie in (0, 1)");
    }
    if (!(mixture_.tail_fraction >= 0.0) || !(mixture_.tail_fraction < 1.0)) {
        throw std::invalid_argument("tail fraction must lie in [0, 1)");
    }
}

void to_json(nlohmann::json& j, const PaperRecord& r) {
    j = nlohmann::json{
        {"journal_id", r.journal_id}, {"paper_id", r.paper_id}, {"citations", r.citations}};
}

void from_json(const nlohmann::json& j, PaperRecord& r) {
    j.at("journal_id").get_to(r.journal_id);
    j.at("paper_id").get_to(r.paper_id);
    const auto c = j.at("citations").get<std::int64_t>();
    if (c < 0) throw DataError("negative citation count");
    r.citations = static_cast<std::uint32_t>(c);
}

void to_json(nlohmann::json& j, const VolatilityReport& r) {
    j = nlohmann::json{{"journal_id", r.journal_id},
                       {"c_star", r.c_star},
                       {"f", r.f},
                       {"f_star", r.f_star},
                       {"delta_f", r.delta_f},
                       {"delta_f_r", nullptr},
                       {"n2y", r.n2y},
                       {"only_cited", r.only_cited_flag},
                       {"zero_cited", r.zero_cited_flag}};
    if (r.delta_f_r) j["delta_f_r"] = *r.delta_f_r;
}

void from_json(const nlohmann::json& j, VolatilityReport& r) {
    j.at("journal_id").get_to(r.journal_id);
    j.at("c_star").get_to(r.c_star);
    j.at("f").get_to(r.f);
    j.at("f_star").get_to(r.f_star);
    j.at("delta_f").get_to(r.delta_f);
    r.delta_f_r.reset();
    if (!j.at("delta_f_r").is_null()) r.delta_f_r = j.at("delta_f_r").get<double>();
    j.at("n2y").get_to(r.n2y);
    j.at("only_cited").get_to(r.only_cited_flag);
    j.at("zero_cited").get_to(r.zero_cited_flag);
}

void to_json(nlohmann::json& j, const CorpusStats& s) {
    j = nlohmann::json{{"paper_count", s.paper_count},
                       {"journal_count", s.journal_count},
                       {"mu", s.mu},
                       {"sigma", s.sigma},
                       {"tail_counts", s.tail_counts}};
}

void from_json(const nlohmann::json& j, CorpusStats& s) {
    j.at("paper_count").get_to(s.paper_count);
    j.at("journal_count").get_to(s.journal_count);
    j.at("mu").get_to(s.mu);
    j.at("sigma").get_to(s.sigma);
    j.at("tail_counts").get_to(s.tail_counts);
}

void to_json(nlohmann::json& j, const JournalProfile& p) {
    j = nlohmann::json{{"journal_id", p.journal_id()},
                       {"citations", p.citations_sorted()}};
}

void to_json(nlohmann::json& j, const SubjectStats& s) {
    j = nlohmann::json{{"subject_id", s.subject_id()}, {"mu", s.mu()}, {"sigma", s.sigma()}};
}

void to_json(nlohmann::json& j, const LowCitationMixture& m) {
    j = nlohmann::json{{"geometric_ratio", m.geometric_ratio},
                       {"tail_fraction", m.tail_fraction}};
}

void to_json(nlohmann::json& j, const SynthConfig& c) {
    j = nlohmann::json{{"seed", c.seed()},
                       {"journal_count", c.journal_count()},
                       {"size_quartiles", c.size_quartiles()},
                       {"tail_exponent", c.tail_exponent()},
                       {"tail_cutoff", c.tail_cutoff()},
                       {"low_citation_mixture", c.low_citation_mixture()}};
}

namespace ingest {

void to_json(nlohmann::json& j, const CleaningLog& log) {
    j = nlohmann::json{{"rows_in", log.rows_in},
                       {"rows_out", log.rows_out},
                       {"duplicates_removed", log.duplicates_removed},
                       {"journals_dropped", log.journals_dropped}};
}

void from_json(const nlohmann::json& j, CleaningLog& log) {
    j.at("rows_in").get_to(log.rows_in);
    j.at("rows_out").get_to(log.rows_out);
    j.at("duplicates_removed").get_to(log.duplicates_removed);
    j.at("journals_dropped").get_to(log.journals_dropped);
}

}  // namespace ingest

}  // namespace citevol

namespace nlohmann {

citevol::JournalProfile adl_serializer<citevol::JournalProfile>::from_json(const json& j) {
    return citevol::JournalProfile(j.at("journal_id").get<std::string>(),
                                   j.at("citations").get<std::vector<std::uint32_t>>());
}

citevol::SubjectStats adl_serializer<citevol::SubjectStats>::from_json(const json& j) {
    return citevol::SubjectStats(j.at("subject_id").get<std::string>(),
                                 j.at("mu").get<double>(), j.at("sigma").get<double>());
}

citevol::SynthConfig adl_serializer<citevol::SynthConfig>::from_json(const json& j) {
    citevol::LowCitationMixture mixture;
    if (j.contains("low_citation_mixture")) {
        const auto& m = j.at("low_citation_mixture");
        m.at("geometric_ratio").get_to(mixture.geometric_ratio);
        m.at("tail_fraction").get_to(mixture.tail_fraction);
    }
    return citevol::SynthConfig(j.at("seed").get<std::uint64_t>(),
                                j.at("journal_count").get<std::uint64_t>(),
                                j.at("size_quartiles").get<std::array<std::uint32_t, 3>>(),
                                j.at("tail_exponent").get<double>(),
                                j.at("tail_cutoff").get<std::uint32_t>(), mixture);
}

}  // namespace nlohmann
