#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace citevol {

// Raised for malformed or inconsistent input data (files, corpora, mappings).
// Precondition violations on in-memory values use std::invalid_argument.
class DataError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// One row of a citation corpus: a paper and the citations it received in the
// census window. (journal_id, paper_id) is unique within a corpus; uniqueness
// is enforced at ingest, not here.
struct PaperRecord {
    std::string journal_id;
    std::string paper_id;
    std::uint32_t citations = 0;

    bool operator==(const PaperRecord&) const = default;
};

// Aggregated citation profile of one journal over a census window.
// citations_sorted is non-increasing; citation_average = total/n2y computed
// from exact integer sums. Immutable after construction.
class JournalProfile {
  public:
    JournalProfile(std::string journal_id, std::vector<std::uint32_t> citations);

    [[nodiscard]] const std::string& journal_id() const { return journal_id_; }
    [[nodiscard]] std::size_t n2y() const { return citations_.size(); }
    [[nodiscard]] std::uint64_t total_citations() const { return total_; }
    [[nodiscard]] double citation_average() const { return average_; }
    [[nodiscard]] const std::vector<std::uint32_t>& citations_sorted() const {
        return citations_;
    }

    bool operator==(const JournalProfile&) const = default;

  private:
    std::string journal_id_;
    std::vector<std::uint32_t> citations_;
    std::uint64_t total_ = 0;
    double average_ = 0.0;
};

// Outcome of removing a journal's top-cited paper. delta_f = f - f_star,
// computed as (c_star - f_star)/n2y (the same quantity, evaluated in the form
// that matches the one-paper volatility identity). delta_f_r is present iff
// f_star > 0. only_cited_flag: no other paper was cited (f_star == 0);
// zero_cited_flag: the journal had no citations at all (f == 0).
struct VolatilityReport {
    std::string journal_id;
    std::uint32_t c_star = 0;
    double f = 0.0;
    double f_star = 0.0;
    double delta_f = 0.0;
    std::optional<double> delta_f_r;
    std::size_t n2y = 0;
    bool only_cited_flag = false;
    bool zero_cited_flag = false;

    bool operator==(const VolatilityReport&) const = default;
};

// Corpus-wide citation statistics. sigma is the population standard deviation
// (divide by N). tail_counts[i] = (threshold, papers with citations >=
// threshold); counts are non-increasing and the first row (threshold 0)
// equals paper_count.
struct CorpusStats {
    std::uint64_t paper_count = 0;
    std::uint64_t journal_count = 0;
    double mu = 0.0;
    double sigma = 0.0;
    std::vector<std::pair<std::uint32_t, std::uint64_t>> tail_counts;

    bool operator==(const CorpusStats&) const = default;
};

// Per-subject citation baseline used for size-adjusted comparison.
class SubjectStats {
  public:
    SubjectStats(std::string subject_id, double mu, double sigma);

    [[nodiscard]] const std::string& subject_id() const { return subject_id_; }
    [[nodiscard]] double mu() const { return mu_; }
    [[nodiscard]] double sigma() const { return sigma_; }  // always > 0

    bool operator==(const SubjectStats&) const = default;

  private:
    std::string subject_id_;
    double mu_ = 0.0;
    double sigma_ = 1.0;
};

// Sub-cutoff citation model for the synthetic generator: counts below the
// tail cutoff follow a truncated geometric with the given ratio; a paper
// enters the Pareto tail with probability tail_fraction. Defaults reproduce
// an uncited share of ~30.8% and a tail share of ~5.7% at cutoff 10.
struct LowCitationMixture {
    double geometric_ratio = 0.68;
    double tail_fraction = 0.057;

    bool operator==(const LowCitationMixture&) const = default;
};

// Validated configuration for the synthetic corpus generator. Journal sizes
// follow a discrete log-normal fitted to size_quartiles; citation counts at
// or above tail_cutoff follow a discrete Pareto with density exponent
// tail_exponent.
class SynthConfig {
  public:
    static constexpr std::array<std::uint32_t, 3> kDefaultQuartiles{68, 130, 270};

    SynthConfig(std::uint64_t seed, std::uint64_t journal_count,
                std::array<std::uint32_t, 3> size_quartiles = kDefaultQuartiles,
                double tail_exponent = 3.0, std::uint32_t tail_cutoff = 10,
                LowCitationMixture low_citation_mixture = {});

    [[nodiscard]] std::uint64_t seed() const { return seed_; }
    [[nodiscard]] std::uint64_t journal_count() const { return journal_count_; }
    [[nodiscard]] const std::array<std::uint32_t, 3>& size_quartiles() const {
        return size_quartiles_;
    }
    [[nodiscard]] double tail_exponent() const { return tail_exponent_; }
    [[nodiscard]] std::uint32_t tail_cutoff() const { return tail_cutoff_; }
    [[nodiscard]] const LowCitationMixture& low_citation_mixture() const {
        return mixture_;
    }

    bool operator==(const SynthConfig&) const = default;

  private:
    std::uint64_t seed_ = 0;
    std::uint64_t journal_count_ = 1;
    std::array<std::uint32_t, 3> size_quartiles_ = kDefaultQuartiles;
    double tail_exponent_ = 3.0;
    std::uint32_t tail_cutoff_ = 10;
    LowCitationMixture mixture_;
};

}  // namespace citevol
