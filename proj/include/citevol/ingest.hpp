#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "citevol/model.hpp"

namespace citevol::ingest {

enum class Format { delimited, jsonl };

// Counts reported by clean(); rows_in - rows_out equals duplicates_removed
// plus rows belonging to dropped journals. journals_dropped counts distinct
// journals actually removed.
struct CleaningLog {
    std::uint64_t rows_in = 0;
    std::uint64_t rows_out = 0;
    std::uint64_t duplicates_removed = 0;
    std::uint64_t journals_dropped = 0;

    bool operator==(const CleaningLog&) const = default;
};

// Streaming corpus reader; holds one row at a time. Malformed rows, negative
// citation counts, and ids outside [A-Za-z0-9_.:-] raise DataError with the
// 1-based physical line number. The delimited header row is consumed when
// present; a file starting directly with data rows is accepted.
class CorpusReader {
  public:
    CorpusReader(const std::string& path, Format format);

    // Returns false at end of input.
    bool next(PaperRecord& out);

  private:
    bool parse_delimited(const std::string& line, PaperRecord& out);
    void parse_jsonl(const std::string& line, PaperRecord& out);

    std::ifstream in_;
    std::string path_;
    Format format_;
    std::uint64_t line_no_ = 0;
    bool saw_first_line_ = false;
};

// Streaming cleaner: drops rows of journals in drop_list, removes exact
// duplicate rows keeping the first, and raises DataError on a conflicting
// duplicate (same key, different count). Tracks seen keys, so memory grows
// with the number of distinct admitted keys.
class CleaningFilter {
  public:
    explicit CleaningFilter(const std::vector<std::string>& drop_list);

    // True if the record survives cleaning and should be consumed.
    bool admit(const PaperRecord& record);

    [[nodiscard]] const CleaningLog& log() const { return log_; }

  private:
    std::set<std::string> drop_list_;
    std::set<std::string> dropped_seen_;
    std::unordered_map<std::string, std::unordered_map<std::string, std::uint32_t>> seen_;
    CleaningLog log_;
};

// Streaming profile builder. Expects a cleaned stream (unique keys); stores
// only per-journal citation counts, never paper ids, so memory is
// proportional to journal count plus total citation counts.
class Aggregator {
  public:
    void add(const PaperRecord& record);
    // Sorts every journal's counts non-increasing and builds the profiles.
    std::map<std::string, JournalProfile> finish();

  private:
    std::map<std::string, std::vector<std::uint32_t>> counts_;
};

// Reads a whole corpus into memory, enforcing key uniqueness: any repeated
// (journal_id, paper_id) raises DataError naming the key. Convenience form
// of the streaming pipeline for desk-scale files.
std::vector<PaperRecord> parse_corpus(const std::string& path, Format format);

// Cleaning over materialized records; same semantics as CleaningFilter.
std::pair<std::vector<PaperRecord>, CleaningLog> clean(
    const std::vector<PaperRecord>& records, const std::vector<std::string>& drop_list);

// Profiles from materialized cleaned records.
std::map<std::string, JournalProfile> aggregate(const std::vector<PaperRecord>& records);

// Delimited emission. write_delimited always writes the header row.
extern const std::string kDelimitedHeader;
std::string delimited_row(const PaperRecord& record);
void write_delimited(std::ostream& out, const std::vector<PaperRecord>& records);

}  // namespace citevol::ingest
