#include "citevol/ingest.hpp"

#include <charconv>
#include <limits>
#include <ostream>

#include "citevol/serialize.hpp"

namespace citevol::ingest {

const std::string kDelimitedHeader = "journal_id,paper_id,citations";

namespace {

bool valid_id(const std::string& id) {
    if (id.empty()) return false;
    for (char ch : id) {
        const bool ok = (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') ||
                        (ch >= '0' && ch <= '9') || ch == '_' || ch == '.' || ch == ':' ||
                        ch == '-';
        if (!ok) return false;
    }
    return true;
}

[[noreturn]] void fail(const std::string& path, std::uint64_t line, const std::string& what) {
    throw DataError(path + ":" + std::to_string(line) + ": " + what);
}

std::uint32_t parse_citations_field(const std::string& path, std::uint64_t line,
                                    std::string_view field) {
    std::int64_t value = 0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc() || ptr != end || field.empty()) {
        fail(path, line, "malformed citation count '" + std::string(field) + "'");
    }
    if (value < 0) fail(path, line, "negative citation count");
    if (value > std::numeric_limits<std::uint32_t>::max()) {
        fail(path, line, "citation count out of range");
    }
    return static_cast<std::uint32_t>(value);
}

}  // namespace

CorpusReader::CorpusReader(const std::string& path, Format format)
    : in_(path), path_(path), format_(format) {
    if (!in_) throw DataError("cannot open corpus file: " + path);
}

bool CorpusReader::next(PaperRecord& out) {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_no_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (format_ == Format::delimited) {
            if (!saw_first_line_) {
                saw_first_line_ = true;
                // The header row is optional on input; emitters always write it.
                if (line == kDelimitedHeader) continue;
            }
            if (parse_delimited(line, out)) return true;
            continue;
        }
        parse_jsonl(line, out);
        return true;
    }
    return false;
}

bool CorpusReader::parse_delimited(const std::string& line, PaperRecord& out) {
    const auto first = line.find(',');
    const auto second = first == std::string::npos ? std::string::npos
                                                   : line.find(',', first + 1);
    if (first == std::string::npos || second == std::string::npos ||
        line.find(',', second + 1) != std::string::npos) {
        fail(path_, line_no_, "expected 3 comma-separated fields");
    }
    out.journal_id = line.substr(0, first);
    out.paper_id = line.substr(first + 1, second - first - 1);
    if (!valid_id(out.journal_id)) fail(path_, line_no_, "invalid journal id");
    if (!valid_id(out.paper_id)) fail(path_, line_no_, "invalid paper id");
    out.citations = parse_citations_field(
        path_, line_no_, std::string_view(line).substr(second + 1));
    return true;
}

void CorpusReader::parse_jsonl(const std::string& line, PaperRecord& out) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
        out = j.get<PaperRecord>();
    } catch (const nlohmann::json::exception& e) {
        fail(path_, line_no_, std::string("invalid record: ") + e.what());
    } catch (const DataError& e) {
        fail(path_, line_no_, e.what());
    }
    if (!valid_id(out.journal_id)) fail(path_, line_no_, "invalid journal id");
    if (!valid_id(out.paper_id)) fail(path_, line_no_, "invalid paper id");
}

CleaningFilter::CleaningFilter(const std::vector<std::string>& drop_list)
    : drop_list_(drop_list.begin(), drop_list.end()) {}

bool CleaningFilter::admit(const PaperRecord& record) {
    ++log_.rows_in;
    if (drop_list_.count(record.journal_id) != 0) {
        dropped_seen_.insert(record.journal_id);
        log_.journals_dropped = dropped_seen_.size();
        return false;
    }
    auto& papers = seen_[record.journal_id];
    const auto [it, inserted] = papers.emplace(record.paper_id, record.citations);
    if (!inserted) {
        if (it->second != record.citations) {
            throw DataError("conflicting duplicate for (" + record.journal_id + ", " +
                            record.paper_id + "): citation counts " +
                            std::to_string(it->second) + " and " +
                            std::to_string(record.citations));
        }
        ++log_.duplicates_removed;
        return false;
    }
    ++log_.rows_out;
    return true;
}

void Aggregator::add(const PaperRecord& record) {
    counts_[record.journal_id].push_back(record.citations);
}

std::map<std::string, JournalProfile> Aggregator::finish() {
    std::map<std::string, JournalProfile> profiles;
    for (auto& [journal_id, counts] : counts_) {
        profiles.emplace(journal_id, JournalProfile(journal_id, std::move(counts)));
    }
    counts_.clear();
    return profiles;
}

std::vector<PaperRecord> parse_corpus(const std::string& path, Format format) {
    CorpusReader reader(path, format);
    std::vector<PaperRecord> records;
    std::unordered_map<std::string, std::unordered_set<std::string>> keys;
    PaperRecord record;
    while (reader.next(record)) {
        if (!keys[record.journal_id].insert(record.paper_id).second) {
            throw DataError("duplicate (journal_id, paper_id) key: (" + record.journal_id +
                            ", " + record.paper_id + ")");
        }
        records.push_back(std::move(record));
        record = {};
    }
    return records;
}

std::pair<std::vector<PaperRecord>, CleaningLog> clean(
    const std::vector<PaperRecord>& records, const std::vector<std::string>& drop_list) {
    CleaningFilter filter(drop_list);
    std::vector<PaperRecord> kept;
    for (const auto& record : records) {
        if (filter.admit(record)) kept.push_back(record);
    }
    return {std::move(kept), filter.log()};
}

std::map<std::string, JournalProfile> aggregate(const std::vector<PaperRecord>& records) {
    Aggregator aggregator;
    for (const auto& record : records) aggregator.add(record);
    return aggregator.finish();
}

std::string delimited_row(const PaperRecord& record) {
    return record.journal_id + "," + record.paper_id + "," + std::to_string(record.citations);
}

void write_delimited(std::ostream& out, const std::vector<PaperRecord>& records) {
    out << kDelimitedHeader << '\n';
    for (const auto& record : records) out << delimited_row(record) << '\n';
}

}  // namespace citevol::ingest
