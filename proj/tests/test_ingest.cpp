#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "citevol/ingest.hpp"
#include "support.hpp"

using namespace citevol;
using testsupport::TempDir;
using testsupport::write_text;

namespace {

std::vector<PaperRecord> read_all(const std::string& path, ingest::Format format) {
    ingest::CorpusReader reader(path, format);
    std::vector<PaperRecord> records;
    PaperRecord record;
    while (reader.next(record)) records.push_back(record);
    return records;
}

}  // namespace

TEST_CASE("delimited corpus parses with or without the header row") {
    TempDir dir("ingest_header");
    const auto bare = dir.path() / "bare.csv";
    write_text(bare, "J1,P1,3\nJ1,P2,0\nJ2,P1,10\n");
    const auto headed = dir.path() / "headed.csv";
    write_text(headed, ingest::kDelimitedHeader + "\nJ1,P1,3\nJ1,P2,0\nJ2,P1,10\n");

    const auto a = read_all(bare.string(), ingest::Format::delimited);
    const auto b = read_all(headed.string(), ingest::Format::delimited);
    CHECK(a == b);
    CHECK(a.size() == 3);
    CHECK(a[0] == PaperRecord{"J1", "P1", 3});
    CHECK(a[2] == PaperRecord{"J2", "P1", 10});
}

TEST_CASE("reader skips blank lines and strips carriage returns") {
    TempDir dir("ingest_crlf");
    const auto path = dir.path() / "crlf.csv";
    write_text(path, "J1,P1,3\r\n\r\n\nJ1,P2,7\r\n");
    const auto records = read_all(path.string(), ingest::Format::delimited);
    CHECK(records.size() == 2);
    CHECK(records[1] == PaperRecord{"J1", "P2", 7});
}

TEST_CASE("parse errors name the physical line") {
    TempDir dir("ingest_errors");
    const auto path = dir.path() / "bad.csv";

    write_text(path, "J1,P1,-3\n");
    CHECK_THROWS_WITH_AS(read_all(path.string(), ingest::Format::delimited),
                         doctest::Contains(":1: negative citation count"), DataError);

    write_text(path, "J1,P1,3\nJ1,P2\n");
    CHECK_THROWS_WITH_AS(read_all(path.string(), ingest::Format::delimited),
                         doctest::Contains(":2: expected 3 comma-separated fields"), DataError);

    write_text(path, "J1,P1,3\n\nJ 2,P1,4\n");
    CHECK_THROWS_WITH_AS(read_all(path.string(), ingest::Format::delimited),
                         doctest::Contains(":3: invalid journal id"), DataError);

    write_text(path, "J1,P1,abc\n");
    CHECK_THROWS_WITH_AS(read_all(path.string(), ingest::Format::delimited),
                         doctest::Contains("malformed citation count"), DataError);

    CHECK_THROWS_WITH_AS(read_all((dir.path() / "missing.csv").string(),
                                  ingest::Format::delimited),
                         doctest::Contains("cannot open corpus file"), DataError);
}

TEST_CASE("jsonl corpus parses and validates ids") {
    TempDir dir("ingest_jsonl");
    const auto path = dir.path() / "corpus.jsonl";
    write_text(path,
               "{\"journal_id\":\"J1\",\"paper_id\":\"P1\",\"citations\":3}\n"
               "{\"journal_id\":\"J1\",\"paper_id\":\"P2\",\"citations\":0}\n");
    const auto records = read_all(path.string(), ingest::Format::jsonl);
    CHECK(records.size() == 2);
    CHECK(records[0] == PaperRecord{"J1", "P1", 3});

    write_text(path, "{\"journal_id\":\"J1\",\"paper_id\":\"P1\",\"citations\":-2}\n");
    CHECK_THROWS_WITH_AS(read_all(path.string(), ingest::Format::jsonl),
                         doctest::Contains(":1:"), DataError);

    write_text(path, "{\"journal_id\":\"J 1\",\"paper_id\":\"P1\",\"citations\":2}\n");
    CHECK_THROWS_WITH_AS(read_all(path.string(), ingest::Format::jsonl),
                         doctest::Contains("invalid journal id"), DataError);

    write_text(path, "not json\n");
    CHECK_THROWS_WITH_AS(read_all(path.string(), ingest::Format::jsonl),
                         doctest::Contains("invalid record"), DataError);
}

TEST_CASE("strict parse rejects repeated keys") {
    TempDir dir("ingest_dup");
    const auto path = dir.path() / "dup.csv";
    write_text(path, "J1,P1,3\nJ1,P1,3\n");
    CHECK_THROWS_WITH_AS(ingest::parse_corpus(path.string(), ingest::Format::delimited),
                         doctest::Contains("duplicate (journal_id, paper_id) key: (J1, P1)"),
                         DataError);
}

TEST_CASE("cleaning drops journals, removes duplicates, flags conflicts") {
    const std::vector<PaperRecord> records{
        {"J1", "P1", 3}, {"J2", "P1", 5}, {"J1", "P1", 3}, {"J1", "P2", 0}, {"J2", "P2", 1}};

    const auto [kept, log] = ingest::clean(records, {"J2"});
    CHECK(kept == std::vector<PaperRecord>{{"J1", "P1", 3}, {"J1", "P2", 0}});
    CHECK(log.rows_in == 5);
    CHECK(log.rows_out == 2);
    CHECK(log.duplicates_removed == 1);
    CHECK(log.journals_dropped == 1);
    CHECK(log.rows_in - log.rows_out == log.duplicates_removed + 2);

    const std::vector<PaperRecord> conflict{{"J1", "P1", 3}, {"J1", "P1", 4}};
    CHECK_THROWS_WITH_AS(ingest::clean(conflict, {}),
                         "conflicting duplicate for (J1, P1): citation counts 3 and 4",
                         DataError);
}

TEST_CASE("cleaning is idempotent") {
    const std::vector<PaperRecord> records{
        {"J1", "P1", 3}, {"J1", "P1", 3}, {"J2", "P1", 9}};
    const auto [once, log1] = ingest::clean(records, {});
    const auto [twice, log2] = ingest::clean(once, {});
    CHECK(once == twice);
    CHECK(log2.duplicates_removed == 0);
    CHECK(log2.rows_in == log2.rows_out);
}

TEST_CASE("streaming filter matches the materialized cleaner") {
    const std::vector<PaperRecord> records{
        {"J1", "P1", 3}, {"J2", "P1", 5}, {"J1", "P1", 3}, {"J3", "P1", 2}, {"J2", "P9", 4}};
    ingest::CleaningFilter filter({"J3"});
    std::vector<PaperRecord> streamed;
    for (const auto& record : records) {
        if (filter.admit(record)) streamed.push_back(record);
    }
    const auto [kept, log] = ingest::clean(records, {"J3"});
    CHECK(streamed == kept);
    CHECK(filter.log() == log);
}

TEST_CASE("aggregation is order-independent and conserves citations") {
    std::vector<PaperRecord> records;
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::uint32_t> draw(0, 50);
    std::uint64_t total = 0;
    for (int j = 0; j < 5; ++j) {
        for (int p = 0; p < 40; ++p) {
            const std::uint32_t c = draw(rng);
            total += c;
            records.push_back(
                {"J" + std::to_string(j), "P" + std::to_string(p), c});
        }
    }
    auto shuffled = records;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);

    const auto a = ingest::aggregate(records);
    const auto b = ingest::aggregate(shuffled);
    CHECK(a == b);
    CHECK(a.size() == 5);
    std::uint64_t aggregated = 0;
    for (const auto& [id, profile] : a) aggregated += profile.total_citations();
    CHECK(aggregated == total);
}

TEST_CASE("delimited writer round-trips through the reader") {
    const std::vector<PaperRecord> records{{"J1", "P1", 3}, {"J2", "P.x:2-a_b", 0}};
    std::ostringstream out;
    ingest::write_delimited(out, records);
    const std::string text = out.str();
    CHECK(text.substr(0, ingest::kDelimitedHeader.size()) == ingest::kDelimitedHeader);

    TempDir dir("ingest_roundtrip");
    const auto path = dir.path() / "round.csv";
    write_text(path, text);
    CHECK(read_all(path.string(), ingest::Format::delimited) == records);
}
