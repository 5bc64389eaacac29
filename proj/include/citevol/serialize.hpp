#pragma once

#include <json.hpp>

#include "citevol/ingest.hpp"
#include "citevol/model.hpp"

// JSON mappings for the value types. Parsing re-validates through the same
// constructors as direct construction, so a round trip can never smuggle in
// an invalid value.

namespace citevol {

void to_json(nlohmann::json& j, const PaperRecord& r);
void from_json(const nlohmann::json& j, PaperRecord& r);

void to_json(nlohmann::json& j, const VolatilityReport& r);
void from_json(const nlohmann::json& j, VolatilityReport& r);

void to_json(nlohmann::json& j, const CorpusStats& s);
void from_json(const nlohmann::json& j, CorpusStats& s);

void to_json(nlohmann::json& j, const JournalProfile& p);
void to_json(nlohmann::json& j, const SubjectStats& s);
void to_json(nlohmann::json& j, const LowCitationMixture& m);
void to_json(nlohmann::json& j, const SynthConfig& c);

namespace ingest {
void to_json(nlohmann::json& j, const CleaningLog& log);
void from_json(const nlohmann::json& j, CleaningLog& log);
}  // namespace ingest

}  // namespace citevol

namespace nlohmann {

template <>
struct adl_serializer<citevol::JournalProfile> {
    static citevol::JournalProfile from_json(const json& j);
    static void to_json(json& j, const citevol::JournalProfile& p) { citevol::to_json(j, p); }
};

template <>
struct adl_serializer<citevol::SubjectStats> {
    static citevol::SubjectStats from_json(const json& j);
    static void to_json(json& j, const citevol::SubjectStats& s) { citevol::to_json(j, s); }
};

template <>
struct adl_serializer<citevol::SynthConfig> {
    static citevol::SynthConfig from_json(const json& j);
    static void to_json(json& j, const citevol::SynthConfig& c) { citevol::to_json(j, c); }
};

}  // namespace nlohmann
