#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "citevol/model.hpp"

namespace citevol::synth {

// Deterministic corpus generator: identical config, identical record stream.
// The PRNG is std::mt19937_64 seeded with config.seed(). All variate
// transforms are explicit (53-bit uniform mantissa draws, Box-Muller
// log-normal journal sizes, inverse-CDF Pareto tail scaled at cutoff - 0.5
// and rounded to nearest, truncated-geometric sub-cutoff counts), so the
// stream does not depend on standard-library distribution internals.
class Generator {
  public:
    explicit Generator(SynthConfig config);

    // Returns false once every journal has been emitted.
    bool next(PaperRecord& out);

    [[nodiscard]] const SynthConfig& config() const { return config_; }

  private:
    double uniform01();             // in [0, 1)
    double normal();                // standard normal, one per two uniforms
    std::uint64_t draw_size();      // >= 1
    std::uint32_t draw_citations();

    SynthConfig config_;
    std::mt19937_64 rng_;
    double log_mu_ = 0.0;
    double log_sigma_ = 1.0;
    std::uint64_t journal_index_ = 0;   // journals emitted so far
    std::uint64_t paper_index_ = 0;     // papers emitted in current journal
    std::uint64_t journal_size_ = 0;
    std::string journal_id_;
};

// Materialized stream, in emission order.
std::vector<PaperRecord> generate(const SynthConfig& config);

// Streaming aggregation of the generated corpus straight into profiles.
std::map<std::string, JournalProfile> generate_profiles(const SynthConfig& config);

// Fixed four-journal ladder: sizes 50/500/5,000/50,000, every paper cited 3
// times, so each journal's citation average is exactly 3.
std::map<std::string, JournalProfile> table1_corpus();

}  // namespace citevol::synth
