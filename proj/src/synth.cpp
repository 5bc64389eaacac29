#include "citevol/synth.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "citevol/ingest.hpp"

namespace citevol::synth {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
// Upper quartile of the standard normal, for the quartile -> sigma fit.
constexpr double kNormalQ3 = 0.67448975019608171;

std::string padded_id(char prefix, std::uint64_t value, int width) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%c%0*llu", prefix, width,
                  static_cast<unsigned long long>(value));
    return buf;
}

}  // namespace

Generator::Generator(SynthConfig config) : config_(std::move(config)), rng_(config_.seed()) {
    const auto& q = config_.size_quartiles();
    log_mu_ = std::log(static_cast<double>(q[1]));
    log_sigma_ = (std::log(static_cast<double>(q[2])) - std::log(static_cast<double>(q[0]))) /
                 (2.0 * kNormalQ3);
}

double Generator::uniform01() {
    // Top 53 bits of the 64-bit draw, scaled to [0, 1).
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

double Generator::normal() {
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps the log finite
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

std::uint64_t Generator::draw_size() {
    const double size = std::exp(log_mu_ + log_sigma_ * normal());
    if (size < 1.0) return 1;
    return static_cast<std::uint64_t>(std::llround(size));
}

std::uint32_t Generator::draw_citations() {
    const auto& mix = config_.low_citation_mixture();
    if (uniform01() < mix.tail_fraction) {
        // Discrete Pareto: continuous tail with scale cutoff - 0.5 and survival
        // exponent tail_exponent - 1, rounded to the nearest integer. The
        // half-step scale makes the rounded counts start exactly at the cutoff.
        const double u = uniform01();
        const double scale = static_cast<double>(config_.tail_cutoff()) - 0.5;
        double x = scale * std::pow(1.0 - u, -1.0 / (config_.tail_exponent() - 1.0));
        const double cap = static_cast<double>(std::numeric_limits<std::uint32_t>::max());
        if (x > cap) x = cap;
        return static_cast<std::uint32_t>(std::llround(x));
    }
    // Truncated geometric over {0 .. cutoff-1}: P(k) proportional to ratio^k.
    const double r = mix.geometric_ratio;
    const double u = uniform01();
    const std::uint32_t cutoff = config_.tail_cutoff();
    double pk = (1.0 - r) / (1.0 - std::pow(r, static_cast<double>(cutoff)));
    double cumulative = 0.0;
    for (std::uint32_t k = 0; k + 1 < cutoff; ++k) {
        cumulative += pk;
        if (u < cumulative) return k;
        pk *= r;
    }
    return cutoff - 1;
}

bool Generator::next(PaperRecord& out) {
    if (paper_index_ == journal_size_) {
        if (journal_index_ == config_.journal_count()) return false;
        ++journal_index_;
        journal_size_ = draw_size();
        paper_index_ = 0;
        journal_id_ = padded_id('J', journal_index_, 5);
    }
    ++paper_index_;
    out.journal_id = journal_id_;
    out.paper_id = padded_id('P', paper_index_, 6);
    out.citations = draw_citations();
    return true;
}

std::vector<PaperRecord> generate(const SynthConfig& config) {
    Generator generator(config);
    std::vector<PaperRecord> records;
    PaperRecord record;
    while (generator.next(record)) records.push_back(record);
    return records;
}

std::map<std::string, JournalProfile> generate_profiles(const SynthConfig& config) {
    Generator generator(config);
    ingest::Aggregator aggregator;  // generated keys are unique by construction
    PaperRecord record;
    while (generator.next(record)) aggregator.add(record);
    return aggregator.finish();
}

std::map<std::string, JournalProfile> table1_corpus() {
    std::map<std::string, JournalProfile> profiles;
    const std::pair<const char*, std::size_t> journals[] = {
        {"A", 50}, {"B", 500}, {"C", 5000}, {"D", 50000}};
    for (const auto& [id, size] : journals) {
        profiles.emplace(id, JournalProfile(id, std::vector<std::uint32_t>(size, 3)));
    }
    return profiles;
}

}  // namespace citevol::synth
