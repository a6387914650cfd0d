#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ktb/frame.hpp"

namespace ktb {

enum class CheckMode { exhaustive, sampled };

inline constexpr std::uint64_t kDefaultSeed = 20190611;
inline constexpr std::uint64_t kDefaultSamples = 100000;

struct Counterexample {
    /// Named witness sets, e.g. {"X", {...}}.
    std::vector<std::pair<std::string, Subset>> sets;
    /// Partition witness in restricted-growth form (block index per vertex).
    std::vector<std::size_t> partition;
    std::string reason;
};

/// Verdict of one property check. A failing report always carries a counterexample.
struct Report {
    std::string lemma;
    std::string frame;
    CheckMode mode = CheckMode::exhaustive;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t cases = 0;
    bool passed = true;
    std::optional<Counterexample> counterexample;
    std::string note;
    std::vector<std::pair<std::string, std::string>> details;
    double millis = 0.0;

    void fail(Counterexample c)
    {
        passed = false;
        counterexample = std::move(c);
    }
};

struct JsonOptions {
    /// Wall time breaks byte-for-byte reproducibility, so it is opt-in.
    bool include_timing = false;
};

/// Serialises to {lemma, frame, mode, seed?, cases, status, counterexample?, millis?, ...}.
/// Vertex names come from `names_from`.
std::string report_to_json(const Report& r, const Frame& names_from, JsonOptions opts = {});

std::string format_partition(const std::vector<std::size_t>& block_of);

} // namespace ktb
