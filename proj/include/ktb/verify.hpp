#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ktb/family.hpp"
#include "ktb/report.hpp"

namespace ktb {

enum class Applicability { any_frame, family_only };

struct LemmaInfo {
    std::string id;
    Applicability applicability;
    std::string summary;
    /// Exploratory checks are recorded but not expected to pass everywhere.
    bool exploratory = false;
};

/// Fixed catalog, in execution order.
const std::vector<LemmaInfo>& list_lemmas();

/// Element quantifiers switch to sampling beyond 2^22 elements.
inline constexpr std::size_t kExhaustiveAtomTier = 22;
/// Pair quantifiers (axioms) stay exhaustive up to 2^13 elements, i.e. 2^26 pairs.
inline constexpr std::size_t kExhaustivePairAtomTier = 13;

struct VerifyOptions {
    /// nullopt picks exhaustive when the universe is small enough, sampled otherwise.
    std::optional<CheckMode> mode;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t samples = kDefaultSamples;
    /// Second family for "diff" (same p as the target).
    std::optional<std::set<int>> against;
};

/// A raw frame (quantifiers range over all of Cm(F)) or a truncation (quantifiers range
/// over the subalgebra generated by D).
using VerifyTarget = std::variant<Frame, FamilySpec>;

Report verify_lemma(const std::string& id, const VerifyTarget& target, const VerifyOptions& opts = {});

/// Every applicable catalog entry, run on up to `jobs` threads; results in catalog order.
std::vector<Report> verify_all(const VerifyTarget& target, const VerifyOptions& opts = {}, unsigned jobs = 1);

} // namespace ktb
