#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ktb/frame.hpp"

namespace ktb {

/// Set partition of a frame's vertices in restricted-growth form: block_of(0) = 0 and
/// each vertex opens at most one new block past the largest used so far.
class Partition {
public:
    Partition() = default;
    /// Normalises any block labelling to restricted-growth form.
    static Partition from_labels(const std::vector<std::size_t>& labels);
    /// Parses "0,1,0,2"; the string must already be in restricted-growth form.
    static Partition parse(const std::string& text);
    static Partition discrete(std::size_t n);
    static Partition total(std::size_t n);

    std::size_t size() const noexcept { return block_of_.size(); }
    std::size_t blocks() const noexcept { return blocks_; }
    std::size_t block_of(std::size_t v) const { return block_of_.at(v); }
    const std::vector<std::size_t>& labels() const noexcept { return block_of_; }
    std::vector<Subset> block_sets() const;
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.block_of_ <=> b.block_of_; }

private:
    std::vector<std::size_t> block_of_;
    std::size_t blocks_ = 0;
};

/// Forth and back conditions for h: F -> G under the reflexive closures.
bool is_bounded_morphism(const Frame& f, const Frame& g, const std::vector<std::size_t>& h);

/// Whether the partition is the kernel of a bounded morphism onto its quotient: for any
/// two blocks joined by an edge, each vertex of either block has a neighbour in the other.
bool is_stable_partition(const Frame& f, const Partition& p);

/// Blocks become vertices; distinct blocks are adjacent iff some edge crosses them.
/// Rejects unstable partitions.
Frame quotient(const Frame& f, const Partition& p);

/// Exhaustive enumeration tier for stable partitions.
inline constexpr std::size_t kPartitionTier = 16;

/// Return false from the visitor to stop the enumeration.
using PartitionVisitor = std::function<bool(const Partition&)>;

/// Visits every stable partition with min_blocks <= blocks <= max_blocks exactly once.
/// Vertices are assigned in breadth-first order from vertex 0 and blocks in
/// restricted-growth order along that sequence; partial assignments that can no
/// longer become stable are cut. Returns the number of partitions visited.
std::size_t enumerate_stable_partitions(const Frame& f, std::size_t min_blocks, std::size_t max_blocks,
                                        const PartitionVisitor& visit);

std::vector<Partition> stable_partitions(const Frame& f, std::size_t min_blocks, std::size_t max_blocks);

enum class CoverStatus { pass, fail, not_applicable };

struct CoverVerdict {
    CoverStatus status = CoverStatus::not_applicable;
    std::optional<Partition> witness;
    std::string reason;
};

const char* to_string(CoverStatus s);

/// A connected frame on n >= 3 vertices passes when its only stable partitions are the
/// discrete one, the total one and two-block ones (whose quotient is K2). Otherwise the
/// first stable partition with 3..n-1 blocks is returned as the witness.
CoverVerdict cover_check(const Frame& f);

/// Stable two-block partition from a BFS-tree 2-colouring. Needs a connected frame with n >= 2.
Partition k2_partition(const Frame& f);

/// JSON {status, witness?, blocks?, quotient?, reason?}.
std::string cover_verdict_to_json(const CoverVerdict& v, const Frame& f);

} // namespace ktb
