#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ktb/subset.hpp"

namespace ktb {

using Edge = std::pair<std::size_t, std::size_t>;

/// Reflexive-symmetric Kripke frame stored as a simple graph.
///
/// Loops are never stored; the accessibility relation is the reflexive closure of the
/// edge set, so closed_neighborhood(v) always contains v. Frames are immutable.
class Frame {
public:
    Frame() = default;

    /// Symmetric closure of `edges`; duplicates are merged. Self-loops and out-of-range
    /// endpoints are rejected. Labels, when given, must be unique and one per vertex.
    static Frame from_edges(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels = {});

    std::size_t size() const noexcept { return open_.size(); }
    const Subset& neighbors(std::size_t v) const { return open_.at(v); }
    const Subset& closed_neighborhood(std::size_t v) const { return closed_.at(v); }
    bool adjacent(std::size_t u, std::size_t v) const { return open_.at(u).test(v); }
    std::size_t degree(std::size_t v) const { return open_.at(v).count(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    /// Edges as (i, j) with i < j, lexicographically sorted.
    std::vector<Edge> edges() const;

    Subset empty_set() const { return Subset(size()); }
    Subset full_set() const { return Subset::full(size()); }

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    /// Label of v, or its decimal index when the frame is unlabeled.
    std::string name(std::size_t v) const;
    /// Resolves a label, or a decimal index when no label matches.
    std::optional<std::size_t> find(const std::string& name) const;

    Frame relabeled(std::vector<std::string> labels) const;

    friend bool operator==(const Frame& a, const Frame& b) { return a.open_ == b.open_; }

private:
    std::vector<Subset> open_;
    std::vector<Subset> closed_;
    std::vector<std::string> labels_;
    std::size_t edge_count_ = 0;
};

inline Frame frame_from_edges(std::size_t n, std::span<const Edge> edges)
{
    return Frame::from_edges(n, edges);
}

/// Complete graph K_n, path P_n, cycle C_n and edgeless graph on n vertices.
Frame complete_frame(std::size_t n);
Frame path_frame(std::size_t n);
Frame cycle_frame(std::size_t n);
Frame edgeless_frame(std::size_t n);

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Shortest-path distances from v; unreachable vertices get kUnreachable.
std::vector<std::size_t> bfs_distances(const Frame& f, std::size_t v);

/// Vertex order of a breadth-first traversal from `root`, continuing with the lowest
/// unvisited vertex when a component is exhausted.
std::vector<std::size_t> bfs_order(const Frame& f, std::size_t root = 0);

bool is_connected(const Frame& f);

/// Largest pairwise distance; nullopt when the frame is disconnected.
std::optional<std::size_t> diameter(const Frame& f);

/// Graphviz rendering with loops omitted.
std::string to_dot(const Frame& f, const std::string& name = "G");

/// Subset as "{a, b}" using vertex names.
std::string format_subset(const Frame& f, const Subset& s);

/// Parses a comma separated list of vertex names (labels or indices) into a subset.
/// An empty string, "{}" or "empty" yields the empty set; "W" or "all" the full set.
Subset parse_subset(const Frame& f, const std::string& text);

} // namespace ktb
