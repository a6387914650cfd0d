#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <string>
#include <vector>

#include "ktb/morphisms.hpp"

namespace ktb {

inline constexpr std::size_t kEnumerationTier = 10;
inline constexpr std::size_t kOracleTier = 8;

/// Return false to stop the enumeration.
using GraphVisitor = std::function<bool(const Frame&)>;

/// One representative per isomorphism class of connected graphs on n vertices, grown
/// depth-first by adding a vertex to a smaller connected graph. A child is kept only
/// when the new vertex lies in the orbit of its canonical deletion vertex: the non-cut
/// vertex with the highest canonical position. Returns the number of graphs visited.
std::uint64_t enumerate_connected_graphs(std::size_t n, const GraphVisitor& visit);
std::vector<Frame> connected_graphs(std::size_t n);

struct FilterSummary {
    std::uint64_t total = 0;
    std::uint64_t pass = 0;
    std::uint64_t fail = 0;
    std::uint64_t na = 0;
};

struct FilterOptions {
    unsigned jobs = 1;
    /// Records are released in input order once per batch.
    std::size_t batch = 256;
    bool include_timing = false;
};

using LineSink = std::function<void(const std::string&)>;

/// Cover test over a stream of graph6 lines. Each line becomes one JSON record
/// {seq, graph6, n, status, witness?, blocks?, reason?, millis?}; records come out in input
/// order for any worker count. Decode and tier errors are recorded as not_applicable.
class CoverPipeline {
public:
    CoverPipeline(LineSink sink, FilterOptions opts = {});
    void push(std::string graph6);
    /// Flushes the pending batch and returns the totals; the summary line is not emitted.
    FilterSummary finish();

private:
    void flush();

    LineSink sink_;
    FilterOptions opts_;
    std::vector<std::string> pending_;
    std::uint64_t next_seq_ = 1;
    FilterSummary summary_;
};

/// Runs every non-blank line of `in` through a CoverPipeline.
FilterSummary filter_covers(std::istream& in, const LineSink& sink, FilterOptions opts = {});
/// Runs every connected graph with min_n..max_n vertices through a CoverPipeline.
FilterSummary search_covers(std::size_t min_n, std::size_t max_n, const LineSink& sink, FilterOptions opts = {});

std::string summary_to_json(const FilterSummary& s);

/// Naive cover test: every set partition, stability judged through the bounded-morphism
/// definition on the quotient map. The witness is the first failing partition in
/// restricted-growth lexicographic order, so it may differ from cover_check's.
CoverVerdict oracle_partition_check(const Frame& f);

} // namespace ktb
