#include "ktb/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>

#include <json.hpp>

#include "ktb/canonical.hpp"
#include "ktb/errors.hpp"
#include "ktb/graph6.hpp"

namespace ktb {

namespace {

bool connected_without(const Frame& f, std::size_t removed)
{
    const std::size_t n = f.size();
    if (n <= 2)
        return true;
    Subset alive = f.full_set();
    alive.reset(removed);
    const std::size_t start = removed == 0 ? 1 : 0;
    Subset seen = Subset::of(n, {start});
    Subset frontier = seen;
    while (!frontier.empty()) {
        Subset next(n);
        frontier.for_each([&](std::size_t v) { next |= f.neighbors(v); });
        next &= alive;
        frontier = next.minus(seen);
        seen |= next;
    }
    return seen == alive;
}

Frame extend(const Frame& parent, std::uint64_t attach)
{
    const std::size_t n = parent.size();
    std::vector<Edge> edges = parent.edges();
    for (std::size_t v = 0; v < n; ++v)
        if ((attach >> v) & 1u)
            edges.emplace_back(v, n);
    return Frame::from_edges(n + 1, edges);
}

bool is_canonical_child(const Frame& child)
{
    const std::size_t added = child.size() - 1;
    const CanonicalLabeling lab = canonical_labeling(child);
    for (auto it = lab.order.rbegin(); it != lab.order.rend(); ++it) {
        if (!connected_without(child, *it))
            continue;
        return *it == added || same_orbit(child, *it, added);
    }
    return false;
}

bool grow(const Frame& g, std::size_t n, const GraphVisitor& visit, std::uint64_t& count)
{
    if (g.size() == n) {
        ++count;
        return visit(g);
    }
    std::set<std::string> seen;
    const std::uint64_t subsets = std::uint64_t{1} << g.size();
    for (std::uint64_t attach = 1; attach < subsets; ++attach) {
        Frame child = extend(g, attach);
        if (!is_canonical_child(child))
            continue;
        if (!seen.insert(canonical_form(child)).second)
            continue;
        if (!grow(child, n, visit, count))
            return false;
    }
    return true;
}

} // namespace

std::uint64_t enumerate_connected_graphs(std::size_t n, const GraphVisitor& visit)
{
    if (n < 1 || n > kEnumerationTier)
        throw Error(Errc::tier_exceeded, "graph enumeration supports 1 <= n <= " + std::to_string(kEnumerationTier));
    std::uint64_t count = 0;
    grow(edgeless_frame(1), n, visit, count);
    return count;
}

std::vector<Frame> connected_graphs(std::size_t n)
{
    std::vector<Frame> out;
    enumerate_connected_graphs(n, [&](const Frame& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

namespace {

struct Outcome {
    CoverVerdict verdict;
    Frame frame;
    double millis = 0.0;
};

Outcome run_one(const std::string& line)
{
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        out.frame = decode_graph6(line);
        out.verdict = cover_check(out.frame);
    } catch (const Error& e) {
        out.verdict = CoverVerdict{CoverStatus::not_applicable, std::nullopt, e.what()};
    }
    out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

} // namespace

CoverPipeline::CoverPipeline(LineSink sink, FilterOptions opts) : sink_(std::move(sink)), opts_(opts)
{
    opts_.jobs = std::max(1u, opts_.jobs);
    opts_.batch = std::max<std::size_t>(1, opts_.batch);
}

void CoverPipeline::push(std::string graph6)
{
    pending_.push_back(std::move(graph6));
    if (pending_.size() >= opts_.batch)
        flush();
}

void CoverPipeline::flush()
{
    std::vector<Outcome> results(pending_.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < pending_.size(); i = next++)
            results[i] = run_one(pending_[i]);
    };
    const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(opts_.jobs, pending_.size()));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    for (std::size_t i = 0; i < pending_.size(); ++i) {
        const Outcome& o = results[i];
        nlohmann::ordered_json j;
        j["seq"] = next_seq_++;
        j["graph6"] = pending_[i];
        j["n"] = o.frame.size();
        j["status"] = to_string(o.verdict.status);
        if (o.verdict.witness) {
            j["witness"] = o.verdict.witness->to_string();
            j["blocks"] = o.verdict.witness->blocks();
        }
        if (!o.verdict.reason.empty())
            j["reason"] = o.verdict.reason;
        if (opts_.include_timing)
            j["millis"] = o.millis;
        sink_(j.dump());
        ++summary_.total;
        switch (o.verdict.status) {
        case CoverStatus::pass: ++summary_.pass; break;
        case CoverStatus::fail: ++summary_.fail; break;
        case CoverStatus::not_applicable: ++summary_.na; break;
        }
    }
    pending_.clear();
}

FilterSummary CoverPipeline::finish()
{
    if (!pending_.empty())
        flush();
    return summary_;
}

FilterSummary filter_covers(std::istream& in, const LineSink& sink, FilterOptions opts)
{
    CoverPipeline pipe(sink, opts);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (!line.empty())
            pipe.push(line);
    }
    return pipe.finish();
}

FilterSummary search_covers(std::size_t min_n, std::size_t max_n, const LineSink& sink, FilterOptions opts)
{
    if (max_n > kEnumerationTier)
        throw Error(Errc::tier_exceeded, "search supports max-n <= " + std::to_string(kEnumerationTier));
    if (min_n < 1 || min_n > max_n)
        throw Error(Errc::invalid_argument, "search needs 1 <= min-n <= max-n");
    CoverPipeline pipe(sink, opts);
    for (std::size_t n = min_n; n <= max_n; ++n)
        enumerate_connected_graphs(n, [&](const Frame& f) {
            pipe.push(encode_graph6(f));
            return true;
        });
    return pipe.finish();
}

std::string summary_to_json(const FilterSummary& s)
{
    nlohmann::ordered_json j;
    j["total"] = s.total;
    j["pass"] = s.pass;
    j["fail"] = s.fail;
    j["na"] = s.na;
    return nlohmann::ordered_json{{"summary", j}}.dump();
}

CoverVerdict oracle_partition_check(const Frame& f)
{
    const std::size_t n = f.size();
    if (n > kOracleTier)
        throw Error(Errc::tier_exceeded, "the naive partition oracle supports n <= " + std::to_string(kOracleTier));
    if (n <= 2)
        return {CoverStatus::not_applicable, std::nullopt, "fewer than three vertices"};
    if (!is_connected(f))
        return {CoverStatus::not_applicable, std::nullopt, "frame is disconnected"};

    std::vector<std::size_t> rgs(n, 0), max_prefix(n, 0);
    while (true) {
        const std::size_t blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        if (blocks >= 3 && blocks < n) {
            std::vector<Edge> qedges;
            for (const auto& [u, v] : f.edges())
                if (rgs[u] != rgs[v])
                    qedges.emplace_back(std::min(rgs[u], rgs[v]), std::max(rgs[u], rgs[v]));
            const Frame q = Frame::from_edges(blocks, qedges);
            if (is_bounded_morphism(f, q, rgs))
                return {CoverStatus::fail, Partition::from_labels(rgs), "stable partition with 3..n-1 blocks"};
        }
        // Next restricted-growth string: rgs[i] may grow up to max(rgs[0..i-1]) + 1.
        std::size_t i = n - 1;
        while (i > 0 && rgs[i] > max_prefix[i - 1])
            --i;
        if (i == 0)
            break;
        ++rgs[i];
        max_prefix[i] = std::max(max_prefix[i - 1], rgs[i]);
        for (std::size_t k = i + 1; k < n; ++k) {
            rgs[k] = 0;
            max_prefix[k] = max_prefix[i];
        }
    }
    return {CoverStatus::pass, std::nullopt, {}};
}

} // namespace ktb
