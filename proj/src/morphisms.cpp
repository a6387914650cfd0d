#include "ktb/morphisms.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include <json.hpp>

#include "ktb/canonical.hpp"
#include "ktb/graph6.hpp"

namespace ktb {

Partition Partition::from_labels(const std::vector<std::size_t>& labels)
{
    Partition p;
    std::map<std::size_t, std::size_t> renumber;
    p.block_of_.reserve(labels.size());
    for (auto l : labels) {
        auto [it, fresh] = renumber.emplace(l, renumber.size());
        p.block_of_.push_back(it->second);
    }
    p.blocks_ = renumber.size();
    return p;
}

Partition Partition::parse(const std::string& text)
{
    std::vector<std::size_t> labels;
    std::size_t cur = 0;
    bool have_digit = false;
    for (char c : text) {
        if (c >= '0' && c <= '9') {
            cur = cur * 10 + static_cast<std::size_t>(c - '0');
            have_digit = true;
        } else if (c == ',') {
            if (!have_digit)
                throw Error(Errc::parse_error, "empty entry in partition '" + text + "'");
            labels.push_back(cur);
            cur = 0;
            have_digit = false;
        } else if (c != ' ') {
            throw Error(Errc::parse_error, "illegal character in partition '" + text + "'");
        }
    }
    if (have_digit)
        labels.push_back(cur);
    else if (!labels.empty())
        throw Error(Errc::parse_error, "trailing comma in partition '" + text + "'");
    std::size_t next = 0;
    for (auto l : labels) {
        if (l > next)
            throw Error(Errc::parse_error, "partition '" + text + "' is not in restricted-growth form");
        if (l == next)
            ++next;
    }
    return from_labels(labels);
}

Partition Partition::discrete(std::size_t n)
{
    std::vector<std::size_t> l(n);
    for (std::size_t i = 0; i < n; ++i)
        l[i] = i;
    return from_labels(l);
}

Partition Partition::total(std::size_t n) { return from_labels(std::vector<std::size_t>(n, 0)); }

std::vector<Subset> Partition::block_sets() const
{
    std::vector<Subset> out(blocks_, Subset(size()));
    for (std::size_t v = 0; v < size(); ++v)
        out[block_of_[v]].set(v);
    return out;
}

std::string Partition::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < block_of_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(block_of_[i]);
    }
    return out;
}

bool is_bounded_morphism(const Frame& f, const Frame& g, const std::vector<std::size_t>& h)
{
    if (h.size() != f.size())
        throw Error(Errc::invalid_argument, "map must be total on the source frame");
    for (auto y : h)
        if (y >= g.size())
            throw Error(Errc::out_of_range, "map value " + std::to_string(y) + " outside the target frame");
    for (auto [x, y] : f.edges())
        if (h[x] != h[y] && !g.adjacent(h[x], h[y]))
            return false;
    for (std::size_t x = 0; x < f.size(); ++x) {
        Subset image(g.size());
        f.closed_neighborhood(x).for_each([&](std::size_t y) { image.set(h[y]); });
        if (!g.closed_neighborhood(h[x]).subset_of(image))
            return false;
    }
    return true;
}

namespace {

void check_partition(const Frame& f, const Partition& p)
{
    if (p.size() != f.size())
        throw Error(Errc::invalid_argument, "partition covers " + std::to_string(p.size()) +
                                                " vertices, frame has " + std::to_string(f.size()));
}

} // namespace

bool is_stable_partition(const Frame& f, const Partition& p)
{
    check_partition(f, p);
    const auto blocks = p.block_sets();
    std::vector<std::optional<Subset>> signature(p.blocks());
    for (std::size_t v = 0; v < f.size(); ++v) {
        Subset touched(p.blocks());
        for (std::size_t b = 0; b < blocks.size(); ++b)
            if (b != p.block_of(v) && f.neighbors(v).intersects(blocks[b]))
                touched.set(b);
        auto& sig = signature[p.block_of(v)];
        if (!sig)
            sig = touched;
        else if (*sig != touched)
            return false;
    }
    return true;
}

Frame quotient(const Frame& f, const Partition& p)
{
    if (!is_stable_partition(f, p))
        throw Error(Errc::invalid_argument, "partition " + p.to_string() + " is not stable");
    std::vector<Edge> edges;
    for (auto [x, y] : f.edges()) {
        auto a = p.block_of(x), b = p.block_of(y);
        if (a != b)
            edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<std::string> labels;
    if (f.has_labels()) {
        labels.assign(p.blocks(), "");
        for (std::size_t v = 0; v < f.size(); ++v) {
            auto& l = labels[p.block_of(v)];
            l += (l.empty() ? "" : "+") + f.name(v);
        }
    }
    return Frame::from_edges(p.blocks(), edges, labels);
}

namespace {

// Backtracking over block assignments in BFS order. Per vertex w we track which blocks
// already hold a neighbour of w ("touched", own block ignored when compared) and how many
// neighbours are still unassigned. In a stable partition all members of a block touch the same blocks, so a
// block is dead once some member misses more of the block's combined touched set than
// it has unassigned neighbours left to cover it.
class StableSearch {
public:
    StableSearch(const Frame& f, std::size_t min_blocks, std::size_t max_blocks, const PartitionVisitor& visit)
        : f_(f), n_(f.size()), min_(min_blocks), max_(std::min(max_blocks, f.size())), visit_(visit),
          order_(bfs_order(f)), block_(n_, kNone), members_(n_), touch_count_(n_, std::vector<int>(n_, 0)),
          touched_(n_, 0), unassigned_(n_)
    {
        for (std::size_t v = 0; v < n_; ++v)
            unassigned_[v] = f.degree(v);
    }

    std::size_t run()
    {
        if (n_ == 0 || min_ > max_)
            return 0;
        descend(0);
        return found_;
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    bool block_viable(std::size_t b) const
    {
        const std::uint32_t own = ~(1u << b);
        std::uint32_t all = 0;
        for (auto w : members_[b])
            all |= touched_[w] & own;
        for (auto w : members_[b])
            if (static_cast<std::size_t>(std::popcount(all & ~touched_[w])) > unassigned_[w])
                return false;
        return true;
    }

    void place(std::size_t v, std::size_t b)
    {
        block_[v] = b;
        members_[b].push_back(v);
        f_.neighbors(v).for_each([&](std::size_t w) {
            --unassigned_[w];
            if (touch_count_[w][b]++ == 0)
                touched_[w] |= 1u << b;
        });
    }

    void unplace(std::size_t v, std::size_t b)
    {
        f_.neighbors(v).for_each([&](std::size_t w) {
            ++unassigned_[w];
            if (--touch_count_[w][b] == 0)
                touched_[w] &= ~(1u << b);
        });
        block_[v] = kNone;
        members_[b].pop_back();
    }

    bool viable_after(std::size_t v) const
    {
        if (!block_viable(block_[v]))
            return false;
        bool ok = true;
        f_.neighbors(v).for_each([&](std::size_t w) {
            if (ok && block_[w] != kNone && block_[w] != block_[v] && !block_viable(block_[w]))
                ok = false;
        });
        return ok;
    }

    bool descend(std::size_t depth)
    {
        if (depth == n_) {
            if (blocks_ < min_)
                return true;
            std::vector<std::size_t> labels(block_.begin(), block_.end());
            ++found_;
            return visit_(Partition::from_labels(labels));
        }
        if (blocks_ + (n_ - depth) < min_)
            return true;
        const std::size_t v = order_[depth];
        const std::size_t limit = std::min(blocks_ + 1, max_);
        for (std::size_t b = 0; b < limit; ++b) {
            const bool fresh = b == blocks_;
            if (fresh)
                ++blocks_;
            place(v, b);
            bool keep_going = true;
            if (viable_after(v))
                keep_going = descend(depth + 1);
            unplace(v, b);
            if (fresh)
                --blocks_;
            if (!keep_going)
                return false;
        }
        return true;
    }

    const Frame& f_;
    std::size_t n_, min_, max_;
    const PartitionVisitor& visit_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> block_;
    std::vector<std::vector<std::size_t>> members_;
    std::vector<std::vector<int>> touch_count_;
    std::vector<std::uint32_t> touched_;
    std::vector<std::size_t> unassigned_;
    std::size_t blocks_ = 0;
    std::size_t found_ = 0;
};

} // namespace

std::size_t enumerate_stable_partitions(const Frame& f, std::size_t min_blocks, std::size_t max_blocks,
                                        const PartitionVisitor& visit)
{
    if (f.size() > kPartitionTier)
        throw Error(Errc::tier_exceeded, "stable-partition enumeration is limited to " +
                                             std::to_string(kPartitionTier) + " vertices, got " +
                                             std::to_string(f.size()));
    return StableSearch(f, min_blocks, max_blocks, visit).run();
}

std::vector<Partition> stable_partitions(const Frame& f, std::size_t min_blocks, std::size_t max_blocks)
{
    std::vector<Partition> out;
    enumerate_stable_partitions(f, min_blocks, max_blocks, [&](const Partition& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

const char* to_string(CoverStatus s)
{
    switch (s) {
    case CoverStatus::pass: return "pass";
    case CoverStatus::fail: return "fail";
    case CoverStatus::not_applicable: return "not_applicable";
    }
    return "?";
}

CoverVerdict cover_check(const Frame& f)
{
    CoverVerdict v;
    if (f.size() <= 2) {
        v.reason = "frames with at most two vertices generate varieties of height at most 2";
        return v;
    }
    if (!is_connected(f)) {
        v.reason = "frame is disconnected";
        return v;
    }
    enumerate_stable_partitions(f, 3, f.size() - 1, [&](const Partition& p) {
        v.witness = p;
        return false;
    });
    v.status = v.witness ? CoverStatus::fail : CoverStatus::pass;
    return v;
}

Partition k2_partition(const Frame& f)
{
    if (f.size() < 2)
        throw Error(Errc::invalid_argument, "k2_partition needs at least two vertices");
    if (!is_connected(f))
        throw Error(Errc::invalid_argument, "k2_partition needs a connected frame");
    auto dist = bfs_distances(f, 0);
    std::vector<std::size_t> labels(f.size());
    for (std::size_t v = 0; v < f.size(); ++v)
        labels[v] = dist[v] % 2;
    return Partition::from_labels(labels);
}

std::string cover_verdict_to_json(const CoverVerdict& v, const Frame& f)
{
    nlohmann::ordered_json j;
    j["status"] = to_string(v.status);
    j["n"] = f.size();
    if (v.witness) {
        j["witness"] = v.witness->to_string();
        j["blocks"] = v.witness->blocks();
        j["quotient"] = encode_graph6(quotient(f, *v.witness));
    }
    if (!v.reason.empty())
        j["reason"] = v.reason;
    return j.dump();
}

} // namespace ktb
