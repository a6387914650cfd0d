#include "ktb/frame.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>

namespace ktb {

Frame Frame::from_edges(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels)
{
    if (n > Subset::kMaxWidth)
        throw Error(Errc::tier_exceeded, "frames are limited to 128 vertices, got " + std::to_string(n));
    Frame f;
    f.open_.assign(n, Subset(n));
    for (auto [i, j] : edges) {
        if (i >= n || j >= n)
            throw Error(Errc::out_of_range, "edge (" + std::to_string(i) + "," + std::to_string(j) +
                                                ") outside vertex range 0.." + std::to_string(n));
        if (i == j)
            throw Error(Errc::invalid_argument,
                        "explicit loop at vertex " + std::to_string(i) + " (loops are implicit)");
        f.open_[i].set(j);
        f.open_[j].set(i);
    }
    f.closed_.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        Subset c = f.open_[v];
        c.set(v);
        f.closed_.push_back(c);
        f.edge_count_ += f.open_[v].count();
    }
    f.edge_count_ /= 2;
    if (!labels.empty())
        return f.relabeled(std::move(labels));
    return f;
}

Frame Frame::relabeled(std::vector<std::string> labels) const
{
    if (!labels.empty()) {
        if (labels.size() != size())
            throw Error(Errc::invalid_argument, "label count " + std::to_string(labels.size()) +
                                                    " differs from vertex count " + std::to_string(size()));
        std::set<std::string> seen;
        for (const auto& l : labels) {
            if (l.empty())
                throw Error(Errc::invalid_argument, "empty vertex label");
            if (!seen.insert(l).second)
                throw Error(Errc::invalid_argument, "duplicate vertex label '" + l + "'");
        }
    }
    Frame f = *this;
    f.labels_ = std::move(labels);
    return f;
}

std::vector<Edge> Frame::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < size(); ++i)
        open_[i].for_each([&](std::size_t j) {
            if (i < j)
                out.emplace_back(i, j);
        });
    return out;
}

std::string Frame::name(std::size_t v) const
{
    if (v >= size())
        throw Error(Errc::out_of_range, "vertex " + std::to_string(v) + " out of range");
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::optional<std::size_t> Frame::find(const std::string& name) const
{
    for (std::size_t v = 0; v < labels_.size(); ++v)
        if (labels_[v] == name)
            return v;
    std::size_t idx = 0;
    auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), idx);
    if (ec == std::errc() && ptr == name.data() + name.size() && idx < size())
        return idx;
    return std::nullopt;
}

Frame complete_frame(std::size_t n)
{
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Frame::from_edges(n, e);
}

Frame path_frame(std::size_t n)
{
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Frame::from_edges(n, e);
}

Frame cycle_frame(std::size_t n)
{
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    if (n >= 3)
        e.emplace_back(n - 1, 0);
    return Frame::from_edges(n, e);
}

Frame edgeless_frame(std::size_t n) { return Frame::from_edges(n, {}); }

std::vector<std::size_t> bfs_distances(const Frame& f, std::size_t v)
{
    if (v >= f.size())
        throw Error(Errc::out_of_range, "bfs root " + std::to_string(v) + " out of range");
    std::vector<std::size_t> dist(f.size(), kUnreachable);
    // Frontier expansion on bitsets: one layer per step.
    Subset seen = Subset::of(f.size(), {v});
    Subset frontier = seen;
    dist[v] = 0;
    for (std::size_t d = 1; !frontier.empty(); ++d) {
        Subset next(f.size());
        frontier.for_each([&](std::size_t u) { next |= f.neighbors(u); });
        next = next.minus(seen);
        next.for_each([&](std::size_t u) { dist[u] = d; });
        seen |= next;
        frontier = next;
    }
    return dist;
}

std::vector<std::size_t> bfs_order(const Frame& f, std::size_t root)
{
    std::vector<std::size_t> order;
    if (f.size() == 0)
        return order;
    std::vector<bool> seen(f.size(), false);
    std::deque<std::size_t> queue;
    auto start = [&](std::size_t r) {
        seen[r] = true;
        queue.push_back(r);
        while (!queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            order.push_back(u);
            f.neighbors(u).for_each([&](std::size_t w) {
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            });
        }
    };
    start(root);
    for (std::size_t v = 0; v < f.size(); ++v)
        if (!seen[v])
            start(v);
    return order;
}

bool is_connected(const Frame& f)
{
    if (f.size() <= 1)
        return true;
    auto d = bfs_distances(f, 0);
    return std::none_of(d.begin(), d.end(), [](std::size_t x) { return x == kUnreachable; });
}

std::optional<std::size_t> diameter(const Frame& f)
{
    std::size_t best = 0;
    for (std::size_t v = 0; v < f.size(); ++v) {
        for (auto d : bfs_distances(f, v)) {
            if (d == kUnreachable)
                return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

std::string to_dot(const Frame& f, const std::string& name)
{
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (std::size_t v = 0; v < f.size(); ++v)
        os << "  " << v << " [label=\"" << f.name(v) << "\"];\n";
    for (auto [i, j] : f.edges())
        os << "  " << i << " -- " << j << ";\n";
    os << "}\n";
    return os.str();
}

std::string format_subset(const Frame& f, const Subset& s)
{
    std::string out = "{";
    bool first = true;
    s.for_each([&](std::size_t v) {
        if (!first)
            out += ", ";
        first = false;
        out += f.name(v);
    });
    return out + "}";
}

Subset parse_subset(const Frame& f, const std::string& text)
{
    std::string t;
    for (char c : text)
        if (c != ' ' && c != '{' && c != '}')
            t += c;
    if (t.empty() || t == "empty")
        return f.empty_set();
    if (t == "W" || t == "all")
        return f.full_set();
    Subset s = f.empty_set();
    std::size_t pos = 0;
    while (pos <= t.size()) {
        auto comma = t.find(',', pos);
        auto item = t.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        auto v = f.find(item);
        if (!v)
            throw Error(Errc::parse_error, "unknown vertex '" + item + "'");
        s.set(*v);
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return s;
}

} // namespace ktb
