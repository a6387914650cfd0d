#include "ktb/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ktb/graph6.hpp"

namespace ktb {

namespace {

using Cells = std::vector<std::vector<std::size_t>>;

// Splits cells until every vertex of a cell has the same number of neighbours in every
// cell. New cells are ordered by that count, which keeps the result invariant.
void refine(const Frame& f, Cells& cells)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
            Subset splitter(f.size());
            for (auto v : cells[s])
                splitter.set(v);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (cells[c].size() == 1)
                    continue;
                std::map<std::size_t, std::vector<std::size_t>> by_count;
                for (auto v : cells[c])
                    by_count[(f.neighbors(v) & splitter).count()].push_back(v);
                if (by_count.size() == 1)
                    continue;
                Cells pieces;
                for (auto& [cnt, vs] : by_count)
                    pieces.push_back(std::move(vs));
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
                changed = true;
                break;
            }
        }
    }
}

std::vector<bool> leaf_code(const Frame& f, const std::vector<std::size_t>& order)
{
    std::vector<bool> code;
    const std::size_t n = order.size();
    code.reserve(n * (n - 1) / 2);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            code.push_back(f.adjacent(order[i], order[j]));
    return code;
}

struct Search {
    const Frame& f;
    std::vector<bool> best_code;
    std::vector<std::size_t> best_order;
    bool have_best = false;
    std::vector<std::vector<std::size_t>> automorphisms;

    std::size_t find(std::vector<std::size_t>& parent, std::size_t x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }

    // Orbit representative map under the discovered automorphisms that fix `path`.
    std::vector<std::size_t> orbits(const std::vector<std::size_t>& path)
    {
        std::vector<std::size_t> parent(f.size());
        std::iota(parent.begin(), parent.end(), 0);
        for (const auto& g : automorphisms) {
            if (!std::all_of(path.begin(), path.end(), [&](std::size_t p) { return g[p] == p; }))
                continue;
            for (std::size_t v = 0; v < g.size(); ++v) {
                auto a = find(parent, v);
                auto b = find(parent, g[v]);
                if (a != b)
                    parent[std::max(a, b)] = std::min(a, b);
            }
        }
        for (std::size_t v = 0; v < f.size(); ++v)
            parent[v] = find(parent, v);
        return parent;
    }

    void run(Cells cells, std::vector<std::size_t>& path)
    {
        refine(f, cells);
        auto target = cells.end();
        for (auto it = cells.begin(); it != cells.end(); ++it)
            if (it->size() > 1 && (target == cells.end() || it->size() < target->size()))
                target = it;
        if (target == cells.end()) {
            std::vector<std::size_t> order;
            for (auto& c : cells)
                order.push_back(c.front());
            auto code = leaf_code(f, order);
            if (!have_best || code > best_code) {
                best_code = std::move(code);
                best_order = std::move(order);
                have_best = true;
            } else if (code == best_code) {
                std::vector<std::size_t> g(f.size());
                for (std::size_t i = 0; i < order.size(); ++i)
                    g[best_order[i]] = order[i];
                automorphisms.push_back(std::move(g));
            }
            return;
        }
        const auto t = static_cast<std::size_t>(target - cells.begin());
        const auto candidates = cells[t];
        std::vector<std::size_t> tried;
        for (auto v : candidates) {
            if (!tried.empty()) {
                auto orb = orbits(path);
                if (std::any_of(tried.begin(), tried.end(), [&](std::size_t w) { return orb[w] == orb[v]; }))
                    continue;
            }
            Cells child = cells;
            auto rest = child[t];
            rest.erase(std::find(rest.begin(), rest.end(), v));
            child[t] = {v};
            child.insert(child.begin() + static_cast<std::ptrdiff_t>(t) + 1, rest);
            path.push_back(v);
            run(std::move(child), path);
            path.pop_back();
            tried.push_back(v);
        }
    }
};

} // namespace

CanonicalLabeling canonical_labeling(const Frame& f, const std::vector<int>& colors)
{
    if (f.size() > kCanonicalTier)
        throw Error(Errc::tier_exceeded, "canonical labeling is limited to " + std::to_string(kCanonicalTier) +
                                             " vertices, got " + std::to_string(f.size()));
    if (!colors.empty() && colors.size() != f.size())
        throw Error(Errc::invalid_argument, "colour vector length differs from vertex count");

    CanonicalLabeling out;
    if (f.size() == 0) {
        out.form = encode_graph6(f);
        return out;
    }
    Cells cells;
    if (colors.empty()) {
        cells.emplace_back(f.size());
        std::iota(cells[0].begin(), cells[0].end(), 0);
    } else {
        std::map<int, std::vector<std::size_t>> by_color;
        for (std::size_t v = 0; v < f.size(); ++v)
            by_color[colors[v]].push_back(v);
        for (auto& [c, vs] : by_color)
            cells.push_back(std::move(vs));
    }
    Search s{f, {}, {}, false, {}};
    std::vector<std::size_t> path;
    s.run(std::move(cells), path);

    std::vector<std::size_t> position(f.size());
    for (std::size_t i = 0; i < s.best_order.size(); ++i)
        position[s.best_order[i]] = i;
    std::vector<Edge> edges;
    for (auto [i, j] : f.edges())
        edges.emplace_back(position[i], position[j]);
    out.form = encode_graph6(Frame::from_edges(f.size(), edges));
    out.order = std::move(s.best_order);
    out.automorphisms = std::move(s.automorphisms);
    return out;
}

std::string canonical_form(const Frame& f) { return canonical_labeling(f).form; }

bool are_isomorphic(const Frame& a, const Frame& b)
{
    if (a.size() != b.size() || a.edge_count() != b.edge_count())
        return false;
    return canonical_form(a) == canonical_form(b);
}

bool same_orbit(const Frame& f, std::size_t u, std::size_t v)
{
    if (u == v)
        return true;
    std::vector<int> cu(f.size(), 1), cv(f.size(), 1);
    cu.at(u) = 0;
    cv.at(v) = 0;
    return canonical_labeling(f, cu).form == canonical_labeling(f, cv).form;
}

} // namespace ktb
