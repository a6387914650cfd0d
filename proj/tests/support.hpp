#pragma once

// Generators and brute-force oracles shared by the test binaries. The oracles work on
// plain adjacency matrices and avoid the library's own search code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ktb/algebra.hpp"
#include "ktb/frame.hpp"

namespace testing {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(const ktb::Frame& f)
{
    Matrix m(f.size(), std::vector<bool>(f.size(), false));
    for (std::size_t u = 0; u < f.size(); ++u) {
        m[u][u] = true;
        for (std::size_t v = 0; v < f.size(); ++v)
            if (f.adjacent(u, v))
                m[u][v] = true;
    }
    return m;
}

// Random simple graph with edge probability `density`.
inline ktb::Frame random_frame(std::mt19937_64& rng, std::size_t n, double density)
{
    std::bernoulli_distribution coin(density);
    std::vector<ktb::Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return ktb::Frame::from_edges(n, edges);
}

// Random connected graph: a random spanning tree plus extra edges.
inline ktb::Frame random_connected_frame(std::mt19937_64& rng, std::size_t n, double density)
{
    std::bernoulli_distribution coin(density);
    std::vector<ktb::Edge> edges;
    for (std::size_t v = 1; v < n; ++v)
        edges.emplace_back(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng), v);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& [u, v] : edges) {
        u = perm[u];
        v = perm[v];
    }
    return ktb::Frame::from_edges(n, edges);
}

inline ktb::Subset random_subset(std::mt19937_64& rng, std::size_t n)
{
    return ktb::Subset::from_words(n, rng(), rng());
}

// Largest upper-triangle bit code over all vertex permutations: an isomorphism invariant
// that separates classes. Only for small n.
inline std::uint64_t brute_canonical_code(const ktb::Frame& f)
{
    const std::size_t n = f.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = 0;
    do {
        std::uint64_t code = 0;
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t i = 0; i < j; ++i)
                code = (code << 1) | (f.adjacent(perm[i], perm[j]) ? 1u : 0u);
        best = std::max(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool connected_matrix(const Matrix& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return true;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < n; ++v)
            if (m[u][v] && !seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// Isomorphism classes of connected graphs on n vertices by brute force over labelled graphs.
inline std::size_t brute_connected_classes(std::size_t n)
{
    std::vector<ktb::Edge> slots;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            slots.emplace_back(i, j);
    std::set<std::uint64_t> classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<ktb::Edge> edges;
        for (std::size_t k = 0; k < slots.size(); ++k)
            if ((mask >> k) & 1u)
                edges.push_back(slots[k]);
        auto f = ktb::Frame::from_edges(n, edges);
        if (connected_matrix(matrix_of(f)))
            classes.insert(brute_canonical_code(f));
    }
    return classes.size();
}

// Definitional check that h is a surjective bounded morphism from the frame with
// reflexive relation `a` onto the one with reflexive relation `b`.
inline bool bounded_morphism(const Matrix& a, const Matrix& b, const std::vector<std::size_t>& h)
{
    for (std::size_t x = 0; x < a.size(); ++x) {
        for (std::size_t y = 0; y < a.size(); ++y)
            if (a[x][y] && !b[h[x]][h[y]])
                return false;
        for (std::size_t w = 0; w < b.size(); ++w) {
            if (!b[h[x]][w])
                continue;
            bool lifted = false;
            for (std::size_t y = 0; y < a.size() && !lifted; ++y)
                lifted = a[x][y] && h[y] == w;
            if (!lifted)
                return false;
        }
    }
    return true;
}

enum class Verdict { pass, fail, not_applicable };

// Cover verdict by enumerating every set partition in restricted-growth form.
inline Verdict naive_cover(const ktb::Frame& f)
{
    const std::size_t n = f.size();
    const Matrix a = matrix_of(f);
    if (n <= 2 || !connected_matrix(a))
        return Verdict::not_applicable;
    std::vector<std::size_t> rgs(n, 0);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t blocks) {
        if (i == n) {
            if (blocks < 3 || blocks >= n)
                return false;
            Matrix b(blocks, std::vector<bool>(blocks, false));
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y)
                    if (a[x][y])
                        b[rgs[x]][rgs[y]] = true;
            return bounded_morphism(a, b, rgs);
        }
        for (std::size_t k = 0; k <= blocks && k < n; ++k) {
            rgs[i] = k;
            if (rec(i + 1, std::max(blocks, k + 1)))
                return true;
        }
        return false;
    };
    return rec(0, 0) ? Verdict::fail : Verdict::pass;
}

// Generated subalgebra by saturating under complement, union and diamond pairwise.
inline std::set<ktb::Subset> pairwise_closure(const ktb::Frame& f, const std::vector<ktb::Subset>& gens)
{
    std::set<ktb::Subset> seen(gens.begin(), gens.end());
    seen.insert(f.empty_set());
    std::vector<ktb::Subset> work(seen.begin(), seen.end());
    while (!work.empty()) {
        const ktb::Subset x = work.back();
        work.pop_back();
        std::vector<ktb::Subset> produced{~x, ktb::diamond(f, x)};
        for (const auto& y : seen)
            produced.push_back(x | y);
        for (const auto& z : produced)
            if (seen.insert(z).second)
                work.push_back(z);
    }
    return seen;
}

} // namespace testing
