#include <doctest.h>

#include <map>
#include <random>

#include "ktb/canonical.hpp"
#include "ktb/errors.hpp"
#include "ktb/family.hpp"
#include "ktb/frame.hpp"
#include "ktb/graph6.hpp"
#include "support.hpp"

using namespace ktb;

TEST_CASE("subset algebra within a width")
{
    Subset a = Subset::of(70, {0, 3, 65});
    Subset b = Subset::of(70, {3, 4});
    CHECK((a | b).count() == 4);
    CHECK((a & b) == Subset::of(70, {3}));
    CHECK((~a).count() == 67);
    CHECK(~~a == a);
    CHECK(a.minus(b) == Subset::of(70, {0, 65}));
    CHECK(Subset::full(70).is_full());
    CHECK(a.members() == std::vector<std::size_t>{0, 3, 65});
    CHECK_THROWS_AS((void)(a | Subset(69)), Error);
}

TEST_CASE("complement never leaks past the width")
{
    std::mt19937_64 rng(7);
    for (std::size_t n : {1u, 5u, 63u, 64u, 65u, 127u, 128u}) {
        Subset x = testing::random_subset(rng, n);
        CHECK((x | ~x).is_full());
        CHECK((~x).count() == n - x.count());
    }
}

TEST_CASE("frame construction")
{
    std::vector<Edge> edges{{0, 1}, {1, 2}, {1, 0}};
    Frame f = Frame::from_edges(3, edges);
    CHECK(f.edge_count() == 2);
    CHECK(f.closed_neighborhood(1) == Subset::of(3, {0, 1, 2}));
    CHECK(f.degree(1) == 2);
    std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Frame::from_edges(3, loop), Error);
    std::vector<Edge> outside{{0, 3}};
    CHECK_THROWS_AS(Frame::from_edges(3, outside), Error);
    CHECK(is_connected(path_frame(5)));
    CHECK_FALSE(is_connected(edgeless_frame(2)));
    CHECK(diameter(cycle_frame(6)) == 3u);
    CHECK_FALSE(diameter(edgeless_frame(2)).has_value());
}

TEST_CASE("subset text uses labels")
{
    auto g1 = preset("g1");
    auto s = parse_subset(g1.frame, "{d, c1}");
    CHECK(s == Subset::of(11, {0, 1}));
    CHECK(format_subset(g1.frame, s) == "{d, c1}");
    CHECK(parse_subset(g1.frame, "{}").empty());
    CHECK(parse_subset(g1.frame, "W").is_full());
    CHECK_THROWS_AS(parse_subset(g1.frame, "{zz}"), Error);
}

TEST_CASE("graph6 known strings")
{
    CHECK(encode_graph6(edgeless_frame(1)) == "@");
    CHECK(encode_graph6(complete_frame(2)) == "A_");
    CHECK(encode_graph6(complete_frame(4)) == "C~");
    CHECK(decode_graph6("C~") == complete_frame(4));
    CHECK(decode_graph6("A_\n") == complete_frame(2));
    CHECK(decode_graph6("?").size() == 0);
}

TEST_CASE("graph6 agrees with strings produced by networkx")
{
    CHECK(encode_graph6(path_frame(17)) == "PhCGGC@?G?_@?@??_?G?@??C");
    const std::string cycle70 = "~?@EhCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G???????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_?????????G?????????@??????????C??????????G??????????G??????????C??????????@_??????????G";
    CHECK(encode_graph6(cycle_frame(70)) == cycle70);
    CHECK(decode_graph6(cycle70) == cycle_frame(70));
    const std::string complete63 = "~??~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~w";
    CHECK(encode_graph6(complete_frame(63)) == complete63);
    CHECK(decode_graph6(complete63) == complete_frame(63));
}

TEST_CASE("graph6 rejects malformed input")
{
    CHECK_THROWS_AS(decode_graph6(">>graph6<<C~"), Error);
    CHECK_THROWS_AS(decode_graph6("C~~"), Error);
    CHECK_THROWS_AS(decode_graph6("C"), Error);
    CHECK_THROWS_AS(decode_graph6("A`"), Error); // nonzero padding
    CHECK_THROWS_AS(decode_graph6("A\x01"), Error);
}

TEST_CASE("graph6 round trip on random frames including the long size form")
{
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = rep < 150 ? rep % 20 + 1 : 62 + rep % 67;
        Frame f = testing::random_frame(rng, n, 0.3);
        const std::string g6 = encode_graph6(f);
        CHECK(decode_graph6(g6) == f);
        CHECK(encode_graph6(decode_graph6(g6)) == g6);
        if (n >= 63)
            CHECK(g6[0] == '~');
    }
}

TEST_CASE("named graphs match the drawn edge lists")
{
    // Vertices are the drawing's grid points; the long vertical strokes are split into
    // unit segments.
    using P = std::pair<int, int>;
    const std::vector<std::pair<P, P>> g1_strokes = {
        {{0, 0}, {-1, 0}}, {{0, 0}, {1, 1}}, {{0, 0}, {-1, -1}}, {{-1, -1}, {-1, -2}},
        {{1, 1}, {0, 2}}, {{0, 2}, {0, 1}}, {{0, 1}, {0, 0}}, {{0, 0}, {0, -1}},
        {{0, -1}, {0, -2}}, {{0, -2}, {0, -3}}, {{0, 1}, {-1, 1}}, {{-1, 1}, {0, 0}}};
    auto g2_strokes = g1_strokes;
    g2_strokes.push_back({{0, 0}, {2, 1}});
    g2_strokes.push_back({{1, 1}, {1, 2}});
    g2_strokes.push_back({{1, 2}, {2, 1}});

    auto build = [](const std::vector<std::pair<P, P>>& strokes) {
        std::map<P, std::size_t> ids;
        std::vector<Edge> edges;
        for (const auto& [a, b] : strokes) {
            auto ia = ids.emplace(a, ids.size()).first->second;
            auto ib = ids.emplace(b, ids.size()).first->second;
            edges.emplace_back(ia, ib);
        }
        return Frame::from_edges(ids.size(), edges);
    };
    const Frame drawn1 = build(g1_strokes), drawn2 = build(g2_strokes);
    CHECK(drawn1.size() == 11);
    CHECK(drawn1.edge_count() == 12);
    CHECK(drawn2.size() == 13);
    CHECK(drawn2.edge_count() == 15);
    CHECK(are_isomorphic(drawn1, preset("g1").frame));
    CHECK(are_isomorphic(drawn2, preset("g2").frame));
    CHECK_FALSE(are_isomorphic(drawn1, preset("g2").frame));
}

TEST_CASE("canonical form is a complete invariant on small graphs")
{
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 300; ++rep) {
        const std::size_t n = rep % 7 + 1;
        Frame a = testing::random_frame(rng, n, 0.45);
        Frame b = testing::random_frame(rng, n, 0.45);
        const bool iso = testing::brute_canonical_code(a) == testing::brute_canonical_code(b);
        CHECK(are_isomorphic(a, b) == iso);

        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> moved;
        for (auto [u, v] : a.edges())
            moved.emplace_back(perm[u], perm[v]);
        CHECK(canonical_form(Frame::from_edges(n, moved)) == canonical_form(a));
    }
}

TEST_CASE("canonical labeling relabels into the canonical form")
{
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 100; ++rep) {
        Frame f = testing::random_frame(rng, 3 + rep % 12, 0.35);
        auto lab = canonical_labeling(f);
        std::vector<std::size_t> pos(f.size());
        for (std::size_t i = 0; i < f.size(); ++i)
            pos[lab.order[i]] = i;
        std::vector<Edge> relabeled;
        for (auto [u, v] : f.edges())
            relabeled.emplace_back(pos[u], pos[v]);
        CHECK(encode_graph6(Frame::from_edges(f.size(), relabeled)) == lab.form);
        for (const auto& aut : lab.automorphisms)
            for (auto [u, v] : f.edges())
                CHECK(f.adjacent(aut[u], aut[v]));
    }
}

TEST_CASE("orbits")
{
    Frame p4 = path_frame(4);
    CHECK(same_orbit(p4, 0, 3));
    CHECK(same_orbit(p4, 1, 2));
    CHECK_FALSE(same_orbit(p4, 0, 1));
    Frame c6 = cycle_frame(6);
    for (std::size_t v = 0; v < 6; ++v)
        CHECK(same_orbit(c6, 0, v));
}

TEST_CASE("canonical tier")
{
    CHECK_THROWS_AS(canonical_form(path_frame(kCanonicalTier + 1)), Error);
    CHECK_NOTHROW(canonical_form(path_frame(kCanonicalTier)));
}
