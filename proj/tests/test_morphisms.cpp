#include <doctest.h>

#include <random>

#include "ktb/canonical.hpp"
#include "ktb/errors.hpp"
#include "ktb/family.hpp"
#include "ktb/graph6.hpp"
#include "ktb/morphisms.hpp"
#include "ktb/search.hpp"
#include "support.hpp"

using namespace ktb;

namespace {

testing::Verdict as_verdict(CoverStatus s)
{
    switch (s) {
    case CoverStatus::pass: return testing::Verdict::pass;
    case CoverStatus::fail: return testing::Verdict::fail;
    default: return testing::Verdict::not_applicable;
    }
}

// Re-checks a witness from scratch: block count, stability via the definitional
// bounded-morphism test, and the quotient it induces.
void recheck_witness(const Frame& f, const Partition& p)
{
    CHECK(p.blocks() >= 3);
    CHECK(p.blocks() < f.size());
    const auto a = testing::matrix_of(f);
    testing::Matrix b(p.blocks(), std::vector<bool>(p.blocks(), false));
    for (std::size_t x = 0; x < f.size(); ++x)
        for (std::size_t y = 0; y < f.size(); ++y)
            if (a[x][y])
                b[p.block_of(x)][p.block_of(y)] = true;
    CHECK(testing::bounded_morphism(a, b, p.labels()));
}

std::size_t bell(std::size_t n)
{
    std::vector<std::vector<std::size_t>> t(n + 1, std::vector<std::size_t>(n + 1, 0));
    t[0][0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        t[i][0] = t[i - 1][i - 1];
        for (std::size_t j = 1; j <= i; ++j)
            t[i][j] = t[i][j - 1] + t[i - 1][j - 1];
    }
    return t[n][0];
}

} // namespace

TEST_CASE("partitions normalise to restricted-growth form")
{
    Partition p = Partition::from_labels({5, 5, 2, 7, 2});
    CHECK(p.labels() == std::vector<std::size_t>{0, 0, 1, 2, 1});
    CHECK(p.blocks() == 3);
    CHECK(p.to_string() == "0,0,1,2,1");
    CHECK(Partition::parse("0,0,1,2,1") == p);
    CHECK_THROWS_AS(Partition::parse("1,0"), Error);
    CHECK_THROWS_AS(Partition::parse("0,2"), Error);
    CHECK_THROWS_AS(Partition::parse("0,x"), Error);
    CHECK(Partition::discrete(4).blocks() == 4);
    CHECK(Partition::total(4).blocks() == 1);
    CHECK(p.block_sets()[1] == Subset::of(5, {2, 4}));
}

TEST_CASE("stability matches the bounded-morphism definition")
{
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 3000; ++rep) {
        const std::size_t n = 1 + rng() % 8;
        Frame f = testing::random_frame(rng, n, 0.4);
        std::vector<std::size_t> labels(n);
        const std::size_t k = 1 + rng() % n;
        for (auto& l : labels)
            l = rng() % k;
        Partition p = Partition::from_labels(labels);
        const bool stable = is_stable_partition(f, p);
        const auto a = testing::matrix_of(f);
        testing::Matrix b(p.blocks(), std::vector<bool>(p.blocks(), false));
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (a[x][y])
                    b[p.block_of(x)][p.block_of(y)] = true;
        CHECK(stable == testing::bounded_morphism(a, b, p.labels()));
        if (stable) {
            Frame q = quotient(f, p);
            CHECK(is_bounded_morphism(f, q, p.labels()));
            CHECK(q.size() == p.blocks());
        } else {
            CHECK_THROWS_AS(quotient(f, p), Error);
        }
    }
}

TEST_CASE("bounded morphism checks")
{
    Frame p3 = path_frame(3), k2 = complete_frame(2);
    CHECK(is_bounded_morphism(p3, k2, {0, 1, 0}));
    CHECK_FALSE(is_bounded_morphism(p3, k2, {0, 0, 1}));
    CHECK(is_bounded_morphism(cycle_frame(6), complete_frame(3), {0, 1, 2, 0, 1, 2}));
    CHECK_THROWS_AS(is_bounded_morphism(p3, k2, {0, 1}), Error);
}

TEST_CASE("stable partitions are enumerated exactly once")
{
    std::mt19937_64 rng(43);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 1 + rng() % 7;
        Frame f = testing::random_frame(rng, n, 0.45);
        auto all = stable_partitions(f, 1, n);
        std::set<Partition> unique(all.begin(), all.end());
        CHECK(unique.size() == all.size());
        for (const auto& p : all)
            CHECK(is_stable_partition(f, p));
        // Count stable partitions by brute force over every set partition.
        std::size_t brute = 0, total = 0;
        std::vector<std::size_t> rgs(n, 0);
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t blocks) {
            if (i == n) {
                ++total;
                brute += is_stable_partition(f, Partition::from_labels(rgs)) ? 1 : 0;
                return;
            }
            for (std::size_t k = 0; k <= blocks; ++k) {
                rgs[i] = k;
                rec(i + 1, std::max(blocks, k + 1));
            }
        };
        rec(0, 0);
        CHECK(total == bell(n));
        CHECK(brute == all.size());
    }
}

TEST_CASE("block-count bounds and early stop")
{
    Frame c6 = cycle_frame(6);
    for (const auto& p : stable_partitions(c6, 3, 3))
        CHECK(p.blocks() == 3);
    std::size_t seen = 0;
    enumerate_stable_partitions(c6, 1, 6, [&](const Partition&) { return ++seen < 2; });
    CHECK(seen == 2);
    CHECK_THROWS_AS(stable_partitions(path_frame(kPartitionTier + 1), 1, 2), Error);
}

TEST_CASE("cover verdicts on the baseline graphs")
{
    CHECK(cover_check(complete_frame(2)).status == CoverStatus::not_applicable);
    CHECK(cover_check(edgeless_frame(1)).status == CoverStatus::not_applicable);
    CHECK(cover_check(edgeless_frame(4)).status == CoverStatus::not_applicable);
    CHECK(cover_check(complete_frame(3)).status == CoverStatus::pass);
    CHECK(cover_check(path_frame(4)).status == CoverStatus::pass);
    CHECK(cover_check(complete_frame(4)).status == CoverStatus::fail);
    CHECK(cover_check(cycle_frame(4)).status == CoverStatus::fail);

    auto c6 = cover_check(cycle_frame(6));
    REQUIRE(c6.status == CoverStatus::fail);
    REQUIRE(c6.witness);
    CHECK(c6.witness->blocks() == 3);
    recheck_witness(cycle_frame(6), *c6.witness);
    // The antipodal partition is stable too, with quotient K3.
    Partition antipodal = Partition::from_labels({0, 1, 2, 0, 1, 2});
    CHECK(is_stable_partition(cycle_frame(6), antipodal));
    CHECK(are_isomorphic(quotient(cycle_frame(6), antipodal), complete_frame(3)));
}

TEST_CASE("two-block partitions from distance parity")
{
    std::mt19937_64 rng(47);
    for (int rep = 0; rep < 300; ++rep) {
        Frame f = testing::random_connected_frame(rng, 2 + rng() % 14, 0.2);
        Partition p = k2_partition(f);
        CHECK(p.blocks() == 2);
        CHECK(is_stable_partition(f, p));
        CHECK(are_isomorphic(quotient(f, p), complete_frame(2)));
    }
    CHECK_THROWS_AS(k2_partition(edgeless_frame(3)), Error);
}

TEST_CASE("cover_check agrees with the naive oracle on every connected graph up to 7 vertices")
{
    std::size_t graphs = 0;
    for (std::size_t n = 1; n <= 7; ++n)
        enumerate_connected_graphs(n, [&](const Frame& f) {
            ++graphs;
            const auto v = cover_check(f);
            CHECK(as_verdict(v.status) == testing::naive_cover(f));
            CHECK(v.status == oracle_partition_check(f).status);
            if (v.witness)
                recheck_witness(f, *v.witness);
            return true;
        });
    CHECK(graphs == 1 + 1 + 2 + 6 + 21 + 112 + 853);
}

TEST_CASE("cover_check on the named graphs")
{
    for (const char* name : {"g1", "g2"}) {
        auto v = cover_check(preset(name).frame);
        CHECK(v.status == CoverStatus::pass);
        CHECK_FALSE(v.witness);
    }
}

TEST_CASE("naive oracle confirms the named graphs")
{
    // Bell(11) = 678570 and Bell(13) = 27644437 partitions, each tested definitionally.
    CHECK(testing::naive_cover(preset("g1").frame) == testing::Verdict::pass);
    CHECK(testing::naive_cover(preset("g2").frame) == testing::Verdict::pass);
}

TEST_CASE("verdict JSON")
{
    auto f = cycle_frame(6);
    auto j = cover_verdict_to_json(cover_check(f), f);
    CHECK(j.find("\"status\":\"fail\"") != std::string::npos);
    CHECK(j.find("\"blocks\":3") != std::string::npos);
    CHECK(cover_verdict_to_json(cover_check(preset("g1").frame), preset("g1").frame) ==
          R"({"status":"pass","n":11})");
}
