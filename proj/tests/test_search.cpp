#include <doctest.h>

#include <set>
#include <sstream>

#include "ktb/canonical.hpp"
#include "ktb/errors.hpp"
#include "ktb/family.hpp"
#include "ktb/graph6.hpp"
#include "ktb/search.hpp"
#include "support.hpp"

using namespace ktb;

TEST_CASE("connected graph counts match brute force")
{
    const std::size_t expected[] = {1, 1, 2, 6, 21, 112};
    for (std::size_t n = 1; n <= 6; ++n) {
        CHECK(connected_graphs(n).size() == expected[n - 1]);
        CHECK(testing::brute_connected_classes(n) == expected[n - 1]);
    }
    CHECK(enumerate_connected_graphs(7, [](const Frame&) { return true; }) == 853);
}

TEST_CASE("enumerated graphs are connected and pairwise non-isomorphic")
{
    for (std::size_t n = 1; n <= 7; ++n) {
        std::set<std::string> forms;
        std::set<std::uint64_t> codes;
        for (const auto& f : connected_graphs(n)) {
            CHECK(f.size() == n);
            CHECK(is_connected(f));
            CHECK(forms.insert(canonical_form(f)).second);
            if (n <= 6)
                CHECK(codes.insert(testing::brute_canonical_code(f)).second);
        }
    }
}

TEST_CASE("enumeration tier and early stop")
{
    CHECK_THROWS_AS(connected_graphs(0), Error);
    CHECK_THROWS_AS(connected_graphs(kEnumerationTier + 1), Error);
    std::size_t seen = 0;
    enumerate_connected_graphs(6, [&](const Frame&) { return ++seen < 5; });
    CHECK(seen == 5);
}

TEST_CASE("graph6 round trip on enumerated graphs")
{
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& f : connected_graphs(n))
            CHECK(decode_graph6(encode_graph6(f)) == f);
}

TEST_CASE("naive oracle examples")
{
    CHECK(oracle_partition_check(complete_frame(3)).status == CoverStatus::pass);
    CHECK(oracle_partition_check(cycle_frame(6)).status == CoverStatus::fail);
    CHECK(oracle_partition_check(edgeless_frame(1)).status == CoverStatus::not_applicable);
    CHECK_THROWS_AS(oracle_partition_check(path_frame(kOracleTier + 1)), Error);
}

namespace {

std::string run_filter(const std::string& input, unsigned jobs, std::size_t batch = 256)
{
    std::istringstream in(input);
    std::string out;
    auto summary = filter_covers(in, [&](const std::string& l) { out += l + "\n"; }, {jobs, batch});
    return out + summary_to_json(summary) + "\n";
}

} // namespace

TEST_CASE("filter on the four-vertex graphs")
{
    std::string input;
    for (const auto& f : connected_graphs(4))
        input += encode_graph6(f) + "\n";
    const std::string out = run_filter(input, 1);
    std::istringstream lines(out);
    std::string line;
    std::map<std::string, std::string> status;
    while (std::getline(lines, line)) {
        auto g = line.find("\"graph6\":\"");
        if (g == std::string::npos)
            continue;
        auto g6 = line.substr(g + 10, line.find('"', g + 10) - g - 10);
        auto s = line.find("\"status\":\"");
        status[canonical_form(decode_graph6(g6))] = line.substr(s + 10, line.find('"', s + 10) - s - 10);
    }
    CHECK(status.size() == 6);
    CHECK(status[canonical_form(path_frame(4))] == "pass");
    CHECK(status[canonical_form(complete_frame(4))] == "fail");
    CHECK(status[canonical_form(cycle_frame(4))] == "fail");
    std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}};
    CHECK(status[canonical_form(Frame::from_edges(4, star))] == "fail");
}

TEST_CASE("filter output is identical for any worker count")
{
    std::string input;
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& f : connected_graphs(n))
            input += encode_graph6(f) + "\n";
    input += "not-graph6\n" + encode_graph6(path_frame(kPartitionTier + 1)) + "\n";
    const std::string base = run_filter(input, 1);
    for (unsigned jobs : {2u, 8u})
        CHECK(run_filter(input, jobs) == base);
    CHECK(run_filter(input, 8, 7) == base);
    CHECK(base.find("\"total\":145") != std::string::npos);
}

TEST_CASE("filter edge cases")
{
    CHECK(run_filter("", 4) == "{\"summary\":{\"total\":0,\"pass\":0,\"fail\":0,\"na\":0}}\n");
    const std::string g1 = run_filter(encode_graph6(preset("g1").frame) + "\n", 2);
    CHECK(g1.find("\"status\":\"pass\"") != std::string::npos);
    const std::string bad = run_filter("\n  \nzz\n", 1);
    CHECK(bad.find("\"status\":\"not_applicable\"") != std::string::npos);
    CHECK(bad.find("\"total\":1") != std::string::npos);
}

TEST_CASE("search over enumerated graphs")
{
    std::vector<std::string> lines;
    auto s = search_covers(4, 4, [&](const std::string& l) { lines.push_back(l); }, {2});
    CHECK(s.total == 6);
    CHECK(lines.size() == 6);
    CHECK(search_covers(1, 4, [](const std::string&) {}).total == 10);
    CHECK_THROWS_AS(search_covers(3, 2, [](const std::string&) {}), Error);
    CHECK(s.pass + s.fail + s.na == s.total);
    CHECK(lines.front().rfind("{\"seq\":1,", 0) == 0);
}
