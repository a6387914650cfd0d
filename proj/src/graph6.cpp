#include "ktb/graph6.hpp"

namespace ktb {

namespace {

constexpr int kBias = 63;

std::size_t body_length(std::size_t n) { return (n * (n - 1) / 2 + 5) / 6; }

} // namespace

std::string encode_graph6(const Frame& f)
{
    const std::size_t n = f.size();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kBias + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(kBias + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(kBias + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(kBias + (n & 63)));
    }
    int group = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            group = (group << 1) | (f.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(kBias + group));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>(kBias + (group << (6 - filled))));
    return out;
}

Frame decode_graph6(std::string_view text)
{
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.starts_with(">>graph6<<"))
        throw Error(Errc::parse_error, "graph6 header is not accepted; strip '>>graph6<<'");
    if (text.empty())
        throw Error(Errc::parse_error, "empty graph6 string");
    for (char c : text)
        if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126)
            throw Error(Errc::parse_error, "illegal graph6 byte " + std::to_string(static_cast<int>(c)));

    std::size_t n = 0;
    std::size_t pos = 0;
    if (static_cast<unsigned char>(text[0]) < 126) {
        n = static_cast<std::size_t>(text[0] - kBias);
        pos = 1;
    } else {
        if (text.size() < 4 || static_cast<unsigned char>(text[1]) == 126)
            throw Error(Errc::parse_error, "malformed graph6 size field");
        n = (static_cast<std::size_t>(text[1] - kBias) << 12) | (static_cast<std::size_t>(text[2] - kBias) << 6) |
            static_cast<std::size_t>(text[3] - kBias);
        pos = 4;
        if (n <= 62)
            throw Error(Errc::parse_error, "graph6 long size form used for n <= 62");
    }
    if (n > Subset::kMaxWidth)
        throw Error(Errc::tier_exceeded, "graph6 graph has " + std::to_string(n) + " vertices; limit is 128");
    if (text.size() - pos != (n == 0 ? 0 : body_length(n)))
        throw Error(Errc::parse_error, "graph6 body has " + std::to_string(text.size() - pos) +
                                           " bytes, expected " + std::to_string(n == 0 ? 0 : body_length(n)));

    std::vector<Edge> edges;
    std::size_t bit = 0;
    auto next_bit = [&]() {
        auto byte = static_cast<unsigned>(text[pos + bit / 6] - kBias);
        bool b = (byte >> (5 - bit % 6)) & 1u;
        ++bit;
        return b;
    };
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (next_bit())
                edges.emplace_back(i, j);
    while (bit % 6 != 0)
        if (next_bit())
            throw Error(Errc::parse_error, "nonzero graph6 padding bits");
    return Frame::from_edges(n, edges);
}

} // namespace ktb
