#include <oddsub/graph.hpp>

namespace oddsub {

// graph6: header N(n), then x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits
// per byte, most significant first, each byte offset by 63. Orders 63 and 64 use
// the four-byte header '~' followed by n in 18 bits.

namespace {
    constexpr int short_form_limit = 62;

    auto bit_count(int n) -> std::size_t
    {
        return static_cast<std::size_t>(n) * (n - 1) / 2;
    }

    auto decode_char(char c) -> int
    {
        int value = static_cast<unsigned char>(c) - 63;
        if (value < 0 || value > 63)
            throw Error(ErrorCode::MalformedBits, "byte " + std::to_string(static_cast<unsigned char>(c)) + " outside graph6 range");
        return value;
    }
}

auto parse_graph6(std::string_view text) -> Graph
{
    while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw Error(ErrorCode::MalformedHeader, "empty graph6 line");
    if (text.starts_with(">>"))
        throw Error(ErrorCode::MalformedHeader, "graph6 header lines are not accepted");

    int n = 0;
    std::size_t pos = 0;
    int first = static_cast<unsigned char>(text[0]) - 63;
    if (first < 0 || first > 63)
        throw Error(ErrorCode::MalformedHeader, "first byte is not a graph6 size byte");
    if (first < 63) {
        n = first;
        pos = 1;
    }
    else {
        if (text.size() < 4)
            throw Error(ErrorCode::MalformedHeader, "truncated long-form size");
        if (text[1] == '~')
            throw Error(ErrorCode::TooLarge, "36-bit graph6 size form");
        for (std::size_t i = 1; i <= 3; ++i) {
            int part = static_cast<unsigned char>(text[i]) - 63;
            if (part < 0 || part > 63)
                throw Error(ErrorCode::MalformedHeader, "bad long-form size byte");
            n = (n << 6) | part;
        }
        if (n <= short_form_limit)
            throw Error(ErrorCode::MalformedHeader, "long-form size used for a short-form order");
        pos = 4;
    }
    if (n > max_vertices)
        throw Error(ErrorCode::TooLarge, "graph6 order " + std::to_string(n) + " exceeds the 64-vertex cap");

    auto bits = bit_count(n);
    auto expected = (bits + 5) / 6;
    auto body = text.substr(pos);
    if (body.size() < expected)
        throw Error(ErrorCode::TruncatedBits,
            "expected " + std::to_string(expected) + " data bytes, found " + std::to_string(body.size()));
    if (body.size() > expected)
        throw Error(ErrorCode::MalformedBits, "trailing bytes after the adjacency data");

    std::vector<std::uint64_t> rows(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int group = decode_char(body[k / 6]);
            if ((group >> (5 - k % 6)) & 1) {
                rows[i] |= std::uint64_t{1} << j;
                rows[j] |= std::uint64_t{1} << i;
            }
        }
    if (bits % 6 != 0) {
        int last = decode_char(body.back());
        int pad = static_cast<int>(6 - bits % 6);
        if (last & ((1 << pad) - 1))
            throw Error(ErrorCode::MalformedBits, "nonzero padding bits");
    }
    return Graph::from_rows(n, rows);
}

auto write_graph6(const Graph & g) -> std::string
{
    int n = g.order();
    std::string out;
    if (n <= short_form_limit)
        out.push_back(static_cast<char>(63 + n));
    else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }

    int group = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>(63 + (group << (6 - filled))));
    return out;
}

}
