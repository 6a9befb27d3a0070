#include <qcc/graph6.hpp>

namespace qcc {

namespace {

constexpr int kBias = 63;

void put_order(std::string &out, int n)
{
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
        return;
    }
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
        out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
}

int sextet(char ch)
{
    int v = static_cast<unsigned char>(ch) - kBias;
    if (v < 0 || v > 63)
        throw std::invalid_argument(std::string("graph6: byte out of range: '") + ch + "'");
    return v;
}

} // namespace

std::string to_graph6(const Graph &g)
{
    int n = g.order();
    std::string out;
    put_order(out, n);
    int group = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kBias));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
    return out;
}

Graph from_graph6(std::string_view text)
{
    if (text.starts_with(">>graph6<<"))
        text.remove_prefix(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw std::invalid_argument("graph6: empty input");

    int n = 0;
    std::size_t pos = 0;
    if (text[0] != '~') {
        n = sextet(text[0]);
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~')
            throw CapacityError("graph6: order above 258047 is not supported");
        if (text.size() < 4)
            throw std::invalid_argument("graph6: truncated order field");
        for (pos = 1; pos < 4; ++pos)
            n = (n << 6) | sextet(text[pos]);
    }
    if (n > kMaxVertices)
        throw CapacityError("graph6: order " + std::to_string(n) + " exceeds capacity");

    std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t expected = (bits + 5) / 6;
    if (text.size() - pos != expected)
        throw std::invalid_argument("graph6: expected " + std::to_string(expected) + " data bytes, got " +
                                    std::to_string(text.size() - pos));

    GraphBuilder b(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int value = sextet(text[pos + k / 6]);
            if ((value >> (5 - k % 6)) & 1)
                b.add_edge(i, j);
        }
    }
    if (bits % 6 != 0) {
        int last = sextet(text.back());
        if (last & ((1 << (6 - bits % 6)) - 1))
            throw std::invalid_argument("graph6: nonzero padding bits");
    }
    return b.build();
}

} // namespace qcc
