#include "irreg/graph6.hpp"

#include "irreg/errors.hpp"

#include <cstdint>

namespace irreg {

namespace {

constexpr int kOffset = 63;
constexpr int kMaxByte = 126;

int sextet(std::string_view text, std::size_t pos)
{
    if (pos >= text.size())
        throw ParseError("graph6: unexpected end of input at byte " + std::to_string(pos));
    int c = static_cast<unsigned char>(text[pos]);
    if (c < kOffset || c > kMaxByte)
        throw ParseError("graph6: byte " + std::to_string(pos) + " (value " + std::to_string(c) +
                         ") outside the printable range 63..126");
    return c - kOffset;
}

void append_size(std::string& out, std::uint64_t n)
{
    auto emit = [&](int count) {
        for (int i = count - 1; i >= 0; --i)
            out.push_back(static_cast<char>(((n >> (6 * i)) & 0x3f) + kOffset));
    };
    if (n <= 62) {
        emit(1);
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(kMaxByte));
        emit(3);
    } else {
        out.push_back(static_cast<char>(kMaxByte));
        out.push_back(static_cast<char>(kMaxByte));
        emit(6);
    }
}

}  // namespace

Graph parse_graph6(std::string_view text)
{
    if (text.empty())
        throw ParseError("graph6: empty input");

    std::size_t pos = 0;
    std::uint64_t n = 0;
    int first = sextet(text, pos);
    if (first != kMaxByte - kOffset) {
        n = static_cast<std::uint64_t>(first);
        pos = 1;
    } else {
        int count = 3;
        pos = 1;
        if (pos < text.size() && static_cast<unsigned char>(text[pos]) == kMaxByte) {
            count = 6;
            pos = 2;
        }
        for (int i = 0; i < count; ++i)
            n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos++));
    }
    if (n == 0)
        throw ParseError("graph6: zero-vertex graphs are not supported");
    if (n > 1'000'000)
        throw ParseError("graph6: vertex count " + std::to_string(n) + " too large");

    const std::uint64_t bits = n * (n - 1) / 2;
    const std::uint64_t bytes = (bits + 5) / 6;
    if (text.size() - pos < bytes)
        throw ParseError("graph6: bit vector truncated (need " + std::to_string(bytes) + " bytes, have " +
                         std::to_string(text.size() - pos) + ")");
    if (text.size() - pos > bytes)
        throw ParseError("graph6: trailing bytes after bit vector");

    std::vector<Edge> edges;
    std::uint64_t k = 0;
    int current = 0;
    for (std::uint64_t j = 1; j < n; ++j) {
        for (std::uint64_t i = 0; i < j; ++i, ++k) {
            if (k % 6 == 0)
                current = sextet(text, pos++);
            if (current & (0x20 >> (k % 6)))
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    if (k % 6 != 0 && (current & ((1 << (6 - k % 6)) - 1)) != 0)
        throw ParseError("graph6: nonzero padding bits");

    return Graph(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g)
{
    const auto n = static_cast<std::uint64_t>(g.order());
    std::string out;
    append_size(out, n);

    int current = 0;
    std::uint64_t k = 0;
    for (std::uint64_t j = 1; j < n; ++j) {
        for (std::uint64_t i = 0; i < j; ++i, ++k) {
            if (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)))
                current |= 0x20 >> (k % 6);
            if (k % 6 == 5) {
                out.push_back(static_cast<char>(current + kOffset));
                current = 0;
            }
        }
    }
    if (k % 6 != 0)
        out.push_back(static_cast<char>(current + kOffset));
    return out;
}

}  // namespace irreg
