#include "irreg/enumerate.hpp"

#include "irreg/canonical.hpp"
#include "irreg/errors.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <string>
#include <unordered_set>

namespace irreg {

namespace {

using detail::BitGraph;

// Classes at order n, generated by adding a vertex with every possible
// neighbourhood to each class at order n-1. Every graph on n vertices is
// some class at n-1 plus one vertex, so the closure is complete.
std::vector<std::uint64_t> grow(int n, const std::vector<std::uint64_t>& smaller)
{
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(smaller.size() * (std::size_t{1} << (n - 1)));
    for (std::uint64_t code : smaller) {
        BitGraph base = detail::from_code(n - 1, code);
        base.n = n;
        for (std::uint32_t subset = 0; subset < (1u << (n - 1)); ++subset) {
            BitGraph g = base;
            g.rows[n - 1] = static_cast<std::uint16_t>(subset);
            for (int v = 0; v < n - 1; ++v)
                if (subset & (1u << v))
                    g.rows[v] |= static_cast<std::uint16_t>(1u << (n - 1));
            seen.insert(detail::canonicalize(g).code);
        }
    }
    std::vector<std::uint64_t> codes(seen.begin(), seen.end());
    std::sort(codes.begin(), codes.end(), [](std::uint64_t a, std::uint64_t b) {
        int ea = std::popcount(a), eb = std::popcount(b);
        return ea != eb ? ea < eb : a < b;
    });
    return codes;
}

const std::vector<std::uint64_t>& classes(int n)
{
    static std::mutex mutex;
    static std::vector<std::vector<std::uint64_t>> cache{{}, {0}};
    std::lock_guard lock(mutex);
    while (static_cast<int>(cache.size()) <= n) {
        int next = static_cast<int>(cache.size());
        auto codes = grow(next, cache.back());
        cache.push_back(std::move(codes));
    }
    return cache[static_cast<std::size_t>(n)];
}

bool connected(const BitGraph& g)
{
    std::uint32_t reached = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < g.n; ++v)
            if (frontier & (1u << v))
                next |= g.rows[v];
        frontier = next & ~reached;
        reached |= next;
    }
    return reached == (1u << g.n) - 1;
}

}  // namespace

void for_each_graph(int n, std::optional<int> m, bool connected_only, const std::function<void(const Graph&)>& visit)
{
    if (n > kEnumerationCap)
        throw CapExceeded("enumeration supports n <= " + std::to_string(kEnumerationCap) + ", got n = " +
                          std::to_string(n));
    if (n < 1)
        throw GraphError(GraphError::Kind::InvalidSize, "enumeration needs n >= 1");
    for (std::uint64_t code : classes(n)) {
        if (m && std::popcount(code) != *m)
            continue;
        if (connected_only && !connected(detail::from_code(n, code)))
            continue;
        visit(detail::graph_from_code(n, code));
    }
}

std::vector<Graph> enumerate_graphs(int n, std::optional<int> m, bool connected_only)
{
    std::vector<Graph> out;
    for_each_graph(n, m, connected_only, [&](const Graph& g) { out.push_back(g); });
    return out;
}

std::size_t count_graphs(int n, std::optional<int> m, bool connected_only)
{
    std::size_t count = 0;
    for_each_graph(n, m, connected_only, [&](const Graph&) { ++count; });
    return count;
}

}  // namespace irreg
