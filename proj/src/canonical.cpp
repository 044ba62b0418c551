#include "irreg/canonical.hpp"

#include "irreg/errors.hpp"
#include "irreg/graph6.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

namespace irreg {

namespace detail {

namespace {

constexpr int kNoJump = std::numeric_limits<int>::max();

using Perm = std::array<std::int8_t, kBitGraphMax>;

// Ordered partition of the vertex set: cells are contiguous runs of `lab`,
// `starts` has bit p set when position p begins a cell.
struct Partition {
    Perm lab{};
    std::uint16_t starts = 0;
};

int cell_end(const Partition& p, int start, int n)
{
    int e = start + 1;
    while (e < n && !(p.starts & (1u << e)))
        ++e;
    return e;
}

// Split cells until every cell is equitable with respect to every other cell.
// Each split sorts a cell by neighbour count into the splitting cell, which
// depends only on cell membership, never on vertex labels.
void refine(const BitGraph& g, Partition& p)
{
    const int n = g.n;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int ws = 0; ws < n && !changed; ws = cell_end(p, ws, n)) {
            int we = cell_end(p, ws, n);
            std::uint16_t wmask = 0;
            for (int i = ws; i < we; ++i)
                wmask |= static_cast<std::uint16_t>(1u << p.lab[i]);

            for (int xs = 0; xs < n && !changed; xs = cell_end(p, xs, n)) {
                int xe = cell_end(p, xs, n);
                if (xe - xs < 2)
                    continue;
                std::array<int, kBitGraphMax> count{};
                bool uniform = true;
                for (int i = xs; i < xe; ++i) {
                    count[i] = std::popcount(static_cast<unsigned>(g.rows[p.lab[i]] & wmask));
                    uniform = uniform && count[i] == count[xs];
                }
                if (uniform)
                    continue;

                std::array<std::pair<int, std::int8_t>, kBitGraphMax> keyed{};
                for (int i = xs; i < xe; ++i)
                    keyed[i - xs] = {count[i], p.lab[i]};
                std::stable_sort(keyed.begin(), keyed.begin() + (xe - xs),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                for (int i = xs; i < xe; ++i) {
                    p.lab[i] = keyed[i - xs].second;
                    if (i > xs && keyed[i - xs].first != keyed[i - xs - 1].first)
                        p.starts |= static_cast<std::uint16_t>(1u << i);
                }
                changed = true;
            }
        }
    }
}

std::uint64_t leaf_code(const BitGraph& g, const Perm& lab)
{
    const int n = g.n;
    std::uint64_t code = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            code = (code << 1) | ((g.rows[lab[i]] >> lab[j]) & 1u);
    return code;
}

struct Search {
    const BitGraph& g;
    int n;

    bool have_first = false;
    Perm first_lab{}, best_lab{};
    std::uint64_t first_code = 0, best_code = 0;
    Perm first_path{}, best_path{}, cur_path{};
    std::vector<Perm> automorphisms;

    explicit Search(const BitGraph& graph) : g(graph), n(graph.n) {}

    static int common_prefix(const Perm& a, const Perm& b, int depth)
    {
        int k = 0;
        while (k < depth && a[k] == b[k])
            ++k;
        return k;
    }

    void record_automorphism(const Perm& from, const Perm& to)
    {
        Perm gamma{};
        for (int p = 0; p < n; ++p)
            gamma[from[p]] = to[p];
        automorphisms.push_back(gamma);
    }

    int leaf(const Partition& p, int depth)
    {
        std::uint64_t code = leaf_code(g, p.lab);
        if (!have_first) {
            have_first = true;
            first_lab = best_lab = p.lab;
            first_code = best_code = code;
            first_path = best_path = cur_path;
            return kNoJump;
        }
        if (code == first_code) {
            record_automorphism(first_lab, p.lab);
            return common_prefix(cur_path, first_path, depth);
        }
        if (code > best_code) {
            best_code = code;
            best_lab = p.lab;
            best_path = cur_path;
            return kNoJump;
        }
        if (code == best_code) {
            record_automorphism(best_lab, p.lab);
            return common_prefix(cur_path, best_path, depth);
        }
        return kNoJump;
    }

    // Orbit representative of v under the automorphisms found so far that
    // fix the first `depth` vertices of the first path pointwise.
    std::array<int, kBitGraphMax> stabilizer_orbits(int depth) const
    {
        std::array<int, kBitGraphMax> parent{};
        std::iota(parent.begin(), parent.begin() + n, 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const Perm& gamma : automorphisms) {
            bool fixes = true;
            for (int k = 0; k < depth && fixes; ++k)
                fixes = gamma[first_path[k]] == first_path[k];
            if (!fixes)
                continue;
            for (int v = 0; v < n; ++v) {
                int a = find(v), b = find(gamma[v]);
                if (a != b)
                    parent[std::max(a, b)] = std::min(a, b);
            }
        }
        for (int v = 0; v < n; ++v)
            parent[v] = find(v);
        return parent;
    }

    int run(const Partition& p, int depth, bool on_first_path)
    {
        int start = 0;
        while (start < n && cell_end(p, start, n) - start == 1)
            start = cell_end(p, start, n);
        if (start >= n)
            return leaf(p, depth);
        const int end = cell_end(p, start, n);

        std::array<std::int8_t, kBitGraphMax> candidates{};
        std::copy(p.lab.begin() + start, p.lab.begin() + end, candidates.begin());
        std::sort(candidates.begin(), candidates.begin() + (end - start));

        std::uint16_t explored = 0;
        for (int c = 0; c < end - start; ++c) {
            const int v = candidates[c];
            if (on_first_path && explored) {
                auto orbit = stabilizer_orbits(depth);
                bool seen = false;
                for (int u = 0; u < n && !seen; ++u)
                    seen = (explored & (1u << u)) && orbit[u] == orbit[v];
                if (seen)
                    continue;
            }

            Partition child = p;
            int pos = start;
            while (child.lab[pos] != v)
                ++pos;
            std::swap(child.lab[start], child.lab[pos]);
            child.starts |= static_cast<std::uint16_t>(1u << (start + 1));
            refine(g, child);

            cur_path[depth] = static_cast<std::int8_t>(v);
            int jump = run(child, depth + 1, on_first_path && !explored);
            explored |= static_cast<std::uint16_t>(1u << v);
            if (jump < depth)
                return jump;
        }
        return kNoJump;
    }
};

}  // namespace

BitGraph to_bitgraph(const Graph& g)
{
    if (g.order() > kBitGraphMax)
        throw CapExceeded("dense graph form supports at most " + std::to_string(kBitGraphMax) + " vertices");
    BitGraph b;
    b.n = g.order();
    for (auto [u, v] : g.edges()) {
        b.rows[u] |= static_cast<std::uint16_t>(1u << v);
        b.rows[v] |= static_cast<std::uint16_t>(1u << u);
    }
    return b;
}

std::uint64_t code_of(const BitGraph& g)
{
    Perm identity{};
    std::iota(identity.begin(), identity.begin() + g.n, 0);
    return leaf_code(g, identity);
}

BitGraph from_code(int n, std::uint64_t code)
{
    BitGraph b;
    b.n = n;
    int bit = n * (n - 1) / 2;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            --bit;
            if ((code >> bit) & 1u) {
                b.rows[i] |= static_cast<std::uint16_t>(1u << j);
                b.rows[j] |= static_cast<std::uint16_t>(1u << i);
            }
        }
    }
    return b;
}

Graph graph_from_code(int n, std::uint64_t code)
{
    BitGraph b = from_code(n, code);
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((b.rows[i] >> j) & 1u)
                edges.emplace_back(i, j);
    return Graph(n, edges);
}

CanonicalResult canonicalize(const BitGraph& g)
{
    Partition root;
    std::iota(root.lab.begin(), root.lab.begin() + g.n, 0);
    root.starts = 1;

    // Seed with the degree partition (ascending degree) before refining.
    std::stable_sort(root.lab.begin(), root.lab.begin() + g.n, [&](int a, int b) {
        return std::popcount(static_cast<unsigned>(g.rows[a])) < std::popcount(static_cast<unsigned>(g.rows[b]));
    });
    for (int i = 1; i < g.n; ++i)
        if (std::popcount(static_cast<unsigned>(g.rows[root.lab[i]])) !=
            std::popcount(static_cast<unsigned>(g.rows[root.lab[i - 1]])))
            root.starts |= static_cast<std::uint16_t>(1u << i);
    refine(g, root);

    Search search(g);
    search.run(root, 0, true);
    return {search.best_code, search.best_lab};
}

}  // namespace detail

namespace {

void check_cap(const Graph& g)
{
    if (g.order() > kCanonicalCap)
        throw CapExceeded("canonical form supports n <= " + std::to_string(kCanonicalCap) + ", got n = " +
                          std::to_string(g.order()));
}

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g)
{
    check_cap(g);
    auto result = detail::canonicalize(detail::to_bitgraph(g));
    std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
    for (int p = 0; p < g.order(); ++p)
        perm[static_cast<std::size_t>(result.order[p])] = p;
    return perm;
}

Graph canonical_graph(const Graph& g)
{
    return g.relabeled(canonical_labeling(g));
}

std::string canonical_form(const Graph& g)
{
    check_cap(g);
    auto result = detail::canonicalize(detail::to_bitgraph(g));
    return to_graph6(detail::graph_from_code(g.order(), result.code));
}

}  // namespace irreg
