#include "irreg/graph.hpp"

#include "irreg/errors.hpp"

#include <algorithm>
#include <string>

namespace irreg {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n)
{
    if (n < 1)
        throw GraphError(GraphError::Kind::InvalidSize, "graph must have at least one vertex, got " + std::to_string(n));

    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError(GraphError::Kind::VertexOutOfRange,
                             "edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside [0," +
                                 std::to_string(n) + ")");
        if (u == v)
            throw GraphError(GraphError::Kind::SelfLoop, "self-loop at vertex " + std::to_string(u));
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw GraphError(GraphError::Kind::DuplicateEdge,
                         "edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ") given twice");

    adjacency_.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : edges_) {
        adjacency_[static_cast<std::size_t>(u)].push_back(v);
        adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& row : adjacency_)
        std::sort(row.begin(), row.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        return false;
    auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const
{
    if (static_cast<int>(perm.size()) != n_)
        throw GraphError(GraphError::Kind::InvalidSize, "permutation length does not match vertex count");
    std::vector<Edge> mapped;
    mapped.reserve(edges_.size());
    for (auto [u, v] : edges_)
        mapped.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return Graph(n_, mapped);
}

Graph from_edges(int n, std::span<const Edge> edges)
{
    return Graph(n, edges);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g)
{
    const int n = g.order();
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<Vertex>> components;
    std::vector<Vertex> stack;
    for (Vertex root = 0; root < n; ++root) {
        if (seen[static_cast<std::size_t>(root)])
            continue;
        std::vector<Vertex> comp;
        stack.push_back(root);
        seen[static_cast<std::size_t>(root)] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

bool is_connected(const Graph& g)
{
    return connected_components(g).size() == 1;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices)
{
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    std::vector<Edge> sub;
    for (auto [u, v] : g.edges()) {
        int a = index[static_cast<std::size_t>(u)];
        int b = index[static_cast<std::size_t>(v)];
        if (a >= 0 && b >= 0)
            sub.emplace_back(a, b);
    }
    return Graph(static_cast<int>(vertices.size()), sub);
}

}  // namespace irreg
