#include "irreg/generators.hpp"

#include "irreg/errors.hpp"

#include <algorithm>
#include <string>

namespace irreg {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw GraphError(GraphError::Kind::InvalidSize, what);
}

}  // namespace

Graph complete(int n)
{
    require(n >= 1, "complete(n) needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph cycle(int n)
{
    require(n >= 3, "cycle(n) needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph path(int n)
{
    require(n >= 1, "path(n) needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph star(int n)
{
    require(n >= 2, "star(n) needs n >= 2");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i)
        edges.emplace_back(0, i);
    return Graph(n, edges);
}

Graph prism(int k)
{
    require(k >= 3, "prism(k) needs k >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(i, (i + 1) % k);
        edges.emplace_back(k + i, k + (i + 1) % k);
        edges.emplace_back(i, k + i);
    }
    return Graph(2 * k, edges);
}

Graph subdivide_edge(const Graph& g, Edge e)
{
    if (!g.adjacent(e.first, e.second))
        throw GraphError(GraphError::Kind::MissingEdge, "cannot subdivide missing edge (" + std::to_string(e.first) +
                                                            "," + std::to_string(e.second) + ")");
    const Edge target{std::min(e.first, e.second), std::max(e.first, e.second)};
    const int w = g.order();
    std::vector<Edge> edges;
    for (const Edge& f : g.edges())
        if (f != target)
            edges.push_back(f);
    edges.emplace_back(target.first, w);
    edges.emplace_back(w, target.second);
    return Graph(w + 1, edges);
}

Graph subdivided_prism(int k)
{
    return subdivide_edge(prism(k), {0, 1});
}

}  // namespace irreg
