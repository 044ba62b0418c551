#pragma once

#include "irreg/graph.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace irreg {

inline constexpr int kEnumerationCap = 9;

/// One representative per isomorphism class of graphs on n vertices,
/// optionally restricted to m edges and/or to connected graphs. Each
/// representative is canonically labeled. Order is deterministic: by edge
/// count, then by canonical code. Throws CapExceeded for n > kEnumerationCap.
std::vector<Graph> enumerate_graphs(int n, std::optional<int> m = std::nullopt, bool connected_only = false);

/// Streaming form of enumerate_graphs; same order.
void for_each_graph(int n, std::optional<int> m, bool connected_only, const std::function<void(const Graph&)>& visit);

std::size_t count_graphs(int n, std::optional<int> m = std::nullopt, bool connected_only = false);

}  // namespace irreg
