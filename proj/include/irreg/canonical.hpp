#pragma once

#include "irreg/graph.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace irreg {

inline constexpr int kCanonicalCap = 9;

/// Isomorphism-invariant encoding: the graph6 string of the canonically
/// relabeled graph. Two graphs get equal forms iff they are isomorphic.
/// Throws CapExceeded for n > kCanonicalCap.
std::string canonical_form(const Graph& g);

/// perm[v] = position of old vertex v in the canonical labeling.
std::vector<Vertex> canonical_labeling(const Graph& g);

/// g relabeled canonically.
Graph canonical_graph(const Graph& g);

namespace detail {

// Dense representation used by the canonical search and the enumerator.
// The code of a labeled graph packs its graph6 bit string x(0,1) x(0,2)
// x(1,2) ... into an integer, first pair in the most significant position,
// so integer order is lexicographic order of the bit string.

inline constexpr int kBitGraphMax = 11;  // 55 code bits

struct BitGraph {
    int n = 0;
    std::array<std::uint16_t, kBitGraphMax> rows{};
};

struct CanonicalResult {
    std::uint64_t code = 0;
    std::array<std::int8_t, kBitGraphMax> order{};  // order[p] = vertex placed at position p
};

BitGraph to_bitgraph(const Graph& g);
std::uint64_t code_of(const BitGraph& g);
BitGraph from_code(int n, std::uint64_t code);
Graph graph_from_code(int n, std::uint64_t code);

/// Maximum code over the leaves of an individualization-refinement search
/// with automorphism pruning.
CanonicalResult canonicalize(const BitGraph& g);

}  // namespace detail

}  // namespace irreg
