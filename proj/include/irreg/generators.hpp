#pragma once

#include "irreg/graph.hpp"

namespace irreg {

Graph complete(int n);        // n >= 1
Graph cycle(int n);           // n >= 3
Graph path(int n);            // n >= 1, vertices in path order
Graph star(int n);            // K_{1,n-1} with centre 0, n >= 2
Graph prism(int k);           // C_k x K_2, k >= 3: outer ring 0..k-1, inner ring k..2k-1

/// Replaces edge {u,v} by the path u - w - v through a new vertex w = n.
Graph subdivide_edge(const Graph& g, Edge e);

/// prism(k) with its edge {0,1} subdivided: n = 2k+1, one vertex of degree 2,
/// the rest of degree 3.
Graph subdivided_prism(int k);

}  // namespace irreg
