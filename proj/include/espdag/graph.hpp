#pragma once

#include <vector>

#include "espdag/errors.hpp"
#include "espdag/weight.hpp"

namespace espdag {

struct WeightedEdge {
  int u = 0;
  int v = 0;
  ExtendedWeight weight;
};

/// Simple undirected graph with non-negative edge weights.
struct UndirectedGraph {
  int n = 0;
  std::vector<WeightedEdge> edges;
};

/// Checks endpoint ranges, rejects loops and duplicate edges (unordered).
UndirectedGraph validate_graph(int vertex_count, std::vector<WeightedEdge> edges);

std::vector<int> vertex_degrees(const UndirectedGraph& g);

/// Row-per-vertex adjacency flags, symmetric.
std::vector<std::vector<bool>> adjacency_matrix(const UndirectedGraph& g);

}  // namespace espdag
