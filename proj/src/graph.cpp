#include "espdag/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace espdag {

UndirectedGraph validate_graph(int vertex_count, std::vector<WeightedEdge> edges) {
  if (vertex_count < 0) {
    throw Error(ErrorKind::ValidationError, "negative vertex count");
  }
  std::set<std::pair<int, int>> seen;
  for (const WeightedEdge& e : edges) {
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} outside 0.." +
                      std::to_string(vertex_count - 1));
    }
    if (e.u == e.v) {
      throw Error(ErrorKind::SelfLoop, "vertex " + std::to_string(e.u));
    }
    auto key = std::minmax(e.u, e.v);
    if (!seen.emplace(key.first, key.second).second) {
      throw Error(ErrorKind::DuplicateArc,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
  }
  return UndirectedGraph{vertex_count, std::move(edges)};
}

std::vector<int> vertex_degrees(const UndirectedGraph& g) {
  std::vector<int> deg(g.n, 0);
  for (const WeightedEdge& e : g.edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<std::vector<bool>> adjacency_matrix(const UndirectedGraph& g) {
  std::vector<std::vector<bool>> adj(g.n, std::vector<bool>(g.n, false));
  for (const WeightedEdge& e : g.edges) {
    adj[e.u][e.v] = true;
    adj[e.v][e.u] = true;
  }
  return adj;
}

}  // namespace espdag
