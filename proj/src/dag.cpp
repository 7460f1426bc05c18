#include "espdag/dag.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace espdag {

int Dag::nonsink_count() const {
  int count = 0;
  for (int v = 0; v < n_; ++v) {
    if (!out_adj_[v].empty()) ++count;
  }
  return count;
}

namespace {

// Walks forward through the vertices that Kahn's algorithm never released
// until a vertex repeats, then returns the closed sub-walk.
std::vector<int> extract_cycle(const std::vector<std::vector<VertexId>>& out_adj,
                               const std::vector<char>& in_cycle_region, int start) {
  std::vector<int> walk;
  std::vector<int> position(out_adj.size(), -1);
  int v = start;
  while (position[v] < 0) {
    position[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    for (VertexId u : out_adj[v]) {
      if (in_cycle_region[u]) {
        v = u;
        break;
      }
    }
  }
  std::vector<int> cycle(walk.begin() + position[v], walk.end());
  cycle.push_back(v);
  return cycle;
}

}  // namespace

Dag validate_dag(int vertex_count, std::span<const Arc> arcs) {
  if (vertex_count < 0) {
    throw Error(ErrorKind::ValidationError, "negative vertex count");
  }
  Dag dag;
  dag.n_ = vertex_count;
  dag.arcs_.assign(arcs.begin(), arcs.end());
  dag.out_adj_.resize(vertex_count);
  dag.in_adj_.resize(vertex_count);

  std::set<std::pair<int, int>> seen;
  for (const Arc& arc : dag.arcs_) {
    if (arc.tail < 0 || arc.tail >= vertex_count || arc.head < 0 || arc.head >= vertex_count) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "arc (" + std::to_string(arc.tail) + "," + std::to_string(arc.head) +
                      ") outside 0.." + std::to_string(vertex_count - 1));
    }
    if (arc.tail == arc.head) {
      throw Error(ErrorKind::SelfLoop, "vertex " + std::to_string(arc.tail));
    }
    if (!seen.emplace(arc.tail, arc.head).second) {
      throw Error(ErrorKind::DuplicateArc,
                  "(" + std::to_string(arc.tail) + "," + std::to_string(arc.head) + ")");
    }
    dag.out_adj_[arc.tail].push_back(arc.head);
    dag.in_adj_[arc.head].push_back(arc.tail);
  }

  // Kahn's algorithm; smallest-id-first release keeps the order canonical.
  std::vector<int> pending_in(vertex_count);
  for (int v = 0; v < vertex_count; ++v) pending_in[v] = dag.in_degree(v);
  std::set<int> ready;
  for (int v = 0; v < vertex_count; ++v) {
    if (pending_in[v] == 0) ready.insert(v);
  }
  dag.topo_order_.reserve(vertex_count);
  while (!ready.empty()) {
    int v = *ready.begin();
    ready.erase(ready.begin());
    dag.topo_order_.push_back(v);
    for (VertexId u : dag.out_adj_[v]) {
      if (--pending_in[u] == 0) ready.insert(u);
    }
  }
  if (static_cast<int>(dag.topo_order_.size()) != vertex_count) {
    std::vector<char> leftover(vertex_count, 0);
    int start = -1;
    for (int v = 0; v < vertex_count; ++v) {
      if (pending_in[v] > 0) {
        leftover[v] = 1;
        if (start < 0) start = v;
      }
    }
    throw CycleError("directed cycle found", extract_cycle(dag.out_adj_, leftover, start));
  }
  return dag;
}

}  // namespace espdag
