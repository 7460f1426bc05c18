#pragma once

#include <span>
#include <vector>

#include "espdag/errors.hpp"

namespace espdag {

using VertexId = int;

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Immutable simple DAG with cached adjacency lists and a topological order.
/// Construct through validate_dag().
class Dag {
 public:
  Dag() = default;  // the empty graph

  int vertex_count() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<VertexId>& out_neighbors(VertexId v) const { return out_adj_[v]; }
  const std::vector<VertexId>& in_neighbors(VertexId v) const { return in_adj_[v]; }
  const std::vector<VertexId>& topo_order() const { return topo_order_; }

  int out_degree(VertexId v) const { return static_cast<int>(out_adj_[v].size()); }
  int in_degree(VertexId v) const { return static_cast<int>(in_adj_[v].size()); }
  bool is_sink(VertexId v) const { return out_adj_[v].empty(); }
  bool is_source(VertexId v) const { return in_adj_[v].empty(); }
  int nonsink_count() const;

 private:
  friend Dag validate_dag(int vertex_count, std::span<const Arc> arcs);

  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<VertexId>> out_adj_;
  std::vector<std::vector<VertexId>> in_adj_;
  std::vector<VertexId> topo_order_;
};

/// Checks arc endpoints, rejects self-loops, duplicate arcs and cycles, and
/// returns the DAG with adjacency and a topological order filled in.
///
/// Throws: Error{IndexOutOfRange, SelfLoop, DuplicateArc, ValidationError} or
/// CycleError (which carries one witness cycle).
Dag validate_dag(int vertex_count, std::span<const Arc> arcs);

}  // namespace espdag
