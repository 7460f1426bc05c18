#pragma once

#include <vector>

#include "espdag/errors.hpp"
#include "espdag/weight.hpp"

namespace espdag {

struct CapacityArc {
  int tail = 0;
  int head = 0;
  ExtendedWeight capacity;
};

/// Directed flow network with designated terminals. Antiparallel arc pairs
/// are permitted and are never merged or cancelled against each other.
struct FlowNetwork {
  int n = 0;
  int source = 0;
  int sink = 0;
  std::vector<CapacityArc> arcs;
};

struct MinCutResult {
  ExtendedWeight value;
  std::vector<int> source_side;  // sorted; contains source, excludes sink
  std::vector<int> cut_arcs;     // indices into FlowNetwork::arcs, ascending

  /// True when the cut value is at most the given threshold.
  bool within(const ExtendedWeight& r) const { return !(value > r); }
};

/// Minimum-weight s-t cut, exact.
///
/// Capacities are rescaled by the common denominator to integers; infinite
/// capacities become big-M = 1 + sum of all finite capacities, so the
/// returned cut contains an infinite arc only when no finite cut exists, in
/// which case the reported value is infinite. The source side is the set of
/// nodes reachable from the source in the final residual graph (the
/// canonical minimal source side).
MinCutResult min_st_cut(const FlowNetwork& net);

/// Enumerates all 2^(n-2) bipartitions; ties broken toward the
/// lexicographically smallest source side. Test oracle.
MinCutResult brute_force_min_cut(const FlowNetwork& net, int max_nodes = 20);

/// True when the sink stays reachable from the source after deleting the
/// listed arcs (by index).
bool reaches_sink_without(const FlowNetwork& net, const std::vector<int>& removed_arcs);

}  // namespace espdag
