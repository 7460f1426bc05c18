#pragma once

#include <optional>
#include <span>
#include <vector>

#include "espdag/core.hpp"
#include "espdag/graph.hpp"

namespace espdag {

struct MultiwayInstance {
  UndirectedGraph graph;
  std::vector<int> terminals;  // distinct vertex ids, one per part
  std::optional<ExtendedWeight> r;
};

/// Origin record for one vertex of a reduced instance.
struct VertexProvenance {
  enum class Kind { Original, Terminal, Subdivision, Padding };

  Kind kind = Kind::Original;
  int original = -1;        // Original/Terminal/Padding: source-graph vertex
  int terminal_index = -1;  // Terminal only
  int arc_tail = -1;        // Subdivision only: the oriented source arc
  int arc_head = -1;
  int padding_index = -1;   // Padding only: position within the owner's set
};

/// A reduced instance together with a provenance record per produced vertex
/// (provenance covers every vertex exactly once).
struct ReductionArtifact {
  Instance instance;
  std::optional<int> ell;  // set by the size-bounded reduction
  std::vector<VertexProvenance> provenance;
  int original_count = 0;  // vertices of the source graph, ids 0..count-1
};

/// Orients edges forward along ascending vertex id, subdivides every arc
/// with a fresh carrier vertex holding the edge weight as its q value, pins
/// terminal i to machine i through infinite p entries, and gives original
/// vertices infinite q. With unit_costs (requires all edge weights equal 1)
/// every finite p value becomes 1 and the threshold grows by the number of
/// produced vertices, the forced per-vertex baseline.
ReductionArtifact reduce_multiway_to_espdag(const MultiwayInstance& mw, bool unit_costs);

/// Extends a partition of the original vertices to the whole reduced
/// instance: subdivision vertices follow their arc tail. For a
/// terminal-respecting partition the lifted total cost equals the crossing
/// weight (plus the unit-costs baseline).
Assignment lift_multiway_partition(const ReductionArtifact& artifact,
                                   std::span<const int> part_of);

/// Restriction of a finite-cost assignment to the original vertices.
/// Throws Error{InfiniteCostAssignment} when the assignment triggers an
/// infinite term.
std::vector<int> project_espdag_assignment(const ReductionArtifact& artifact,
                                           const Assignment& f);

/// Size-bounded minimum s-t cut instance.
struct SbmInstance {
  UndirectedGraph graph;
  int s = 0;
  int t = 0;
  std::optional<ExtendedWeight> r;
  int ell = 0;
};

/// From a d-regular graph (d >= ell >= 1): adds terminals s, t adjacent to
/// every vertex, weights d+2 on s-edges and 1 elsewhere, threshold
/// n*(d+2) - ell^2, size bound ell+1.
SbmInstance reduce_clique_to_sbm(const UndirectedGraph& g, int ell);

/// Accepts only inputs shaped like reduce_clique_to_sbm output: s and t
/// adjacent to every non-terminal, s-t not adjacent, all non-terminals of
/// one shared degree d. Orients with s first and t last, subdivides all
/// arcs, pads every non-terminal v with indegree-many fresh sinks, and
/// transfers the size bound as ell + n + d*(ell-1).
ReductionArtifact reduce_sbm_to_sbesbp(const SbmInstance& sbm);

}  // namespace espdag
