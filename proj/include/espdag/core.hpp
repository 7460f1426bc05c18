#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "espdag/dag.hpp"
#include "espdag/weight.hpp"

namespace espdag {

/// Per-vertex execution costs on each of k machines plus per-vertex output
/// transfer costs. Machine indices are 0-based internally; the external text
/// format is 1-based.
struct EnergyProfile {
  int k = 1;
  std::vector<std::vector<ExtendedWeight>> p;  // p[v][machine]
  std::vector<ExtendedWeight> q;               // q[v]
};

struct Instance {
  Dag dag;
  EnergyProfile profile;
  std::optional<ExtendedWeight> r;  // decision threshold
  std::vector<std::string> labels;  // optional; empty or one entry per vertex
};

/// k == 2 instance with a cap on how many vertices machine 1 may take.
struct SbInstance {
  Instance base;
  int ell = 0;
};

/// Machine assignment, one 0-based machine index per vertex.
struct Assignment {
  std::vector<int> machine_of;

  int size() const { return static_cast<int>(machine_of.size()); }
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Two-way split; side_of[v] is 0 (side 1) or 1 (side 2).
struct Bipartition {
  std::vector<int> side_of;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

Assignment to_assignment(const Bipartition& b);
Bipartition to_bipartition(const Assignment& f);  // entries must be 0 or 1

/// Validates that profile/label dimensions match the DAG and that machine
/// count is positive. Throws Error{DimensionMismatch, ValidationError}.
void check_instance(const Instance& instance);
void check_sb_instance(const SbInstance& instance);
void check_assignment(const Instance& instance, const Assignment& f);

/// 1 iff v has at least one outneighbor in `members`.
int indicator(const Dag& dag, VertexId v, std::span<const VertexId> members);

/// Total transfer energy of an assignment: each vertex pays q(v) once per
/// distinct foreign machine hosting at least one of its outneighbors (never
/// per arc). Terms with a zero indicator are skipped outright, so an
/// infinite q never leaks into the sum unless actually triggered.
ExtendedWeight transfer_cost(const Instance& instance, const Assignment& f);

/// Two-sided form of the transfer cost; requires k == 2 and agrees exactly
/// with transfer_cost under the induced assignment.
ExtendedWeight bipartition_transfer_cost(const Instance& instance, const Bipartition& b);

/// Execution cost sum plus transfer cost.
ExtendedWeight total_cost(const Instance& instance, const Assignment& f);

}  // namespace espdag
