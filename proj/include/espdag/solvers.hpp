#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "espdag/core.hpp"
#include "espdag/flow.hpp"
#include "espdag/graph.hpp"

namespace espdag {

/// Default cap on enumeration work for the brute-force solvers (number of
/// candidate evaluations). Overridable per call; the CLI also honors the
/// ESPDAG_BUDGET environment variable.
inline constexpr long long kDefaultEnumerationBudget = 1LL << 22;

struct SolveStats {
  int nodes = 0;
  int arcs = 0;
  long long evaluations = 0;
  double seconds = 0.0;
};

struct SolveResult {
  ExtendedWeight cost;
  Assignment witness;
  std::string algo;
  SolveStats stats;
};

/// Enumerates all k^n assignments in lexicographic order and returns the
/// minimum cost together with the lexicographically smallest optimal
/// witness. Throws Error{TooLarge} when k^n exceeds the budget.
SolveResult solve_brute_force(const Instance& instance,
                              long long budget = kDefaultEnumerationBudget);

/// Split-vertex cut gadget for the two-machine solver. Original vertices
/// keep their ids; every non-sink v gains a v+ / v- pair wired with
/// infinite-capacity structural arcs and q(v)-capacity toggle arcs; the
/// terminals carry the execution costs (s->v with p(v,2), v->t with p(v,1)).
struct GadgetGraph {
  FlowNetwork network;
  std::vector<int> vplus_of;    // -1 for sinks
  std::vector<int> vminus_of;   // -1 for sinks
  std::vector<int> original_of; // gadget node -> original vertex, -1 otherwise
  int s_node = -1;
  int t_node = -1;
};

/// Requires k == 2. Node count is n + 2*#nonsinks + 2 and arc count is
/// 2m + 2*#nonsinks + 2n.
GadgetGraph build_two_machine_gadget(const Instance& instance);

/// Exact two-machine solver via a minimum s-t cut on the gadget. Original
/// vertices on the source side go to machine 1, the rest to machine 2; the
/// reported cost equals both the cut value and the witness's total cost.
SolveResult solve_two_machines(const Instance& instance);

/// True when the DAG is one directed path covering every vertex.
bool is_directed_path(const Dag& dag);

/// Exact solver for directed-path DAGs, any k >= 1. The path shape is
/// verified structurally, not declared; throws Error{NotAPath} otherwise.
SolveResult solve_path_dp(const Instance& instance);

/// Cost-only variant of solve_path_dp that skips the back-pointer table.
ExtendedWeight path_dp_cost(const Instance& instance);

/// Greedy start (per-vertex argmin of p, ties to the smallest machine) plus
/// `restarts - 1` uniform-random starts from the seeded generator; each
/// start applies the best strictly improving single-vertex reassignment
/// until none exists. Deterministic given (instance, seed, restarts).
SolveResult solve_local_search(const Instance& instance, std::uint64_t seed, int restarts);

/// Enumerates every machine-1 side of size at most ell. Witness entries are
/// machine 0 for side V1 and machine 1 for side V2.
SolveResult solve_sb_brute_force(const SbInstance& instance,
                                 long long budget = kDefaultEnumerationBudget);

struct SbmCutResult {
  ExtendedWeight cost;
  std::vector<int> source_side;  // sorted; contains s

  bool within(const ExtendedWeight& r) const { return !(cost > r); }
};

/// Minimum weight of edges crossing (V_s, V_t) with s in V_s, t in V_t and
/// |V_s| <= ell; ties toward the lexicographically smallest V_s. When ell
/// forbids every bipartition (ell < 1) the cost is infinite.
SbmCutResult solve_sbm_brute_force(const UndirectedGraph& g, int s, int t, int ell,
                                   long long budget = kDefaultEnumerationBudget);

struct MultiwayCutResult {
  ExtendedWeight cost;
  std::vector<int> part_of;  // part_of[terminals[i]] == i

  bool within(const ExtendedWeight& r) const { return !(cost > r); }
};

/// Minimum total weight of edges crossing a partition that separates all
/// terminals (terminal i pinned to part i).
MultiwayCutResult solve_multiway_brute_force(const UndirectedGraph& g,
                                             std::span<const int> terminals,
                                             long long budget = kDefaultEnumerationBudget);

struct CliqueResult {
  bool found = false;
  std::vector<int> witness;  // ell pairwise adjacent vertices when found
};

/// First ell-subset of pairwise adjacent vertices in lexicographic order.
CliqueResult find_clique_brute_force(const UndirectedGraph& g, int ell,
                                     long long budget = kDefaultEnumerationBudget);

}  // namespace espdag
