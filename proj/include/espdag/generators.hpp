#pragma once

#include <cstdint>

#include "espdag/core.hpp"
#include "espdag/graph.hpp"

namespace espdag {

/// Fixed-algorithm 64-bit generator (splitmix64 update constants
/// 0x9E3779B97F4A7C15 / 0xBF58476D1CE4E5B9 / 0x94D049BB133111EB), so the
/// same seed reproduces the same stream on every platform and standard
/// library. Bounded draws use the modulo reduction next() % bound.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  std::uint64_t next_below(std::uint64_t bound);  // bound > 0

  /// Bernoulli draw from the low 32 bits against a fixed-point threshold.
  bool chance(double probability);

 private:
  std::uint64_t state_;
};

/// Closed integer interval scaled by a fixed denominator; samples are
/// (lo + draw) / denominator, kept exact.
struct WeightRange {
  long long lo = 0;
  long long hi = 10;
  long long denominator = 1;
};

enum class GenShape { RandomDag, Path, RegularGraph };

struct GenSpec {
  std::uint64_t seed = 0;
  int n = 0;
  int m = 0;  // DAG shape only
  int k = 2;
  int d = 0;  // regular shape only
  WeightRange weight_range;
  double infinite_fraction = 0.0;  // probability of an infinite q entry
  GenShape shape = GenShape::RandomDag;
};

/// Uniformly random vertex order, then m distinct forward arcs; p and q are
/// sampled row-major (p first, then q), q entries infinite with the given
/// fraction. Deterministic per seed.
Instance gen_random_dag_instance(const GenSpec& spec);

/// Directed path 0 -> 1 -> ... -> n-1 with sampled weights.
Instance gen_path_instance(const GenSpec& spec);

/// Simple d-regular graph by pairing-model sampling with rejection of loops
/// and duplicate edges (unit edge weights). Requires n*d even and d < n.
UndirectedGraph gen_regular_graph(const GenSpec& spec);

}  // namespace espdag
