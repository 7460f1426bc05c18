#include "espdag/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <utility>

namespace espdag {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  return next() % bound;
}

bool SplitMix64::chance(double probability) {
  const double clamped = std::clamp(probability, 0.0, 1.0);
  const auto threshold = static_cast<std::uint64_t>(std::llround(clamped * 4294967296.0));
  return (next() & 0xFFFFFFFFull) < threshold;
}

namespace {

void check_range(const WeightRange& range) {
  if (range.lo < 0 || range.hi < range.lo || range.denominator < 1) {
    throw Error(ErrorKind::InfeasibleSpec, "bad weight range");
  }
}

ExtendedWeight sample_weight(SplitMix64& rng, const WeightRange& range) {
  const auto span = static_cast<std::uint64_t>(range.hi - range.lo) + 1;
  const long long numerator = range.lo + static_cast<long long>(rng.next_below(span));
  return ExtendedWeight::ratio(numerator, range.denominator);
}

// p row-major (vertex then machine), then q per vertex; this draw order is
// part of the generator contract.
EnergyProfile sample_profile(SplitMix64& rng, const GenSpec& spec) {
  EnergyProfile profile;
  profile.k = spec.k;
  profile.p.resize(spec.n);
  for (int v = 0; v < spec.n; ++v) {
    profile.p[v].reserve(spec.k);
    for (int i = 0; i < spec.k; ++i) profile.p[v].push_back(sample_weight(rng, spec.weight_range));
  }
  profile.q.reserve(spec.n);
  for (int v = 0; v < spec.n; ++v) {
    if (rng.chance(spec.infinite_fraction)) {
      profile.q.push_back(ExtendedWeight::infinity());
    } else {
      profile.q.push_back(sample_weight(rng, spec.weight_range));
    }
  }
  return profile;
}

constexpr long long kMaxMaterializedPairs = 4'000'000;

}  // namespace

Instance gen_random_dag_instance(const GenSpec& spec) {
  if (spec.n < 0 || spec.k < 1) {
    throw Error(ErrorKind::InfeasibleSpec, "need n >= 0 and k >= 1");
  }
  check_range(spec.weight_range);
  const long long max_arcs = static_cast<long long>(spec.n) * (spec.n - 1) / 2;
  if (spec.m < 0 || spec.m > max_arcs) {
    throw Error(ErrorKind::InfeasibleSpec,
                "m must lie in 0.." + std::to_string(max_arcs) + " for n=" + std::to_string(spec.n));
  }

  SplitMix64 rng(spec.seed);
  std::vector<int> order(spec.n);
  for (int i = 0; i < spec.n; ++i) order[i] = i;
  for (int i = spec.n - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(order[i], order[j]);
  }

  // Positions within the sampled order; arcs always point forward.
  std::vector<std::pair<int, int>> picked;
  picked.reserve(spec.m);
  if (2LL * spec.m > max_arcs) {
    if (max_arcs > kMaxMaterializedPairs) {
      throw Error(ErrorKind::InfeasibleSpec, "dense arc sampling beyond the supported size");
    }
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(max_arcs);
    for (int i = 0; i < spec.n; ++i) {
      for (int j = i + 1; j < spec.n; ++j) pairs.emplace_back(i, j);
    }
    for (int i = 0; i < spec.m; ++i) {
      const auto j = i + static_cast<long long>(rng.next_below(pairs.size() - i));
      std::swap(pairs[i], pairs[j]);
      picked.push_back(pairs[i]);
    }
  } else {
    std::set<std::pair<int, int>> seen;
    while (static_cast<int>(picked.size()) < spec.m) {
      const auto i = static_cast<int>(rng.next_below(spec.n));
      const auto j = static_cast<int>(rng.next_below(spec.n));
      if (i == j) continue;
      auto pair = std::minmax(i, j);
      if (seen.emplace(pair.first, pair.second).second) {
        picked.emplace_back(pair.first, pair.second);
      }
    }
  }

  std::vector<Arc> arcs;
  arcs.reserve(spec.m);
  for (const auto& [i, j] : picked) arcs.push_back({order[i], order[j]});
  std::sort(arcs.begin(), arcs.end());

  Instance instance;
  instance.dag = validate_dag(spec.n, arcs);
  instance.profile = sample_profile(rng, spec);
  return instance;
}

Instance gen_path_instance(const GenSpec& spec) {
  if (spec.n < 1 || spec.k < 1) {
    throw Error(ErrorKind::InfeasibleSpec, "need n >= 1 and k >= 1");
  }
  check_range(spec.weight_range);
  SplitMix64 rng(spec.seed);
  std::vector<Arc> arcs;
  arcs.reserve(spec.n - 1);
  for (int v = 0; v + 1 < spec.n; ++v) arcs.push_back({v, v + 1});

  Instance instance;
  instance.dag = validate_dag(spec.n, arcs);
  instance.profile = sample_profile(rng, spec);
  return instance;
}

UndirectedGraph gen_regular_graph(const GenSpec& spec) {
  if (spec.n < 1 || spec.d < 0 || spec.d >= spec.n ||
      (static_cast<long long>(spec.n) * spec.d) % 2 != 0) {
    throw Error(ErrorKind::InfeasibleSpec, "need d < n and n*d even");
  }
  SplitMix64 rng(spec.seed);
  constexpr int kMaxAttempts = 1000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<int> stubs;
    stubs.reserve(static_cast<size_t>(spec.n) * spec.d);
    for (int v = 0; v < spec.n; ++v) {
      for (int i = 0; i < spec.d; ++i) stubs.push_back(v);
    }
    for (int i = static_cast<int>(stubs.size()) - 1; i > 0; --i) {
      const auto j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
      std::swap(stubs[i], stubs[j]);
    }
    std::set<std::pair<int, int>> seen;
    bool simple = true;
    for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
      const auto pair = std::minmax(stubs[i], stubs[i + 1]);
      if (pair.first == pair.second || !seen.emplace(pair.first, pair.second).second) {
        simple = false;
        break;
      }
    }
    if (!simple) continue;
    std::vector<WeightedEdge> edges;
    edges.reserve(seen.size());
    for (const auto& [u, v] : seen) edges.push_back({u, v, ExtendedWeight(1)});
    return validate_graph(spec.n, std::move(edges));
  }
  throw Error(ErrorKind::RetryLimit,
              "no simple pairing found in " + std::to_string(kMaxAttempts) + " attempts");
}

}  // namespace espdag
