#include "espdag/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "espdag/generators.hpp"

namespace espdag {

namespace {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// base^exp when it stays within cap (base >= 1).
std::optional<long long> checked_pow(long long base, int exp, long long cap) {
  long long result = 1;
  for (int i = 0; i < exp; ++i) {
    if (result > cap / base) return std::nullopt;
    result *= base;
    if (result > cap) return std::nullopt;
  }
  return result;
}

// sum_{j<=ell} C(n, j) when it stays within cap.
std::optional<long long> combinations_up_to(int n, int ell, long long cap) {
  long long total = 0;
  unsigned __int128 binom = 1;
  for (int j = 0; j <= std::min(ell, n); ++j) {
    if (binom > static_cast<unsigned __int128>(cap)) return std::nullopt;
    total += static_cast<long long>(binom);
    if (total > cap) return std::nullopt;
    binom = binom * static_cast<unsigned __int128>(n - j) / static_cast<unsigned __int128>(j + 1);
  }
  return total;
}

std::optional<long long> binomial(int n, int ell, long long cap) {
  unsigned __int128 binom = 1;
  for (int j = 0; j < ell; ++j) {
    binom = binom * static_cast<unsigned __int128>(n - j) / static_cast<unsigned __int128>(j + 1);
    if (binom > static_cast<unsigned __int128>(cap)) return std::nullopt;
  }
  return static_cast<long long>(binom);
}

// Lexicographic successor over {0..k-1}^n; the last vertex is the least
// significant digit.
bool advance_assignment(std::vector<int>& f, int k) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (++f[i] < k) return true;
    f[i] = 0;
  }
  return false;
}

// Standard next-combination over ascending index vectors c in 0..n-1.
bool advance_combination(std::vector<int>& c, int n) {
  const int j = static_cast<int>(c.size());
  for (int i = j - 1; i >= 0; --i) {
    if (c[i] < n - j + i) {
      ++c[i];
      for (int t = i + 1; t < j; ++t) c[t] = c[t - 1] + 1;
      return true;
    }
  }
  return false;
}

// Evaluates total cost over integers after rescaling every finite weight by
// the common denominator; exactness is preserved and the hot enumeration
// loops avoid rational normalization.
class ScaledEvaluator {
 public:
  struct Cost {
    bool infinite = false;
    BigInt value;
  };

  explicit ScaledEvaluator(const Instance& instance)
      : dag_(instance.dag), k_(instance.profile.k) {
    const int n = dag_.vertex_count();
    BigInt den = 1;
    auto fold = [&den](const ExtendedWeight& w) {
      if (!w.is_infinite()) {
        den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(w.value()));
      }
    };
    for (const auto& row : instance.profile.p) {
      for (const ExtendedWeight& w : row) fold(w);
    }
    for (const ExtendedWeight& w : instance.profile.q) fold(w);
    denominator_ = den;

    auto scale = [this](const ExtendedWeight& w) -> std::pair<bool, BigInt> {
      if (w.is_infinite()) return {false, 0};
      const Rational& value = w.value();
      return {true, boost::multiprecision::numerator(value) *
                        (denominator_ / boost::multiprecision::denominator(value))};
    };
    p_finite_.resize(n);
    p_value_.resize(n);
    q_finite_.resize(n);
    q_value_.resize(n);
    for (int v = 0; v < n; ++v) {
      p_finite_[v].resize(k_);
      p_value_[v].resize(k_);
      for (int i = 0; i < k_; ++i) {
        auto [finite, value] = scale(instance.profile.p[v][i]);
        p_finite_[v][i] = finite;
        p_value_[v][i] = std::move(value);
      }
      auto [finite, value] = scale(instance.profile.q[v]);
      q_finite_[v] = finite;
      q_value_[v] = std::move(value);
    }
    last_seen_.assign(k_, -1);
  }

  Cost total(std::span<const int> machine_of) {
    Cost cost;
    for (int v = 0; v < dag_.vertex_count(); ++v) {
      const int machine = machine_of[v];
      if (!p_finite_[v][machine]) return {true, 0};
      cost.value += p_value_[v][machine];
    }
    for (int v = 0; v < dag_.vertex_count(); ++v) {
      ++stamp_;
      int foreign = 0;
      for (VertexId u : dag_.out_neighbors(v)) {
        const int machine = machine_of[u];
        if (machine != machine_of[v] && last_seen_[machine] != stamp_) {
          last_seen_[machine] = stamp_;
          ++foreign;
        }
      }
      if (foreign > 0) {
        if (!q_finite_[v]) return {true, 0};
        cost.value += q_value_[v] * foreign;
      }
    }
    return cost;
  }

  ExtendedWeight to_weight(const Cost& cost) const {
    if (cost.infinite) return ExtendedWeight::infinity();
    return ExtendedWeight(Rational(cost.value, denominator_));
  }

  Cost p_cost(int v, int machine) const {
    if (!p_finite_[v][machine]) return {true, 0};
    return {false, p_value_[v][machine]};
  }

  Cost q_cost(int v) const {
    if (!q_finite_[v]) return {true, 0};
    return {false, q_value_[v]};
  }

  static Cost add(const Cost& a, const Cost& b) {
    if (a.infinite || b.infinite) return {true, 0};
    return {false, a.value + b.value};
  }

  static bool less(const Cost& a, const Cost& b) {
    if (a.infinite || b.infinite) return !a.infinite && b.infinite;
    return a.value < b.value;
  }

  static bool equal(const Cost& a, const Cost& b) { return !less(a, b) && !less(b, a); }

 private:
  const Dag& dag_;
  int k_;
  BigInt denominator_;
  std::vector<std::vector<char>> p_finite_;
  std::vector<std::vector<BigInt>> p_value_;
  std::vector<char> q_finite_;
  std::vector<BigInt> q_value_;
  std::vector<long long> last_seen_;
  long long stamp_ = 0;
};

SolveResult finish_result(const Instance& instance, ExtendedWeight cost, Assignment witness,
                          std::string algo, long long evaluations, const Timer& timer) {
  if (!(total_cost(instance, witness) == cost)) {
    throw std::logic_error("solver '" + algo + "' reported a cost its witness does not reproduce");
  }
  SolveStats stats{instance.dag.vertex_count(), instance.dag.arc_count(), evaluations,
                   timer.seconds()};
  return SolveResult{std::move(cost), std::move(witness), std::move(algo), stats};
}

}  // namespace

SolveResult solve_brute_force(const Instance& instance, long long budget) {
  check_instance(instance);
  Timer timer;
  const int n = instance.dag.vertex_count();
  const int k = instance.profile.k;
  if (!checked_pow(k, n, budget)) {
    throw Error(ErrorKind::TooLarge, std::to_string(k) + "^" + std::to_string(n) +
                                         " assignments exceed budget " + std::to_string(budget));
  }

  ScaledEvaluator eval(instance);
  std::vector<int> f(n, 0);
  std::vector<int> best_f = f;
  ScaledEvaluator::Cost best = eval.total(f);
  long long evaluations = 1;
  while (advance_assignment(f, k)) {
    ScaledEvaluator::Cost cost = eval.total(f);
    ++evaluations;
    if (ScaledEvaluator::less(cost, best)) {
      best = std::move(cost);
      best_f = f;
    }
  }
  return finish_result(instance, eval.to_weight(best), Assignment{std::move(best_f)}, "brute",
                       evaluations, timer);
}

GadgetGraph build_two_machine_gadget(const Instance& instance) {
  check_instance(instance);
  if (instance.profile.k != 2) {
    throw Error(ErrorKind::KNotTwo, "the cut gadget needs exactly two machines");
  }
  const Dag& dag = instance.dag;
  const int n = dag.vertex_count();

  GadgetGraph gadget;
  gadget.vplus_of.assign(n, -1);
  gadget.vminus_of.assign(n, -1);
  int next = n;
  for (int v = 0; v < n; ++v) {
    if (!dag.is_sink(v)) {
      gadget.vplus_of[v] = next++;
      gadget.vminus_of[v] = next++;
    }
  }
  gadget.s_node = next++;
  gadget.t_node = next++;
  gadget.original_of.assign(next, -1);
  for (int v = 0; v < n; ++v) gadget.original_of[v] = v;

  FlowNetwork& net = gadget.network;
  net.n = next;
  net.source = gadget.s_node;
  net.sink = gadget.t_node;
  const ExtendedWeight inf = ExtendedWeight::infinity();
  for (int v = 0; v < n; ++v) {
    if (dag.is_sink(v)) continue;
    const ExtendedWeight& q = instance.profile.q[v];
    net.arcs.push_back({v, gadget.vplus_of[v], q});
    net.arcs.push_back({gadget.vminus_of[v], v, q});
    for (VertexId u : dag.out_neighbors(v)) {
      net.arcs.push_back({gadget.vplus_of[v], u, inf});
      net.arcs.push_back({u, gadget.vminus_of[v], inf});
    }
  }
  for (int v = 0; v < n; ++v) {
    net.arcs.push_back({gadget.s_node, v, instance.profile.p[v][1]});
    net.arcs.push_back({v, gadget.t_node, instance.profile.p[v][0]});
  }
  return gadget;
}

SolveResult solve_two_machines(const Instance& instance) {
  Timer timer;
  GadgetGraph gadget = build_two_machine_gadget(instance);
  MinCutResult cut = min_st_cut(gadget.network);

  const int n = instance.dag.vertex_count();
  std::vector<char> on_source(gadget.network.n, 0);
  for (int node : cut.source_side) on_source[node] = 1;
  Assignment witness;
  witness.machine_of.resize(n);
  for (int v = 0; v < n; ++v) witness.machine_of[v] = on_source[v] ? 0 : 1;

  return finish_result(instance, std::move(cut.value), std::move(witness), "cut2",
                       static_cast<long long>(gadget.network.arcs.size()), timer);
}

namespace {

// Vertices of the unique source-to-sink walk; throws unless the DAG is one
// directed path covering every vertex.
std::vector<VertexId> path_sequence(const Dag& dag) {
  const int n = dag.vertex_count();
  if (n == 0) {
    throw Error(ErrorKind::NotAPath, "empty graph");
  }
  if (dag.arc_count() != n - 1) {
    throw Error(ErrorKind::NotAPath, "a path on n vertices has n-1 arcs");
  }
  int source = -1;
  for (int v = 0; v < n; ++v) {
    if (dag.out_degree(v) > 1 || dag.in_degree(v) > 1) {
      throw Error(ErrorKind::NotAPath, "vertex " + std::to_string(v) + " has branching degree");
    }
    if (dag.is_source(v)) {
      if (source >= 0) throw Error(ErrorKind::NotAPath, "multiple sources");
      source = v;
    }
  }
  std::vector<VertexId> sequenced;
  sequenced.reserve(n);
  int v = source;
  for (;;) {
    sequenced.push_back(v);
    if (dag.is_sink(v)) break;
    v = dag.out_neighbors(v)[0];
  }
  if (static_cast<int>(sequenced.size()) != n) {
    throw Error(ErrorKind::NotAPath, "graph is disconnected");
  }
  return sequenced;
}

SolveResult path_dp_impl(const Instance& instance, bool keep_witness) {
  check_instance(instance);
  Timer timer;
  const std::vector<VertexId> order = path_sequence(instance.dag);
  const int n = static_cast<int>(order.size());
  const int k = instance.profile.k;

  // Scaled integers keep the row updates exact without per-add rational
  // normalization; the result converts back at the end.
  ScaledEvaluator eval(instance);
  using Cost = ScaledEvaluator::Cost;

  std::vector<Cost> prev(k);
  for (int j = 0; j < k; ++j) prev[j] = eval.p_cost(order[0], j);
  std::vector<Cost> row(k);
  std::vector<int> back;
  if (keep_witness) back.assign(static_cast<size_t>(n) * k, -1);

  for (int i = 1; i < n; ++i) {
    // Two smallest entries of the previous row make the inner minimum O(1).
    int best1 = -1, best2 = -1;
    for (int j = 0; j < k; ++j) {
      if (best1 < 0 || ScaledEvaluator::less(prev[j], prev[best1])) {
        best2 = best1;
        best1 = j;
      } else if (best2 < 0 || ScaledEvaluator::less(prev[j], prev[best2])) {
        best2 = j;
      }
    }
    const Cost switch_charge = eval.q_cost(order[i - 1]);
    for (int j = 0; j < k; ++j) {
      const int other = (best1 != j) ? best1 : best2;
      int from = j;
      Cost best = prev[j];
      if (other >= 0) {
        Cost moved = ScaledEvaluator::add(prev[other], switch_charge);
        if (ScaledEvaluator::less(moved, best)) {
          best = std::move(moved);
          from = other;
        }
      }
      row[j] = ScaledEvaluator::add(eval.p_cost(order[i], j), best);
      if (keep_witness) back[static_cast<size_t>(i) * k + j] = from;
    }
    std::swap(prev, row);
  }

  int best_machine = 0;
  for (int j = 1; j < k; ++j) {
    if (ScaledEvaluator::less(prev[j], prev[best_machine])) best_machine = j;
  }
  ExtendedWeight cost = eval.to_weight(prev[best_machine]);

  SolveResult result;
  if (keep_witness) {
    Assignment witness;
    witness.machine_of.resize(n);
    int machine = best_machine;
    for (int i = n - 1; i >= 0; --i) {
      witness.machine_of[order[i]] = machine;
      if (i > 0) machine = back[static_cast<size_t>(i) * k + machine];
    }
    result = finish_result(instance, std::move(cost), std::move(witness), "pathdp",
                           static_cast<long long>(n) * k, timer);
  } else {
    result.cost = std::move(cost);
    result.algo = "pathdp";
    result.stats = SolveStats{n, instance.dag.arc_count(), static_cast<long long>(n) * k,
                              timer.seconds()};
  }
  return result;
}

}  // namespace

bool is_directed_path(const Dag& dag) {
  try {
    path_sequence(dag);
    return true;
  } catch (const Error&) {
    return false;
  }
}

SolveResult solve_path_dp(const Instance& instance) { return path_dp_impl(instance, true); }

ExtendedWeight path_dp_cost(const Instance& instance) {
  return path_dp_impl(instance, false).cost;
}

SolveResult solve_local_search(const Instance& instance, std::uint64_t seed, int restarts) {
  check_instance(instance);
  Timer timer;
  const int n = instance.dag.vertex_count();
  const int k = instance.profile.k;
  restarts = std::max(restarts, 1);

  ScaledEvaluator eval(instance);
  SplitMix64 rng(seed);
  long long evaluations = 0;

  std::vector<int> best_f;
  ScaledEvaluator::Cost best;
  bool have_best = false;

  std::vector<int> f(n);
  for (int start = 0; start < restarts; ++start) {
    if (start == 0) {
      for (int v = 0; v < n; ++v) {
        int pick = 0;
        for (int i = 1; i < k; ++i) {
          if (instance.profile.p[v][i] < instance.profile.p[v][pick]) pick = i;
        }
        f[v] = pick;
      }
    } else {
      for (int v = 0; v < n; ++v) f[v] = static_cast<int>(rng.next_below(k));
    }

    ScaledEvaluator::Cost cost = eval.total(f);
    ++evaluations;
    for (;;) {
      int move_vertex = -1, move_machine = -1;
      ScaledEvaluator::Cost move_cost = cost;
      for (int v = 0; v < n; ++v) {
        const int original = f[v];
        for (int c = 0; c < k; ++c) {
          if (c == original) continue;
          f[v] = c;
          ScaledEvaluator::Cost candidate = eval.total(f);
          ++evaluations;
          if (ScaledEvaluator::less(candidate, move_cost)) {
            move_cost = std::move(candidate);
            move_vertex = v;
            move_machine = c;
          }
        }
        f[v] = original;
      }
      if (move_vertex < 0) break;
      f[move_vertex] = move_machine;
      cost = std::move(move_cost);
    }

    if (!have_best || ScaledEvaluator::less(cost, best)) {
      have_best = true;
      best = std::move(cost);
      best_f = f;
    }
  }
  return finish_result(instance, eval.to_weight(best), Assignment{std::move(best_f)}, "ls",
                       evaluations, timer);
}

SolveResult solve_sb_brute_force(const SbInstance& instance, long long budget) {
  check_sb_instance(instance);
  Timer timer;
  const int n = instance.base.dag.vertex_count();
  const int ell = instance.ell;
  if (!combinations_up_to(n, ell, budget)) {
    throw Error(ErrorKind::TooLarge,
                "side-one subsets up to size " + std::to_string(ell) + " exceed budget " +
                    std::to_string(budget));
  }

  ScaledEvaluator eval(instance.base);
  std::vector<int> f(n, 1);  // everything on machine 2
  std::vector<int> best_f = f;
  ScaledEvaluator::Cost best = eval.total(f);
  long long evaluations = 1;

  for (int size = 1; size <= ell; ++size) {
    std::vector<int> picked(size);
    for (int i = 0; i < size; ++i) picked[i] = i;
    do {
      std::fill(f.begin(), f.end(), 1);
      for (int v : picked) f[v] = 0;
      ScaledEvaluator::Cost cost = eval.total(f);
      ++evaluations;
      if (ScaledEvaluator::less(cost, best) ||
          (ScaledEvaluator::equal(cost, best) && f < best_f)) {
        best = std::move(cost);
        best_f = f;
      }
    } while (advance_combination(picked, n));
  }
  return finish_result(instance.base, eval.to_weight(best), Assignment{std::move(best_f)},
                       "sb-brute", evaluations, timer);
}

SbmCutResult solve_sbm_brute_force(const UndirectedGraph& g, int s, int t, int ell,
                                   long long budget) {
  if (s < 0 || s >= g.n || t < 0 || t >= g.n || s == t) {
    throw Error(ErrorKind::TerminalError, "need two distinct terminals inside the graph");
  }
  if (ell < 1) {
    return SbmCutResult{ExtendedWeight::infinity(), {s}};
  }
  std::vector<int> free_nodes;
  for (int v = 0; v < g.n; ++v) {
    if (v != s && v != t) free_nodes.push_back(v);
  }
  const int max_extra = std::min<int>(ell - 1, static_cast<int>(free_nodes.size()));
  if (!combinations_up_to(static_cast<int>(free_nodes.size()), max_extra, budget)) {
    throw Error(ErrorKind::TooLarge, "source-side subsets exceed budget");
  }

  bool have_best = false;
  ExtendedWeight best_cost;
  std::vector<int> best_side;
  std::vector<char> membership(g.n, 0);
  auto consider = [&](const std::vector<int>& chosen) {
    std::fill(membership.begin(), membership.end(), 0);
    membership[s] = 1;
    for (int idx : chosen) membership[free_nodes[idx]] = 1;
    ExtendedWeight cost;
    for (const WeightedEdge& e : g.edges) {
      if (membership[e.u] != membership[e.v]) cost += e.weight;
    }
    std::vector<int> side;
    for (int v = 0; v < g.n; ++v) {
      if (membership[v]) side.push_back(v);
    }
    if (!have_best || cost < best_cost || (cost == best_cost && side < best_side)) {
      have_best = true;
      best_cost = std::move(cost);
      best_side = std::move(side);
    }
  };

  consider({});
  for (int size = 1; size <= max_extra; ++size) {
    std::vector<int> chosen(size);
    for (int i = 0; i < size; ++i) chosen[i] = i;
    do {
      consider(chosen);
    } while (advance_combination(chosen, static_cast<int>(free_nodes.size())));
  }
  return SbmCutResult{std::move(best_cost), std::move(best_side)};
}

MultiwayCutResult solve_multiway_brute_force(const UndirectedGraph& g,
                                             std::span<const int> terminals, long long budget) {
  if (terminals.empty()) {
    throw Error(ErrorKind::TerminalError, "need at least one terminal");
  }
  std::vector<char> is_terminal(g.n, 0);
  for (int t : terminals) {
    if (t < 0 || t >= g.n) {
      throw Error(ErrorKind::TerminalError, "terminal " + std::to_string(t) + " out of range");
    }
    if (is_terminal[t]) {
      throw Error(ErrorKind::TerminalError, "terminal " + std::to_string(t) + " repeated");
    }
    is_terminal[t] = 1;
  }
  const int k = static_cast<int>(terminals.size());
  std::vector<int> free_nodes;
  for (int v = 0; v < g.n; ++v) {
    if (!is_terminal[v]) free_nodes.push_back(v);
  }
  if (!checked_pow(k, static_cast<int>(free_nodes.size()), budget)) {
    throw Error(ErrorKind::TooLarge, "partition enumeration exceeds budget");
  }

  std::vector<int> part_of(g.n, 0);
  for (int i = 0; i < k; ++i) part_of[terminals[i]] = i;
  std::vector<int> choice(free_nodes.size(), 0);

  bool have_best = false;
  ExtendedWeight best_cost;
  std::vector<int> best_parts;
  for (;;) {
    for (size_t i = 0; i < free_nodes.size(); ++i) part_of[free_nodes[i]] = choice[i];
    ExtendedWeight cost;
    for (const WeightedEdge& e : g.edges) {
      if (part_of[e.u] != part_of[e.v]) cost += e.weight;
    }
    if (!have_best || cost < best_cost) {
      have_best = true;
      best_cost = std::move(cost);
      best_parts = part_of;
    }
    if (!advance_assignment(choice, k)) break;
  }
  return MultiwayCutResult{std::move(best_cost), std::move(best_parts)};
}

CliqueResult find_clique_brute_force(const UndirectedGraph& g, int ell, long long budget) {
  if (ell < 0) {
    throw Error(ErrorKind::ValidationError, "clique size must be non-negative");
  }
  if (ell == 0) return CliqueResult{true, {}};
  if (ell > g.n) return CliqueResult{false, {}};
  if (!binomial(g.n, ell, budget)) {
    throw Error(ErrorKind::TooLarge, "subset enumeration exceeds budget");
  }

  const std::vector<std::vector<bool>> adj = adjacency_matrix(g);
  std::vector<int> chosen(ell);
  for (int i = 0; i < ell; ++i) chosen[i] = i;
  do {
    bool clique = true;
    for (int i = 0; i < ell && clique; ++i) {
      for (int j = i + 1; j < ell; ++j) {
        if (!adj[chosen[i]][chosen[j]]) {
          clique = false;
          break;
        }
      }
    }
    if (clique) return CliqueResult{true, chosen};
  } while (advance_combination(chosen, g.n));
  return CliqueResult{false, {}};
}

}  // namespace espdag
