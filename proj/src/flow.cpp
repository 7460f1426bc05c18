#include "espdag/flow.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <utility>

namespace espdag {

namespace {

void check_network(const FlowNetwork& net) {
  if (net.n < 2) {
    throw Error(ErrorKind::MalformedNetwork, "need at least the two terminals");
  }
  if (net.source == net.sink) {
    throw Error(ErrorKind::MalformedNetwork, "source equals sink");
  }
  auto in_range = [&](int v) { return v >= 0 && v < net.n; };
  if (!in_range(net.source) || !in_range(net.sink)) {
    throw Error(ErrorKind::MalformedNetwork, "terminal id out of range");
  }
  for (const CapacityArc& arc : net.arcs) {
    if (!in_range(arc.tail) || !in_range(arc.head)) {
      throw Error(ErrorKind::MalformedNetwork, "arc endpoint out of range");
    }
    if (arc.tail == arc.head) {
      throw Error(ErrorKind::MalformedNetwork, "self loop at " + std::to_string(arc.tail));
    }
  }
}

// Dinic over exact big integers. Each input arc owns its own residual pair,
// so antiparallel and parallel arcs never interfere.
class Dinic {
 public:
  explicit Dinic(int n) : adj_(n), level_(n), iter_(n) {}

  void add_arc(int tail, int head, BigInt cap) {
    adj_[tail].push_back({head, static_cast<int>(adj_[head].size()), std::move(cap)});
    adj_[head].push_back({tail, static_cast<int>(adj_[tail].size()) - 1, BigInt(0)});
  }

  BigInt max_flow(int s, int t) {
    BigInt flow = 0;
    const BigInt unconstrained = -1;
    while (bfs(s, t)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      for (;;) {
        BigInt pushed = dfs(s, t, unconstrained);
        if (pushed == 0) break;
        flow += pushed;
      }
    }
    return flow;
  }

  /// Nodes reachable from s along positive residual capacity.
  std::vector<char> residual_reachable(int s) const {
    std::vector<char> seen(adj_.size(), 0);
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (const Edge& e : adj_[v]) {
        if (e.cap > 0 && !seen[e.to]) {
          seen[e.to] = 1;
          queue.push_back(e.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Edge {
    int to;
    int rev;
    BigInt cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::deque<int> queue{s};
    level_[s] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (const Edge& e : adj_[v]) {
        if (e.cap > 0 && level_[e.to] < 0) {
          level_[e.to] = level_[v] + 1;
          queue.push_back(e.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  // limit < 0 means "no constraint yet"; that only happens at the root
  // call, which never starts at t, so a positive limit reaches the sink.
  BigInt dfs(int v, int t, const BigInt& limit) {
    if (v == t) return limit;
    for (int& i = iter_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
      Edge& e = adj_[v][i];
      if (e.cap <= 0 || level_[e.to] != level_[v] + 1) continue;
      BigInt next_limit = (limit < 0 || e.cap < limit) ? e.cap : limit;
      BigInt pushed = dfs(e.to, t, next_limit);
      if (pushed > 0) {
        e.cap -= pushed;
        adj_[e.to][e.rev].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<Edge>> adj_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

ExtendedWeight sum_capacities(const FlowNetwork& net, const std::vector<int>& arc_indices) {
  ExtendedWeight total;
  for (int idx : arc_indices) total += net.arcs[idx].capacity;
  return total;
}

std::vector<int> crossing_arcs(const FlowNetwork& net, const std::vector<char>& in_source_side) {
  std::vector<int> cut;
  for (int i = 0; i < static_cast<int>(net.arcs.size()); ++i) {
    if (in_source_side[net.arcs[i].tail] && !in_source_side[net.arcs[i].head]) {
      cut.push_back(i);
    }
  }
  return cut;
}

}  // namespace

MinCutResult min_st_cut(const FlowNetwork& net) {
  check_network(net);

  // Rescale to integers by the common denominator, then stand in big-M for
  // the infinite capacities: strictly above every all-finite cut.
  BigInt common_den = 1;
  for (const CapacityArc& arc : net.arcs) {
    if (!arc.capacity.is_infinite()) {
      common_den = boost::multiprecision::lcm(
          common_den, boost::multiprecision::denominator(arc.capacity.value()));
    }
  }
  BigInt finite_total = 0;
  std::vector<BigInt> scaled(net.arcs.size());
  for (size_t i = 0; i < net.arcs.size(); ++i) {
    if (!net.arcs[i].capacity.is_infinite()) {
      const Rational& value = net.arcs[i].capacity.value();
      scaled[i] = boost::multiprecision::numerator(value) *
                  (common_den / boost::multiprecision::denominator(value));
      finite_total += scaled[i];
    }
  }
  const BigInt big_m = finite_total + 1;

  Dinic dinic(net.n);
  for (size_t i = 0; i < net.arcs.size(); ++i) {
    dinic.add_arc(net.arcs[i].tail, net.arcs[i].head,
                  net.arcs[i].capacity.is_infinite() ? big_m : scaled[i]);
  }
  dinic.max_flow(net.source, net.sink);

  std::vector<char> reachable = dinic.residual_reachable(net.source);
  MinCutResult result;
  result.cut_arcs = crossing_arcs(net, reachable);
  result.value = sum_capacities(net, result.cut_arcs);
  for (int v = 0; v < net.n; ++v) {
    if (reachable[v]) result.source_side.push_back(v);
  }
  return result;
}

MinCutResult brute_force_min_cut(const FlowNetwork& net, int max_nodes) {
  check_network(net);
  if (net.n > max_nodes || net.n > 32) {
    throw Error(ErrorKind::TooLarge,
                "network has " + std::to_string(net.n) + " nodes, oracle bound is " +
                    std::to_string(std::min(max_nodes, 32)));
  }

  std::vector<int> free_nodes;
  for (int v = 0; v < net.n; ++v) {
    if (v != net.source && v != net.sink) free_nodes.push_back(v);
  }

  bool have_best = false;
  ExtendedWeight best_value;
  std::vector<int> best_side;
  std::vector<char> membership(net.n, 0);
  for (std::uint64_t mask = 0; mask < (1ull << free_nodes.size()); ++mask) {
    std::fill(membership.begin(), membership.end(), 0);
    membership[net.source] = 1;
    for (size_t b = 0; b < free_nodes.size(); ++b) {
      if (mask & (1ull << b)) membership[free_nodes[b]] = 1;
    }
    ExtendedWeight value;
    for (const CapacityArc& arc : net.arcs) {
      if (membership[arc.tail] && !membership[arc.head]) value += arc.capacity;
    }
    std::vector<int> side;
    for (int v = 0; v < net.n; ++v) {
      if (membership[v]) side.push_back(v);
    }
    if (!have_best || value < best_value || (value == best_value && side < best_side)) {
      have_best = true;
      best_value = std::move(value);
      best_side = std::move(side);
    }
  }

  std::fill(membership.begin(), membership.end(), 0);
  for (int v : best_side) membership[v] = 1;
  MinCutResult result;
  result.value = std::move(best_value);
  result.source_side = std::move(best_side);
  result.cut_arcs = crossing_arcs(net, membership);
  return result;
}

bool reaches_sink_without(const FlowNetwork& net, const std::vector<int>& removed_arcs) {
  std::vector<char> removed(net.arcs.size(), 0);
  for (int idx : removed_arcs) removed[idx] = 1;
  std::vector<std::vector<int>> adj(net.n);
  for (size_t i = 0; i < net.arcs.size(); ++i) {
    if (!removed[i]) adj[net.arcs[i].tail].push_back(net.arcs[i].head);
  }
  std::vector<char> seen(net.n, 0);
  std::deque<int> queue{net.source};
  seen[net.source] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == net.sink) return true;
    for (int u : adj[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        queue.push_back(u);
      }
    }
  }
  return false;
}

}  // namespace espdag
