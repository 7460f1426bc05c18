#pragma once

// Shared helpers for the unit and acceptance suites: tiny fixture builders,
// independent cost oracles, seeded instance factories, and a minimal DOT
// grammar checker.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "espdag/core.hpp"
#include "espdag/generators.hpp"
#include "espdag/graph.hpp"
#include "espdag/io.hpp"
#include "espdag/reductions.hpp"
#include "espdag/solvers.hpp"

namespace espdag::testing {

inline ExtendedWeight w(long long units) { return ExtendedWeight(units); }
inline ExtendedWeight inf() { return ExtendedWeight::infinity(); }

inline Instance make_instance(int n, std::vector<Arc> arcs,
                              std::vector<std::vector<ExtendedWeight>> p,
                              std::vector<ExtendedWeight> q,
                              std::optional<ExtendedWeight> r = {}) {
  Instance instance;
  instance.dag = validate_dag(n, arcs);
  instance.profile.k = p.empty() ? 1 : static_cast<int>(p[0].size());
  instance.profile.p = std::move(p);
  instance.profile.q = std::move(q);
  instance.r = std::move(r);
  check_instance(instance);
  return instance;
}

// Three vertices, arcs 0->1 and 0->2; the chatty vertex 0 is cheap on
// machine 1; optimal cost 3 with split (1,2,2).
inline Instance t3_instance() {
  return make_instance(3, {{0, 1}, {0, 2}},
                       {{w(0), w(5)}, {w(4), w(0)}, {w(4), w(0)}},
                       {w(3), w(1), w(1)});
}

// Directed path on three vertices with alternating cheap machines.
inline Instance p3_instance() {
  return make_instance(3, {{0, 1}, {1, 2}},
                       {{w(0), w(10)}, {w(10), w(0)}, {w(0), w(10)}},
                       {w(2), w(2), w(0)});
}

inline Assignment assign(std::vector<int> machines_zero_based) {
  return Assignment{std::move(machines_zero_based)};
}

// Transfer cost evaluated straight from the triple-sum definition, using
// indicator() over explicit preimage sets. Test oracle.
inline ExtendedWeight transfer_by_definition(const Instance& instance, const Assignment& f) {
  const int k = instance.profile.k;
  std::vector<std::vector<VertexId>> preimage(k);
  for (int v = 0; v < f.size(); ++v) preimage[f.machine_of[v]].push_back(v);
  ExtendedWeight sum;
  for (int i = 0; i < k; ++i) {
    for (VertexId v : preimage[i]) {
      for (int j = 0; j < k; ++j) {
        if (j == i) continue;
        if (indicator(instance.dag, v, preimage[j]) == 1) {
          sum += instance.profile.q[v];
        }
      }
    }
  }
  return sum;
}

// Independently coded per-vertex scan: collect the set of distinct foreign
// machines among the outneighbors, then charge q times the set size.
inline ExtendedWeight transfer_by_scan(const Instance& instance, const Assignment& f) {
  ExtendedWeight sum;
  for (int v = 0; v < f.size(); ++v) {
    std::set<int> foreign;
    for (VertexId u : instance.dag.out_neighbors(v)) {
      if (f.machine_of[u] != f.machine_of[v]) foreign.insert(f.machine_of[u]);
    }
    for (size_t i = 0; i < foreign.size(); ++i) sum += instance.profile.q[v];
  }
  return sum;
}

template <typename Fn>
void for_each_assignment(int n, int k, Fn&& fn) {
  std::vector<int> f(n, 0);
  for (;;) {
    fn(Assignment{f});
    int i = n - 1;
    while (i >= 0 && ++f[i] == k) f[i--] = 0;
    if (i < 0) break;
  }
}

inline Instance random_instance(std::uint64_t seed, int n, int m, int k,
                                long long denominator = 1, double infinite_q = 0.1) {
  GenSpec spec;
  spec.seed = seed;
  spec.n = n;
  spec.m = m;
  spec.k = k;
  spec.weight_range = {0, 10 * denominator, denominator};
  spec.infinite_fraction = infinite_q;
  return gen_random_dag_instance(spec);
}

inline Instance random_path(std::uint64_t seed, int n, int k, long long denominator = 1,
                            double infinite_q = 0.1) {
  GenSpec spec;
  spec.seed = seed;
  spec.n = n;
  spec.k = k;
  spec.weight_range = {0, 10 * denominator, denominator};
  spec.infinite_fraction = infinite_q;
  spec.shape = GenShape::Path;
  return gen_path_instance(spec);
}

inline void sprinkle_infinite_p(Instance& instance, std::uint64_t seed, double fraction) {
  SplitMix64 rng(seed);
  for (auto& row : instance.profile.p) {
    for (ExtendedWeight& entry : row) {
      if (rng.chance(fraction)) entry = ExtendedWeight::infinity();
    }
  }
}

inline UndirectedGraph complete_graph(int n) {
  std::vector<WeightedEdge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, w(1)});
  }
  return validate_graph(n, std::move(edges));
}

inline UndirectedGraph cycle_graph(int n) {
  std::vector<WeightedEdge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, w(1)});
  return validate_graph(n, std::move(edges));
}

// Two triangles joined by a perfect matching; 3-regular on 6 vertices.
inline UndirectedGraph prism_graph() {
  std::vector<WeightedEdge> edges = {{0, 1, w(1)}, {1, 2, w(1)}, {0, 2, w(1)},
                                     {3, 4, w(1)}, {4, 5, w(1)}, {3, 5, w(1)},
                                     {0, 3, w(1)}, {1, 4, w(1)}, {2, 5, w(1)}};
  return validate_graph(6, std::move(edges));
}

// Circulant on 8 vertices with offsets 1 and 2; 4-regular.
inline UndirectedGraph circulant_8_12() {
  std::vector<WeightedEdge> edges;
  for (int v = 0; v < 8; ++v) {
    edges.push_back({v, (v + 1) % 8, w(1)});
    edges.push_back({v, (v + 2) % 8, w(1)});
  }
  return validate_graph(8, std::move(edges));
}

// Hand-built instance in the clique-reduction output shape: terminals s, t
// adjacent to every vertex of the base graph, s-edges weighing base degree
// + 2 and everything else 1.
inline SbmInstance shaped_sbm_from_regular(const UndirectedGraph& base, int base_degree,
                                           int ell) {
  const int n = base.n;
  std::vector<WeightedEdge> edges = base.edges;
  const int s = n, t = n + 1;
  for (int v = 0; v < n; ++v) edges.push_back({s, v, w(base_degree + 2)});
  for (int v = 0; v < n; ++v) edges.push_back({t, v, w(1)});
  return SbmInstance{validate_graph(n + 2, std::move(edges)), s, t, std::nullopt, ell};
}

inline ExtendedWeight crossing_weight(const UndirectedGraph& g, const std::vector<int>& part_of) {
  ExtendedWeight sum;
  for (const WeightedEdge& e : g.edges) {
    if (part_of[e.u] != part_of[e.v]) sum += e.weight;
  }
  return sum;
}

inline FlowNetwork random_flow_network(std::uint64_t seed, int n, long long denominator = 1,
                                       double infinite_fraction = 0.1) {
  SplitMix64 rng(seed);
  FlowNetwork net{n, 0, n - 1, {}};
  const int max_arcs = std::min(24, n * (n - 1));
  const int target = static_cast<int>(rng.next_below(max_arcs + 1));
  std::set<std::pair<int, int>> seen;
  int attempts = 0;
  while (static_cast<int>(net.arcs.size()) < target && attempts < 2000) {
    ++attempts;
    const int tail = static_cast<int>(rng.next_below(n));
    const int head = static_cast<int>(rng.next_below(n));
    if (tail == head || !seen.emplace(tail, head).second) continue;
    ExtendedWeight cap =
        rng.chance(infinite_fraction)
            ? ExtendedWeight::infinity()
            : ExtendedWeight::ratio(static_cast<long long>(rng.next_below(10 * denominator + 1)),
                                    denominator);
    net.arcs.push_back({tail, head, std::move(cap)});
  }
  return net;
}

inline UndirectedGraph random_multiway_graph(std::uint64_t seed, int n, int max_m, bool unit) {
  SplitMix64 rng(seed);
  std::vector<WeightedEdge> edges;
  std::set<std::pair<int, int>> seen;
  const int target = static_cast<int>(rng.next_below(max_m + 1));
  int attempts = 0;
  while (static_cast<int>(edges.size()) < target && attempts < 2000) {
    ++attempts;
    const int u = static_cast<int>(rng.next_below(n));
    const int v = static_cast<int>(rng.next_below(n));
    if (u == v) continue;
    const auto key = std::minmax(u, v);
    if (!seen.emplace(key.first, key.second).second) continue;
    ExtendedWeight weight =
        unit ? w(1) : ExtendedWeight::ratio(static_cast<long long>(rng.next_below(21)), 2);
    edges.push_back({key.first, key.second, std::move(weight)});
  }
  return validate_graph(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// Minimal DOT grammar check: tokenizes and parses the (di)graph statement
// structure. Not a full DOT implementation, but strict enough to reject
// unbalanced braces, broken attribute lists, and malformed statements.

namespace dot_detail {

struct Token {
  enum Kind { Id, Symbol, End } kind = End;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ >= text_.size()) return {Token::End, ""};
    const char c = text_[pos_];
    if (c == '{' || c == '}' || c == '[' || c == ']' || c == '=' || c == ';' || c == ',') {
      ++pos_;
      return {Token::Symbol, std::string(1, c)};
    }
    if (c == '-' && pos_ + 1 < text_.size() &&
        (text_[pos_ + 1] == '>' || text_[pos_ + 1] == '-')) {
      std::string op = text_.substr(pos_, 2);
      pos_ += 2;
      return {Token::Symbol, op};
    }
    if (c == '"') {
      std::string value;
      ++pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
        value.push_back(text_[pos_++]);
      }
      if (pos_ >= text_.size()) return {Token::End, ""};  // unterminated
      ++pos_;
      return {Token::Id, value};
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '#') {
      std::string value;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
              text_[pos_] == '.' || text_[pos_] == '#')) {
        value.push_back(text_[pos_++]);
      }
      return {Token::Id, value};
    }
    return {Token::End, "!bad"};
  }

 private:
  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace dot_detail

inline bool dot_is_valid(const std::string& text) {
  using dot_detail::Token;
  dot_detail::Lexer lexer(text);
  std::vector<Token> tokens;
  for (;;) {
    Token token = lexer.next();
    if (token.kind == Token::End) {
      if (token.text == "!bad") return false;
      break;
    }
    tokens.push_back(token);
  }

  size_t pos = 0;
  auto peek = [&]() -> const Token* { return pos < tokens.size() ? &tokens[pos] : nullptr; };
  auto accept_symbol = [&](const std::string& s) {
    if (pos < tokens.size() && tokens[pos].kind == Token::Symbol && tokens[pos].text == s) {
      ++pos;
      return true;
    }
    return false;
  };
  auto accept_id = [&]() {
    if (pos < tokens.size() && tokens[pos].kind == Token::Id) {
      ++pos;
      return true;
    }
    return false;
  };

  // header: [strict] (graph|digraph) [name] {
  if (pos < tokens.size() && tokens[pos].text == "strict") ++pos;
  if (!(pos < tokens.size() && tokens[pos].kind == Token::Id &&
        (tokens[pos].text == "graph" || tokens[pos].text == "digraph"))) {
    return false;
  }
  ++pos;
  if (peek() && peek()->kind == Token::Id) ++pos;
  if (!accept_symbol("{")) return false;

  auto parse_attr_list = [&]() {
    while (accept_symbol("[")) {
      for (;;) {
        if (accept_symbol("]")) break;
        if (!accept_id()) return false;
        if (!accept_symbol("=")) return false;
        if (!accept_id()) return false;
        accept_symbol(",");
      }
    }
    return true;
  };

  while (!accept_symbol("}")) {
    if (!accept_id()) return false;
    if (accept_symbol("=")) {  // name = value
      if (!accept_id()) return false;
    } else {
      while (accept_symbol("->") || accept_symbol("--")) {
        if (!accept_id()) return false;
      }
      if (!parse_attr_list()) return false;
    }
    accept_symbol(";");
  }
  return pos == tokens.size();
}

}  // namespace espdag::testing
