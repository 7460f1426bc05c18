#include "espdag/reductions.hpp"

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>

namespace espdag {

namespace {

struct OrientedArc {
  int tail;
  int head;
  ExtendedWeight weight;
};

void check_terminals(const UndirectedGraph& g, std::span<const int> terminals, size_t minimum) {
  if (terminals.size() < minimum) {
    throw Error(ErrorKind::TerminalError,
                "need at least " + std::to_string(minimum) + " terminals");
  }
  std::vector<char> seen(g.n, 0);
  for (int t : terminals) {
    if (t < 0 || t >= g.n) {
      throw Error(ErrorKind::TerminalError, "terminal " + std::to_string(t) + " out of range");
    }
    if (seen[t]) {
      throw Error(ErrorKind::TerminalError, "terminal " + std::to_string(t) + " repeated");
    }
    seen[t] = 1;
  }
}

}  // namespace

ReductionArtifact reduce_multiway_to_espdag(const MultiwayInstance& mw, bool unit_costs) {
  const UndirectedGraph graph = validate_graph(mw.graph.n, mw.graph.edges);
  check_terminals(graph, mw.terminals, 2);
  if (unit_costs) {
    for (const WeightedEdge& e : graph.edges) {
      if (!(e.weight == ExtendedWeight(1))) {
        throw Error(ErrorKind::NonUniformWeightsWithUnitFlag,
                    "unit-cost mode needs every edge weight equal to 1");
      }
    }
  }

  const int n = graph.n;
  const int m = static_cast<int>(graph.edges.size());
  const int k = static_cast<int>(mw.terminals.size());

  // Forward orientation along ascending vertex id, arcs in ascending order.
  std::vector<OrientedArc> oriented;
  oriented.reserve(m);
  for (const WeightedEdge& e : graph.edges) {
    oriented.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.weight});
  }
  std::sort(oriented.begin(), oriented.end(), [](const OrientedArc& a, const OrientedArc& b) {
    return std::tie(a.tail, a.head) < std::tie(b.tail, b.head);
  });

  std::vector<int> terminal_index(n, -1);
  for (int i = 0; i < k; ++i) terminal_index[mw.terminals[i]] = i;

  ReductionArtifact artifact;
  artifact.original_count = n;
  const int total = n + m;
  const ExtendedWeight inf = ExtendedWeight::infinity();
  const ExtendedWeight base(unit_costs ? 1 : 0);

  EnergyProfile profile;
  profile.k = k;
  profile.p.assign(total, std::vector<ExtendedWeight>(k, base));
  profile.q.assign(total, ExtendedWeight(0));
  artifact.provenance.resize(total);
  std::vector<std::string> labels(total);

  for (int v = 0; v < n; ++v) {
    profile.q[v] = inf;
    if (terminal_index[v] >= 0) {
      for (int i = 0; i < k; ++i) {
        if (i != terminal_index[v]) profile.p[v][i] = inf;
      }
      artifact.provenance[v] = {VertexProvenance::Kind::Terminal, v, terminal_index[v], -1, -1, -1};
      labels[v] = "t" + std::to_string(terminal_index[v] + 1);
    } else {
      artifact.provenance[v] = {VertexProvenance::Kind::Original, v, -1, -1, -1, -1};
      labels[v] = "v" + std::to_string(v);
    }
  }

  std::vector<Arc> dag_arcs;
  dag_arcs.reserve(2 * m);
  for (int i = 0; i < m; ++i) {
    const int carrier = n + i;
    dag_arcs.push_back({oriented[i].tail, carrier});
    dag_arcs.push_back({carrier, oriented[i].head});
    profile.q[carrier] = unit_costs ? ExtendedWeight(1) : oriented[i].weight;
    artifact.provenance[carrier] = {VertexProvenance::Kind::Subdivision, -1, -1, oriented[i].tail,
                                    oriented[i].head, -1};
    labels[carrier] =
        "a(" + std::to_string(oriented[i].tail) + "," + std::to_string(oriented[i].head) + ")";
  }

  artifact.instance.dag = validate_dag(total, dag_arcs);
  artifact.instance.profile = std::move(profile);
  artifact.instance.labels = std::move(labels);
  if (mw.r) {
    // Under unit costs every produced vertex pays exactly 1, so the carried
    // threshold grows by the produced vertex count.
    artifact.instance.r = unit_costs ? (*mw.r + ExtendedWeight(total)) : *mw.r;
  }
  return artifact;
}

Assignment lift_multiway_partition(const ReductionArtifact& artifact,
                                   std::span<const int> part_of) {
  const int k = artifact.instance.profile.k;
  if (static_cast<int>(part_of.size()) != artifact.original_count) {
    throw Error(ErrorKind::CoverageError,
                "partition must cover exactly the " + std::to_string(artifact.original_count) +
                    " original vertices");
  }
  for (int part : part_of) {
    if (part < 0 || part >= k) {
      throw Error(ErrorKind::CoverageError, "part index " + std::to_string(part) + " out of range");
    }
  }
  Assignment lifted;
  lifted.machine_of.resize(artifact.provenance.size());
  for (size_t v = 0; v < artifact.provenance.size(); ++v) {
    const VertexProvenance& origin = artifact.provenance[v];
    switch (origin.kind) {
      case VertexProvenance::Kind::Original:
      case VertexProvenance::Kind::Terminal:
      case VertexProvenance::Kind::Padding:
        lifted.machine_of[v] = part_of[origin.original];
        break;
      case VertexProvenance::Kind::Subdivision:
        lifted.machine_of[v] = part_of[origin.arc_tail];
        break;
    }
  }
  return lifted;
}

std::vector<int> project_espdag_assignment(const ReductionArtifact& artifact,
                                           const Assignment& f) {
  check_assignment(artifact.instance, f);
  if (total_cost(artifact.instance, f).is_infinite()) {
    throw Error(ErrorKind::InfiniteCostAssignment,
                "assignment triggers an infinite term; nothing to project");
  }
  return std::vector<int>(f.machine_of.begin(), f.machine_of.begin() + artifact.original_count);
}

SbmInstance reduce_clique_to_sbm(const UndirectedGraph& g, int ell) {
  const UndirectedGraph graph = validate_graph(g.n, g.edges);
  if (graph.n < 1) {
    throw Error(ErrorKind::ValidationError, "need at least one vertex");
  }
  if (ell < 1) {
    throw Error(ErrorKind::ValidationError, "clique size must be at least 1");
  }
  const std::vector<int> deg = vertex_degrees(graph);
  const int d = deg[0];
  for (int v = 1; v < graph.n; ++v) {
    if (deg[v] != d) {
      throw Error(ErrorKind::NotRegular, "vertex degrees " + std::to_string(d) + " and " +
                                             std::to_string(deg[v]) + " differ");
    }
  }
  if (d < ell) {
    throw Error(ErrorKind::DegreeTooSmall,
                "degree " + std::to_string(d) + " below clique size " + std::to_string(ell));
  }

  const int n = graph.n;
  SbmInstance out;
  out.s = n;
  out.t = n + 1;
  std::vector<WeightedEdge> edges = graph.edges;
  for (WeightedEdge& e : edges) e.weight = ExtendedWeight(1);
  for (int v = 0; v < n; ++v) edges.push_back({out.s, v, ExtendedWeight(d + 2)});
  for (int v = 0; v < n; ++v) edges.push_back({out.t, v, ExtendedWeight(1)});
  out.graph = validate_graph(n + 2, std::move(edges));
  out.r = ExtendedWeight(static_cast<long long>(n) * (d + 2) - static_cast<long long>(ell) * ell);
  out.ell = ell + 1;
  return out;
}

ReductionArtifact reduce_sbm_to_sbesbp(const SbmInstance& sbm) {
  const UndirectedGraph graph = validate_graph(sbm.graph.n, sbm.graph.edges);
  const int s = sbm.s;
  const int t = sbm.t;
  if (s < 0 || s >= graph.n || t < 0 || t >= graph.n || s == t) {
    throw Error(ErrorKind::TerminalError, "need two distinct terminals inside the graph");
  }
  if (sbm.ell < 1) {
    throw Error(ErrorKind::ShapeError, "size bound must be at least 1");
  }

  const std::vector<std::vector<bool>> adj = adjacency_matrix(graph);
  if (adj[s][t]) {
    throw Error(ErrorKind::ShapeError, "the terminals must not be adjacent");
  }
  const std::vector<int> deg = vertex_degrees(graph);
  int shared_degree = -1;
  int nonterminal_count = 0;
  for (int v = 0; v < graph.n; ++v) {
    if (v == s || v == t) continue;
    ++nonterminal_count;
    if (!adj[s][v] || !adj[t][v]) {
      throw Error(ErrorKind::ShapeError,
                  "vertex " + std::to_string(v) + " is not adjacent to both terminals");
    }
    if (shared_degree < 0) {
      shared_degree = deg[v];
    } else if (deg[v] != shared_degree) {
      throw Error(ErrorKind::ShapeError, "non-terminal degrees differ");
    }
  }
  if (nonterminal_count == 0) {
    throw Error(ErrorKind::ShapeError, "need at least one non-terminal vertex");
  }

  // Orientation order: s first, t last, the rest by ascending id.
  const int n_g = graph.n;
  std::vector<int> position(n_g, 0);
  position[s] = 0;
  position[t] = n_g - 1;
  int next_pos = 1;
  for (int v = 0; v < n_g; ++v) {
    if (v != s && v != t) position[v] = next_pos++;
  }

  std::vector<OrientedArc> oriented;
  oriented.reserve(graph.edges.size());
  for (const WeightedEdge& e : graph.edges) {
    if (position[e.u] < position[e.v]) {
      oriented.push_back({e.u, e.v, e.weight});
    } else {
      oriented.push_back({e.v, e.u, e.weight});
    }
  }
  std::sort(oriented.begin(), oriented.end(),
            [&position](const OrientedArc& a, const OrientedArc& b) {
              return std::tie(position[a.tail], position[a.head]) <
                     std::tie(position[b.tail], position[b.head]);
            });

  std::vector<int> oriented_in_degree(n_g, 0);
  for (const OrientedArc& arc : oriented) ++oriented_in_degree[arc.head];

  const int m = static_cast<int>(oriented.size());
  int total = n_g + m;
  for (int v = 0; v < n_g; ++v) {
    if (v != s && v != t) total += oriented_in_degree[v];
  }

  ReductionArtifact artifact;
  artifact.original_count = n_g;
  const ExtendedWeight inf = ExtendedWeight::infinity();
  EnergyProfile profile;
  profile.k = 2;
  profile.p.assign(total, std::vector<ExtendedWeight>(2, ExtendedWeight(0)));
  profile.q.assign(total, ExtendedWeight(0));
  artifact.provenance.resize(total);
  std::vector<std::string> labels(total);

  for (int v = 0; v < n_g; ++v) {
    profile.q[v] = inf;
    if (v == s) {
      profile.p[v][1] = inf;
      artifact.provenance[v] = {VertexProvenance::Kind::Terminal, v, 0, -1, -1, -1};
      labels[v] = "s";
    } else if (v == t) {
      profile.p[v][0] = inf;
      artifact.provenance[v] = {VertexProvenance::Kind::Terminal, v, 1, -1, -1, -1};
      labels[v] = "t";
    } else {
      artifact.provenance[v] = {VertexProvenance::Kind::Original, v, -1, -1, -1, -1};
      labels[v] = "v" + std::to_string(v);
    }
  }

  std::vector<Arc> dag_arcs;
  dag_arcs.reserve(2 * m + (total - n_g - m));
  for (int i = 0; i < m; ++i) {
    const int carrier = n_g + i;
    dag_arcs.push_back({oriented[i].tail, carrier});
    dag_arcs.push_back({carrier, oriented[i].head});
    profile.q[carrier] = oriented[i].weight;
    artifact.provenance[carrier] = {VertexProvenance::Kind::Subdivision, -1, -1, oriented[i].tail,
                                    oriented[i].head, -1};
    labels[carrier] =
        "a(" + std::to_string(oriented[i].tail) + "," + std::to_string(oriented[i].head) + ")";
  }

  int next_id = n_g + m;
  for (int v = 0; v < n_g; ++v) {
    if (v == s || v == t) continue;
    for (int i = 0; i < oriented_in_degree[v]; ++i) {
      dag_arcs.push_back({v, next_id});
      artifact.provenance[next_id] = {VertexProvenance::Kind::Padding, v, -1, -1, -1, i};
      labels[next_id] = "j(" + std::to_string(v) + "," + std::to_string(i) + ")";
      ++next_id;
    }
  }

  artifact.instance.dag = validate_dag(total, dag_arcs);
  artifact.instance.profile = std::move(profile);
  artifact.instance.labels = std::move(labels);
  artifact.instance.r = sbm.r;
  // d is the shared non-terminal degree of this graph, so the lifted side of
  // a size-ell witness has exactly ell + n + d*(ell-1) vertices.
  artifact.ell = sbm.ell + nonterminal_count + shared_degree * (sbm.ell - 1);
  return artifact;
}

}  // namespace espdag
