#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "espdag/core.hpp"
#include "espdag/graph.hpp"
#include "espdag/reductions.hpp"
#include "espdag/solvers.hpp"

namespace espdag {

/// Parsed instance document; a present ell marks the size-bounded variant.
struct ParsedInstance {
  Instance instance;
  std::optional<int> ell;

  bool is_size_bounded() const { return ell.has_value(); }
  SbInstance as_sb_instance() const;
};

/// Instance documents are JSON with fields, in canonical order:
///   k, vertices [{id, label?, p: [k weight strings], q}], arcs [[t,h]...],
///   r?, ell?
/// Weight strings are non-negative decimals, "a/b" rationals, or "inf".
/// parse -> serialize -> parse is the identity.
ParsedInstance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance, std::optional<int> ell = {});

/// Undirected graph documents: n, edges [[u,v,weight]...], and optional
/// terminals, s, t, r, ell.
struct GraphDocument {
  UndirectedGraph graph;
  std::vector<int> terminals;
  std::optional<int> s;
  std::optional<int> t;
  std::optional<ExtendedWeight> r;
  std::optional<int> ell;
};

GraphDocument parse_graph(std::string_view text);
std::string serialize_graph(const GraphDocument& doc);

/// Assignment documents: {"assignment": [...]} with 1-based machine
/// indices.
Assignment parse_assignment(std::string_view text, int vertex_count, int machine_count);
std::string serialize_assignment(const Assignment& f);
std::string serialize_result(const SolveResult& result);

/// DOT export; vertex labels carry q and the p row. With an assignment,
/// vertices are colored per machine and arcs that cross machines are dashed
/// and annotated with the tail's transfer charge.
std::string export_dot(const Instance& instance, const Assignment* assignment = nullptr);

/// DOT export of the two-machine gadget; split copies show as v+ / v-.
std::string export_gadget_dot(const GadgetGraph& gadget);

/// Sidecar table mapping every produced vertex to its origin.
std::string serialize_provenance(const ReductionArtifact& artifact);

}  // namespace espdag
