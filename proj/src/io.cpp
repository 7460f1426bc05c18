#include "espdag/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace espdag {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

const Json& field(const Json& obj, const std::string& where, const std::string& key) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, "missing field '" + key + "'");
  return *it;
}

int as_int(const Json& value, const std::string& where) {
  if (!value.is_number_integer()) fail(where, "expected an integer");
  return value.get<int>();
}

ExtendedWeight as_weight(const Json& value, const std::string& where) {
  if (value.is_string()) {
    try {
      return ExtendedWeight::parse(value.get<std::string>());
    } catch (const Error& e) {
      fail(where, e.what());
    }
  }
  if (value.is_number_integer()) {
    const auto units = value.get<long long>();
    if (units < 0) fail(where, "weights must be non-negative");
    return ExtendedWeight(units);
  }
  fail(where, "expected a weight string or non-negative integer");
}

std::string index_into(const std::string& base, size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

}  // namespace

SbInstance ParsedInstance::as_sb_instance() const {
  if (!ell) {
    throw std::logic_error("document carries no size bound");
  }
  SbInstance sb{instance, *ell};
  check_sb_instance(sb);
  return sb;
}

ParsedInstance parse_instance(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) fail("document", "expected an object");

  const int k = as_int(field(doc, "document", "k"), "k");
  if (k < 1) fail("k", "machine count must be at least 1");

  const Json& vertices = field(doc, "document", "vertices");
  if (!vertices.is_array()) fail("vertices", "expected an array");
  const int n = static_cast<int>(vertices.size());

  EnergyProfile profile;
  profile.k = k;
  profile.p.assign(n, {});
  profile.q.assign(n, ExtendedWeight(0));
  std::vector<std::string> labels(n);
  bool any_label = false;
  std::vector<char> seen(n, 0);
  for (size_t i = 0; i < vertices.size(); ++i) {
    const std::string where = index_into("vertices", i);
    const Json& entry = vertices[i];
    const int id = as_int(field(entry, where, "id"), where + ".id");
    if (id < 0 || id >= n) fail(where + ".id", "ids must be dense in 0..n-1");
    if (seen[id]) fail(where + ".id", "id " + std::to_string(id) + " repeated");
    seen[id] = 1;
    if (auto it = entry.find("label"); it != entry.end()) {
      if (!it->is_string()) fail(where + ".label", "expected a string");
      labels[id] = it->get<std::string>();
      if (!labels[id].empty()) any_label = true;
    }
    const Json& p_row = field(entry, where, "p");
    if (!p_row.is_array() || static_cast<int>(p_row.size()) != k) {
      fail(where + ".p", "expected " + std::to_string(k) + " weights");
    }
    profile.p[id].reserve(k);
    for (size_t j = 0; j < p_row.size(); ++j) {
      profile.p[id].push_back(as_weight(p_row[j], where + ".p[" + std::to_string(j) + "]"));
    }
    profile.q[id] = as_weight(field(entry, where, "q"), where + ".q");
  }

  const Json& arcs_value = field(doc, "document", "arcs");
  if (!arcs_value.is_array()) fail("arcs", "expected an array");
  std::vector<Arc> arcs;
  arcs.reserve(arcs_value.size());
  for (size_t i = 0; i < arcs_value.size(); ++i) {
    const std::string where = index_into("arcs", i);
    const Json& pair = arcs_value[i];
    if (!pair.is_array() || pair.size() != 2) fail(where, "expected [tail, head]");
    arcs.push_back({as_int(pair[0], where + "[0]"), as_int(pair[1], where + "[1]")});
  }

  ParsedInstance parsed;
  parsed.instance.dag = validate_dag(n, arcs);
  parsed.instance.profile = std::move(profile);
  if (any_label) parsed.instance.labels = std::move(labels);
  if (auto it = doc.find("r"); it != doc.end()) {
    parsed.instance.r = as_weight(*it, "r");
  }
  if (auto it = doc.find("ell"); it != doc.end()) {
    parsed.ell = as_int(*it, "ell");
  }
  check_instance(parsed.instance);
  if (parsed.ell) {
    check_sb_instance(SbInstance{parsed.instance, *parsed.ell});
  }
  return parsed;
}

std::string serialize_instance(const Instance& instance, std::optional<int> ell) {
  check_instance(instance);
  Json doc;
  doc["k"] = instance.profile.k;
  Json vertices = Json::array();
  for (int v = 0; v < instance.dag.vertex_count(); ++v) {
    Json entry;
    entry["id"] = v;
    if (!instance.labels.empty() && !instance.labels[v].empty()) {
      entry["label"] = instance.labels[v];
    }
    Json p_row = Json::array();
    for (const ExtendedWeight& w : instance.profile.p[v]) p_row.push_back(w.str());
    entry["p"] = std::move(p_row);
    entry["q"] = instance.profile.q[v].str();
    vertices.push_back(std::move(entry));
  }
  doc["vertices"] = std::move(vertices);
  Json arcs = Json::array();
  for (const Arc& arc : instance.dag.arcs()) arcs.push_back(Json::array({arc.tail, arc.head}));
  doc["arcs"] = std::move(arcs);
  if (instance.r) doc["r"] = instance.r->str();
  if (ell) doc["ell"] = *ell;
  return doc.dump(2) + "\n";
}

GraphDocument parse_graph(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) fail("document", "expected an object");
  const int n = as_int(field(doc, "document", "n"), "n");

  const Json& edges_value = field(doc, "document", "edges");
  if (!edges_value.is_array()) fail("edges", "expected an array");
  std::vector<WeightedEdge> edges;
  edges.reserve(edges_value.size());
  for (size_t i = 0; i < edges_value.size(); ++i) {
    const std::string where = index_into("edges", i);
    const Json& entry = edges_value[i];
    if (!entry.is_array() || entry.size() < 2 || entry.size() > 3) {
      fail(where, "expected [u, v] or [u, v, weight]");
    }
    WeightedEdge edge{as_int(entry[0], where + "[0]"), as_int(entry[1], where + "[1]"),
                      ExtendedWeight(1)};
    if (entry.size() == 3) edge.weight = as_weight(entry[2], where + "[2]");
    edges.push_back(std::move(edge));
  }

  GraphDocument parsed;
  parsed.graph = validate_graph(n, std::move(edges));
  if (auto it = doc.find("terminals"); it != doc.end()) {
    if (!it->is_array()) fail("terminals", "expected an array");
    for (size_t i = 0; i < it->size(); ++i) {
      parsed.terminals.push_back(as_int((*it)[i], index_into("terminals", i)));
    }
  }
  if (auto it = doc.find("s"); it != doc.end()) parsed.s = as_int(*it, "s");
  if (auto it = doc.find("t"); it != doc.end()) parsed.t = as_int(*it, "t");
  if (auto it = doc.find("r"); it != doc.end()) parsed.r = as_weight(*it, "r");
  if (auto it = doc.find("ell"); it != doc.end()) parsed.ell = as_int(*it, "ell");
  return parsed;
}

std::string serialize_graph(const GraphDocument& doc) {
  Json out;
  out["n"] = doc.graph.n;
  Json edges = Json::array();
  for (const WeightedEdge& e : doc.graph.edges) {
    edges.push_back(Json::array({e.u, e.v, e.weight.str()}));
  }
  out["edges"] = std::move(edges);
  if (!doc.terminals.empty()) out["terminals"] = doc.terminals;
  if (doc.s) out["s"] = *doc.s;
  if (doc.t) out["t"] = *doc.t;
  if (doc.r) out["r"] = doc.r->str();
  if (doc.ell) out["ell"] = *doc.ell;
  return out.dump(2) + "\n";
}

Assignment parse_assignment(std::string_view text, int vertex_count, int machine_count) {
  const Json doc = parse_json(text);
  const Json& entries = field(doc, "document", "assignment");
  if (!entries.is_array()) fail("assignment", "expected an array");
  if (static_cast<int>(entries.size()) != vertex_count) {
    throw Error(ErrorKind::DimensionMismatch,
                "assignment lists " + std::to_string(entries.size()) + " machines for " +
                    std::to_string(vertex_count) + " vertices");
  }
  Assignment f;
  f.machine_of.reserve(vertex_count);
  for (size_t i = 0; i < entries.size(); ++i) {
    const int machine = as_int(entries[i], index_into("assignment", i));
    if (machine < 1 || machine > machine_count) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "machine " + std::to_string(machine) + " outside 1.." +
                      std::to_string(machine_count));
    }
    f.machine_of.push_back(machine - 1);
  }
  return f;
}

std::string serialize_assignment(const Assignment& f) {
  Json doc;
  Json entries = Json::array();
  for (int machine : f.machine_of) entries.push_back(machine + 1);
  doc["assignment"] = std::move(entries);
  return doc.dump(2) + "\n";
}

std::string serialize_result(const SolveResult& result) {
  Json doc;
  doc["algo"] = result.algo;
  doc["cost"] = result.cost.str();
  Json entries = Json::array();
  for (int machine : result.witness.machine_of) entries.push_back(machine + 1);
  doc["assignment"] = std::move(entries);
  return doc.dump(2) + "\n";
}

namespace {

std::string dot_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

const char* kMachinePalette[] = {"#b3cde3", "#ccebc5", "#fbb4ae", "#decbe4",
                                 "#fed9a6", "#ffffcc", "#e5d8bd", "#fddaec"};
constexpr int kPaletteSize = 8;

}  // namespace

std::string export_dot(const Instance& instance, const Assignment* assignment) {
  check_instance(instance);
  if (assignment != nullptr) check_assignment(instance, *assignment);
  const Dag& dag = instance.dag;
  std::string out = "digraph espdag {\n";
  if (dag.vertex_count() > 0) {
    out += "  rankdir=LR;\n  node [shape=box];\n";
  }
  for (int v = 0; v < dag.vertex_count(); ++v) {
    std::string name =
        (!instance.labels.empty() && !instance.labels[v].empty()) ? instance.labels[v]
                                                                  : "v" + std::to_string(v);
    std::string label = name + "\\nq=" + instance.profile.q[v].str() + "\\np=[";
    for (int i = 0; i < instance.profile.k; ++i) {
      if (i > 0) label += ",";
      label += instance.profile.p[v][i].str();
    }
    label += "]";
    std::string attrs;
    if (assignment != nullptr) {
      const int machine = assignment->machine_of[v];
      label += "\\nm=" + std::to_string(machine + 1);
      int foreign = 0;
      std::vector<char> counted(instance.profile.k, 0);
      for (VertexId u : dag.out_neighbors(v)) {
        const int other = assignment->machine_of[u];
        if (other != machine && !counted[other]) {
          counted[other] = 1;
          ++foreign;
        }
      }
      if (foreign > 0) {
        label += "\\nxfer=" + instance.profile.q[v].str() + "x" + std::to_string(foreign);
      }
      attrs = ", style=filled, fillcolor=\"" +
              std::string(kMachinePalette[machine % kPaletteSize]) + "\"";
    }
    out += "  " + std::to_string(v) + " [label=\"" + dot_escape(label) + "\"" + attrs + "];\n";
  }
  for (const Arc& arc : dag.arcs()) {
    out += "  " + std::to_string(arc.tail) + " -> " + std::to_string(arc.head);
    if (assignment != nullptr &&
        assignment->machine_of[arc.tail] != assignment->machine_of[arc.head]) {
      out += " [style=dashed, label=\"q=" + instance.profile.q[arc.tail].str() + "\"]";
    }
    out += ";\n";
  }
  out += "}\n";
  return out;
}

std::string export_gadget_dot(const GadgetGraph& gadget) {
  const FlowNetwork& net = gadget.network;
  std::vector<std::string> names(net.n);
  for (int node = 0; node < net.n; ++node) {
    if (gadget.original_of[node] >= 0) names[node] = "v" + std::to_string(node);
  }
  for (size_t v = 0; v < gadget.vplus_of.size(); ++v) {
    if (gadget.vplus_of[v] >= 0) names[gadget.vplus_of[v]] = "v" + std::to_string(v) + "+";
    if (gadget.vminus_of[v] >= 0) names[gadget.vminus_of[v]] = "v" + std::to_string(v) + "-";
  }
  names[gadget.s_node] = "s";
  names[gadget.t_node] = "t";

  std::string out = "digraph gadget {\n  rankdir=LR;\n";
  out += "  \"s\" [shape=diamond];\n  \"t\" [shape=diamond];\n";
  for (const CapacityArc& arc : net.arcs) {
    out += "  \"" + dot_escape(names[arc.tail]) + "\" -> \"" + dot_escape(names[arc.head]) +
           "\" [label=\"" + arc.capacity.str() + "\"];\n";
  }
  out += "}\n";
  return out;
}

std::string serialize_provenance(const ReductionArtifact& artifact) {
  Json doc;
  doc["original_count"] = artifact.original_count;
  if (artifact.ell) doc["ell"] = *artifact.ell;
  Json vertices = Json::array();
  for (size_t v = 0; v < artifact.provenance.size(); ++v) {
    const VertexProvenance& origin = artifact.provenance[v];
    Json entry;
    entry["id"] = static_cast<int>(v);
    switch (origin.kind) {
      case VertexProvenance::Kind::Original:
        entry["kind"] = "original";
        entry["original"] = origin.original;
        break;
      case VertexProvenance::Kind::Terminal:
        entry["kind"] = "terminal";
        entry["original"] = origin.original;
        entry["terminal_index"] = origin.terminal_index;
        break;
      case VertexProvenance::Kind::Subdivision:
        entry["kind"] = "subdivision";
        entry["tail"] = origin.arc_tail;
        entry["head"] = origin.arc_head;
        break;
      case VertexProvenance::Kind::Padding:
        entry["kind"] = "padding";
        entry["original"] = origin.original;
        entry["index"] = origin.padding_index;
        break;
    }
    vertices.push_back(std::move(entry));
  }
  doc["vertices"] = std::move(vertices);
  return doc.dump(2) + "\n";
}

}  // namespace espdag
