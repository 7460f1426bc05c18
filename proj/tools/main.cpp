#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "espdag/core.hpp"
#include "espdag/generators.hpp"
#include "espdag/io.hpp"
#include "espdag/reductions.hpp"
#include "espdag/solvers.hpp"

namespace {

using namespace espdag;

// Exit codes: 0 success/yes, 1 no (decision mode), 2 usage, 3 input error,
// 4 enumeration budget exceeded.
constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitBudget = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
  }
  out << content;
}

long long enumeration_budget() {
  if (const char* env = std::getenv("ESPDAG_BUDGET")) {
    char* end = nullptr;
    const long long parsed = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && parsed > 0) return parsed;
    throw Error(ErrorKind::ValidationError, "ESPDAG_BUDGET must be a positive integer");
  }
  return kDefaultEnumerationBudget;
}

bool fits_budget(int k, int n, long long budget) {
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > budget / k) return false;
    total *= k;
  }
  return total <= budget;
}

std::string machines_text(const Assignment& f) {
  std::string out;
  for (size_t i = 0; i < f.machine_of.size(); ++i) {
    if (i > 0) out += " ";
    out += std::to_string(f.machine_of[i] + 1);
  }
  return out;
}

// Prints a solve result and resolves the decision exit code against the
// instance threshold, when one is present.
int report_result(const Instance& instance, const SolveResult& result,
                  const std::string& out_path) {
  std::cout << "algo: " << result.algo << "\n";
  std::cout << "cost: " << result.cost.str() << "\n";
  std::cout << "assignment: " << machines_text(result.witness) << "\n";
  std::cout << "evaluations: " << result.stats.evaluations << "\n";
  char seconds[32];
  std::snprintf(seconds, sizeof(seconds), "%.6f", result.stats.seconds);
  std::cout << "seconds: " << seconds << "\n";
  if (!out_path.empty()) {
    write_file(out_path, serialize_result(result));
  }
  if (instance.r) {
    const bool yes = !(result.cost > *instance.r);
    std::cout << "decision: " << (yes ? "yes" : "no") << " (threshold " << instance.r->str()
              << ")\n";
    return yes ? kExitYes : kExitNo;
  }
  return kExitYes;
}

std::string sidecar_path(const std::string& out_path) {
  std::filesystem::path path(out_path);
  path.replace_extension(".provenance.json");
  return path.string();
}

int run_validate(const std::string& file) {
  const ParsedInstance doc = parse_instance(read_file(file));
  const Dag& dag = doc.instance.dag;
  std::cout << "n: " << dag.vertex_count() << "\n";
  std::cout << "m: " << dag.arc_count() << "\n";
  std::cout << "k: " << doc.instance.profile.k << "\n";
  if (doc.ell) std::cout << "ell: " << *doc.ell << "\n";
  std::cout << "topo:";
  for (VertexId v : dag.topo_order()) std::cout << " " << v;
  std::cout << "\nok\n";
  return kExitYes;
}

int run_solve(const std::string& file, std::string algo, std::uint64_t seed, int restarts,
              const std::string& out_path) {
  const ParsedInstance doc = parse_instance(read_file(file));
  const Instance& instance = doc.instance;
  const long long budget = enumeration_budget();

  if (doc.ell) {
    if (algo != "auto" && algo != "sb") {
      throw Error(ErrorKind::ValidationError,
                  "size-bounded documents solve with --algo auto or sb");
    }
    return report_result(instance, solve_sb_brute_force(doc.as_sb_instance(), budget), out_path);
  }
  if (algo == "sb") {
    throw Error(ErrorKind::ValidationError, "--algo sb needs a document with an ell field");
  }
  if (algo == "auto") {
    if (is_directed_path(instance.dag)) {
      algo = "pathdp";
    } else if (instance.profile.k == 2) {
      algo = "cut2";
    } else if (fits_budget(instance.profile.k, instance.dag.vertex_count(), budget)) {
      algo = "brute";
    } else {
      algo = "ls";
    }
  }
  SolveResult result;
  if (algo == "brute") {
    result = solve_brute_force(instance, budget);
  } else if (algo == "cut2") {
    result = solve_two_machines(instance);
  } else if (algo == "pathdp") {
    result = solve_path_dp(instance);
  } else if (algo == "ls") {
    result = solve_local_search(instance, seed, restarts);
  } else {
    throw Error(ErrorKind::ValidationError, "unknown algorithm '" + algo + "'");
  }
  return report_result(instance, result, out_path);
}

int run_cost(const std::string& file, const std::string& assignment_file) {
  const ParsedInstance doc = parse_instance(read_file(file));
  const Instance& instance = doc.instance;
  const Assignment f = parse_assignment(read_file(assignment_file), instance.dag.vertex_count(),
                                        instance.profile.k);
  const ExtendedWeight cost = total_cost(instance, f);
  std::cout << "cost: " << cost.str() << "\n";
  if (instance.r) {
    const bool yes = !(cost > *instance.r);
    std::cout << "decision: " << (yes ? "yes" : "no") << " (threshold " << instance.r->str()
              << ")\n";
    return yes ? kExitYes : kExitNo;
  }
  return kExitYes;
}

int run_reduce(const std::string& kind, const std::string& in_path, const std::string& out_path,
               bool unit_costs, std::optional<int> ell) {
  const GraphDocument doc = parse_graph(read_file(in_path));
  if (kind == "multiway") {
    MultiwayInstance mw{doc.graph, doc.terminals, doc.r};
    const ReductionArtifact artifact = reduce_multiway_to_espdag(mw, unit_costs);
    write_file(out_path, serialize_instance(artifact.instance, artifact.ell));
    write_file(sidecar_path(out_path), serialize_provenance(artifact));
    std::cout << "wrote " << out_path << " and " << sidecar_path(out_path) << "\n";
    return kExitYes;
  }
  if (kind == "clique") {
    if (!ell) {
      throw Error(ErrorKind::ValidationError, "reduce clique needs --ell");
    }
    const SbmInstance sbm = reduce_clique_to_sbm(doc.graph, *ell);
    GraphDocument out{sbm.graph, {}, sbm.s, sbm.t, sbm.r, sbm.ell};
    write_file(out_path, serialize_graph(out));
    std::cout << "wrote " << out_path << "\n";
    return kExitYes;
  }
  if (kind == "sbm") {
    if (!doc.s || !doc.t || !doc.ell) {
      throw Error(ErrorKind::ValidationError, "sbm documents need s, t and ell fields");
    }
    SbmInstance sbm{doc.graph, *doc.s, *doc.t, doc.r, *doc.ell};
    const ReductionArtifact artifact = reduce_sbm_to_sbesbp(sbm);
    write_file(out_path, serialize_instance(artifact.instance, artifact.ell));
    write_file(sidecar_path(out_path), serialize_provenance(artifact));
    std::cout << "wrote " << out_path << " and " << sidecar_path(out_path) << "\n";
    return kExitYes;
  }
  throw Error(ErrorKind::ValidationError, "unknown reduction '" + kind + "'");
}

int run_gen(const std::string& shape, const GenSpec& spec, const std::string& out_path) {
  std::string content;
  if (shape == "dag") {
    content = serialize_instance(gen_random_dag_instance(spec));
  } else if (shape == "path") {
    content = serialize_instance(gen_path_instance(spec));
  } else if (shape == "regular") {
    content = serialize_graph(GraphDocument{gen_regular_graph(spec), {}, {}, {}, {}, {}});
  } else {
    throw Error(ErrorKind::ValidationError, "unknown shape '" + shape + "'");
  }
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_file(out_path, content);
    std::cout << "wrote " << out_path << "\n";
  }
  return kExitYes;
}

int run_export_dot(const std::string& file, const std::string& assignment_file, bool gadget,
                   const std::string& out_path) {
  const ParsedInstance doc = parse_instance(read_file(file));
  std::string content;
  if (gadget) {
    content = export_gadget_dot(build_two_machine_gadget(doc.instance));
  } else if (!assignment_file.empty()) {
    const Assignment f = parse_assignment(read_file(assignment_file),
                                          doc.instance.dag.vertex_count(), doc.instance.profile.k);
    content = export_dot(doc.instance, &f);
  } else {
    content = export_dot(doc.instance);
  }
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_file(out_path, content);
    std::cout << "wrote " << out_path << "\n";
  }
  return kExitYes;
}

int run_bench(const std::string& dir, const std::string& algo, int repeat, std::uint64_t seed,
              int restarts) {
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && name.ends_with(".json") &&
        !name.ends_with(".provenance.json")) {
      files.push_back(entry.path().string());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    throw Error(ErrorKind::ParseError, "no instance documents in '" + dir + "'");
  }

  std::printf("%-40s %16s %12s\n", "instance", "cost", "seconds");
  for (const std::string& file : files) {
    const ParsedInstance doc = parse_instance(read_file(file));
    const long long budget = enumeration_budget();
    SolveResult result;
    double best_seconds = 0.0;
    for (int round = 0; round < repeat; ++round) {
      if (doc.ell) {
        result = solve_sb_brute_force(doc.as_sb_instance(), budget);
      } else if (algo == "brute") {
        result = solve_brute_force(doc.instance, budget);
      } else if (algo == "cut2") {
        result = solve_two_machines(doc.instance);
      } else if (algo == "pathdp") {
        result = solve_path_dp(doc.instance);
      } else if (algo == "ls") {
        result = solve_local_search(doc.instance, seed, restarts);
      } else if (algo == "auto") {
        if (is_directed_path(doc.instance.dag)) {
          result = solve_path_dp(doc.instance);
        } else if (doc.instance.profile.k == 2) {
          result = solve_two_machines(doc.instance);
        } else if (fits_budget(doc.instance.profile.k, doc.instance.dag.vertex_count(), budget)) {
          result = solve_brute_force(doc.instance, budget);
        } else {
          result = solve_local_search(doc.instance, seed, restarts);
        }
      } else {
        throw Error(ErrorKind::ValidationError, "unknown algorithm '" + algo + "'");
      }
      best_seconds = (round == 0) ? result.stats.seconds
                                  : std::min(best_seconds, result.stats.seconds);
    }
    std::printf("%-40s %16s %12.6f\n",
                std::filesystem::path(file).filename().string().c_str(),
                result.cost.str().c_str(), best_seconds);
  }
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy-saving DAG partition: exact solvers, reductions, generators"};
  app.require_subcommand(1);

  std::string file, out_path, assignment_file, algo = "auto", kind, shape, dir;
  std::uint64_t seed = 0;
  int restarts = 8, repeat = 1;
  bool unit_costs = false, gadget = false;
  GenSpec spec;
  std::optional<int> ell;
  int ell_flag = -1;

  auto* validate = app.add_subcommand("validate", "structural checks; prints the topo order");
  validate->add_option("file", file)->required();

  auto* solve = app.add_subcommand("solve", "minimize total energy; prints cost and witness");
  solve->add_option("file", file)->required();
  solve->add_option("--algo", algo)->check(CLI::IsMember({"auto", "brute", "cut2", "pathdp", "ls", "sb"}));
  solve->add_option("--seed", seed);
  solve->add_option("--restarts", restarts);
  solve->add_option("--out", out_path);

  auto* cost = app.add_subcommand("cost", "evaluate the total cost of an assignment");
  cost->add_option("file", file)->required();
  cost->add_option("--assignment", assignment_file)->required();

  auto* reduce = app.add_subcommand("reduce", "emit a reduced instance plus provenance sidecar");
  reduce->add_option("kind", kind)->required()->check(CLI::IsMember({"multiway", "clique", "sbm"}));
  reduce->add_option("input", file)->required();
  reduce->add_option("-o,--out", out_path)->required();
  reduce->add_flag("--unit-costs", unit_costs);
  reduce->add_option("--ell", ell_flag);

  auto* gen = app.add_subcommand("gen", "seeded random instances and graphs");
  gen->add_option("shape", shape)->required()->check(CLI::IsMember({"dag", "path", "regular"}));
  gen->add_option("--n", spec.n)->required();
  gen->add_option("--m", spec.m);
  gen->add_option("--k", spec.k);
  gen->add_option("--d", spec.d);
  gen->add_option("--seed", spec.seed)->required();
  gen->add_option("--lo", spec.weight_range.lo);
  gen->add_option("--hi", spec.weight_range.hi);
  gen->add_option("--denom", spec.weight_range.denominator);
  gen->add_option("--inf-q", spec.infinite_fraction);
  gen->add_option("-o,--out", out_path);

  auto* export_dot_cmd = app.add_subcommand("export-dot", "render an instance as DOT");
  export_dot_cmd->add_option("file", file)->required();
  export_dot_cmd->add_option("--assignment", assignment_file);
  export_dot_cmd->add_flag("--gadget", gadget, "render the two-machine cut gadget instead");
  export_dot_cmd->add_option("-o,--out", out_path);

  auto* bench = app.add_subcommand("bench", "solve every instance document in a directory");
  bench->add_option("dir", dir)->required();
  bench->add_option("--algo", algo)->check(CLI::IsMember({"auto", "brute", "cut2", "pathdp", "ls"}));
  bench->add_option("--repeat", repeat)->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed);
  bench->add_option("--restarts", restarts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (ell_flag >= 0) ell = ell_flag;

  try {
    if (app.got_subcommand(validate)) return run_validate(file);
    if (app.got_subcommand(solve)) return run_solve(file, algo, seed, restarts, out_path);
    if (app.got_subcommand(cost)) return run_cost(file, assignment_file);
    if (app.got_subcommand(reduce)) return run_reduce(kind, file, out_path, unit_costs, ell);
    if (app.got_subcommand(gen)) return run_gen(shape, spec, out_path);
    if (app.got_subcommand(export_dot_cmd))
      return run_export_dot(file, assignment_file, gadget, out_path);
    if (app.got_subcommand(bench)) return run_bench(dir, algo, repeat, seed, restarts);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::TooLarge ? kExitBudget : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}
