#include "espdag/core.hpp"

#include <string>

namespace espdag {

Assignment to_assignment(const Bipartition& b) {
  return Assignment{b.side_of};
}

Bipartition to_bipartition(const Assignment& f) {
  for (int machine : f.machine_of) {
    if (machine != 0 && machine != 1) {
      throw Error(ErrorKind::KNotTwo, "assignment uses machine " + std::to_string(machine + 1));
    }
  }
  return Bipartition{f.machine_of};
}

void check_instance(const Instance& instance) {
  const int n = instance.dag.vertex_count();
  const EnergyProfile& profile = instance.profile;
  if (profile.k < 1) {
    throw Error(ErrorKind::ValidationError, "machine count must be at least 1");
  }
  if (static_cast<int>(profile.p.size()) != n || static_cast<int>(profile.q.size()) != n) {
    throw Error(ErrorKind::DimensionMismatch,
                "profile tables must have one row per vertex (n=" + std::to_string(n) + ")");
  }
  for (const auto& row : profile.p) {
    if (static_cast<int>(row.size()) != profile.k) {
      throw Error(ErrorKind::DimensionMismatch, "p row size differs from machine count");
    }
  }
  if (!instance.labels.empty() && static_cast<int>(instance.labels.size()) != n) {
    throw Error(ErrorKind::DimensionMismatch, "label table size differs from vertex count");
  }
}

void check_sb_instance(const SbInstance& instance) {
  check_instance(instance.base);
  if (instance.base.profile.k != 2) {
    throw Error(ErrorKind::KNotTwo, "size-bounded instances need exactly two machines");
  }
  if (instance.ell < 0 || instance.ell > instance.base.dag.vertex_count()) {
    throw Error(ErrorKind::ValidationError,
                "size bound must lie in 0..n, got " + std::to_string(instance.ell));
  }
}

void check_assignment(const Instance& instance, const Assignment& f) {
  if (f.size() != instance.dag.vertex_count()) {
    throw Error(ErrorKind::DimensionMismatch, "assignment size differs from vertex count");
  }
  for (int machine : f.machine_of) {
    if (machine < 0 || machine >= instance.profile.k) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "machine index " + std::to_string(machine + 1) + " outside 1.." +
                      std::to_string(instance.profile.k));
    }
  }
}

int indicator(const Dag& dag, VertexId v, std::span<const VertexId> members) {
  const int n = dag.vertex_count();
  if (v < 0 || v >= n) {
    throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v));
  }
  std::vector<char> in_set(n, 0);
  for (VertexId u : members) {
    if (u < 0 || u >= n) {
      throw Error(ErrorKind::IndexOutOfRange, "set member " + std::to_string(u));
    }
    in_set[u] = 1;
  }
  for (VertexId u : dag.out_neighbors(v)) {
    if (in_set[u]) return 1;
  }
  return 0;
}

namespace {

// q summed `count` times; callers guarantee count >= 1, so an infinite q is
// only ever propagated when genuinely triggered.
ExtendedWeight charge(const ExtendedWeight& q, int count) {
  if (q.is_infinite()) return q;
  return ExtendedWeight(q.value() * count);
}

}  // namespace

ExtendedWeight transfer_cost(const Instance& instance, const Assignment& f) {
  check_instance(instance);
  check_assignment(instance, f);
  const Dag& dag = instance.dag;
  const int k = instance.profile.k;

  ExtendedWeight cost;
  std::vector<int> last_seen(k, -1);
  for (int v = 0; v < dag.vertex_count(); ++v) {
    int foreign = 0;
    for (VertexId u : dag.out_neighbors(v)) {
      const int machine = f.machine_of[u];
      if (machine != f.machine_of[v] && last_seen[machine] != v) {
        last_seen[machine] = v;
        ++foreign;
      }
    }
    if (foreign > 0) {
      cost += charge(instance.profile.q[v], foreign);
    }
  }
  return cost;
}

ExtendedWeight bipartition_transfer_cost(const Instance& instance, const Bipartition& b) {
  check_instance(instance);
  if (instance.profile.k != 2) {
    throw Error(ErrorKind::KNotTwo, "bipartition costs need exactly two machines");
  }
  const Dag& dag = instance.dag;
  if (static_cast<int>(b.side_of.size()) != dag.vertex_count()) {
    throw Error(ErrorKind::DimensionMismatch, "bipartition size differs from vertex count");
  }
  ExtendedWeight cost;
  for (int v = 0; v < dag.vertex_count(); ++v) {
    const int side = b.side_of[v];
    if (side != 0 && side != 1) {
      throw Error(ErrorKind::ValidationError, "bipartition sides must be 1 or 2");
    }
    for (VertexId u : dag.out_neighbors(v)) {
      if (b.side_of[u] != side) {
        cost += instance.profile.q[v];
        break;
      }
    }
  }
  return cost;
}

ExtendedWeight total_cost(const Instance& instance, const Assignment& f) {
  check_instance(instance);
  check_assignment(instance, f);
  ExtendedWeight cost;
  for (int v = 0; v < instance.dag.vertex_count(); ++v) {
    cost += instance.profile.p[v][f.machine_of[v]];
  }
  cost += transfer_cost(instance, f);
  return cost;
}

}  // namespace espdag
