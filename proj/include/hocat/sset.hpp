#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hocat/monotone.hpp"

namespace hocat {

// A finite simplicial set truncated at dimension trunc_level, with explicit
// face and degeneracy tables. Cells are indexed per dimension; ids give a
// stable, human-readable handle and fix the canonical iteration order.
// Immutable after finalize().
struct TruncatedSSet {
  int trunc_level = 0;
  std::vector<std::vector<std::string>> cells;           // cells[n][idx] -> id
  std::vector<std::vector<std::vector<int>>> face;       // face[n][i][idx], 1 <= n
  std::vector<std::vector<std::vector<int>>> degen;      // degen[n][i][idx], n < L
  std::vector<std::vector<bool>> degenerate_flag;        // image of the degeneracies
  std::vector<std::unordered_map<std::string, int>> index;

  int num_cells(int n) const { return int(cells[n].size()); }
  int cell_index(int n, const std::string& id) const;
  const std::string& cell_id(int n, int idx) const { return cells[n][idx]; }
  int face_of(int n, int i, int idx) const { return face[n][i][idx]; }
  int degen_of(int n, int i, int idx) const { return degen[n][i][idx]; }
  bool is_degenerate(int n, int idx) const { return degenerate_flag[n][idx]; }

  // j-th vertex of an n-cell, as an index into cells[0].
  int vertex_of(int n, int idx, int j) const;

  // Induced map a*: cells[m] -> cells[k] for a monotone a: [k] -> [m],
  // computed through the stored tables via the epi-mono factorization.
  int pullback_cell(int m, int idx, const Monotone& a) const;

  // Recomputes index maps and degenerate flags from the tables.
  void finalize();
};

struct ValidationReport {
  bool ok = true;
  struct Violation {
    std::string identity;
    int dimension;
    std::string simplex;
  };
  std::vector<Violation> violations;
};

ValidationReport validate(const TruncatedSSet& S);

// A level-wise map of truncated simplicial sets. Source and target must share
// the truncation level; commutation with the tables is what validate checks.
struct SSetMap {
  const TruncatedSSet* source = nullptr;
  const TruncatedSSet* target = nullptr;
  std::vector<std::vector<int>> level_maps;  // level_maps[n][src idx] -> tgt idx

  int apply(int n, int idx) const { return level_maps[n][idx]; }
};

ValidationReport validate_map(const SSetMap& f);

SSetMap identity_map(const TruncatedSSet& X);
std::optional<SSetMap> compose_maps(const SSetMap& g, const SSetMap& f);

// Standard constructors. Cells of the simplex family are monotone vertex
// tuples with ids like "0.1.1.2".
TruncatedSSet standard_simplex(int n, int L);
TruncatedSSet boundary(int n, int L);
TruncatedSSet horn(int n, int k, int L);
TruncatedSSet spine(int n, int L);

// Completion of an abstract simplicial-complex-like description: cells are
// the monotone vertex tuples whose support satisfies the predicate. The
// predicate must be downward closed and true on singletons it reports.
TruncatedSSet from_support_predicate(int num_vertices, int L,
                                     const std::function<bool(const std::vector<int>&)>& has_face);

TruncatedSSet product(const TruncatedSSet& X, const TruncatedSSet& Y);
TruncatedSSet disjoint_union(const TruncatedSSet& X, const TruncatedSSet& Y);

// Eilenberg-Zilber decomposition: sigma = epi*(core) with core nondegenerate.
struct EzDecomposition {
  Monotone epi;  // [n] ->> [dim core]
  int core_dim;
  int core_idx;
};
EzDecomposition ez_core(const TruncatedSSet& S, int n, int idx);

// Nondegenerate-edge utilities shared by the h1 backends.
// Returns -1 source/target as cells[0] indices: source = d1, target = d0.
int edge_source(const TruncatedSSet& X, int e);
int edge_target(const TruncatedSSet& X, int e);

struct EdgeGraphInfo {
  bool acyclic = true;
  int longest_path = 0;  // over nondegenerate edges
};
EdgeGraphInfo edge_graph_info(const TruncatedSSet& X);

}  // namespace hocat
