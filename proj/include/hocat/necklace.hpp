#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hocat/sset.hpp"

namespace hocat {

// A necklace: bead sizes n_i >= 1, empty list for the point. Vertices are
// 0..T with T the total; joints are the partial sums.
struct Necklace {
  std::vector<int> beads;

  int total() const;
  std::vector<int> joints() const;  // {0, n1, n1+n2, ..., T}
  bool operator==(const Necklace& o) const { return beads == o.beads; }
  bool operator<(const Necklace& o) const { return beads < o.beads; }
};

std::string necklace_literal(const Necklace& N);          // "2v2v1v1", "0"
std::optional<Necklace> parse_necklace(const std::string& s);

Necklace concat(const Necklace& A, const Necklace& B);

bool is_thin(const Necklace& N);
bool is_very_thin(const Necklace& N);

// A morphism of necklaces: a monotone, endpoint-preserving vertex map such
// that every source bead lands inside a single target bead interval.
struct NecklaceMap {
  Necklace source, target;
  Monotone vertex_map;
  bool operator==(const NecklaceMap& o) const {
    return source == o.source && target == o.target && vertex_map == o.vertex_map;
  }
};

bool bead_containment_ok(const Necklace& src, const Necklace& tgt,
                         const Monotone& vm);

// Exhaustive, duplicate-free, lexicographically ordered by vertex map.
std::vector<NecklaceMap> hom_set(const Necklace& N, const Necklace& M);

NecklaceMap identity_necklace_map(const Necklace& N);
std::optional<NecklaceMap> compose(const NecklaceMap& g, const NecklaceMap& f);

// The necklace as a bipointed truncated simplicial set: cells are monotone
// vertex tuples supported in a single bead interval; min = 0, max = T.
TruncatedSSet realize(const Necklace& N, int L);

// L(N) = Delta^T together with the canonical inclusion realize(N) into it.
struct SegalifyNecklaceResult {
  int total;
  TruncatedSSet source;  // realize(N, L)
  TruncatedSSet target;  // standard_simplex(T, L)
  SSetMap inclusion;     // points into source/target above
};
SegalifyNecklaceResult segalify_necklace(const Necklace& N, int L);

// Join and its right adjoint.
struct JoinResult {
  Necklace necklace;
  Monotone anchor;  // [n] -> {0..T}, cumulative totals
};
JoinResult J(const std::vector<Necklace>& Ms);
std::vector<Necklace> JR(const Necklace& N, const Monotone& alpha);

// All bead-size lists with given total (2^{T-1} compositions), lex order.
std::vector<Necklace> necklaces_with_total(int T);
std::vector<Necklace> necklaces_up_to(int bound);  // includes the point

// ---------------------------------------------------------------------------
// slices over a bipointed simplicial set

// An anchored necklace: bead cells in X, consecutive endpoints matching,
// running from x to y.
struct SliceObject {
  Necklace necklace;
  std::vector<int> bead_cells;  // cell index in X at dimension beads[i]
  int base_vertex = -1;         // used when necklace is the point
};

struct SliceGraph {
  std::vector<SliceObject> objects;
  std::vector<std::pair<int, int>> edges;  // undirected for pi0 purposes
  std::vector<Necklace> omitted;           // bead shapes above trunc_level
  int bound = 0;
};

SliceGraph slice_category(const TruncatedSSet& X, int x, int y, int bound);

struct Pi0Result {
  int num_components = 0;
  std::vector<int> component;  // per object
};
Pi0Result pi0(int num_objects, const std::vector<std::pair<int, int>>& edges);
Pi0Result pi0(const SliceGraph& g);

// Connectivity witness for the joint slice over realize(A) x realize(B).
struct SiftedReport {
  int bound = 0;
  int num_objects = 0;
  int num_components = 0;
  bool connected = false;    // confirmed instance of the statement
  bool conclusive = false;   // disconnected at this bound is inconclusive
};
SiftedReport sifted_witness(const Necklace& A, const Necklace& B, int bound);

}  // namespace hocat
