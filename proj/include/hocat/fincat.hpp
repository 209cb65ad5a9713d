#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hocat/sset.hpp"

namespace hocat {

// A finite category with fully materialized composition tables.
struct ExplicitFinCategory {
  std::vector<std::string> objects;
  struct Arrow {
    std::string id;
    int src;
    int tgt;
  };
  std::vector<Arrow> arrows;
  std::vector<int> identity;                  // per object, arrow index
  std::vector<std::vector<int>> comp;         // comp[g][f] = g . f, or -1
  std::unordered_map<std::string, int> obj_index;
  std::unordered_map<std::string, int> arrow_index;

  int num_objects() const { return int(objects.size()); }
  int num_arrows() const { return int(arrows.size()); }
  bool composable(int g, int f) const { return arrows[f].tgt == arrows[g].src; }
  int compose(int g, int f) const { return comp[g][f]; }
  std::vector<int> hom(int a, int b) const;
  void finalize();
};

// Exhaustive check of unit and associativity laws plus table well-formedness.
ValidationReport validate_category(const ExplicitFinCategory& C);

ExplicitFinCategory product_category(const ExplicitFinCategory& C,
                                     const ExplicitFinCategory& D);

// leq must be a partial order on 0..n-1.
ExplicitFinCategory poset_category(int n,
                                   const std::function<bool(int, int)>& leq);

// Free category on a quiver; requires the quiver to be acyclic so the path
// set is finite. Edges are (src, tgt, label).
ExplicitFinCategory free_category_on_quiver(
    int num_vertices, const std::vector<std::tuple<int, int, std::string>>& edges);

struct Functor {
  const ExplicitFinCategory* source = nullptr;
  const ExplicitFinCategory* target = nullptr;
  std::vector<int> obj_map;
  std::vector<int> arrow_map;
};

bool is_functor(const Functor& F);

// Slice C / c together with the projection functor.
std::pair<ExplicitFinCategory, Functor> slice_category_over(
    const ExplicitFinCategory& C, int c);

// Checks that (obj_map, arrow_map) is an isomorphism of categories.
bool is_isomorphism(const Functor& F);

TruncatedSSet nerve_of_category(const ExplicitFinCategory& C, int L);

// Level-wise map of nerves induced by a functor.
SSetMap nerve_of_functor(const Functor& F, const TruncatedSSet& NC,
                         const TruncatedSSet& ND);

}  // namespace hocat
