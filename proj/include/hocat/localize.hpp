#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "hocat/rewrite.hpp"
#include "hocat/segalify.hpp"
#include "hocat/sset.hpp"

namespace hocat {

// The category of simplices of X, restricted to nondegenerate objects; a
// verification mode additionally includes degenerate simplices up to a
// dimension cap. Arrows x -> y are the monotone maps alpha with
// alpha*(y) = x; marked means alpha preserves the maximal element.
struct SimplexCategory {
  const TruncatedSSet* X = nullptr;
  struct Obj {
    int dim, idx;
    std::string id;
  };
  std::vector<Obj> objects;
  struct Arr {
    Monotone alpha;
    int src, tgt;  // object indices
    bool marked;
    std::string id;
  };
  std::vector<Arr> arrows;
  std::unordered_map<std::string, int> obj_index;

  int object_of_cell(int dim, int idx) const;  // -1 when excluded
};

// degenerate_cap < 0: nondegenerate objects only.
SimplexCategory simplex_category(const TruncatedSSet& X, int degenerate_cap = -1);

// Closure and sanity checks on the marking (identities marked, marked closed
// under composition).
bool marking_ok(const SimplexCategory& C, std::string* why = nullptr);

// The zigzag localization presentation: one generator per arrow, one
// reversal generator per marked arrow, relations = composition triangles
// plus the two inverse laws per marked arrow. Completed by Knuth-Bendix
// under the given budget.
struct LocalizeOptions {
  int max_rules = 4000;
  int max_lhs = 12;
};
PresentedCategory localize(const SimplexCategory& C,
                           const LocalizeOptions& opt = {});

// Distinct normal forms of words from object a to object b of length up to
// word_len. Exact count when the engine is complete and word_len is large
// enough; otherwise a budget-qualified lower bound.
int count_loc_classes(const PresentedCategory& L, int a, int b, int word_len);

// Reversal-free presentation of the localization on vertex objects: for each
// nondegenerate simplex tau and vertex position j a generator
// g(tau, j): tau(j) -> lastv(tau) (the image of the long edge (j, dim tau)),
// with g(tau, dim tau) the identity, and one relation per simplex-category
// arrow. Equivalent to localize(simplex_category(X)) on vertex hom-sets;
// saturates exactly when X is acyclic.
struct ReducedLocalization {
  Presentation pres;  // objects = vertices of X
  struct GenOrigin {
    int dim, idx, j;
  };
  std::vector<GenOrigin> origin;      // per generator
  std::vector<int> gen_edge;          // per generator: the edge cell in X
  SaturationResult sat;
  bool exact = false;
  int bound = 0;
};
ReducedLocalization localize_reduced(const TruncatedSSet& X, int max_word = -1);

// The last vertex functor SimplexCategory -> h1(C[X]).
struct LastVertexFunctor {
  SimplexCategory C;
  H1Result h1;
  std::vector<int> obj_class;    // object -> vertex of X
  std::vector<int> arrow_class;  // arrow -> h1 class id
};
LastVertexFunctor last_vertex_functor(const TruncatedSSet& X);

// Exhaustive checks: marked arrows land on identities, composition is
// respected on every composable pair.
bool last_vertex_functor_ok(const LastVertexFunctor& F, std::string* why = nullptr);

struct CompareLocalizationReport {
  bool conclusive = false;
  bool marked_connectivity = false;
  struct Row {
    int x, y;
    int loc_classes, h1_classes;
    bool match;
  };
  std::vector<Row> rows;  // per ordered vertex pair
  bool equivalence = false;
  int bound = 0;
  std::string detail;

  std::string table() const;  // "pair, loc_classes, h1_classes, match?" rows
};
CompareLocalizationReport compare_localization(const TruncatedSSet& X);

}  // namespace hocat
