#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hocat/necklace.hpp"
#include "hocat/presentation.hpp"
#include "hocat/rewrite.hpp"
#include "hocat/sset.hpp"

namespace hocat {

// A composable word of edges of X (possibly degenerate ones), or the empty
// word at a base vertex.
struct EdgeWord {
  int base_vertex = -1;    // required when edges is empty
  std::vector<int> edges;  // cells[1] indices; target of e_i = source of e_{i+1}
};

bool edge_word_composable(const TruncatedSSet& X, const EdgeWord& w);
int edge_word_src(const TruncatedSSet& X, const EdgeWord& w);
int edge_word_tgt(const TruncatedSSet& X, const EdgeWord& w);

// Presentation of the free category on the nondegenerate edges modulo the
// 2-simplex relations (degenerate faces contribute the empty word).
struct H1Presentation {
  Presentation pres;           // objects = vertices, gens = nondegenerate edges
  std::vector<int> edge_gen;   // edge index -> gen index, -1 for degenerate
  std::vector<int> gen_edge;   // gen index -> edge index
};
H1Presentation h1_presentation(const TruncatedSSet& X);

// Word space over all edges (degenerate ones as letters, with deletion
// relations); used by the thin-finality comparison and the bench.
H1Presentation raw_edge_presentation(const TruncatedSSet& X);

enum class MorEqual { Yes, No, Unknown };

// --- necklace-formula backend ----------------------------------------------

struct H1Result {
  H1Presentation hp;
  bool exact = false;  // nondegenerate edge graph acyclic
  int bound = 0;
  SaturationResult sat;
  std::optional<ExplicitFinCategory> cat;  // materialized when exact

  int class_of_edge_word(const TruncatedSSet& X, const EdgeWord& w) const;
  std::vector<int> hom(int x, int y) const;  // class ids
  MorEqual mor_equal(const TruncatedSSet& X, const EdgeWord& a,
                     const EdgeWord& b) const;
};

// max_word < 0 selects the default: longest nondegenerate path when acyclic
// (exact), 8 otherwise.
H1Result h1_necklace(const TruncatedSSet& X, int max_word = -1);

// --- rewriting backend ------------------------------------------------------

struct H1RewriteResult {
  H1Presentation hp;
  RewriteEngine engine;
  bool exact = false;  // acyclic and engine complete
  std::optional<ExplicitFinCategory> cat;
  std::vector<Word> normal_forms;  // canonical order, when materialized

  Word normal_form(const TruncatedSSet& X, const EdgeWord& w) const;
  MorEqual mor_equal(const TruncatedSSet& X, const EdgeWord& a,
                     const EdgeWord& b) const;
};

H1Result h1_from(const TruncatedSSet& X);  // convenience alias of h1_necklace
H1RewriteResult h1_rewrite(const TruncatedSSet& X, int max_rules = 2000,
                           int max_lhs = 12);

// Identity-on-objects comparison of the two backends; false plus reason on
// any mismatch. Requires both materialized.
bool backends_agree(const TruncatedSSet& X, const H1Result& nec,
                    const H1RewriteResult& rw, std::string* why = nullptr);

TruncatedSSet nerve_of_h1(const TruncatedSSet& X);  // trunc level 3

// hom-set of h1 at (x, y); nullopt when not materializable.
std::optional<std::vector<int>> mapping_set(const TruncatedSSet& X, int x, int y);

// --- thin reduction vs unrestricted saturation ------------------------------

struct SaturationComparison {
  bool partitions_equal = false;
  long long thin_words = 0, thin_moves = 0;
  long long multi_words = 0, multi_moves = 0;
};
// Thin (single-move) vs unrestricted (simultaneous disjoint multi-position
// moves) saturation over the raw edge-word space at the given bound.
SaturationComparison thin_vs_unrestricted(const TruncatedSSet& X, int bound);

// Full necklace-colimit evaluation: enumerate every anchored necklace of
// total <= bound and quotient by all necklace maps. Partition restricted to
// the very thin anchors, for comparison with word saturation.
struct NaiveColimitResult {
  long long anchors_visited = 0;
  long long map_applications = 0;
  // word partition: canonical key -> component id
  std::vector<EdgeWord> words;
  std::vector<int> component;
};
NaiveColimitResult naive_necklace_colimit(const TruncatedSSet& X, int bound);

// true when the naive colimit partition matches thin saturation on words
bool thin_finality_check(const TruncatedSSet& X, int bound,
                         std::string* why = nullptr);

// h1(X x Y) vs h1(X) x h1(Y), compared through the projection functors.
bool product_compatibility_check(const TruncatedSSet& X, const TruncatedSSet& Y,
                                 std::string* why = nullptr);

}  // namespace hocat
