#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "hocat/fincat.hpp"

namespace hocat {

// A category presentation: objects, typed generators, and relations between
// parallel composable generator words.
struct Presentation {
  std::vector<std::string> objects;
  struct Gen {
    std::string id;
    int src;
    int tgt;
  };
  std::vector<Gen> gens;
  struct Rel {
    std::vector<int> lhs, rhs;  // generator index sequences, diagrammatic order
    int obj;                    // source object (needed when a side is empty)
  };
  std::vector<Rel> rels;

  int word_src(const std::vector<int>& w, int obj) const {
    return w.empty() ? obj : gens[w.front()].src;
  }
  int word_tgt(const std::vector<int>& w, int obj) const {
    return w.empty() ? obj : gens[w.back()].tgt;
  }
};

// A composable word: src object plus generator sequence (possibly empty).
struct Word {
  int src = 0;
  std::vector<int> gens;
  bool operator==(const Word& o) const { return src == o.src && gens == o.gens; }
};

// Acyclicity / longest path of the generator graph (parallel edges allowed).
struct GenGraphInfo {
  bool acyclic = true;
  int longest_path = 0;
};
GenGraphInfo gen_graph_info(const Presentation& P);

// Breadth-limited congruence closure: enumerate all composable words of
// length <= bound and union words across relation instances. `multi_moves`
// additionally applies every set of pairwise disjoint instances at once
// (the unrestricted multi-position variant); it never changes the partition,
// only the work done, which the stats record.
struct SaturationOptions {
  int bound = 8;
  bool multi_moves = false;
};

struct SaturationResult {
  std::vector<Word> words;                       // enumeration order
  std::vector<int> cls;                          // word index -> class id
  std::vector<int> class_rep;                    // class id -> word index (minimal)
  long long words_visited = 0;
  long long moves_visited = 0;
  int bound = 0;
  std::unordered_map<std::string, int> word_index;

  int find_word(const Word& w) const;            // -1 if not enumerated
  int class_of(const Word& w) const;             // -1 if not enumerated
  // class ids with the given endpoints, in canonical (minimal rep) order
  std::vector<int> hom_classes(const Presentation& P, int a, int b) const;
};

SaturationResult saturate(const Presentation& P, const SaturationOptions& opt);

// Builds the finite category of saturation classes. Only meaningful when the
// generator graph is acyclic and bound >= its longest path, so that every
// composable word was enumerated.
ExplicitFinCategory materialize(const Presentation& P, const SaturationResult& R);

std::string word_key(const Word& w);

}  // namespace hocat
