#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hocat/fibration.hpp"
#include "hocat/fincat.hpp"
#include "hocat/sset.hpp"

namespace hocat {

// Deterministic instance generators for tests, acceptance runs, and the CLI
// corpus/bench verbs. Same family + size + seed => identical output.

std::vector<std::string> corpus_families();

// family in {spines, horns, boundaries, random-dag-complex,
// nerve-of-random-poset}; throws std::invalid_argument otherwise.
// random-dag-complex instances are acyclic with <= 30 nondegenerate cells.
std::vector<TruncatedSSet> generate_corpus(const std::string& family, int size,
                                           std::uint64_t seed);

// Free category on a random acyclic quiver (<= max_objects objects, at most
// max_parallel parallel edges between a pair).
ExplicitFinCategory random_free_category(std::mt19937_64& rng,
                                         int max_objects = 5,
                                         int max_parallel = 4);

ExplicitFinCategory random_poset_category(std::mt19937_64& rng,
                                          int max_objects = 4);

// A sum of representables sum_i hom(-, c_i): always functorial, admits empty
// fibers, and is closed under the evident summand inclusions.
struct RepresentableSum {
  Presheaf F;                 // base must outlive the presheaf
  std::vector<int> summands;  // chosen objects c_i
};
RepresentableSum representable_sum(const ExplicitFinCategory& C,
                                   const std::vector<int>& summands);
RepresentableSum random_presheaf(const ExplicitFinCategory& C,
                                 std::mt19937_64& rng, int max_summands = 3);

// Per-object value maps of the summand-prefix inclusion sub -> full; natural
// by construction. sub.summands must be a prefix of full.summands.
std::vector<std::vector<int>> summand_inclusion(const ExplicitFinCategory& C,
                                                const RepresentableSum& sub,
                                                const RepresentableSum& full);

}  // namespace hocat
