#pragma once

#include <string>
#include <vector>

#include "hocat/presentation.hpp"

namespace hocat {

// Ordered string rewriting over the typed generator alphabet of a
// Presentation. Rules are length-reducing or length-preserving-lex-reducing
// under the (length, generator index lex) order, so rewriting terminates.
struct RewriteRule {
  std::vector<int> lhs, rhs;
  int obj;  // source object (relevant when rhs or lhs is empty)
};

struct RewriteEngine {
  enum class Status { Complete, BudgetExhausted };
  std::vector<RewriteRule> rules;
  Status status = Status::Complete;
  int max_lhs_len = 0;

  // leftmost-outermost reduction to normal form
  Word normalize(const Presentation& P, Word w) const;
  std::string dump(const Presentation& P) const;
};

// Knuth-Bendix completion under the length-then-lex order. Stops when all
// critical pairs resolve (Complete) or when the rule count / LHS length
// budget is hit (BudgetExhausted).
RewriteEngine knuth_bendix(const Presentation& P, int max_rules = 2000,
                           int max_lhs = 12);

// A presentation together with its completed (or budget-capped) engine.
struct PresentedCategory {
  Presentation pres;
  RewriteEngine engine;
};

}  // namespace hocat
