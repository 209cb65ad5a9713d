#pragma once

#include <string>
#include <vector>

#include "hocat/fincat.hpp"
#include "hocat/sset.hpp"

namespace hocat {

// A presheaf of finite sets on an explicit finite category: contravariant,
// so an arrow a: s -> t acts values(t) -> values(s).
struct Presheaf {
  const ExplicitFinCategory* base = nullptr;
  std::vector<std::vector<std::string>> values;  // per object, element ids
  std::vector<std::vector<int>> action;          // per arrow, index map
};

ValidationReport validate_presheaf(const Presheaf& F);

struct FibrationReport {
  bool is_right_fib = true;
  struct Failure {
    int level;
    std::string witness;
  };
  std::vector<Failure> failures;
  int levels_checked = 0;
};

// Checks that (d0, p): X_n -> X_{n-1} x_{Y_{n-1}} Y_n is a bijection for
// every 1 <= n <= trunc_level. d0 of an edge is its target, so right
// fibrations are target-determined.
FibrationReport is_right_fibration(const SSetMap& p);

struct F0Report {
  bool preconditions_ok = true;
  bool f0_bijection = false;
  bool levelwise_bijection = false;
  bool reconstruction_ok = false;  // f_n determined by f_{n-1} and the base
  bool consistent = false;         // the two sides of the criterion agree
  std::string detail;
};

// p: X -> Y and q: X' -> Y right fibrations, f: X -> X' with q f = p.
F0Report f0_criterion(const SSetMap& p, const SSetMap& q, const SSetMap& f);

// Discrete Grothendieck construction: n-cells of the total object are pairs
// (n-chain in C, element of F at the chain's last object); d0 drops the
// first object, dn transports along the last arrow.
struct Unstraightened {
  TruncatedSSet total;
  TruncatedSSet nerve;
  SSetMap projection;  // total -> nerve, a right fibration
};
Unstraightened unstraighten(const ExplicitFinCategory& C, const Presheaf& F,
                            int L = 3);

// Inverse direction: p must be a right fibration onto nerve_of_category(C, L)
// (cells identified by nerve ids). Throws std::invalid_argument otherwise.
Presheaf straighten(const SSetMap& p, const ExplicitFinCategory& C);

// Natural isomorphism search over a shared base, brute force on per-object
// bijections; feasible for small values.
bool presheaves_isomorphic(const Presheaf& F, const Presheaf& G,
                           std::string* why = nullptr);

// The canonical comparison X -> unstraighten(straighten(p)) over the nerve:
// x maps to (base chain of x, iterated-d0 vertex of x).
SSetMap unstraighten_comparison(const SSetMap& p, const Unstraightened& U);

bool is_levelwise_bijection(const SSetMap& f);

// phi: per-object value-index maps F(c) -> G(c); naturality means it
// commutes with every action map.
bool is_natural(const Presheaf& F, const Presheaf& G,
                const std::vector<std::vector<int>>& phi);

// The induced map of totals (chain, x) -> (chain, phi(x)) over the shared
// nerve; requires naturality.
SSetMap unstraighten_morphism(const Presheaf& F, const Presheaf& G,
                              const std::vector<std::vector<int>>& phi,
                              const Unstraightened& UF,
                              const Unstraightened& UG);

// Round trips on both sides; why receives the first failure.
bool roundtrip_presheaf_ok(const ExplicitFinCategory& C, const Presheaf& F,
                           std::string* why = nullptr);
bool roundtrip_fibration_ok(const SSetMap& p, const ExplicitFinCategory& C,
                            std::string* why = nullptr);

}  // namespace hocat
