#pragma once

#include <vector>

namespace hocat {

// A monotone map [k] -> [m] stored as its image list (size k+1, values in 0..m).
using Monotone = std::vector<int>;

bool is_monotone(const Monotone& a);

// g after f: (g . f)(i) = g(f(i)). f: [k]->[m], g: [m]->[p].
Monotone compose_monotone(const Monotone& g, const Monotone& f);

Monotone identity_monotone(int n);

// Epi-mono factorization a = mono . epi with epi: [k] ->> [j], mono: [j] >-> [m].
struct EpiMono {
  Monotone epi;
  Monotone mono;
};
EpiMono epi_mono_factor(const Monotone& a);

// All monotone maps [k] -> [m], lexicographically ordered.
std::vector<Monotone> enumerate_monotone(int k, int m);

}  // namespace hocat
