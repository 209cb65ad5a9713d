#include "hocat/monotone.hpp"

#include <algorithm>

namespace hocat {

bool is_monotone(const Monotone& a) {
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i] < a[i - 1]) return false;
  return true;
}

Monotone compose_monotone(const Monotone& g, const Monotone& f) {
  Monotone out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
  return out;
}

Monotone identity_monotone(int n) {
  Monotone out(n + 1);
  for (int i = 0; i <= n; ++i) out[i] = i;
  return out;
}

EpiMono epi_mono_factor(const Monotone& a) {
  Monotone image;
  for (int v : a)
    if (image.empty() || image.back() != v) image.push_back(v);
  Monotone epi(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    epi[i] = int(std::lower_bound(image.begin(), image.end(), a[i]) - image.begin());
  }
  return {epi, image};
}

static void enum_rec(int k, int m, Monotone& cur, std::vector<Monotone>& out) {
  if (int(cur.size()) == k + 1) {
    out.push_back(cur);
    return;
  }
  int lo = cur.empty() ? 0 : cur.back();
  for (int v = lo; v <= m; ++v) {
    cur.push_back(v);
    enum_rec(k, m, cur, out);
    cur.pop_back();
  }
}

std::vector<Monotone> enumerate_monotone(int k, int m) {
  std::vector<Monotone> out;
  Monotone cur;
  enum_rec(k, m, cur, out);
  return out;
}

}  // namespace hocat
