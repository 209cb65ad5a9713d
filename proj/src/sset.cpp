#include "hocat/sset.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>

namespace hocat {

int TruncatedSSet::cell_index(int n, const std::string& id) const {
  auto it = index[n].find(id);
  if (it == index[n].end()) throw std::out_of_range("unknown cell id: " + id);
  return it->second;
}

void TruncatedSSet::finalize() {
  int L = trunc_level;
  index.assign(L + 1, {});
  for (int n = 0; n <= L; ++n)
    for (int i = 0; i < num_cells(n); ++i) index[n][cells[n][i]] = i;
  degenerate_flag.assign(L + 1, {});
  for (int n = 0; n <= L; ++n) degenerate_flag[n].assign(num_cells(n), false);
  for (int n = 0; n < L; ++n)
    for (int i = 0; i <= n; ++i)
      for (int idx = 0; idx < num_cells(n); ++idx)
        degenerate_flag[n + 1][degen[n][i][idx]] = true;
}

int TruncatedSSet::vertex_of(int n, int idx, int j) const {
  int cur = idx;
  for (int d = n; d > j; --d) cur = face[d][d][cur];
  for (int d = j; d >= 1; --d) cur = face[d][0][cur];
  return cur;
}

int TruncatedSSet::pullback_cell(int m, int idx, const Monotone& a) const {
  // a: [k] -> [m]; factor as mono . epi and walk the tables.
  auto [epi, mono] = epi_mono_factor(a);
  int j = int(mono.size()) - 1;
  // Mono part: drop the vertices of [m] missing from the image, top down.
  int cur = idx;
  int dim = m;
  std::vector<bool> in_image(m + 1, false);
  for (int v : mono) in_image[v] = true;
  for (int v = m; v >= 0; --v) {
    if (!in_image[v]) {
      // dropping top-down, every vertex below v is still present, so v sits
      // at position v in the current cell
      cur = face[dim][v][cur];
      --dim;
    }
  }
  assert(dim == j);
  // Epi part: repeat vertices bottom-up.
  // epi: [k] ->> [j]; build by inserting degeneracies recursively.
  std::function<int(const Monotone&, int, int)> apply_epi =
      [&](const Monotone& e, int d, int c) -> int {
    int kk = int(e.size()) - 1;
    if (kk == d) return c;  // identity
    for (int a2 = 0; a2 < kk; ++a2) {
      if (e[a2] == e[a2 + 1]) {
        Monotone e2;
        for (int t = 0; t <= kk; ++t)
          if (t != a2 + 1) e2.push_back(e[t]);
        int c2 = apply_epi(e2, d, c);
        return degen[kk - 1][a2][c2];
      }
    }
    assert(false);
    return c;
  };
  return apply_epi(epi, j, cur);
}

// ---------------------------------------------------------------------------
// validate

ValidationReport validate(const TruncatedSSet& S) {
  ValidationReport rep;
  auto bad = [&](const std::string& name, int dim, const std::string& id) {
    rep.ok = false;
    rep.violations.push_back({name, dim, id});
  };
  int L = S.trunc_level;
  if (L < 2) bad("trunc_level>=2", L, "");
  // Table shapes and ranges.
  for (int n = 1; n <= L; ++n)
    for (int i = 0; i <= n; ++i)
      for (int idx = 0; idx < S.num_cells(n); ++idx) {
        int f = S.face[n][i][idx];
        if (f < 0 || f >= S.num_cells(n - 1)) {
          bad("face-range", n, S.cell_id(n, idx));
          return rep;
        }
      }
  for (int n = 0; n < L; ++n)
    for (int i = 0; i <= n; ++i)
      for (int idx = 0; idx < S.num_cells(n); ++idx) {
        int s = S.degen[n][i][idx];
        if (s < 0 || s >= S.num_cells(n + 1)) {
          bad("degen-range", n, S.cell_id(n, idx));
          return rep;
        }
      }
  // d_i d_j = d_{j-1} d_i (i < j), on X_n for n >= 2.
  for (int n = 2; n <= L; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        for (int idx = 0; idx < S.num_cells(n); ++idx)
          if (S.face[n - 1][i][S.face[n][j][idx]] !=
              S.face[n - 1][j - 1][S.face[n][i][idx]])
            bad("d_i d_j = d_{j-1} d_i", n, S.cell_id(n, idx));
  // s_i s_j = s_{j+1} s_i (i <= j), on X_n with n + 2 <= L.
  for (int n = 0; n + 2 <= L; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        for (int idx = 0; idx < S.num_cells(n); ++idx)
          if (S.degen[n + 1][i][S.degen[n][j][idx]] !=
              S.degen[n + 1][j + 1][S.degen[n][i][idx]])
            bad("s_i s_j = s_{j+1} s_i", n, S.cell_id(n, idx));
  // d_i s_j relations on X_n, n + 1 <= L.
  for (int n = 0; n < L; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i)
        for (int idx = 0; idx < S.num_cells(n); ++idx) {
          int lhs = S.face[n + 1][i][S.degen[n][j][idx]];
          int rhs;
          if (i == j || i == j + 1) {
            rhs = idx;
            if (lhs != rhs) bad("d_j s_j = id", n, S.cell_id(n, idx));
            continue;
          }
          if (i < j) {
            if (n == 0) continue;  // s_{j-1} d_i needs n >= 1
            rhs = S.degen[n - 1][j - 1][S.face[n][i][idx]];
            if (lhs != rhs) bad("d_i s_j = s_{j-1} d_i", n, S.cell_id(n, idx));
          } else {  // i > j + 1
            if (n == 0) continue;
            rhs = S.degen[n - 1][j][S.face[n][i - 1][idx]];
            if (lhs != rhs) bad("d_i s_j = s_j d_{i-1}", n, S.cell_id(n, idx));
          }
        }
  // degenerate_flag must be exactly the image predicate of the degeneracies.
  std::vector<std::vector<bool>> img(L + 1);
  for (int n = 0; n <= L; ++n) img[n].assign(S.num_cells(n), false);
  for (int n = 0; n < L; ++n)
    for (int i = 0; i <= n; ++i)
      for (int idx = 0; idx < S.num_cells(n); ++idx)
        img[n + 1][S.degen[n][i][idx]] = true;
  for (int n = 0; n <= L; ++n)
    for (int idx = 0; idx < S.num_cells(n); ++idx)
      if (img[n][idx] != S.degenerate_flag[n][idx])
        bad("degenerate_flag", n, S.cell_id(n, idx));
  // Every degenerate cell decomposes; core must be nondegenerate.
  if (rep.ok) {
    for (int n = 1; n <= L; ++n)
      for (int idx = 0; idx < S.num_cells(n); ++idx)
        if (S.is_degenerate(n, idx)) {
          auto d = ez_core(S, n, idx);
          if (S.is_degenerate(d.core_dim, d.core_idx))
            bad("ez-core-nondegenerate", n, S.cell_id(n, idx));
        }
  }
  return rep;
}

ValidationReport validate_map(const SSetMap& f) {
  ValidationReport rep;
  auto bad = [&](const std::string& name, int dim, const std::string& id) {
    rep.ok = false;
    rep.violations.push_back({name, dim, id});
  };
  const auto& X = *f.source;
  const auto& Y = *f.target;
  if (X.trunc_level != Y.trunc_level) {
    bad("trunc-level-mismatch", X.trunc_level, "");
    return rep;
  }
  int L = X.trunc_level;
  for (int n = 0; n <= L; ++n) {
    if (int(f.level_maps[n].size()) != X.num_cells(n)) {
      bad("level-map-size", n, "");
      return rep;
    }
    for (int idx : f.level_maps[n])
      if (idx < 0 || idx >= Y.num_cells(n)) {
        bad("level-map-range", n, "");
        return rep;
      }
  }
  for (int n = 1; n <= L; ++n)
    for (int i = 0; i <= n; ++i)
      for (int idx = 0; idx < X.num_cells(n); ++idx)
        if (f.level_maps[n - 1][X.face[n][i][idx]] !=
            Y.face[n][i][f.level_maps[n][idx]])
          bad("commutes-with-face", n, X.cell_id(n, idx));
  for (int n = 0; n < L; ++n)
    for (int i = 0; i <= n; ++i)
      for (int idx = 0; idx < X.num_cells(n); ++idx)
        if (f.level_maps[n + 1][X.degen[n][i][idx]] !=
            Y.degen[n][i][f.level_maps[n][idx]])
          bad("commutes-with-degen", n, X.cell_id(n, idx));
  return rep;
}

SSetMap identity_map(const TruncatedSSet& X) {
  SSetMap f;
  f.source = &X;
  f.target = &X;
  f.level_maps.resize(X.trunc_level + 1);
  for (int n = 0; n <= X.trunc_level; ++n) {
    f.level_maps[n].resize(X.num_cells(n));
    for (int i = 0; i < X.num_cells(n); ++i) f.level_maps[n][i] = i;
  }
  return f;
}

std::optional<SSetMap> compose_maps(const SSetMap& g, const SSetMap& f) {
  if (f.target != g.source) return std::nullopt;
  SSetMap h;
  h.source = f.source;
  h.target = g.target;
  h.level_maps.resize(f.level_maps.size());
  for (size_t n = 0; n < f.level_maps.size(); ++n) {
    h.level_maps[n].resize(f.level_maps[n].size());
    for (size_t i = 0; i < f.level_maps[n].size(); ++i)
      h.level_maps[n][i] = g.level_maps[n][f.level_maps[n][i]];
  }
  return h;
}

// ---------------------------------------------------------------------------
// tuple-based constructors

static std::string tuple_id(const std::vector<int>& t) {
  std::string s;
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(t[i]);
  }
  return s;
}

TruncatedSSet from_support_predicate(
    int num_vertices, int L,
    const std::function<bool(const std::vector<int>&)>& has_face) {
  TruncatedSSet S;
  S.trunc_level = L;
  S.cells.resize(L + 1);
  S.face.resize(L + 1);
  S.degen.resize(L + 1);
  // enumerate monotone tuples per dimension whose support is a face
  std::vector<std::vector<std::vector<int>>> tuples(L + 1);
  for (int n = 0; n <= L; ++n) {
    std::vector<int> cur;
    std::function<void()> rec = [&]() {
      if (int(cur.size()) == n + 1) {
        std::vector<int> support;
        for (int v : cur)
          if (support.empty() || support.back() != v) support.push_back(v);
        if (has_face(support)) tuples[n].push_back(cur);
        return;
      }
      int lo = cur.empty() ? 0 : cur.back();
      for (int v = lo; v < num_vertices; ++v) {
        cur.push_back(v);
        rec();
        cur.pop_back();
      }
    };
    rec();
    for (auto& t : tuples[n]) S.cells[n].push_back(tuple_id(t));
  }
  std::vector<std::unordered_map<std::string, int>> idx(L + 1);
  for (int n = 0; n <= L; ++n)
    for (int i = 0; i < int(tuples[n].size()); ++i) idx[n][tuple_id(tuples[n][i])] = i;
  for (int n = 1; n <= L; ++n) {
    S.face[n].assign(n + 1, std::vector<int>(tuples[n].size()));
    for (int i = 0; i <= n; ++i)
      for (int c = 0; c < int(tuples[n].size()); ++c) {
        std::vector<int> t;
        for (int j = 0; j <= n; ++j)
          if (j != i) t.push_back(tuples[n][c][j]);
        S.face[n][i][c] = idx[n - 1].at(tuple_id(t));
      }
  }
  for (int n = 0; n < L; ++n) {
    S.degen[n].assign(n + 1, std::vector<int>(tuples[n].size()));
    for (int i = 0; i <= n; ++i)
      for (int c = 0; c < int(tuples[n].size()); ++c) {
        std::vector<int> t;
        for (int j = 0; j <= n; ++j) {
          t.push_back(tuples[n][c][j]);
          if (j == i) t.push_back(tuples[n][c][j]);
        }
        S.degen[n][i][c] = idx[n + 1].at(tuple_id(t));
      }
  }
  S.finalize();
  return S;
}

TruncatedSSet standard_simplex(int n, int L) {
  return from_support_predicate(n + 1, L, [](const std::vector<int>&) { return true; });
}

TruncatedSSet boundary(int n, int L) {
  return from_support_predicate(n + 1, L, [n](const std::vector<int>& s) {
    return int(s.size()) < n + 1;
  });
}

TruncatedSSet horn(int n, int k, int L) {
  if (k < 0 || k > n) throw std::invalid_argument("horn: k out of range");
  return from_support_predicate(n + 1, L, [n, k](const std::vector<int>& s) {
    // contained in some face d_j with j != k
    for (int j = 0; j <= n; ++j) {
      if (j == k) continue;
      bool misses = true;
      for (int v : s)
        if (v == j) misses = false;
      if (misses) return true;
    }
    return false;
  });
}

TruncatedSSet spine(int n, int L) {
  return from_support_predicate(n + 1, L, [](const std::vector<int>& s) {
    return s.back() - s.front() <= 1;
  });
}

TruncatedSSet product(const TruncatedSSet& X, const TruncatedSSet& Y) {
  if (X.trunc_level != Y.trunc_level)
    throw std::invalid_argument("product: truncation levels differ");
  int L = X.trunc_level;
  TruncatedSSet S;
  S.trunc_level = L;
  S.cells.resize(L + 1);
  S.face.resize(L + 1);
  S.degen.resize(L + 1);
  auto pid = [&](int n, int a, int b) {
    return "(" + X.cell_id(n, a) + "|" + Y.cell_id(n, b) + ")";
  };
  auto pidx = [&](const TruncatedSSet& A, int n, int a, int b) {
    return a * A.num_cells(n) + b;  // unused; kept simple below
  };
  (void)pidx;
  for (int n = 0; n <= L; ++n)
    for (int a = 0; a < X.num_cells(n); ++a)
      for (int b = 0; b < Y.num_cells(n); ++b) S.cells[n].push_back(pid(n, a, b));
  auto flat = [&](int n, int a, int b) { return a * Y.num_cells(n) + b; };
  for (int n = 1; n <= L; ++n) {
    S.face[n].assign(n + 1, std::vector<int>(S.cells[n].size()));
    for (int i = 0; i <= n; ++i)
      for (int a = 0; a < X.num_cells(n); ++a)
        for (int b = 0; b < Y.num_cells(n); ++b)
          S.face[n][i][flat(n, a, b)] =
              flat(n - 1, X.face[n][i][a], Y.face[n][i][b]);
  }
  for (int n = 0; n < L; ++n) {
    S.degen[n].assign(n + 1, std::vector<int>(S.cells[n].size()));
    for (int i = 0; i <= n; ++i)
      for (int a = 0; a < X.num_cells(n); ++a)
        for (int b = 0; b < Y.num_cells(n); ++b)
          S.degen[n][i][flat(n, a, b)] =
              flat(n + 1, X.degen[n][i][a], Y.degen[n][i][b]);
  }
  S.finalize();
  return S;
}

TruncatedSSet disjoint_union(const TruncatedSSet& X, const TruncatedSSet& Y) {
  if (X.trunc_level != Y.trunc_level)
    throw std::invalid_argument("disjoint_union: truncation levels differ");
  int L = X.trunc_level;
  TruncatedSSet S;
  S.trunc_level = L;
  S.cells.resize(L + 1);
  S.face.resize(L + 1);
  S.degen.resize(L + 1);
  for (int n = 0; n <= L; ++n) {
    for (int a = 0; a < X.num_cells(n); ++a) S.cells[n].push_back("L:" + X.cell_id(n, a));
    for (int b = 0; b < Y.num_cells(n); ++b) S.cells[n].push_back("R:" + Y.cell_id(n, b));
  }
  for (int n = 1; n <= L; ++n) {
    S.face[n].assign(n + 1, std::vector<int>(S.cells[n].size()));
    for (int i = 0; i <= n; ++i) {
      for (int a = 0; a < X.num_cells(n); ++a) S.face[n][i][a] = X.face[n][i][a];
      for (int b = 0; b < Y.num_cells(n); ++b)
        S.face[n][i][X.num_cells(n) + b] = X.num_cells(n - 1) + Y.face[n][i][b];
    }
  }
  for (int n = 0; n < L; ++n) {
    S.degen[n].assign(n + 1, std::vector<int>(S.cells[n].size()));
    for (int i = 0; i <= n; ++i) {
      for (int a = 0; a < X.num_cells(n); ++a) S.degen[n][i][a] = X.degen[n][i][a];
      for (int b = 0; b < Y.num_cells(n); ++b)
        S.degen[n][i][X.num_cells(n) + b] = X.num_cells(n + 1) + Y.degen[n][i][b];
    }
  }
  S.finalize();
  return S;
}

EzDecomposition ez_core(const TruncatedSSet& S, int n, int idx) {
  if (!S.is_degenerate(n, idx)) return {identity_monotone(n), n, idx};
  // find smallest i with some tau such that s_i(tau) = sigma
  for (int i = 0; i <= n - 1; ++i) {
    // s_i : X_{n-1} -> X_n at table degen[n-1][i]; invert via d_i (d_i s_i = id)
    int tau = S.face[n][i][idx];
    if (S.degen[n - 1][i][tau] == idx) {
      auto inner = ez_core(S, n - 1, tau);
      // epi = inner.epi . sigma_i where sigma_i: [n] ->> [n-1]
      Monotone sigma_i;
      for (int j = 0; j <= n; ++j) sigma_i.push_back(j <= i ? j : j - 1);
      return {compose_monotone(inner.epi, sigma_i), inner.core_dim, inner.core_idx};
    }
  }
  throw std::runtime_error("ez_core: degenerate cell with no degeneracy witness");
}

int edge_source(const TruncatedSSet& X, int e) { return X.face[1][1][e]; }
int edge_target(const TruncatedSSet& X, int e) { return X.face[1][0][e]; }

EdgeGraphInfo edge_graph_info(const TruncatedSSet& X) {
  EdgeGraphInfo info;
  int V = X.num_cells(0);
  std::vector<std::vector<int>> adj(V);
  std::vector<int> indeg(V, 0);
  for (int e = 0; e < X.num_cells(1); ++e) {
    if (X.is_degenerate(1, e)) continue;
    adj[edge_source(X, e)].push_back(edge_target(X, e));
    indeg[edge_target(X, e)]++;
  }
  // Kahn topological sort with longest path
  std::deque<int> q;
  for (int v = 0; v < V; ++v)
    if (indeg[v] == 0) q.push_back(v);
  std::vector<int> dist(V, 0);
  int seen = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    ++seen;
    for (int w : adj[v]) {
      dist[w] = std::max(dist[w], dist[v] + 1);
      if (--indeg[w] == 0) q.push_back(w);
    }
  }
  info.acyclic = (seen == V);
  info.longest_path = info.acyclic ? *std::max_element(dist.begin(), dist.end()) : 0;
  if (V == 0) info.longest_path = 0;
  return info;
}

}  // namespace hocat
