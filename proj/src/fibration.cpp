#include "hocat/fibration.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hocat {

namespace {

// composable arrow chains in nerve order; n = 0 entries hold the object
std::vector<std::vector<std::vector<int>>> nerve_chains(
    const ExplicitFinCategory& C, int L) {
  std::vector<std::vector<std::vector<int>>> chains(L + 1);
  for (int o = 0; o < C.num_objects(); ++o) chains[0].push_back({o});
  for (int n = 1; n <= L; ++n) {
    if (n == 1) {
      for (int f = 0; f < C.num_arrows(); ++f) chains[1].push_back({f});
    } else {
      for (const auto& ch : chains[n - 1])
        for (int f = 0; f < C.num_arrows(); ++f)
          if (C.arrows[f].src == C.arrows[ch.back()].tgt) {
            auto ext = ch;
            ext.push_back(f);
            chains[n].push_back(ext);
          }
    }
  }
  return chains;
}

std::string chain_id(const ExplicitFinCategory& C, int n,
                     const std::vector<int>& ch) {
  if (n == 0) return C.objects[ch[0]];
  std::string s;
  for (int f : ch) {
    if (!s.empty()) s += "|";
    s += C.arrows[f].id;
  }
  return s;
}

int chain_last_object(const ExplicitFinCategory& C, int n,
                      const std::vector<int>& ch) {
  return n == 0 ? ch[0] : C.arrows[ch.back()].tgt;
}

}  // namespace

ValidationReport validate_presheaf(const Presheaf& F) {
  ValidationReport rep;
  auto bad = [&](const std::string& name, const std::string& id) {
    rep.ok = false;
    rep.violations.push_back({name, 0, id});
  };
  const ExplicitFinCategory& C = *F.base;
  if (int(F.values.size()) != C.num_objects() ||
      int(F.action.size()) != C.num_arrows()) {
    bad("shape", "values/action size mismatch");
    return rep;
  }
  for (int a = 0; a < C.num_arrows(); ++a) {
    if (int(F.action[a].size()) != int(F.values[C.arrows[a].tgt].size()))
      bad("action-domain", C.arrows[a].id);
    for (int v : F.action[a])
      if (v < 0 || v >= int(F.values[C.arrows[a].src].size()))
        bad("action-range", C.arrows[a].id);
  }
  if (!rep.ok) return rep;
  for (int o = 0; o < C.num_objects(); ++o)
    for (int j = 0; j < int(F.values[o].size()); ++j)
      if (F.action[C.identity[o]][j] != j) bad("identity-action", C.objects[o]);
  for (int g = 0; g < C.num_arrows(); ++g)
    for (int f = 0; f < C.num_arrows(); ++f) {
      if (!C.composable(g, f)) continue;
      int h = C.comp[g][f];
      for (int j = 0; j < int(F.values[C.arrows[g].tgt].size()); ++j)
        if (F.action[h][j] != F.action[f][F.action[g][j]])
          bad("composition-action", C.arrows[g].id + "." + C.arrows[f].id);
    }
  return rep;
}

FibrationReport is_right_fibration(const SSetMap& p) {
  const TruncatedSSet& X = *p.source;
  const TruncatedSSet& Y = *p.target;
  if (X.trunc_level != Y.trunc_level)
    throw std::invalid_argument("is_right_fibration: truncation levels differ");
  FibrationReport rep;
  rep.levels_checked = X.trunc_level;
  for (int n = 1; n <= X.trunc_level; ++n) {
    std::map<std::pair<int, int>, int> hit;  // (d0 face, base cell) -> x
    for (int x = 0; x < X.num_cells(n); ++x) {
      std::pair<int, int> key{X.face[n][0][x], p.apply(n, x)};
      auto [it, fresh] = hit.emplace(key, x);
      if (!fresh) {
        rep.is_right_fib = false;
        rep.failures.push_back(
            {n, "not injective: " + X.cells[n][x] + " and " +
                    X.cells[n][it->second] + " share (d0, base)"});
      }
    }
    for (int a = 0; a < X.num_cells(n - 1); ++a)
      for (int b = 0; b < Y.num_cells(n); ++b) {
        if (p.apply(n - 1, a) != Y.face[n][0][b]) continue;
        if (!hit.count({a, b})) {
          rep.is_right_fib = false;
          rep.failures.push_back({n, "not surjective: no lift of (" +
                                         X.cells[n - 1][a] + ", " +
                                         Y.cells[n][b] + ")"});
        }
      }
  }
  return rep;
}

bool is_levelwise_bijection(const SSetMap& f) {
  for (int n = 0; n <= f.source->trunc_level; ++n) {
    if (f.source->num_cells(n) != f.target->num_cells(n)) return false;
    std::vector<bool> hit(f.target->num_cells(n), false);
    for (int x = 0; x < f.source->num_cells(n); ++x) {
      int y = f.apply(n, x);
      if (hit[y]) return false;
      hit[y] = true;
    }
  }
  return true;
}

bool is_natural(const Presheaf& F, const Presheaf& G,
                const std::vector<std::vector<int>>& phi) {
  const ExplicitFinCategory& C = *F.base;
  for (int o = 0; o < C.num_objects(); ++o)
    if (phi[o].size() != F.values[o].size()) return false;
  for (int a = 0; a < C.num_arrows(); ++a) {
    int s = C.arrows[a].src, t = C.arrows[a].tgt;
    for (int j = 0; j < int(F.values[t].size()); ++j)
      if (phi[s][F.action[a][j]] != G.action[a][phi[t][j]]) return false;
  }
  return true;
}

SSetMap unstraighten_morphism(const Presheaf& F, const Presheaf& G,
                              const std::vector<std::vector<int>>& phi,
                              const Unstraightened& UF,
                              const Unstraightened& UG) {
  if (!is_natural(F, G, phi))
    throw std::invalid_argument("unstraighten_morphism: phi is not natural");
  const ExplicitFinCategory& C = *F.base;
  SSetMap f;
  f.source = &UF.total;
  f.target = &UG.total;
  int L = UF.total.trunc_level;
  f.level_maps.resize(L + 1);
  for (int n = 0; n <= L; ++n)
    for (int t = 0; t < UF.total.num_cells(n); ++t) {
      const std::string& id = UF.total.cells[n][t];
      size_t at = id.rfind('@');
      std::string chain = id.substr(0, at), val = id.substr(at + 1);
      int nc = UF.projection.apply(n, t);
      // last object of the chain = d0^n in the nerve
      int v = nc;
      for (int k = n; k >= 1; --k) v = UF.nerve.face[k][0][v];
      int obj = v;
      int x = -1;
      for (int j = 0; j < int(F.values[obj].size()); ++j)
        if (F.values[obj][j] == val) x = j;
      (void)C;
      f.level_maps[n].push_back(
          UG.total.cell_index(n, chain + "@" + G.values[obj][phi[obj][x]]));
    }
  return f;
}

F0Report f0_criterion(const SSetMap& p, const SSetMap& q, const SSetMap& f) {
  F0Report rep;
  auto pre_fail = [&](const std::string& msg) {
    rep.preconditions_ok = false;
    rep.detail = msg;
    return rep;
  };
  if (f.source != p.source || f.target != q.source || p.target != q.target)
    return pre_fail("f is not a map over the common base");
  if (!is_right_fibration(p).is_right_fib) return pre_fail("p is not a right fibration");
  if (!is_right_fibration(q).is_right_fib) return pre_fail("q is not a right fibration");
  for (int n = 0; n <= p.source->trunc_level; ++n)
    for (int x = 0; x < p.source->num_cells(n); ++x)
      if (q.apply(n, f.apply(n, x)) != p.apply(n, x))
        return pre_fail("q . f != p at level " + std::to_string(n));

  const TruncatedSSet& X = *p.source;
  auto bijective = [&](int n) {
    if (X.num_cells(n) != q.source->num_cells(n)) return false;
    std::vector<bool> hit(q.source->num_cells(n), false);
    for (int x = 0; x < X.num_cells(n); ++x) {
      if (hit[f.apply(n, x)]) return false;
      hit[f.apply(n, x)] = true;
    }
    return true;
  };
  rep.f0_bijection = bijective(0);
  rep.levelwise_bijection = true;
  for (int n = 0; n <= X.trunc_level; ++n)
    rep.levelwise_bijection = rep.levelwise_bijection && bijective(n);
  // f_n is the base change of f_{n-1}: determined by its d0 face and base cell
  rep.reconstruction_ok = true;
  for (int n = 1; n <= X.trunc_level; ++n)
    for (int x = 0; x < X.num_cells(n); ++x) {
      int fx = f.apply(n, x);
      if (q.source->face[n][0][fx] != f.apply(n - 1, X.face[n][0][x]) ||
          q.apply(n, fx) != p.apply(n, x))
        rep.reconstruction_ok = false;
    }
  rep.consistent = rep.f0_bijection == rep.levelwise_bijection;
  return rep;
}

Unstraightened unstraighten(const ExplicitFinCategory& C, const Presheaf& F,
                            int L) {
  ValidationReport v = validate_presheaf(F);
  if (!v.ok) throw std::invalid_argument("unstraighten: invalid presheaf");
  Unstraightened U;
  U.nerve = nerve_of_category(C, L);
  auto chains = nerve_chains(C, L);

  TruncatedSSet& T = U.total;
  T.trunc_level = L;
  T.cells.resize(L + 1);
  T.face.resize(L + 1);
  T.degen.resize(L + 1);
  // cell = (chain, element of F at the chain's last object)
  std::vector<std::vector<std::pair<int, int>>> cell_of(L + 1);
  std::vector<std::map<std::pair<int, int>, int>> idx(L + 1);
  auto total_id = [&](int n, int c, int x) {
    int obj = chain_last_object(C, n, chains[n][c]);
    return chain_id(C, n, chains[n][c]) + "@" + F.values[obj][x];
  };
  std::vector<std::unordered_map<std::string, int>> chain_idx(L + 1);
  for (int n = 0; n <= L; ++n) {
    for (int c = 0; c < int(chains[n].size()); ++c) {
      chain_idx[n][chain_id(C, n, chains[n][c])] = c;
      int obj = chain_last_object(C, n, chains[n][c]);
      for (int x = 0; x < int(F.values[obj].size()); ++x) {
        idx[n][{c, x}] = int(cell_of[n].size());
        cell_of[n].push_back({c, x});
        T.cells[n].push_back(total_id(n, c, x));
      }
    }
  }
  for (int n = 1; n <= L; ++n) {
    T.face[n].assign(n + 1, std::vector<int>(cell_of[n].size()));
    for (int i = 0; i <= n; ++i)
      for (int t = 0; t < int(cell_of[n].size()); ++t) {
        auto [c, x] = cell_of[n][t];
        const auto& ch = chains[n][c];
        std::vector<int> out;
        int xo = x;
        if (n == 1) {
          out = {i == 0 ? C.arrows[ch[0]].tgt : C.arrows[ch[0]].src};
          if (i == 1) xo = F.action[ch[0]][x];
        } else if (i == 0) {
          out.assign(ch.begin() + 1, ch.end());
        } else if (i == n) {
          out.assign(ch.begin(), ch.end() - 1);
          xo = F.action[ch[n - 1]][x];
        } else {
          out.assign(ch.begin(), ch.begin() + (i - 1));
          out.push_back(C.comp[ch[i]][ch[i - 1]]);
          out.insert(out.end(), ch.begin() + i + 1, ch.end());
        }
        int oc = chain_idx[n - 1].at(chain_id(C, n - 1, out));
        T.face[n][i][t] = idx[n - 1].at({oc, xo});
      }
  }
  for (int n = 0; n < L; ++n) {
    T.degen[n].assign(n + 1, std::vector<int>(cell_of[n].size()));
    for (int i = 0; i <= n; ++i)
      for (int t = 0; t < int(cell_of[n].size()); ++t) {
        auto [c, x] = cell_of[n][t];
        const auto& ch = chains[n][c];
        std::vector<int> out;
        if (n == 0) {
          out = {C.identity[ch[0]]};
        } else {
          int v = (i == 0) ? C.arrows[ch[0]].src : C.arrows[ch[i - 1]].tgt;
          out.assign(ch.begin(), ch.begin() + i);
          out.push_back(C.identity[v]);
          out.insert(out.end(), ch.begin() + i, ch.end());
        }
        int oc = chain_idx[n + 1].at(chain_id(C, n + 1, out));
        T.degen[n][i][t] = idx[n + 1].at({oc, x});
      }
  }
  T.finalize();
  U.projection.source = &U.total;
  U.projection.target = &U.nerve;
  U.projection.level_maps.resize(L + 1);
  for (int n = 0; n <= L; ++n)
    for (auto [c, x] : cell_of[n]) {
      (void)x;
      U.projection.level_maps[n].push_back(
          U.nerve.cell_index(n, chain_id(C, n, chains[n][c])));
    }
  return U;
}

Presheaf straighten(const SSetMap& p, const ExplicitFinCategory& C) {
  const TruncatedSSet& X = *p.source;
  const TruncatedSSet& Y = *p.target;
  if (Y.num_cells(0) != C.num_objects() || Y.num_cells(1) != C.num_arrows())
    throw std::invalid_argument("straighten: target is not the nerve of C");
  for (int o = 0; o < C.num_objects(); ++o)
    if (Y.cells[0][o] != C.objects[o])
      throw std::invalid_argument("straighten: target is not the nerve of C");
  for (int a = 0; a < C.num_arrows(); ++a)
    if (Y.cells[1][a] != C.arrows[a].id)
      throw std::invalid_argument("straighten: target is not the nerve of C");
  if (!is_right_fibration(p).is_right_fib)
    throw std::invalid_argument("straighten: p is not a right fibration");

  Presheaf F;
  F.base = &C;
  F.values.resize(C.num_objects());
  std::vector<std::vector<int>> fiber(C.num_objects());
  std::vector<std::pair<int, int>> place(X.num_cells(0));  // vertex -> (obj, pos)
  for (int v = 0; v < X.num_cells(0); ++v) {
    int c = p.apply(0, v);
    place[v] = {c, int(fiber[c].size())};
    fiber[c].push_back(v);
    F.values[c].push_back(X.cells[0][v]);
  }
  F.action.resize(C.num_arrows());
  for (int a = 0; a < C.num_arrows(); ++a) {
    int tgt = C.arrows[a].tgt;
    for (int v : fiber[tgt]) {
      int lift = -1;
      for (int e = 0; e < X.num_cells(1); ++e)
        if (X.face[1][0][e] == v && p.apply(1, e) == a) {
          if (lift >= 0)
            throw std::invalid_argument("straighten: non-unique edge lift");
          lift = e;
        }
      if (lift < 0) throw std::invalid_argument("straighten: missing edge lift");
      int src = X.face[1][1][lift];
      if (place[src].first != C.arrows[a].src)
        throw std::invalid_argument("straighten: lift lands in the wrong fiber");
      F.action[a].push_back(place[src].second);
    }
  }
  return F;
}

bool presheaves_isomorphic(const Presheaf& F, const Presheaf& G,
                           std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const ExplicitFinCategory& C = *F.base;
  if (G.base->num_objects() != C.num_objects() ||
      G.base->num_arrows() != C.num_arrows())
    return fail("bases differ");
  for (int o = 0; o < C.num_objects(); ++o)
    if (F.values[o].size() != G.values[o].size())
      return fail("value cardinalities differ at " + C.objects[o]);

  std::vector<std::vector<int>> phi(C.num_objects());
  std::function<bool(int)> place = [&](int o) -> bool {
    if (o == C.num_objects()) return true;
    int k = int(F.values[o].size());
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    do {
      phi[o] = perm;
      bool ok = true;
      for (int a = 0; a < C.num_arrows() && ok; ++a) {
        int s = C.arrows[a].src, t = C.arrows[a].tgt;
        if (s > o || t > o) continue;
        for (int j = 0; j < int(F.values[t].size()) && ok; ++j)
          if (phi[s][F.action[a][j]] != G.action[a][phi[t][j]]) ok = false;
      }
      if (ok && place(o + 1)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    phi[o].clear();
    return false;
  };
  if (!place(0)) return fail("no equivariant family of bijections exists");
  return true;
}

SSetMap unstraighten_comparison(const SSetMap& p, const Unstraightened& U) {
  const TruncatedSSet& X = *p.source;
  SSetMap cmp;
  cmp.source = p.source;
  cmp.target = &U.total;
  cmp.level_maps.resize(X.trunc_level + 1);
  for (int n = 0; n <= X.trunc_level; ++n)
    for (int x = 0; x < X.num_cells(n); ++x) {
      int v = x;
      for (int k = n; k >= 1; --k) v = X.face[k][0][v];
      std::string id =
          p.target->cells[n][p.apply(n, x)] + "@" + X.cells[0][v];
      cmp.level_maps[n].push_back(U.total.cell_index(n, id));
    }
  return cmp;
}

bool roundtrip_presheaf_ok(const ExplicitFinCategory& C, const Presheaf& F,
                           std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  Unstraightened U = unstraighten(C, F, 3);
  if (!is_right_fibration(U.projection).is_right_fib)
    return fail("unstraightened projection is not a right fibration");
  Presheaf G = straighten(U.projection, C);
  // fiber enumeration follows value order, so the canonical bijection is the
  // identity on indices
  for (int o = 0; o < C.num_objects(); ++o)
    if (G.values[o].size() != F.values[o].size())
      return fail("round trip changed a fiber size at " + C.objects[o]);
  if (G.action != F.action)
    return presheaves_isomorphic(F, G, why);
  return true;
}

bool roundtrip_fibration_ok(const SSetMap& p, const ExplicitFinCategory& C,
                            std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  Presheaf F = straighten(p, C);
  Unstraightened U = unstraighten(C, F, p.source->trunc_level);
  SSetMap cmp = unstraighten_comparison(p, U);
  if (!validate_map(cmp).ok) return fail("comparison is not simplicial");
  if (!is_levelwise_bijection(cmp)) return fail("comparison is not a bijection");
  for (int n = 0; n <= p.source->trunc_level; ++n)
    for (int x = 0; x < p.source->num_cells(n); ++x)
      if (U.nerve.cells[n][U.projection.apply(n, cmp.apply(n, x))] !=
          p.target->cells[n][p.apply(n, x)])
        return fail("comparison does not commute with the projections");
  return true;
}

}  // namespace hocat
