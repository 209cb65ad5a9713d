#include "hocat/fincat.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace hocat {

std::vector<int> ExplicitFinCategory::hom(int a, int b) const {
  std::vector<int> out;
  for (int i = 0; i < num_arrows(); ++i)
    if (arrows[i].src == a && arrows[i].tgt == b) out.push_back(i);
  return out;
}

void ExplicitFinCategory::finalize() {
  obj_index.clear();
  arrow_index.clear();
  for (int i = 0; i < num_objects(); ++i) obj_index[objects[i]] = i;
  for (int i = 0; i < num_arrows(); ++i) arrow_index[arrows[i].id] = i;
}

ValidationReport validate_category(const ExplicitFinCategory& C) {
  ValidationReport rep;
  auto bad = [&](const std::string& name, const std::string& id) {
    rep.ok = false;
    rep.violations.push_back({name, 0, id});
  };
  int A = C.num_arrows();
  if (int(C.identity.size()) != C.num_objects()) {
    bad("identity-table-size", "");
    return rep;
  }
  if (int(C.comp.size()) != A) {
    bad("comp-table-size", "");
    return rep;
  }
  for (int o = 0; o < C.num_objects(); ++o) {
    int e = C.identity[o];
    if (e < 0 || e >= A || C.arrows[e].src != o || C.arrows[e].tgt != o)
      bad("identity-endpoints", C.objects[o]);
  }
  for (int g = 0; g < A; ++g)
    for (int f = 0; f < A; ++f) {
      int gf = C.comp[g][f];
      if (C.composable(g, f)) {
        if (gf < 0 || gf >= A || C.arrows[gf].src != C.arrows[f].src ||
            C.arrows[gf].tgt != C.arrows[g].tgt)
          bad("composite-endpoints", C.arrows[g].id + "." + C.arrows[f].id);
      } else if (gf != -1) {
        bad("composite-of-noncomposable", C.arrows[g].id + "." + C.arrows[f].id);
      }
    }
  if (!rep.ok) return rep;
  for (int f = 0; f < A; ++f) {
    if (C.comp[f][C.identity[C.arrows[f].src]] != f)
      bad("right-unit", C.arrows[f].id);
    if (C.comp[C.identity[C.arrows[f].tgt]][f] != f)
      bad("left-unit", C.arrows[f].id);
  }
  for (int h = 0; h < A; ++h)
    for (int g = 0; g < A; ++g) {
      if (!C.composable(h, g)) continue;
      for (int f = 0; f < A; ++f) {
        if (!C.composable(g, f)) continue;
        if (C.comp[C.comp[h][g]][f] != C.comp[h][C.comp[g][f]])
          bad("associativity",
              C.arrows[h].id + "." + C.arrows[g].id + "." + C.arrows[f].id);
      }
    }
  return rep;
}

ExplicitFinCategory product_category(const ExplicitFinCategory& C,
                                     const ExplicitFinCategory& D) {
  ExplicitFinCategory P;
  for (const auto& a : C.objects)
    for (const auto& b : D.objects) P.objects.push_back("(" + a + "|" + b + ")");
  auto obj = [&](int a, int b) { return a * D.num_objects() + b; };
  auto arr = [&](int f, int g) { return f * D.num_arrows() + g; };
  for (const auto& f : C.arrows)
    for (const auto& g : D.arrows)
      P.arrows.push_back({"(" + f.id + "|" + g.id + ")", obj(f.src, g.src),
                          obj(f.tgt, g.tgt)});
  P.identity.resize(P.num_objects());
  for (int a = 0; a < C.num_objects(); ++a)
    for (int b = 0; b < D.num_objects(); ++b)
      P.identity[obj(a, b)] = arr(C.identity[a], D.identity[b]);
  P.comp.assign(P.num_arrows(), std::vector<int>(P.num_arrows(), -1));
  for (int f = 0; f < C.num_arrows(); ++f)
    for (int g = 0; g < D.num_arrows(); ++g)
      for (int f2 = 0; f2 < C.num_arrows(); ++f2)
        for (int g2 = 0; g2 < D.num_arrows(); ++g2)
          if (C.composable(f, f2) && D.composable(g, g2))
            P.comp[arr(f, g)][arr(f2, g2)] = arr(C.comp[f][f2], D.comp[g][g2]);
  P.finalize();
  return P;
}

ExplicitFinCategory poset_category(int n,
                                   const std::function<bool(int, int)>& leq) {
  ExplicitFinCategory C;
  for (int i = 0; i < n; ++i) C.objects.push_back(std::to_string(i));
  std::vector<std::vector<int>> arrow_at(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (leq(a, b)) {
        arrow_at[a][b] = C.num_arrows();
        C.arrows.push_back({std::to_string(a) + "<=" + std::to_string(b), a, b});
      }
  C.identity.resize(n);
  for (int a = 0; a < n; ++a) C.identity[a] = arrow_at[a][a];
  C.comp.assign(C.num_arrows(), std::vector<int>(C.num_arrows(), -1));
  for (int g = 0; g < C.num_arrows(); ++g)
    for (int f = 0; f < C.num_arrows(); ++f)
      if (C.composable(g, f))
        C.comp[g][f] = arrow_at[C.arrows[f].src][C.arrows[g].tgt];
  C.finalize();
  return C;
}

ExplicitFinCategory free_category_on_quiver(
    int num_vertices,
    const std::vector<std::tuple<int, int, std::string>>& edges) {
  ExplicitFinCategory C;
  for (int i = 0; i < num_vertices; ++i) C.objects.push_back(std::to_string(i));
  // enumerate all paths (BFS by length); acyclicity keeps this finite
  struct Path {
    int src, tgt;
    std::vector<int> edge_seq;
  };
  std::vector<Path> paths;
  std::unordered_map<std::string, int> path_index;
  auto key = [](const Path& p) {
    std::string s = std::to_string(p.src) + ":";
    for (int e : p.edge_seq) s += std::to_string(e) + ",";
    return s;
  };
  for (int v = 0; v < num_vertices; ++v) paths.push_back({v, v, {}});
  size_t head = 0;
  while (head < paths.size()) {
    Path p = paths[head++];
    if (paths.size() > 100000)
      throw std::runtime_error("free_category_on_quiver: quiver not acyclic?");
    for (int e = 0; e < int(edges.size()); ++e) {
      if (std::get<0>(edges[e]) != p.tgt) continue;
      Path q = p;
      q.tgt = std::get<1>(edges[e]);
      q.edge_seq.push_back(e);
      paths.push_back(q);
    }
  }
  for (int i = 0; i < int(paths.size()); ++i) {
    std::string id;
    if (paths[i].edge_seq.empty()) {
      id = "id_" + std::to_string(paths[i].src);
    } else {
      for (int e : paths[i].edge_seq) {
        if (!id.empty()) id += ";";
        id += std::get<2>(edges[e]);
      }
    }
    C.arrows.push_back({id, paths[i].src, paths[i].tgt});
    path_index[key(paths[i])] = i;
  }
  C.identity.resize(num_vertices);
  for (int v = 0; v < num_vertices; ++v) C.identity[v] = v;
  C.comp.assign(C.num_arrows(), std::vector<int>(C.num_arrows(), -1));
  for (int g = 0; g < C.num_arrows(); ++g)
    for (int f = 0; f < C.num_arrows(); ++f)
      if (C.composable(g, f)) {
        Path comp{paths[f].src, paths[g].tgt, paths[f].edge_seq};
        comp.edge_seq.insert(comp.edge_seq.end(), paths[g].edge_seq.begin(),
                             paths[g].edge_seq.end());
        C.comp[g][f] = path_index.at(key(comp));
      }
  C.finalize();
  return C;
}

bool is_functor(const Functor& F) {
  const auto& C = *F.source;
  const auto& D = *F.target;
  for (int f = 0; f < C.num_arrows(); ++f) {
    int ff = F.arrow_map[f];
    if (D.arrows[ff].src != F.obj_map[C.arrows[f].src]) return false;
    if (D.arrows[ff].tgt != F.obj_map[C.arrows[f].tgt]) return false;
  }
  for (int o = 0; o < C.num_objects(); ++o)
    if (F.arrow_map[C.identity[o]] != D.identity[F.obj_map[o]]) return false;
  for (int g = 0; g < C.num_arrows(); ++g)
    for (int f = 0; f < C.num_arrows(); ++f)
      if (C.composable(g, f))
        if (F.arrow_map[C.comp[g][f]] !=
            D.comp[F.arrow_map[g]][F.arrow_map[f]])
          return false;
  return true;
}

std::pair<ExplicitFinCategory, Functor> slice_category_over(
    const ExplicitFinCategory& C, int c) {
  ExplicitFinCategory S;
  // objects: arrows into c
  std::vector<int> obj_arrow;
  for (int f = 0; f < C.num_arrows(); ++f)
    if (C.arrows[f].tgt == c) {
      obj_arrow.push_back(f);
      S.objects.push_back(C.arrows[f].id);
    }
  auto obj_of = [&](int f) {
    for (int i = 0; i < int(obj_arrow.size()); ++i)
      if (obj_arrow[i] == f) return i;
    return -1;
  };
  // arrows: (h, f, g) with g . h = f
  struct SA {
    int h, f, g;
  };
  std::vector<SA> sarrows;
  for (int i = 0; i < int(obj_arrow.size()); ++i)
    for (int j = 0; j < int(obj_arrow.size()); ++j) {
      int f = obj_arrow[i], g = obj_arrow[j];
      for (int h = 0; h < C.num_arrows(); ++h)
        if (C.arrows[h].src == C.arrows[f].src &&
            C.arrows[h].tgt == C.arrows[g].src && C.comp[g][h] == f) {
          sarrows.push_back({h, f, g});
          S.arrows.push_back({C.arrows[h].id + "/(" + C.arrows[f].id + "->" +
                                  C.arrows[g].id + ")",
                              i, j});
        }
    }
  auto sarrow_of = [&](int h, int f, int g) {
    for (int i = 0; i < int(sarrows.size()); ++i)
      if (sarrows[i].h == h && sarrows[i].f == f && sarrows[i].g == g) return i;
    return -1;
  };
  S.identity.resize(S.num_objects());
  for (int i = 0; i < int(obj_arrow.size()); ++i)
    S.identity[i] = sarrow_of(C.identity[C.arrows[obj_arrow[i]].src],
                              obj_arrow[i], obj_arrow[i]);
  S.comp.assign(S.num_arrows(), std::vector<int>(S.num_arrows(), -1));
  for (int b = 0; b < S.num_arrows(); ++b)
    for (int a = 0; a < S.num_arrows(); ++a)
      if (S.composable(b, a))
        S.comp[b][a] =
            sarrow_of(C.comp[sarrows[b].h][sarrows[a].h], sarrows[a].f,
                      sarrows[b].g);
  S.finalize();
  Functor P;
  P.source = nullptr;  // filled by caller after S is stored somewhere stable
  P.target = nullptr;
  P.obj_map.resize(S.num_objects());
  for (int i = 0; i < int(obj_arrow.size()); ++i)
    P.obj_map[i] = C.arrows[obj_arrow[i]].src;
  P.arrow_map.resize(S.num_arrows());
  for (int a = 0; a < S.num_arrows(); ++a) P.arrow_map[a] = sarrows[a].h;
  (void)obj_of;
  return {S, P};
}

bool is_isomorphism(const Functor& F) {
  if (!is_functor(F)) return false;
  const auto& C = *F.source;
  const auto& D = *F.target;
  if (C.num_objects() != D.num_objects() || C.num_arrows() != D.num_arrows())
    return false;
  std::vector<bool> ohit(D.num_objects(), false), ahit(D.num_arrows(), false);
  for (int o : F.obj_map) {
    if (ohit[o]) return false;
    ohit[o] = true;
  }
  for (int a : F.arrow_map) {
    if (ahit[a]) return false;
    ahit[a] = true;
  }
  return true;
}

TruncatedSSet nerve_of_category(const ExplicitFinCategory& C, int L) {
  TruncatedSSet S;
  S.trunc_level = L;
  S.cells.resize(L + 1);
  S.face.resize(L + 1);
  S.degen.resize(L + 1);
  // chains[n][idx] = arrow sequence f_1,...,f_n (composable); n = 0: object
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
  auto chain_id = [&](int n, const std::vector<int>& ch) {
    if (n == 0) return C.objects[ch[0]];
    std::string s;
    for (int f : ch) {
      if (!s.empty()) s += "|";
      s += C.arrows[f].id;
    }
    return s;
  };
  std::vector<std::unordered_map<std::string, int>> idx(L + 1);
  for (int n = 0; n <= L; ++n)
    for (int i = 0; i < int(chains[n].size()); ++i) {
      S.cells[n].push_back(chain_id(n, chains[n][i]));
      idx[n][S.cells[n].back()] = i;
    }
  for (int n = 1; n <= L; ++n) {
    S.face[n].assign(n + 1, std::vector<int>(chains[n].size()));
    for (int i = 0; i <= n; ++i)
      for (int c = 0; c < int(chains[n].size()); ++c) {
        const auto& ch = chains[n][c];
        std::vector<int> out;
        if (n == 1) {
          // d_0 = target, d_1 = source
          out = {i == 0 ? C.arrows[ch[0]].tgt : C.arrows[ch[0]].src};
        } else if (i == 0) {
          out.assign(ch.begin() + 1, ch.end());
        } else if (i == n) {
          out.assign(ch.begin(), ch.end() - 1);
        } else {
          out.assign(ch.begin(), ch.begin() + (i - 1));
          out.push_back(C.comp[ch[i]][ch[i - 1]]);
          out.insert(out.end(), ch.begin() + i + 1, ch.end());
        }
        S.face[n][i][c] = idx[n - 1].at(chain_id(n - 1, out));
      }
  }
  for (int n = 0; n < L; ++n) {
    S.degen[n].assign(n + 1, std::vector<int>(chains[n].size()));
    for (int i = 0; i <= n; ++i)
      for (int c = 0; c < int(chains[n].size()); ++c) {
        const auto& ch = chains[n][c];
        std::vector<int> out;
        if (n == 0) {
          out = {C.identity[ch[0]]};
        } else {
          // insert identity at vertex i of the chain
          int v = (i == 0) ? C.arrows[ch[0]].src : C.arrows[ch[i - 1]].tgt;
          out.assign(ch.begin(), ch.begin() + i);
          out.push_back(C.identity[v]);
          out.insert(out.end(), ch.begin() + i, ch.end());
        }
        S.degen[n][i][c] = idx[n + 1].at(chain_id(n + 1, out));
      }
  }
  S.finalize();
  return S;
}

SSetMap nerve_of_functor(const Functor& F, const TruncatedSSet& NC,
                         const TruncatedSSet& ND) {
  // By construction of the nerve, 0-cells are indexed like objects and
  // 1-cells like arrows; higher cells are recovered edge by edge.
  SSetMap f;
  f.source = &NC;
  f.target = &ND;
  int L = NC.trunc_level;
  f.level_maps.resize(L + 1);
  f.level_maps[0].resize(NC.num_cells(0));
  for (int c = 0; c < NC.num_cells(0); ++c) f.level_maps[0][c] = F.obj_map[c];
  f.level_maps[1].resize(NC.num_cells(1));
  for (int c = 0; c < NC.num_cells(1); ++c) f.level_maps[1][c] = F.arrow_map[c];
  const auto& D = *F.target;
  for (int n = 2; n <= L; ++n) {
    f.level_maps[n].resize(NC.num_cells(n));
    for (int c = 0; c < NC.num_cells(n); ++c) {
      // image chain: map each spine edge, then locate the target n-cell by its
      // id (arrow ids joined by '|'), matching nerve_of_category's naming
      std::string out;
      for (int j = 1; j <= n; ++j) {
        int e = NC.pullback_cell(n, c, Monotone{j - 1, j});
        if (!out.empty()) out += "|";
        out += D.arrows[F.arrow_map[e]].id;
      }
      f.level_maps[n][c] = ND.cell_index(n, out);
    }
  }
  return f;
}

}  // namespace hocat
