#include "hocat/localize.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hocat {

namespace {

std::string alpha_key(const Monotone& a) {
  std::string s;
  for (int v : a) {
    if (!s.empty()) s += ".";
    s += std::to_string(v);
  }
  return s;
}

}  // namespace

int SimplexCategory::object_of_cell(int dim, int idx) const {
  auto it = obj_index.find(std::to_string(dim) + ":" + X->cells[dim][idx]);
  return it == obj_index.end() ? -1 : it->second;
}

SimplexCategory simplex_category(const TruncatedSSet& X, int degenerate_cap) {
  SimplexCategory C;
  C.X = &X;
  for (int n = 0; n <= X.trunc_level; ++n)
    for (int i = 0; i < X.num_cells(n); ++i) {
      if (X.is_degenerate(n, i) && n > degenerate_cap) continue;
      std::string id = std::to_string(n) + ":" + X.cells[n][i];
      C.obj_index[id] = int(C.objects.size());
      C.objects.push_back({n, i, id});
    }
  for (int oy = 0; oy < int(C.objects.size()); ++oy) {
    const auto& y = C.objects[oy];
    for (int k = 0; k <= X.trunc_level; ++k)
      for (const Monotone& a : enumerate_monotone(k, y.dim)) {
        int pulled = X.pullback_cell(y.dim, y.idx, a);
        int ox = C.object_of_cell(k, pulled);
        if (ox < 0) continue;
        C.arrows.push_back({a, ox, oy, a.back() == y.dim,
                            C.objects[ox].id + "->" + y.id + ":" + alpha_key(a)});
      }
  }
  return C;
}

bool marking_ok(const SimplexCategory& C, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  std::map<std::tuple<int, int, std::string>, int> by_key;
  for (int a = 0; a < int(C.arrows.size()); ++a)
    by_key[{C.arrows[a].src, C.arrows[a].tgt, alpha_key(C.arrows[a].alpha)}] = a;
  for (const auto& o : C.objects) {
    auto it = by_key.find({C.obj_index.at(o.id), C.obj_index.at(o.id),
                           alpha_key(identity_monotone(o.dim))});
    if (it == by_key.end()) return fail("missing identity on " + o.id);
    if (!C.arrows[it->second].marked) return fail("identity not marked on " + o.id);
  }
  for (const auto& f : C.arrows)
    for (const auto& g : C.arrows) {
      if (f.tgt != g.src || !f.marked || !g.marked) continue;
      Monotone comp = compose_monotone(g.alpha, f.alpha);
      auto it = by_key.find({f.src, g.tgt, alpha_key(comp)});
      if (it == by_key.end())
        return fail("composite missing for " + f.id + " ; " + g.id);
      if (!C.arrows[it->second].marked)
        return fail("marked not closed under composition: " + f.id + " ; " + g.id);
    }
  return true;
}

PresentedCategory localize(const SimplexCategory& C, const LocalizeOptions& opt) {
  PresentedCategory L;
  Presentation& P = L.pres;
  for (const auto& o : C.objects) P.objects.push_back(o.id);
  int na = int(C.arrows.size());
  std::vector<int> rev_gen(na, -1);
  for (int a = 0; a < na; ++a)
    P.gens.push_back({"a:" + C.arrows[a].id, C.arrows[a].src, C.arrows[a].tgt});
  for (int a = 0; a < na; ++a)
    if (C.arrows[a].marked) {
      rev_gen[a] = int(P.gens.size());
      P.gens.push_back({"r:" + C.arrows[a].id, C.arrows[a].tgt, C.arrows[a].src});
    }
  std::map<std::tuple<int, int, std::string>, int> by_key;
  for (int a = 0; a < na; ++a)
    by_key[{C.arrows[a].src, C.arrows[a].tgt, alpha_key(C.arrows[a].alpha)}] = a;
  for (int f = 0; f < na; ++f)
    for (int g = 0; g < na; ++g) {
      if (C.arrows[f].tgt != C.arrows[g].src) continue;
      Monotone comp = compose_monotone(C.arrows[g].alpha, C.arrows[f].alpha);
      auto it = by_key.find({C.arrows[f].src, C.arrows[g].tgt, alpha_key(comp)});
      if (it == by_key.end())
        throw std::logic_error("simplex category not closed under composition");
      P.rels.push_back({{f, g}, {it->second}, C.arrows[f].src});
    }
  for (int a = 0; a < na; ++a)
    if (rev_gen[a] >= 0) {
      P.rels.push_back({{a, rev_gen[a]}, {}, C.arrows[a].src});
      P.rels.push_back({{rev_gen[a], a}, {}, C.arrows[a].tgt});
    }
  L.engine = knuth_bendix(P, opt.max_rules, opt.max_lhs);
  return L;
}

int count_loc_classes(const PresentedCategory& L, int a, int b, int word_len) {
  const Presentation& P = L.pres;
  std::vector<std::vector<int>> out(P.objects.size());
  for (int g = 0; g < int(P.gens.size()); ++g) out[P.gens[g].src].push_back(g);
  std::set<std::string> forms;
  long long visited = 0;
  std::vector<Word> frontier{{a, {}}};
  for (int len = 0; len <= word_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      if (++visited > 2000000)
        throw std::runtime_error("count_loc_classes: word budget exceeded");
      int tgt = P.word_tgt(w.gens, w.src);
      if (tgt == b) forms.insert(word_key(L.engine.normalize(P, w)));
      if (len == word_len) continue;
      for (int g : out[tgt]) {
        Word e = w;
        e.gens.push_back(g);
        next.push_back(std::move(e));
      }
    }
    frontier = std::move(next);
  }
  return int(forms.size());
}

ReducedLocalization localize_reduced(const TruncatedSSet& X, int max_word) {
  ReducedLocalization R;
  R.pres.objects = X.cells[0];
  std::map<std::tuple<int, int, int>, int> gen_of;
  for (int n = 1; n <= X.trunc_level; ++n)
    for (int t = 0; t < X.num_cells(n); ++t) {
      if (X.is_degenerate(n, t)) continue;
      for (int j = 0; j < n; ++j) {
        gen_of[{n, t, j}] = int(R.pres.gens.size());
        R.pres.gens.push_back({"g(" + X.cells[n][t] + "," + std::to_string(j) + ")",
                               X.vertex_of(n, t, j), X.vertex_of(n, t, n)});
        R.origin.push_back({n, t, j});
        R.gen_edge.push_back(X.pullback_cell(n, t, {j, n}));
      }
    }
  // generator of the long edge (j, dim) of an arbitrary cell; -1 = identity
  auto gfor = [&](int dim, int idx, int j) -> int {
    if (dim == 0) return -1;
    EzDecomposition ez = ez_core(X, dim, idx);
    int cj = ez.epi[j];
    if (cj == ez.core_dim) return -1;
    return gen_of.at({ez.core_dim, ez.core_idx, cj});
  };
  std::set<std::tuple<std::vector<int>, std::vector<int>, int>> seen;
  for (int m = 1; m <= X.trunc_level; ++m)
    for (int t = 0; t < X.num_cells(m); ++t) {
      if (X.is_degenerate(m, t)) continue;
      for (int k = 0; k <= X.trunc_level; ++k)
        for (const Monotone& a : enumerate_monotone(k, m)) {
          int s = X.pullback_cell(m, t, a);
          for (int j = 0; j <= k; ++j) {
            std::vector<int> lhs, rhs;
            if (int g = gfor(m, t, a[j]); g >= 0) lhs.push_back(g);
            if (int g = gfor(k, s, j); g >= 0) rhs.push_back(g);
            if (int g = gfor(m, t, a[k]); g >= 0) rhs.push_back(g);
            if (lhs == rhs) continue;
            int obj = X.vertex_of(m, t, a[j]);
            if (seen.insert({lhs, rhs, obj}).second)
              R.pres.rels.push_back({lhs, rhs, obj});
          }
        }
    }
  GenGraphInfo gi = gen_graph_info(R.pres);
  R.bound = max_word >= 0 ? max_word : (gi.acyclic ? gi.longest_path : 8);
  R.exact = gi.acyclic && R.bound >= gi.longest_path;
  R.sat = saturate(R.pres, {R.bound, false});
  return R;
}

LastVertexFunctor last_vertex_functor(const TruncatedSSet& X) {
  LastVertexFunctor F;
  F.C = simplex_category(X);
  F.h1 = h1_necklace(X);
  for (const auto& o : F.C.objects)
    F.obj_class.push_back(X.vertex_of(o.dim, o.idx, o.dim));
  for (const auto& a : F.C.arrows) {
    const auto& y = F.C.objects[a.tgt];
    int e = X.pullback_cell(y.dim, y.idx, {a.alpha.back(), y.dim});
    F.arrow_class.push_back(F.h1.class_of_edge_word(X, {-1, {e}}));
  }
  return F;
}

bool last_vertex_functor_ok(const LastVertexFunctor& F, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const TruncatedSSet& X = *F.C.X;
  const SimplexCategory& C = F.C;
  auto edge_of = [&](int a) {
    const auto& y = C.objects[C.arrows[a].tgt];
    return X.pullback_cell(y.dim, y.idx, {C.arrows[a].alpha.back(), y.dim});
  };
  for (int a = 0; a < int(C.arrows.size()); ++a) {
    if (!C.arrows[a].marked) continue;
    int v = F.obj_class[C.arrows[a].tgt];
    if (F.arrow_class[a] != F.h1.class_of_edge_word(X, {v, {}}))
      return fail("marked arrow not sent to an identity: " + C.arrows[a].id);
  }
  std::map<std::tuple<int, int, std::string>, int> by_key;
  for (int a = 0; a < int(C.arrows.size()); ++a)
    by_key[{C.arrows[a].src, C.arrows[a].tgt, alpha_key(C.arrows[a].alpha)}] = a;
  for (int f = 0; f < int(C.arrows.size()); ++f)
    for (int g = 0; g < int(C.arrows.size()); ++g) {
      if (C.arrows[f].tgt != C.arrows[g].src) continue;
      Monotone comp = compose_monotone(C.arrows[g].alpha, C.arrows[f].alpha);
      int h = by_key.at({C.arrows[f].src, C.arrows[g].tgt, alpha_key(comp)});
      EdgeWord pair{-1, {edge_of(f), edge_of(g)}};
      if (F.h1.mor_equal(X, {-1, {edge_of(h)}}, pair) != MorEqual::Yes)
        return fail("composition not respected: " + C.arrows[f].id + " ; " +
                    C.arrows[g].id);
    }
  return true;
}

CompareLocalizationReport compare_localization(const TruncatedSSet& X) {
  CompareLocalizationReport R;
  H1Result h1 = h1_necklace(X);
  SimplexCategory C = simplex_category(X);

  // (a) every object reaches a 0-simplex through marked zigzags
  {
    int n = int(C.objects.size());
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int v) {
      return parent[v] == v ? v : parent[v] = find(parent[v]);
    };
    for (const auto& a : C.arrows)
      if (a.marked) parent[find(a.src)] = find(a.tgt);
    std::set<int> vertex_comps;
    for (int i = 0; i < n; ++i)
      if (C.objects[i].dim == 0) vertex_comps.insert(find(i));
    R.marked_connectivity = true;
    for (int i = 0; i < n; ++i)
      if (!vertex_comps.count(find(i))) {
        R.marked_connectivity = false;
        R.detail = "object " + C.objects[i].id + " not marked-connected to a vertex";
      }
  }

  ReducedLocalization loc = localize_reduced(X);
  R.bound = loc.bound;
  R.conclusive = bool(h1.cat) && loc.exact;
  if (!h1.cat) R.detail = "h1 not materializable at this bound";
  else if (!loc.exact) R.detail = "localization saturation inexact";

  bool all_match = true;
  for (int x = 0; x < X.num_cells(0); ++x)
    for (int y = 0; y < X.num_cells(0); ++y) {
      std::vector<int> lc = loc.sat.hom_classes(loc.pres, x, y);
      std::vector<int> hc = h1.hom(x, y);
      std::set<int> image;
      bool ok = true;
      for (int c : lc) {
        const Word& w = loc.sat.words[loc.sat.class_rep[c]];
        EdgeWord ew{x, {}};
        for (int g : w.gens) ew.edges.push_back(loc.gen_edge[g]);
        int h = h1.class_of_edge_word(X, ew);
        if (h < 0 || !image.insert(h).second) ok = false;
      }
      ok = ok && image.size() == hc.size() && lc.size() == hc.size();
      R.rows.push_back({x, y, int(lc.size()), int(hc.size()), ok});
      all_match = all_match && ok;
    }
  R.equivalence = R.conclusive && R.marked_connectivity && all_match;
  return R;
}

std::string CompareLocalizationReport::table() const {
  std::ostringstream os;
  for (const auto& r : rows)
    os << "(" << r.x << "," << r.y << "), " << r.loc_classes << ", "
       << r.h1_classes << ", " << (r.match ? "yes" : "no") << "\n";
  os << (equivalence ? "equivalence certified" : "equivalence NOT certified")
     << " (bound=" << bound << ")";
  if (!detail.empty()) os << " [" << detail << "]";
  return os.str();
}

}  // namespace hocat
