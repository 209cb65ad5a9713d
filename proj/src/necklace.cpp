#include "hocat/necklace.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hocat {

int Necklace::total() const { return std::accumulate(beads.begin(), beads.end(), 0); }

std::vector<int> Necklace::joints() const {
  std::vector<int> js{0};
  for (int b : beads) js.push_back(js.back() + b);
  return js;
}

std::string necklace_literal(const Necklace& N) {
  if (N.beads.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < N.beads.size(); ++i) {
    if (i) s += 'v';
    s += std::to_string(N.beads[i]);
  }
  return s;
}

std::optional<Necklace> parse_necklace(const std::string& s) {
  if (s == "0") return Necklace{};
  Necklace N;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t v = s.find('v', pos);
    std::string part = s.substr(pos, v == std::string::npos ? std::string::npos : v - pos);
    try {
      int b = std::stoi(part);
      if (b < 1) return std::nullopt;
      N.beads.push_back(b);
    } catch (...) {
      return std::nullopt;
    }
    if (v == std::string::npos) break;
    pos = v + 1;
  }
  if (N.beads.empty()) return std::nullopt;
  return N;
}

Necklace concat(const Necklace& A, const Necklace& B) {
  Necklace C = A;
  C.beads.insert(C.beads.end(), B.beads.begin(), B.beads.end());
  return C;
}

bool is_very_thin(const Necklace& N) {
  return std::all_of(N.beads.begin(), N.beads.end(), [](int b) { return b == 1; });
}

bool is_thin(const Necklace& N) {
  int twos = 0;
  for (int b : N.beads) {
    if (b > 2) return false;
    if (b == 2) ++twos;
  }
  return twos <= 1;
}

bool bead_containment_ok(const Necklace& src, const Necklace& tgt,
                         const Monotone& vm) {
  auto tj = tgt.joints();
  auto sj = src.joints();
  for (size_t i = 0; i + 1 < sj.size(); ++i) {
    int lo = vm[sj[i]], hi = vm[sj[i + 1]];
    bool ok = false;
    for (size_t j = 0; j + 1 < tj.size(); ++j)
      if (tj[j] <= lo && hi <= tj[j + 1]) ok = true;
    if (tgt.beads.empty()) ok = (lo == 0 && hi == 0);
    if (!ok) return false;
  }
  return true;
}

std::vector<NecklaceMap> hom_set(const Necklace& N, const Necklace& M) {
  std::vector<NecklaceMap> out;
  int Ts = N.total(), Tt = M.total();
  auto sj = N.joints();
  auto tj = M.joints();
  Monotone vm(Ts + 1);
  // DFS with per-bead containment pruning at source joints
  std::function<void(int)> rec = [&](int pos) {
    if (pos > Ts) {
      out.push_back({N, M, vm});
      return;
    }
    int lo = (pos == 0) ? 0 : vm[pos - 1];
    int hi = (pos == Ts) ? Tt : Tt;
    for (int v = lo; v <= hi; ++v) {
      if (pos == 0 && v != 0) break;
      if (pos == Ts && v != Tt) continue;
      vm[pos] = v;
      // if pos is a source joint, the bead just completed must fit
      bool joint = std::find(sj.begin(), sj.end(), pos) != sj.end();
      if (joint && pos > 0) {
        // find the bead ending at pos
        int bi = int(std::find(sj.begin(), sj.end(), pos) - sj.begin()) - 1;
        int a = vm[sj[bi]], b = v;
        bool fits = false;
        for (size_t j = 0; j + 1 < tj.size(); ++j)
          if (tj[j] <= a && b <= tj[j + 1]) fits = true;
        if (M.beads.empty()) fits = (a == 0 && b == 0);
        if (!fits) continue;
      }
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

NecklaceMap identity_necklace_map(const Necklace& N) {
  return {N, N, identity_monotone(N.total())};
}

std::optional<NecklaceMap> compose(const NecklaceMap& g, const NecklaceMap& f) {
  if (!(f.target == g.source)) return std::nullopt;
  return NecklaceMap{f.source, g.target, compose_monotone(g.vertex_map, f.vertex_map)};
}

TruncatedSSet realize(const Necklace& N, int L) {
  int T = N.total();
  auto js = N.joints();
  return from_support_predicate(T + 1, L, [js](const std::vector<int>& s) {
    int lo = s.front(), hi = s.back();
    for (size_t j = 0; j + 1 < js.size(); ++j)
      if (js[j] <= lo && hi <= js[j + 1]) return true;
    return js.size() == 1 && lo == 0 && hi == 0;  // the point
  });
}

SegalifyNecklaceResult segalify_necklace(const Necklace& N, int L) {
  SegalifyNecklaceResult R;
  R.total = N.total();
  R.source = realize(N, L);
  R.target = standard_simplex(R.total, L);
  R.inclusion.source = &R.source;
  R.inclusion.target = &R.target;
  R.inclusion.level_maps.resize(L + 1);
  for (int n = 0; n <= L; ++n) {
    R.inclusion.level_maps[n].resize(R.source.num_cells(n));
    for (int c = 0; c < R.source.num_cells(n); ++c)
      R.inclusion.level_maps[n][c] = R.target.cell_index(n, R.source.cell_id(n, c));
  }
  return R;
}

JoinResult J(const std::vector<Necklace>& Ms) {
  if (Ms.empty()) throw std::invalid_argument("J: empty necklace list");
  JoinResult R;
  R.anchor.push_back(0);
  for (const auto& M : Ms) {
    R.necklace = concat(R.necklace, M);
    R.anchor.push_back(R.anchor.back() + M.total());
  }
  return R;
}

std::vector<Necklace> JR(const Necklace& N, const Monotone& alpha) {
  if (!is_monotone(alpha) || alpha.empty() || alpha.front() != 0 ||
      alpha.back() != N.total())
    throw std::invalid_argument("JR: alpha not monotone endpoint-preserving");
  auto js = N.joints();
  std::vector<Necklace> out;
  for (size_t j = 0; j + 1 < alpha.size(); ++j) {
    int lo = alpha[j], hi = alpha[j + 1];
    Necklace piece;
    for (size_t b = 0; b + 1 < js.size(); ++b) {
      int a = std::max(js[b], lo), c = std::min(js[b + 1], hi);
      if (c - a >= 1) piece.beads.push_back(c - a);
    }
    out.push_back(piece);
  }
  return out;
}

std::vector<Necklace> necklaces_with_total(int T) {
  std::vector<Necklace> out;
  if (T == 0) {
    out.push_back({});
    return out;
  }
  std::function<void(int, Necklace&)> rec = [&](int rem, Necklace& cur) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int b = 1; b <= rem; ++b) {
      cur.beads.push_back(b);
      rec(rem - b, cur);
      cur.beads.pop_back();
    }
  };
  Necklace cur;
  rec(T, cur);
  return out;
}

std::vector<Necklace> necklaces_up_to(int bound) {
  std::vector<Necklace> out;
  for (int T = 0; T <= bound; ++T) {
    auto v = necklaces_with_total(T);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// slices

namespace {

// local coordinates of a source bead image inside a target bead
Monotone relative_map(const Monotone& vm, int a, int b, int joint_lo) {
  Monotone out;
  for (int t = a; t <= b; ++t) out.push_back(vm[t] - joint_lo);
  return out;
}

}  // namespace

SliceGraph slice_category(const TruncatedSSet& X, int x, int y, int bound) {
  SliceGraph G;
  G.bound = bound;
  int L = X.trunc_level;
  for (const auto& N : necklaces_up_to(bound)) {
    if (N.beads.empty()) {
      if (x == y) G.objects.push_back({N, {}, x});
      continue;
    }
    if (*std::max_element(N.beads.begin(), N.beads.end()) > L) {
      G.omitted.push_back(N);
      continue;
    }
    // enumerate bead cell tuples with matching endpoints
    std::vector<int> cellsel(N.beads.size());
    std::function<void(size_t, int)> rec = [&](size_t i, int from) {
      if (i == N.beads.size()) {
        if (from == y) G.objects.push_back({N, cellsel, -1});
        return;
      }
      int n = N.beads[i];
      for (int c = 0; c < X.num_cells(n); ++c) {
        if (X.vertex_of(n, c, 0) != from) continue;
        cellsel[i] = c;
        rec(i + 1, X.vertex_of(n, c, n));
      }
    };
    rec(0, x);
  }
  // edges: necklace maps over X. Hom sets depend only on the shapes, so the
  // cache persists across calls.
  static thread_local std::map<std::pair<std::vector<int>, std::vector<int>>,
                               std::vector<NecklaceMap>>
      hom_cache;
  auto homs = [&](const Necklace& A, const Necklace& B) -> const std::vector<NecklaceMap>& {
    auto key = std::make_pair(A.beads, B.beads);
    auto it = hom_cache.find(key);
    if (it == hom_cache.end()) it = hom_cache.emplace(key, hom_set(A, B)).first;
    return it->second;
  };
  auto anchor_vertex = [&](const SliceObject& O, int v) {
    // vertex v of realize(N) mapped into X
    if (O.necklace.beads.empty()) return O.base_vertex;
    auto js = O.necklace.joints();
    for (size_t b = 0; b + 1 < js.size(); ++b)
      if (js[b] <= v && v <= js[b + 1])
        return X.vertex_of(O.necklace.beads[b], O.bead_cells[b], v - js[b]);
    return -1;
  };
  (void)anchor_vertex;
  // pi0 is all downstream consumers need, so a spanning set of edges
  // suffices: pairs already connected are skipped
  std::vector<int> parent(G.objects.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  // Inverted edge scan: group objects by necklace shape, then for each
  // necklace map h: N -> M pull the anchor of every M-object back along h and
  // look the result up directly. This avoids the quadratic object-pair scan.
  std::map<std::vector<int>, std::vector<int>> by_shape;  // beads -> obj ids
  // per shape: anchor -> object id
  std::map<std::vector<int>, std::map<std::vector<int>, int>> at;
  for (int i = 0; i < int(G.objects.size()); ++i) {
    const auto& O = G.objects[i];
    by_shape[O.necklace.beads].push_back(i);
    std::vector<int> anchor =
        O.necklace.beads.empty() ? std::vector<int>{O.base_vertex} : O.bead_cells;
    at[O.necklace.beads][anchor] = i;
  }
  int components = int(G.objects.size());
  for (const auto& [nb, _ids] : by_shape) {
    if (components <= 1) break;
    Necklace N{nb};
    auto sj = N.joints();
    const auto& atN = at[nb];
    for (const auto& [mb, mids] : by_shape) {
      if (components <= 1) break;
      Necklace M{mb};
      auto tj = M.joints();
      for (const auto& h : homs(N, M)) {
        if (components <= 1) break;
        for (int oj : mids) {
          const auto& O = G.objects[oj];
          std::vector<int> anchor;
          if (N.beads.empty()) {
            // the point pulls back to the source vertex of the anchor
            anchor = {x};
          } else {
            bool ok = true;
            for (size_t b = 0; ok && b + 1 < sj.size(); ++b) {
              int a0 = h.vertex_map[sj[b]], a1 = h.vertex_map[sj[b + 1]];
              if (M.beads.empty()) {
                int cell = O.base_vertex;
                for (int d = 0; d < N.beads[b]; ++d) cell = X.degen[d][0][cell];
                anchor.push_back(cell);
                continue;
              }
              int tb = -1;
              for (size_t t = 0; t + 1 < tj.size(); ++t)
                if (tj[t] <= a0 && a1 <= tj[t + 1]) {
                  tb = int(t);
                  break;
                }
              if (tb < 0) {
                ok = false;
                break;
              }
              Monotone rel = relative_map(h.vertex_map, sj[b], sj[b + 1], tj[tb]);
              anchor.push_back(
                  X.pullback_cell(M.beads[tb], O.bead_cells[tb], rel));
            }
            if (!ok) continue;
          }
          auto it = atN.find(anchor);
          if (it == atN.end()) continue;
          int ra = find(it->second), rb = find(oj);
          if (ra == rb) continue;
          parent[ra] = rb;
          --components;
          G.edges.push_back({it->second, oj});
          if (components <= 1) break;
        }
      }
    }
  }
  return G;
}

Pi0Result pi0(int num_objects, const std::vector<std::pair<int, int>>& edges) {
  Pi0Result R;
  std::vector<int> parent(num_objects);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (auto [a, b] : edges) parent[find(a)] = find(b);
  std::map<int, int> label;
  R.component.resize(num_objects);
  for (int i = 0; i < num_objects; ++i) {
    int r = find(i);
    auto it = label.find(r);
    if (it == label.end()) it = label.emplace(r, int(label.size())).first;
    R.component[i] = it->second;
  }
  R.num_components = int(label.size());
  return R;
}

Pi0Result pi0(const SliceGraph& g) { return pi0(int(g.objects.size()), g.edges); }

SiftedReport sifted_witness(const Necklace& A, const Necklace& B, int bound) {
  SiftedReport rep;
  rep.bound = bound;
  // Objects of the joint cosieve: (N, f: N -> A, g: N -> B) for necklaces N
  // of total <= bound. Per shape, objects are addressed arithmetically as
  // offset + fa_index * |hom(N,B)| + fb_index.
  struct Shape {
    Necklace N;
    std::vector<NecklaceMap> fa, fb;
    std::map<Monotone, int> fa_idx, fb_idx;
    int offset = 0;
  };
  std::vector<Shape> shapes;
  int num_objs = 0;
  for (const auto& N : necklaces_up_to(bound)) {
    Shape s;
    s.N = N;
    s.fa = hom_set(N, A);
    s.fb = hom_set(N, B);
    if (s.fa.empty() || s.fb.empty()) continue;
    for (int i = 0; i < int(s.fa.size()); ++i) s.fa_idx[s.fa[i].vertex_map] = i;
    for (int j = 0; j < int(s.fb.size()); ++j) s.fb_idx[s.fb[j].vertex_map] = j;
    s.offset = num_objs;
    num_objs += int(s.fa.size() * s.fb.size());
    shapes.push_back(std::move(s));
  }
  rep.num_objects = num_objs;
  std::vector<std::pair<int, int>> edges;
  // union-find alongside edge generation: only component-merging edges are
  // kept, and the scan stops as soon as connectivity is certified
  std::vector<int> parent(num_objs);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  int components = num_objs;
  // Pass 1: absorb every shape into its spine. Each necklace of total T
  // receives a necklace map from spine(T) with identity vertex map (every
  // unit bead of the spine lands inside some bead of the target), and
  // composing any f: N -> A with it keeps the same vertex map, so the
  // pulled-back indices always resolve. One sweep per shape therefore
  // merges all of its objects into spine-shaped objects in O(objects).
  std::map<int, int> spine_of_total;
  for (int si = 0; si < int(shapes.size()); ++si) {
    const auto& beads = shapes[si].N.beads;
    if (std::all_of(beads.begin(), beads.end(), [](int b) { return b == 1; }))
      spine_of_total[shapes[si].N.total()] = si;
  }
  for (const Shape& tgt : shapes) {
    if (components <= 1) break;
    auto sp = spine_of_total.find(tgt.N.total());
    if (sp == spine_of_total.end()) continue;
    const Shape& src = shapes[sp->second];
    if (&src == &tgt) continue;
    for (int i = 0; i < int(tgt.fa.size()) && components > 1; ++i) {
      int ca = src.fa_idx.at(tgt.fa[i].vertex_map);
      for (int j = 0; j < int(tgt.fb.size()); ++j) {
        int cb = src.fb_idx.at(tgt.fb[j].vertex_map);
        int oi = src.offset + ca * int(src.fb.size()) + cb;
        int oj = tgt.offset + i * int(tgt.fb.size()) + j;
        int ra = find(oi), rb = find(oj);
        if (ra == rb) continue;
        parent[ra] = rb;
        --components;
        edges.push_back({oi, oj});
        if (components <= 1) break;
      }
    }
  }
  // Pass 2: connect the spine blocks against each other; pass 1 leaves at
  // most one component per spine object, so this small scan usually
  // certifies connectivity. Pass 3 below is the exhaustive fallback.
  auto is_spine = [&](const Shape& s) {
    return std::all_of(s.N.beads.begin(), s.N.beads.end(),
                       [](int b) { return b == 1; });
  };
  for (int pass = 0; pass < 2 && components > 1; ++pass) {
  for (const Shape& src : shapes) {
    if (components <= 1) break;
    if (pass == 0 && !is_spine(src)) continue;
    for (const Shape& tgt : shapes) {
      if (components <= 1) break;
      if (pass == 0 && !is_spine(tgt)) continue;
      std::vector<int> ca(tgt.fa.size()), cb(tgt.fb.size());
      for (const auto& h : hom_set(src.N, tgt.N)) {
        if (components <= 1) break;
        // h: src -> tgt pulls each object over tgt back to one over src.
        // Hoist both composition-index tables so the (i, j) sweep is pure
        // integer arithmetic on the union-find.
        std::vector<int> vm(h.vertex_map.size());
        for (int i = 0; i < int(tgt.fa.size()); ++i) {
          const auto& fi = tgt.fa[i].vertex_map;
          for (size_t v = 0; v < vm.size(); ++v) vm[v] = fi[h.vertex_map[v]];
          auto ia = src.fa_idx.find(vm);
          ca[i] = (ia == src.fa_idx.end()) ? -1 : ia->second;
        }
        for (int j = 0; j < int(tgt.fb.size()); ++j) {
          const auto& fj = tgt.fb[j].vertex_map;
          for (size_t v = 0; v < vm.size(); ++v) vm[v] = fj[h.vertex_map[v]];
          auto ib = src.fb_idx.find(vm);
          cb[j] = (ib == src.fb_idx.end()) ? -1 : ib->second;
        }
        for (int i = 0; i < int(tgt.fa.size()) && components > 1; ++i) {
          if (ca[i] < 0) continue;
          for (int j = 0; j < int(tgt.fb.size()); ++j) {
            if (cb[j] < 0) continue;
            int oi = src.offset + ca[i] * int(src.fb.size()) + cb[j];
            int oj = tgt.offset + i * int(tgt.fb.size()) + j;
            int ra = find(oi), rb = find(oj);
            if (ra == rb) continue;
            parent[ra] = rb;
            --components;
            edges.push_back({oi, oj});
            if (components <= 1) break;
          }
        }
      }
    }
  }
  }
  auto comp = pi0(num_objs, edges);
  rep.num_components = comp.num_components;
  rep.connected = (comp.num_components == 1);
  rep.conclusive = rep.connected;
  return rep;
}

}  // namespace hocat
