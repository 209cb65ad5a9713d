#include "hocat/presentation.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace hocat {

std::string word_key(const Word& w) {
  std::string s = std::to_string(w.src) + ":";
  for (int g : w.gens) s += std::to_string(g) + ",";
  return s;
}

GenGraphInfo gen_graph_info(const Presentation& P) {
  GenGraphInfo info;
  int V = int(P.objects.size());
  std::vector<std::vector<int>> adj(V);
  std::vector<int> indeg(V, 0);
  for (const auto& g : P.gens) {
    adj[g.src].push_back(g.tgt);
    indeg[g.tgt]++;
  }
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
  info.longest_path =
      (V && info.acyclic) ? *std::max_element(dist.begin(), dist.end()) : 0;
  return info;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// (length, lex) word order used for canonical class representatives.
bool word_less(const Word& a, const Word& b) {
  if (a.gens.size() != b.gens.size()) return a.gens.size() < b.gens.size();
  if (a.gens != b.gens) return a.gens < b.gens;
  return a.src < b.src;
}

// One applicable relation instance: replace positions [pos, pos+len) by `to`.
struct Instance {
  int pos;
  int len;
  const std::vector<int>* to;
};

}  // namespace

int SaturationResult::find_word(const Word& w) const {
  auto it = word_index.find(word_key(w));
  return it == word_index.end() ? -1 : it->second;
}

int SaturationResult::class_of(const Word& w) const {
  int i = find_word(w);
  return i < 0 ? -1 : cls[i];
}

std::vector<int> SaturationResult::hom_classes(const Presentation& P, int a,
                                               int b) const {
  std::vector<int> out;
  std::vector<bool> seen(class_rep.size(), false);
  // class_rep is ordered by minimal representative already
  for (size_t c = 0; c < class_rep.size(); ++c) {
    const Word& w = words[class_rep[c]];
    if (P.word_src(w.gens, w.src) == a && P.word_tgt(w.gens, w.src) == b &&
        !seen[c]) {
      seen[c] = true;
      out.push_back(int(c));
    }
  }
  return out;
}

SaturationResult saturate(const Presentation& P, const SaturationOptions& opt) {
  SaturationResult R;
  R.bound = opt.bound;
  int V = int(P.objects.size());
  std::vector<std::vector<int>> out_gens(V);
  for (int g = 0; g < int(P.gens.size()); ++g)
    out_gens[P.gens[g].src].push_back(g);

  // enumerate words, shortest first
  for (int v = 0; v < V; ++v) R.words.push_back({v, {}});
  size_t head = 0;
  while (head < R.words.size()) {
    Word w = R.words[head++];
    if (int(w.gens.size()) >= opt.bound) continue;
    int tip = w.gens.empty() ? w.src : P.gens[w.gens.back()].tgt;
    for (int g : out_gens[tip]) {
      Word x = w;
      x.gens.push_back(g);
      R.words.push_back(std::move(x));
    }
  }
  R.words_visited = int(R.words.size());
  for (int i = 0; i < int(R.words.size()); ++i)
    R.word_index[word_key(R.words[i])] = i;

  UnionFind uf(int(R.words.size()));

  // collect relation sides in both orientations
  struct Side {
    const std::vector<int>* from;
    const std::vector<int>* to;
    int obj;  // source object of the relation words
  };
  std::vector<Side> sides;
  for (const auto& r : P.rels) {
    sides.push_back({&r.lhs, &r.rhs, r.obj});
    sides.push_back({&r.rhs, &r.lhs, r.obj});
  }

  auto object_at = [&](const Word& w, int pos) {
    return pos == 0 ? w.src : P.gens[w.gens[pos - 1]].tgt;
  };

  for (int wi = 0; wi < int(R.words.size()); ++wi) {
    const Word& w = R.words[wi];
    int len = int(w.gens.size());
    std::vector<Instance> inst;
    for (const auto& s : sides) {
      int flen = int(s.from->size());
      for (int pos = 0; pos + flen <= len; ++pos) {
        if (flen == 0) {
          if (object_at(w, pos) != s.obj) continue;
        } else if (!std::equal(s.from->begin(), s.from->end(),
                               w.gens.begin() + pos)) {
          continue;
        }
        if (len - flen + int(s.to->size()) > opt.bound) continue;
        inst.push_back({pos, flen, s.to});
      }
    }
    auto apply = [&](const std::vector<Instance>& picks) {
      Word res;
      res.src = w.src;
      int cur = 0;
      for (const auto& p : picks) {
        res.gens.insert(res.gens.end(), w.gens.begin() + cur,
                        w.gens.begin() + p.pos);
        res.gens.insert(res.gens.end(), p.to->begin(), p.to->end());
        cur = p.pos + p.len;
      }
      res.gens.insert(res.gens.end(), w.gens.begin() + cur, w.gens.end());
      ++R.moves_visited;
      int ri = R.word_index.count(word_key(res)) ? R.word_index[word_key(res)] : -1;
      if (ri >= 0) uf.unite(wi, ri);
    };
    if (!opt.multi_moves) {
      for (const auto& p : inst) apply({p});
    } else {
      // every nonempty set of pairwise disjoint instances, applied at once
      std::sort(inst.begin(), inst.end(), [](const Instance& a, const Instance& b) {
        return a.pos < b.pos;
      });
      std::vector<Instance> picked;
      std::function<void(size_t)> rec = [&](size_t i) {
        if (i == inst.size()) {
          if (!picked.empty()) apply(picked);
          return;
        }
        rec(i + 1);
        if (picked.empty() ||
            picked.back().pos + picked.back().len <= inst[i].pos) {
          // zero-length instances at the same position would overlap-insert;
          // require strictly advancing positions for len-0 picks too
          if (!(picked.size() && inst[i].len == 0 &&
                picked.back().pos + picked.back().len == inst[i].pos &&
                picked.back().len == 0)) {
            picked.push_back(inst[i]);
            rec(i + 1);
            picked.pop_back();
          }
        }
      };
      rec(0);
    }
  }

  // dense class ids ordered by minimal representative
  R.cls.assign(R.words.size(), -1);
  std::unordered_map<int, int> root_min;  // root -> minimal word index
  for (int i = 0; i < int(R.words.size()); ++i) {
    int r = uf.find(i);
    auto it = root_min.find(r);
    if (it == root_min.end() || word_less(R.words[i], R.words[it->second]))
      root_min[r] = i;
  }
  std::vector<int> reps;
  for (auto& [root, mi] : root_min) reps.push_back(mi);
  std::sort(reps.begin(), reps.end(), [&](int a, int b) {
    return word_less(R.words[a], R.words[b]);
  });
  std::unordered_map<int, int> root_cls;
  for (int c = 0; c < int(reps.size()); ++c) root_cls[uf.find(reps[c])] = c;
  R.class_rep = reps;
  for (int i = 0; i < int(R.words.size()); ++i) R.cls[i] = root_cls[uf.find(i)];
  return R;
}

ExplicitFinCategory materialize(const Presentation& P, const SaturationResult& R) {
  ExplicitFinCategory C;
  C.objects = P.objects;
  int nc = int(R.class_rep.size());
  for (int c = 0; c < nc; ++c) {
    const Word& w = R.words[R.class_rep[c]];
    std::string id;
    if (w.gens.empty()) {
      id = "id_" + P.objects[w.src];
    } else {
      for (int g : w.gens) {
        if (!id.empty()) id += ";";
        id += P.gens[g].id;
      }
      id = "[" + id + "]";
    }
    C.arrows.push_back({id, P.word_src(w.gens, w.src), P.word_tgt(w.gens, w.src)});
  }
  C.identity.resize(C.num_objects());
  for (int o = 0; o < C.num_objects(); ++o) {
    int c = R.class_of(Word{o, {}});
    C.identity[o] = c;
  }
  C.comp.assign(nc, std::vector<int>(nc, -1));
  for (int g = 0; g < nc; ++g)
    for (int f = 0; f < nc; ++f) {
      if (!C.composable(g, f)) continue;
      const Word& wf = R.words[R.class_rep[f]];
      const Word& wg = R.words[R.class_rep[g]];
      Word cat;
      cat.src = wf.src;
      cat.gens = wf.gens;
      cat.gens.insert(cat.gens.end(), wg.gens.begin(), wg.gens.end());
      C.comp[g][f] = R.class_of(cat);
    }
  C.finalize();
  return C;
}

}  // namespace hocat
