#include "hocat/segalify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hocat {

bool edge_word_composable(const TruncatedSSet& X, const EdgeWord& w) {
  if (w.edges.empty()) return w.base_vertex >= 0 && w.base_vertex < X.num_cells(0);
  for (size_t i = 0; i + 1 < w.edges.size(); ++i)
    if (edge_target(X, w.edges[i]) != edge_source(X, w.edges[i + 1])) return false;
  return true;
}

int edge_word_src(const TruncatedSSet& X, const EdgeWord& w) {
  return w.edges.empty() ? w.base_vertex : edge_source(X, w.edges.front());
}

int edge_word_tgt(const TruncatedSSet& X, const EdgeWord& w) {
  return w.edges.empty() ? w.base_vertex : edge_target(X, w.edges.back());
}

H1Presentation h1_presentation(const TruncatedSSet& X) {
  H1Presentation hp;
  hp.pres.objects = X.cells[0];
  hp.edge_gen.assign(X.num_cells(1), -1);
  for (int e = 0; e < X.num_cells(1); ++e) {
    if (X.is_degenerate(1, e)) continue;
    hp.edge_gen[e] = int(hp.gen_edge.size());
    hp.gen_edge.push_back(e);
    hp.pres.gens.push_back({X.cells[1][e], edge_source(X, e), edge_target(X, e)});
  }
  auto proj = [&](std::initializer_list<int> edges) {
    std::vector<int> w;
    for (int e : edges)
      if (hp.edge_gen[e] >= 0) w.push_back(hp.edge_gen[e]);
    return w;
  };
  if (X.trunc_level >= 2) {
    for (int t = 0; t < X.num_cells(2); ++t) {
      if (X.is_degenerate(2, t)) continue;
      int e0 = X.face[2][0][t], e1 = X.face[2][1][t], e2 = X.face[2][2][t];
      Presentation::Rel r;
      r.lhs = proj({e2, e0});
      r.rhs = proj({e1});
      r.obj = X.vertex_of(2, t, 0);
      if (r.lhs != r.rhs) hp.pres.rels.push_back(std::move(r));
    }
  }
  return hp;
}

H1Presentation raw_edge_presentation(const TruncatedSSet& X) {
  H1Presentation hp;
  hp.pres.objects = X.cells[0];
  hp.edge_gen.resize(X.num_cells(1));
  hp.gen_edge.resize(X.num_cells(1));
  for (int e = 0; e < X.num_cells(1); ++e) {
    hp.edge_gen[e] = e;
    hp.gen_edge[e] = e;
    hp.pres.gens.push_back({X.cells[1][e], edge_source(X, e), edge_target(X, e)});
  }
  if (X.trunc_level >= 2) {
    for (int t = 0; t < X.num_cells(2); ++t) {
      if (X.is_degenerate(2, t)) continue;
      Presentation::Rel r;
      r.lhs = {X.face[2][2][t], X.face[2][0][t]};
      r.rhs = {X.face[2][1][t]};
      r.obj = X.vertex_of(2, t, 0);
      if (r.lhs != r.rhs) hp.pres.rels.push_back(std::move(r));
    }
  }
  for (int v = 0; v < X.num_cells(0); ++v)
    hp.pres.rels.push_back({{X.degen[0][0][v]}, {}, v});
  return hp;
}

// word in the presentation underlying hp, with degenerate edges dropped
static Word project_word(const TruncatedSSet& X, const H1Presentation& hp,
                         const EdgeWord& w) {
  if (!edge_word_composable(X, w))
    throw std::invalid_argument("edge word is not composable");
  Word out;
  out.src = edge_word_src(X, w);
  for (int e : w.edges)
    if (hp.edge_gen[e] >= 0) out.gens.push_back(hp.edge_gen[e]);
  return out;
}

static std::string arrow_id_for(const Presentation& P, const Word& w) {
  if (w.gens.empty()) return "id_" + P.objects[w.src];
  std::string id;
  for (int g : w.gens) {
    if (!id.empty()) id += ";";
    id += P.gens[g].id;
  }
  return "[" + id + "]";
}

int H1Result::class_of_edge_word(const TruncatedSSet& X, const EdgeWord& w) const {
  return sat.class_of(project_word(X, hp, w));
}

std::vector<int> H1Result::hom(int x, int y) const {
  return sat.hom_classes(hp.pres, x, y);
}

MorEqual H1Result::mor_equal(const TruncatedSSet& X, const EdgeWord& a,
                             const EdgeWord& b) const {
  if (edge_word_src(X, a) != edge_word_src(X, b) ||
      edge_word_tgt(X, a) != edge_word_tgt(X, b))
    return MorEqual::No;
  int ca = class_of_edge_word(X, a), cb = class_of_edge_word(X, b);
  if (ca < 0 || cb < 0) return MorEqual::Unknown;
  if (ca == cb) return MorEqual::Yes;
  return exact ? MorEqual::No : MorEqual::Unknown;
}

H1Result h1_necklace(const TruncatedSSet& X, int max_word) {
  H1Result r;
  r.hp = h1_presentation(X);
  GenGraphInfo gi = gen_graph_info(r.hp.pres);
  r.bound = max_word >= 0 ? max_word : (gi.acyclic ? gi.longest_path : 8);
  r.exact = gi.acyclic && r.bound >= gi.longest_path;
  r.sat = saturate(r.hp.pres, {r.bound, false});
  if (r.exact) r.cat = materialize(r.hp.pres, r.sat);
  return r;
}

H1Result h1_from(const TruncatedSSet& X) { return h1_necklace(X); }

// all composable generator words of length <= bound, shortest first
static std::vector<Word> enumerate_words(const Presentation& P, int bound) {
  std::vector<std::vector<int>> out_gens(P.objects.size());
  for (int g = 0; g < int(P.gens.size()); ++g) out_gens[P.gens[g].src].push_back(g);
  std::vector<Word> words, frontier;
  for (int o = 0; o < int(P.objects.size()); ++o) frontier.push_back({o, {}});
  words = frontier;
  for (int len = 1; len <= bound; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      int tgt = P.word_tgt(w.gens, w.src);
      for (int g : out_gens[tgt]) {
        Word e = w;
        e.gens.push_back(g);
        next.push_back(std::move(e));
      }
    }
    words.insert(words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return words;
}

Word H1RewriteResult::normal_form(const TruncatedSSet& X, const EdgeWord& w) const {
  return engine.normalize(hp.pres, project_word(X, hp, w));
}

MorEqual H1RewriteResult::mor_equal(const TruncatedSSet& X, const EdgeWord& a,
                                    const EdgeWord& b) const {
  if (edge_word_src(X, a) != edge_word_src(X, b) ||
      edge_word_tgt(X, a) != edge_word_tgt(X, b))
    return MorEqual::No;
  Word na = normal_form(X, a), nb = normal_form(X, b);
  if (na == nb) return MorEqual::Yes;
  return engine.status == RewriteEngine::Status::Complete ? MorEqual::No
                                                          : MorEqual::Unknown;
}

H1RewriteResult h1_rewrite(const TruncatedSSet& X, int max_rules, int max_lhs) {
  H1RewriteResult r;
  r.hp = h1_presentation(X);
  r.engine = knuth_bendix(r.hp.pres, max_rules, max_lhs);
  GenGraphInfo gi = gen_graph_info(r.hp.pres);
  r.exact = gi.acyclic && r.engine.status == RewriteEngine::Status::Complete;
  if (!r.exact) return r;

  const Presentation& P = r.hp.pres;
  std::map<std::string, Word> forms;
  for (const Word& w : enumerate_words(P, gi.longest_path)) {
    Word nf = r.engine.normalize(P, w);
    forms.emplace(word_key(nf), nf);
  }
  r.normal_forms.reserve(forms.size());
  for (auto& [k, w] : forms) r.normal_forms.push_back(w);
  std::sort(r.normal_forms.begin(), r.normal_forms.end(),
            [](const Word& a, const Word& b) {
              if (a.gens.size() != b.gens.size()) return a.gens.size() < b.gens.size();
              if (a.gens != b.gens) return a.gens < b.gens;
              return a.src < b.src;
            });

  ExplicitFinCategory C;
  C.objects = P.objects;
  std::map<std::string, int> nf_index;
  for (int i = 0; i < int(r.normal_forms.size()); ++i) {
    const Word& w = r.normal_forms[i];
    nf_index[word_key(w)] = i;
    C.arrows.push_back(
        {arrow_id_for(P, w), P.word_src(w.gens, w.src), P.word_tgt(w.gens, w.src)});
  }
  C.identity.resize(C.num_objects());
  for (int o = 0; o < C.num_objects(); ++o)
    C.identity[o] = nf_index.at(word_key(r.engine.normalize(P, {o, {}})));
  int na = int(r.normal_forms.size());
  C.comp.assign(na, std::vector<int>(na, -1));
  for (int g = 0; g < na; ++g)
    for (int f = 0; f < na; ++f) {
      if (!C.composable(g, f)) continue;
      Word cat = r.normal_forms[f];
      cat.gens.insert(cat.gens.end(), r.normal_forms[g].gens.begin(),
                      r.normal_forms[g].gens.end());
      C.comp[g][f] = nf_index.at(word_key(r.engine.normalize(P, cat)));
    }
  C.finalize();
  r.cat = std::move(C);
  return r;
}

bool backends_agree(const TruncatedSSet& X, const H1Result& nec,
                    const H1RewriteResult& rw, std::string* why) {
  (void)X;
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!nec.cat || !rw.cat) return fail("a backend did not materialize");
  if (nec.cat->objects != rw.cat->objects) return fail("object sets differ");
  const Presentation& P = nec.hp.pres;

  Functor F;
  F.source = &*nec.cat;
  F.target = &*rw.cat;
  F.obj_map.resize(nec.cat->num_objects());
  for (int o = 0; o < nec.cat->num_objects(); ++o) F.obj_map[o] = o;
  F.arrow_map.resize(nec.cat->num_arrows());
  for (int c = 0; c < nec.cat->num_arrows(); ++c) {
    Word nf = rw.engine.normalize(P, nec.sat.words[nec.sat.class_rep[c]]);
    auto it = rw.cat->arrow_index.find(arrow_id_for(P, nf));
    if (it == rw.cat->arrow_index.end())
      return fail("class " + nec.cat->arrows[c].id + " has no rewrite counterpart");
    F.arrow_map[c] = it->second;
  }
  if (!is_functor(F)) return fail("comparison map is not a functor");
  if (!is_isomorphism(F)) return fail("comparison functor is not an isomorphism");
  return true;
}

TruncatedSSet nerve_of_h1(const TruncatedSSet& X) {
  H1Result r = h1_necklace(X);
  if (!r.cat)
    throw std::runtime_error("h1 is not materializable: edge graph has a cycle");
  return nerve_of_category(*r.cat, 3);
}

std::optional<std::vector<int>> mapping_set(const TruncatedSSet& X, int x, int y) {
  H1Result r = h1_necklace(X);
  if (!r.cat) return std::nullopt;
  return r.hom(x, y);
}

SaturationComparison thin_vs_unrestricted(const TruncatedSSet& X, int bound) {
  H1Presentation hp = raw_edge_presentation(X);
  SaturationResult thin = saturate(hp.pres, {bound, false});
  SaturationResult multi = saturate(hp.pres, {bound, true});
  SaturationComparison c;
  c.partitions_equal = thin.cls == multi.cls;
  c.thin_words = thin.words_visited;
  c.thin_moves = thin.moves_visited;
  c.multi_words = multi.words_visited;
  c.multi_moves = multi.moves_visited;
  return c;
}

NaiveColimitResult naive_necklace_colimit(const TruncatedSSet& X, int bound) {
  NaiveColimitResult R;
  int comp_offset = 0;
  for (int x = 0; x < X.num_cells(0); ++x)
    for (int y = 0; y < X.num_cells(0); ++y) {
      SliceGraph g = slice_category(X, x, y, bound);
      Pi0Result p = pi0(g);
      R.anchors_visited += (long long)g.objects.size();
      R.map_applications += (long long)g.edges.size();
      for (int i = 0; i < int(g.objects.size()); ++i) {
        const SliceObject& o = g.objects[i];
        if (!is_very_thin(o.necklace)) continue;
        EdgeWord w;
        if (o.necklace.beads.empty())
          w.base_vertex = o.base_vertex;
        else
          w.edges = o.bead_cells;
        R.words.push_back(std::move(w));
        R.component.push_back(comp_offset + p.component[i]);
      }
      comp_offset += p.num_components;
    }
  return R;
}

bool thin_finality_check(const TruncatedSSet& X, int bound, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  H1Presentation hp = raw_edge_presentation(X);
  SaturationResult sat = saturate(hp.pres, {bound, false});
  NaiveColimitResult naive = naive_necklace_colimit(X, bound);
  if (naive.words.size() != sat.words.size())
    return fail("word sets differ in size");
  // equal partitions of the same word set: class -> component must be a
  // consistent bijection
  std::map<int, int> cls_to_comp, comp_to_cls;
  for (size_t i = 0; i < naive.words.size(); ++i) {
    const EdgeWord& w = naive.words[i];
    int idx = sat.find_word({edge_word_src(X, w), w.edges});
    if (idx < 0) return fail("colimit produced a word saturation never saw");
    int c = sat.cls[idx], k = naive.component[i];
    auto [it1, fresh1] = cls_to_comp.emplace(c, k);
    if (!fresh1 && it1->second != k)
      return fail("saturation class split across colimit components");
    auto [it2, fresh2] = comp_to_cls.emplace(k, c);
    if (!fresh2 && it2->second != c)
      return fail("colimit component split across saturation classes");
  }
  return true;
}

// splits "(a|b)" at the top-level bar; returns false when the id does not
// have that shape
static bool split_product_id(const std::string& id, std::string* a, std::string* b) {
  if (id.size() < 3 || id.front() != '(' || id.back() != ')') return false;
  int depth = 0;
  for (size_t i = 1; i + 1 < id.size(); ++i) {
    char c = id[i];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (c == '|' && depth == 0) {
      *a = id.substr(1, i - 1);
      *b = id.substr(i + 1, id.size() - i - 2);
      return true;
    }
  }
  return false;
}

bool product_compatibility_check(const TruncatedSSet& X, const TruncatedSSet& Y,
                                 std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  TruncatedSSet XY = product(X, Y);
  H1Result hX = h1_necklace(X), hY = h1_necklace(Y), hXY = h1_necklace(XY);
  if (!hX.cat || !hY.cat || !hXY.cat)
    return fail("a factor or the product is not materializable");
  ExplicitFinCategory prod = product_category(*hX.cat, *hY.cat);

  Functor F;
  F.source = &*hXY.cat;
  F.target = &prod;
  F.obj_map.resize(XY.num_cells(0));
  for (int v = 0; v < XY.num_cells(0); ++v) {
    auto it = prod.obj_index.find(XY.cells[0][v]);
    if (it == prod.obj_index.end()) return fail("object mismatch at " + XY.cells[0][v]);
    F.obj_map[v] = it->second;
  }
  F.arrow_map.resize(hXY.cat->num_arrows());
  for (int c = 0; c < hXY.cat->num_arrows(); ++c) {
    const Word& w = hXY.sat.words[hXY.sat.class_rep[c]];
    std::string sx, sy;
    if (!split_product_id(XY.cells[0][w.src], &sx, &sy))
      return fail("unexpected product vertex id");
    Word wx{X.cell_index(0, sx), {}}, wy{Y.cell_index(0, sy), {}};
    for (int g : w.gens) {
      int e = hXY.hp.gen_edge[g];
      std::string ex, ey;
      if (!split_product_id(XY.cells[1][e], &ex, &ey))
        return fail("unexpected product edge id");
      int exi = X.cell_index(1, ex), eyi = Y.cell_index(1, ey);
      if (!X.is_degenerate(1, exi)) wx.gens.push_back(hX.hp.edge_gen[exi]);
      if (!Y.is_degenerate(1, eyi)) wy.gens.push_back(hY.hp.edge_gen[eyi]);
    }
    int cx = hX.sat.class_of(wx), cy = hY.sat.class_of(wy);
    if (cx < 0 || cy < 0) return fail("projected word escaped the factor bound");
    std::string id =
        "(" + hX.cat->arrows[cx].id + "|" + hY.cat->arrows[cy].id + ")";
    auto it = prod.arrow_index.find(id);
    if (it == prod.arrow_index.end()) return fail("no product arrow " + id);
    F.arrow_map[c] = it->second;
  }
  if (!is_functor(F)) return fail("comparison map is not a functor");
  if (!is_isomorphism(F)) return fail("comparison functor is not bijective");
  return true;
}

}  // namespace hocat
