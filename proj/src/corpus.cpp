#include "hocat/corpus.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hocat {

namespace {

int draw(std::mt19937_64& rng, int lo, int hi) {  // inclusive
  return lo + int(rng() % std::uint64_t(hi - lo + 1));
}

int count_nondeg(const TruncatedSSet& X) {
  int c = 0;
  for (int n = 0; n <= X.trunc_level; ++n)
    for (int i = 0; i < X.num_cells(n); ++i)
      if (!X.is_degenerate(n, i)) ++c;
  return c;
}

TruncatedSSet random_dag_complex(std::mt19937_64& rng) {
  for (;;) {
    int nv = draw(rng, 4, 7);
    int ngen = draw(rng, 3, 6);
    std::vector<std::vector<int>> gens;
    for (int g = 0; g < ngen; ++g) {
      int sz = draw(rng, 2, 4);
      std::vector<int> pool(nv);
      for (int i = 0; i < nv; ++i) pool[i] = i;
      for (int i = 0; i < sz; ++i) std::swap(pool[i], pool[draw(rng, i, nv - 1)]);
      std::vector<int> tup(pool.begin(), pool.begin() + std::min(sz, nv));
      std::sort(tup.begin(), tup.end());
      gens.push_back(tup);
    }
    auto pred = [gens](const std::vector<int>& s) {
      for (const auto& g : gens)
        if (std::includes(g.begin(), g.end(), s.begin(), s.end())) return true;
      return s.size() == 1;  // keep every vertex so endpoints always exist
    };
    TruncatedSSet X = from_support_predicate(nv, 3, pred);
    if (count_nondeg(X) <= 30) return X;
  }
}

}  // namespace

std::vector<std::string> corpus_families() {
  return {"spines", "horns", "boundaries", "random-dag-complex",
          "nerve-of-random-poset"};
}

std::vector<TruncatedSSet> generate_corpus(const std::string& family, int size,
                                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<TruncatedSSet> out;
  if (family == "spines") {
    for (int i = 1; i <= size; ++i) out.push_back(spine(i, 3));
  } else if (family == "horns") {
    static const std::pair<int, int> shapes[] = {{2, 0}, {2, 1}, {2, 2}, {3, 0},
                                                 {3, 1}, {3, 2}, {3, 3}};
    for (int i = 0; i < size; ++i)
      out.push_back(horn(shapes[i % 7].first, shapes[i % 7].second, 3));
  } else if (family == "boundaries") {
    for (int i = 0; i < size; ++i) out.push_back(boundary(2 + i % 3, 3));
  } else if (family == "random-dag-complex") {
    for (int i = 0; i < size; ++i) out.push_back(random_dag_complex(rng));
  } else if (family == "nerve-of-random-poset") {
    for (int i = 0; i < size; ++i)
      out.push_back(nerve_of_category(random_poset_category(rng), 3));
  } else {
    throw std::invalid_argument("unknown corpus family: " + family);
  }
  return out;
}

ExplicitFinCategory random_free_category(std::mt19937_64& rng, int max_objects,
                                         int max_parallel) {
  int n = draw(rng, 2, max_objects);
  std::vector<std::tuple<int, int, std::string>> edges;
  for (int i = 0; i < n && int(edges.size()) < 6; ++i)
    for (int j = i + 1; j < n && int(edges.size()) < 6; ++j) {
      int k = draw(rng, 0, max_parallel) / 2;  // bias toward sparse quivers
      for (int c = 0; c < k; ++c)
        edges.emplace_back(i, j,
                           "e" + std::to_string(i) + "_" + std::to_string(j) +
                               "_" + std::to_string(c));
    }
  return free_category_on_quiver(n, edges);
}

ExplicitFinCategory random_poset_category(std::mt19937_64& rng, int max_objects) {
  int n = draw(rng, 2, max_objects);
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) le[i][i] = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (draw(rng, 0, 1)) le[i][j] = true;
  for (int k = 0; k < n; ++k)  // transitive closure
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;
  return poset_category(n, [le](int a, int b) { return bool(le[a][b]); });
}

RepresentableSum representable_sum(const ExplicitFinCategory& C,
                                   const std::vector<int>& summands) {
  RepresentableSum R;
  R.summands = summands;
  Presheaf& F = R.F;
  F.base = &C;
  F.values.resize(C.num_objects());
  // per object: position of (summand slot, arrow) in the value list
  std::vector<std::map<std::pair<int, int>, int>> pos(C.num_objects());
  std::vector<std::vector<std::pair<int, int>>> elems(C.num_objects());
  for (int x = 0; x < C.num_objects(); ++x)
    for (int i = 0; i < int(summands.size()); ++i)
      for (int w : C.hom(x, summands[i])) {
        pos[x][{i, w}] = int(elems[x].size());
        elems[x].push_back({i, w});
        F.values[x].push_back(std::to_string(i) + ":" + C.arrows[w].id);
      }
  F.action.resize(C.num_arrows());
  for (int a = 0; a < C.num_arrows(); ++a) {
    int s = C.arrows[a].src, t = C.arrows[a].tgt;
    for (auto [i, w] : elems[t]) F.action[a].push_back(pos[s].at({i, C.comp[w][a]}));
  }
  return R;
}

RepresentableSum random_presheaf(const ExplicitFinCategory& C,
                                 std::mt19937_64& rng, int max_summands) {
  int k = draw(rng, 0, max_summands);
  std::vector<int> summands;
  for (int i = 0; i < k; ++i) summands.push_back(draw(rng, 0, C.num_objects() - 1));
  return representable_sum(C, summands);
}

std::vector<std::vector<int>> summand_inclusion(const ExplicitFinCategory& C,
                                                const RepresentableSum& sub,
                                                const RepresentableSum& full) {
  for (size_t i = 0; i < sub.summands.size(); ++i)
    if (i >= full.summands.size() || sub.summands[i] != full.summands[i])
      throw std::invalid_argument("summand_inclusion: not a summand prefix");
  std::vector<std::vector<int>> phi(C.num_objects());
  for (int x = 0; x < C.num_objects(); ++x) {
    std::vector<int> offset(full.summands.size() + 1, 0);
    for (size_t i = 0; i < full.summands.size(); ++i)
      offset[i + 1] = offset[i] + int(C.hom(x, full.summands[i]).size());
    for (size_t i = 0; i < sub.summands.size(); ++i) {
      int cnt = int(C.hom(x, sub.summands[i]).size());
      for (int p = 0; p < cnt; ++p) phi[x].push_back(offset[i] + p);
    }
  }
  return phi;
}

}  // namespace hocat
