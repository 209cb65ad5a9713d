#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hocat/corpus.hpp>
#include <hocat/fibration.hpp>
#include <hocat/json_io.hpp>
#include <hocat/sset.hpp>

#include <cstdio>
#include <random>

using namespace hocat;

namespace {

bool ssets_equal(const TruncatedSSet& A, const TruncatedSSet& B) {
  if (A.trunc_level != B.trunc_level || A.cells != B.cells) return false;
  return A.face == B.face && A.degen == B.degen;
}

bool cats_equal(const ExplicitFinCategory& A, const ExplicitFinCategory& B) {
  if (A.objects != B.objects || A.identity != B.identity) return false;
  if (A.arrows.size() != B.arrows.size()) return false;
  for (size_t i = 0; i < A.arrows.size(); ++i)
    if (A.arrows[i].id != B.arrows[i].id || A.arrows[i].src != B.arrows[i].src ||
        A.arrows[i].tgt != B.arrows[i].tgt)
      return false;
  return A.comp == B.comp;
}

}  // namespace

TEST_CASE("simplicial set JSON round trip") {
  for (auto X : {standard_simplex(2, 3), boundary(2, 3), horn(2, 1, 3),
                 spine(4, 3),
                 product(standard_simplex(1, 3), standard_simplex(1, 3))}) {
    auto j = sset_to_json(X);
    auto Y = sset_from_json(j);
    CHECK(validate(Y).ok);
    CHECK(ssets_equal(X, Y));
  }
}

TEST_CASE("map JSON round trip") {
  auto X = standard_simplex(1, 3);
  auto id = identity_map(X);
  auto j = map_to_json(id);
  auto L = map_from_json(j);
  auto f = L.map();
  CHECK(validate_map(f).ok);
  CHECK(f.level_maps == id.level_maps);
  CHECK(ssets_equal(L.source, X));
  CHECK(ssets_equal(L.target, X));
}

TEST_CASE("category JSON round trip") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    auto C = random_free_category(rng);
    auto j = category_to_json(C);
    auto D = category_from_json(j);
    CHECK(validate_category(D).ok);
    CHECK(cats_equal(C, D));
  }
  auto P = poset_category(3, [](int a, int b) { return a <= b; });
  CHECK(cats_equal(P, category_from_json(category_to_json(P))));
}

TEST_CASE("category round trip survives ids containing dots") {
  // composite ids in free categories contain ';' and quiver labels may clash
  // with the comp-key separator; exercise a composite-heavy category
  auto C = free_category_on_quiver(
      4, {{0, 1, "e0.1"}, {1, 2, "e1.2"}, {2, 3, "e2.3"}});
  auto D = category_from_json(category_to_json(C));
  CHECK(cats_equal(C, D));
}

TEST_CASE("presheaf JSON round trip") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    auto C = random_free_category(rng);
    auto RS = random_presheaf(C, rng);
    auto j = presheaf_to_json(RS.F);
    auto L = presheaf_from_json(j);
    auto G = L.presheaf();
    CHECK(validate_presheaf(G).ok);
    CHECK(cats_equal(*RS.F.base, L.base));
    CHECK(RS.F.values == L.values);
    CHECK(RS.F.action == L.action);
  }
}

TEST_CASE("file save and load round trip") {
  auto X = boundary(2, 3);
  std::string path = "/tmp/hocat_io_test.json";
  save_json_file(path, sset_to_json(X));
  auto j = load_json_file(path);
  CHECK(ssets_equal(X, sset_from_json(j)));
  std::remove(path.c_str());
  CHECK_THROWS_AS((void)load_json_file("/tmp/hocat_io_missing.json"),
                  std::runtime_error);
}
