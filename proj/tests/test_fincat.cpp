#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hocat/fincat.hpp"

using namespace hocat;

namespace {
auto chain_leq = [](int a, int b) { return a <= b; };
}

TEST_CASE("poset and free categories satisfy the laws") {
  ExplicitFinCategory P3 = poset_category(3, chain_leq);
  CHECK(validate_category(P3).ok);
  CHECK(P3.num_arrows() == 6);  // pairs i <= j

  ExplicitFinCategory F = free_category_on_quiver(
      3, {{0, 1, "e01"}, {1, 2, "e12"}, {0, 2, "e02"}});
  CHECK(validate_category(F).ok);
  CHECK(F.num_arrows() == 7);  // 3 identities + 3 edges + e01;e12
  int comp = F.comp[F.arrow_index.at("e12")][F.arrow_index.at("e01")];
  CHECK(F.arrows[comp].id == "e01;e12");
}

TEST_CASE("product category and its nerve") {
  ExplicitFinCategory A = poset_category(2, chain_leq);
  ExplicitFinCategory P = product_category(A, A);
  CHECK(validate_category(P).ok);
  CHECK(P.num_objects() == 4);
  CHECK(P.num_arrows() == 9);
  // nerve of the product vs product of the nerves, levelwise
  TruncatedSSet NP = nerve_of_category(P, 2);
  TruncatedSSet PN = product(nerve_of_category(A, 2), nerve_of_category(A, 2));
  for (int n = 0; n <= 2; ++n) CHECK(NP.num_cells(n) == PN.num_cells(n));
}

TEST_CASE("hom sets and identities") {
  ExplicitFinCategory P3 = poset_category(3, chain_leq);
  CHECK(P3.hom(0, 2).size() == 1);
  CHECK(P3.hom(2, 0).size() == 0);
  for (int o = 0; o < 3; ++o) {
    int e = P3.identity[o];
    CHECK(P3.arrows[e].src == o);
    CHECK(P3.arrows[e].tgt == o);
  }
}

TEST_CASE("slice category over an object") {
  ExplicitFinCategory P2 = poset_category(2, chain_leq);
  auto [S, proj] = slice_category_over(P2, 1);
  CHECK(S.num_objects() == 2);  // id_1 and 0 <= 1
  CHECK(validate_category(S).ok);
  Functor F = proj;
  F.source = &S;
  F.target = &P2;
  CHECK(is_functor(F));
}

TEST_CASE("nerve of a category validates and is 2-coskeletal-sized") {
  ExplicitFinCategory F = free_category_on_quiver(2, {{0, 1, "a"}, {0, 1, "b"}});
  TruncatedSSet N = nerve_of_category(F, 3);
  CHECK(validate(N).ok);
  CHECK(N.num_cells(0) == 2);
  CHECK(N.num_cells(1) == 4);  // 2 identities + a + b
}

TEST_CASE("nerve of a functor is a valid simplicial map") {
  ExplicitFinCategory P2 = poset_category(2, chain_leq);
  ExplicitFinCategory P3 = poset_category(3, chain_leq);
  Functor F;
  F.source = &P2;
  F.target = &P3;
  F.obj_map = {0, 2};
  F.arrow_map.resize(P2.num_arrows());
  auto find = [&](int s, int t) {
    for (int a = 0; a < P3.num_arrows(); ++a)
      if (P3.arrows[a].src == s && P3.arrows[a].tgt == t) return a;
    return -1;
  };
  for (int a = 0; a < P2.num_arrows(); ++a)
    F.arrow_map[a] = find(F.obj_map[P2.arrows[a].src], F.obj_map[P2.arrows[a].tgt]);
  REQUIRE(is_functor(F));
  TruncatedSSet NC = nerve_of_category(P2, 3);
  TruncatedSSet ND = nerve_of_category(P3, 3);
  SSetMap nf = nerve_of_functor(F, NC, ND);
  CHECK(validate_map(nf).ok);
}

TEST_CASE("is_isomorphism") {
  ExplicitFinCategory P2 = poset_category(2, chain_leq);
  Functor id;
  id.source = &P2;
  id.target = &P2;
  for (int o = 0; o < P2.num_objects(); ++o) id.obj_map.push_back(o);
  for (int a = 0; a < P2.num_arrows(); ++a) id.arrow_map.push_back(a);
  CHECK(is_functor(id));
  CHECK(is_isomorphism(id));
}
