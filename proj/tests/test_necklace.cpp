#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hocat/necklace.hpp"

using namespace hocat;

TEST_CASE("literal syntax round trip") {
  CHECK(necklace_literal(Necklace{{2, 2, 1, 1}}) == "2v2v1v1");
  CHECK(necklace_literal(Necklace{}) == "0");
  CHECK(*parse_necklace("2v2v1v1") == Necklace{{2, 2, 1, 1}});
  CHECK(*parse_necklace("0") == Necklace{});
  CHECK(!parse_necklace("2vv1").has_value());
  CHECK(!parse_necklace("").has_value());
}

TEST_CASE("concat is monoidal with unit the point") {
  CHECK(concat(Necklace{{2, 2}}, Necklace{{1, 1}}) == Necklace{{2, 2, 1, 1}});
  CHECK(concat(Necklace{}, Necklace{{3}}) == Necklace{{3}});
  CHECK(concat(concat(Necklace{{1}}, Necklace{{2}}), Necklace{{1}}) ==
        concat(Necklace{{1}}, concat(Necklace{{2}}, Necklace{{1}})));
}

TEST_CASE("segalify totals from the paper's figure") {
  CHECK(Necklace{{1, 3, 2}}.total() == 6);
  CHECK(Necklace{{2, 2, 1, 1}}.total() == 6);
  CHECK(Necklace{}.total() == 0);
  SegalifyNecklaceResult r = segalify_necklace(Necklace{{1, 1}}, 2);
  CHECK(r.total == 2);
  CHECK(validate_map(r.inclusion).ok);
}

TEST_CASE("hom set counts") {
  CHECK(hom_set(Necklace{{1, 1}}, Necklace{{2}}).size() == 3);
  CHECK(hom_set(Necklace{{2}}, Necklace{{1, 1}}).size() == 0);
  CHECK(hom_set(Necklace{{1}}, Necklace{{1, 1}}).size() == 0);
  CHECK(hom_set(Necklace{{1, 1}}, Necklace{{1}}).size() == 2);
}

TEST_CASE("composition and identities") {
  Necklace A{{1, 1}}, B{{2}};
  NecklaceMap idB = identity_necklace_map(B);
  for (const NecklaceMap& f : hom_set(A, B)) {
    auto c = compose(idB, f);
    REQUIRE(c.has_value());
    CHECK(*c == f);
  }
  // associativity spot check over composable triples
  for (const NecklaceMap& f : hom_set(A, B))
    for (const NecklaceMap& g : hom_set(B, B))
      for (const NecklaceMap& h : hom_set(B, B)) {
        auto lhs = compose(h, *compose(g, f));
        auto rhs = compose(*compose(h, g), f);
        REQUIRE(lhs.has_value());
        CHECK(*lhs == *rhs);
      }
}

TEST_CASE("thinness predicates") {
  CHECK(is_thin(Necklace{{1, 1, 1}}));
  CHECK(is_very_thin(Necklace{{1, 1, 1}}));
  CHECK(is_thin(Necklace{{1, 2, 1}}));
  CHECK(!is_very_thin(Necklace{{1, 2, 1}}));
  CHECK(!is_thin(Necklace{{2, 2}}));
  CHECK(!is_thin(Necklace{{3}}));
}

TEST_CASE("realize produces the expected wedges") {
  TruncatedSSet R = realize(Necklace{{1, 1}}, 3);
  CHECK(validate(R).ok);
  CHECK(R.num_cells(0) == 3);
  int nondeg = 0;
  for (int e = 0; e < R.num_cells(1); ++e)
    if (!R.is_degenerate(1, e)) ++nondeg;
  CHECK(nondeg == 2);
  TruncatedSSet R2 = realize(Necklace{{2}}, 3);
  TruncatedSSet D2 = standard_simplex(2, 3);
  for (int n = 0; n <= 3; ++n) CHECK(R2.num_cells(n) == D2.num_cells(n));
  CHECK(realize(Necklace{}, 2).num_cells(0) == 1);
}

TEST_CASE("J and JR") {
  JoinResult j = J({Necklace{{2}}, Necklace{{1}}});
  CHECK(j.necklace == Necklace{{2, 1}});
  CHECK(j.anchor == Monotone{0, 2, 3});
  JoinResult j1 = J({Necklace{{1}}});
  CHECK(j1.necklace == Necklace{{1}});
  CHECK(j1.anchor == Monotone{0, 1});
  JoinResult j2 = J({Necklace{{1, 1}}, Necklace{{2}}});
  CHECK(j2.necklace == Necklace{{1, 1, 2}});
  CHECK(j2.anchor == Monotone{0, 2, 4});

  CHECK(JR(Necklace{{2, 1}}, {0, 2, 3}) ==
        std::vector<Necklace>{Necklace{{2}}, Necklace{{1}}});
  CHECK(JR(Necklace{{3}}, {0, 1, 3}) ==
        std::vector<Necklace>{Necklace{{1}}, Necklace{{2}}});
  CHECK(JR(Necklace{{2, 1}}, {0, 3}) == std::vector<Necklace>{Necklace{{2, 1}}});
  CHECK(JR(Necklace{{2}}, {0, 0, 2}) ==
        std::vector<Necklace>{Necklace{}, Necklace{{2}}});
}

TEST_CASE("slice categories and pi0") {
  TruncatedSSet D1 = standard_simplex(1, 3);
  SliceGraph g = slice_category(D1, 0, 1, 3);
  CHECK(pi0(g).num_components == 1);

  TruncatedSSet B = boundary(2, 3);
  int v0 = B.cell_index(0, "0"), v2 = B.cell_index(0, "2");
  CHECK(pi0(slice_category(B, v0, v2, 3)).num_components == 2);

  TruncatedSSet D2 = standard_simplex(2, 3);
  CHECK(pi0(slice_category(D2, 0, 2, 3)).num_components == 1);

  CHECK(pi0(0, {}).num_components == 0);
  CHECK(pi0(2, {{0, 1}}).num_components == 1);
}

TEST_CASE("sifted witnesses") {
  CHECK(sifted_witness(Necklace{{1}}, Necklace{{1}}, 2).connected);
  CHECK(sifted_witness(Necklace{{1}}, Necklace{{2}}, 4).connected);
  CHECK(sifted_witness(Necklace{}, Necklace{{2}}, 2).connected);
}

TEST_CASE("L-faithfulness at small totals") {
  auto all = necklaces_up_to(4);
  for (const Necklace& N : all)
    for (const Necklace& M : all) {
      auto maps = hom_set(N, M);
      for (size_t i = 0; i < maps.size(); ++i)
        for (size_t j = i + 1; j < maps.size(); ++j)
          CHECK(maps[i].vertex_map != maps[j].vertex_map);
    }
}
