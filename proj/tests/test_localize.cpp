#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hocat/localize.hpp>
#include <hocat/sset.hpp>

using namespace hocat;

TEST_CASE("simplex category of the interval") {
  auto X = standard_simplex(1, 3);
  auto C = simplex_category(X);
  CHECK(C.objects.size() == 3);  // 0, 1, 01
  CHECK(C.arrows.size() == 5);   // 3 identities + 2 vertex inclusions
  int marked = 0;
  for (const auto& a : C.arrows)
    if (a.marked) ++marked;
  // identities plus the max-vertex inclusion 1 -> 01
  CHECK(marked == 4);
  std::string why;
  CHECK(marking_ok(C, &why));
}

TEST_CASE("simplex category of the triangle boundary") {
  auto X = boundary(2, 3);
  auto C = simplex_category(X);
  CHECK(C.objects.size() == 6);   // 3 vertices, 3 edges
  CHECK(C.arrows.size() == 12);   // 6 identities + 2 inclusions per edge
  CHECK(marking_ok(C));
}

TEST_CASE("simplex category with a degenerate cap includes degeneracies") {
  auto X = standard_simplex(0, 3);
  auto C0 = simplex_category(X);
  auto C1 = simplex_category(X, 1);
  CHECK(C0.objects.size() == 1);
  CHECK(C1.objects.size() == 2);  // the vertex and its degenerate edge
  CHECK(C1.objects.size() > C0.objects.size());
  CHECK(marking_ok(C1));
}

TEST_CASE("zigzag localization of the point is trivial") {
  auto X = standard_simplex(0, 3);
  auto C = simplex_category(X);
  auto L = localize(C);
  CHECK(L.engine.status == RewriteEngine::Status::Complete);
  CHECK(count_loc_classes(L, 0, 0, 6) == 1);
}

TEST_CASE("zigzag localization of the interval") {
  auto X = standard_simplex(1, 3);
  auto C = simplex_category(X);
  auto L = localize(C);
  int v0 = C.obj_index.at("0:0");
  int v1 = C.obj_index.at("0:1");
  int e = C.obj_index.at("1:0.1");
  // the marked inclusion 1 -> 01 becomes invertible: 1 and 01 merge
  CHECK(count_loc_classes(L, v0, v1, 6) == 1);
  CHECK(count_loc_classes(L, v1, v0, 6) == 0);
  CHECK(count_loc_classes(L, v1, e, 6) == 1);
  CHECK(count_loc_classes(L, e, v1, 6) == 1);
}

TEST_CASE("zigzag localization of spine(2)") {
  auto X = spine(2, 3);
  auto C = simplex_category(X);
  auto L = localize(C);
  int v0 = C.obj_index.at("0:0");
  int v2 = C.obj_index.at("0:2");
  CHECK(count_loc_classes(L, v0, v2, 8) == 1);
  CHECK(count_loc_classes(L, v2, v0, 8) == 0);
}

TEST_CASE("reduced localization matches direct hom counts") {
  auto B = boundary(2, 3);
  auto RL = localize_reduced(B);
  CHECK(RL.exact);
  CHECK(RL.sat.hom_classes(RL.pres, 0, 2).size() == 2);
  CHECK(RL.sat.hom_classes(RL.pres, 0, 1).size() == 1);
  CHECK(RL.sat.hom_classes(RL.pres, 1, 0).size() == 0);

  auto D2 = standard_simplex(2, 3);
  auto RD = localize_reduced(D2);
  CHECK(RD.exact);
  CHECK(RD.sat.hom_classes(RD.pres, 0, 2).size() == 1);
}

TEST_CASE("reduced generators carry the long edge of their simplex") {
  auto X = standard_simplex(2, 3);
  auto RL = localize_reduced(X);
  for (size_t g = 0; g < RL.origin.size(); ++g) {
    const auto& o = RL.origin[g];
    int expect =
        X.pullback_cell(o.dim, o.idx, Monotone{std::vector<int>{o.j, o.dim}});
    CHECK(RL.gen_edge[g] == expect);
  }
}

TEST_CASE("last vertex functor is functorial on small complexes") {
  std::string why;
  for (auto X : {standard_simplex(2, 3), boundary(2, 3), spine(3, 3),
                 horn(2, 1, 3)}) {
    auto F = last_vertex_functor(X);
    CHECK_MESSAGE(last_vertex_functor_ok(F, &why), why);
  }
  auto P = product(standard_simplex(1, 3), standard_simplex(1, 3));
  auto F = last_vertex_functor(P);
  CHECK_MESSAGE(last_vertex_functor_ok(F, &why), why);
}

TEST_CASE("last vertex functor sends the d2 face of the triangle to edge 01") {
  auto X = standard_simplex(2, 3);
  auto F = last_vertex_functor(X);
  int src = F.C.obj_index.at("1:0.1");
  int tgt = F.C.obj_index.at("2:0.1.2");
  int found = -1;
  for (size_t i = 0; i < F.C.arrows.size(); ++i) {
    const auto& a = F.C.arrows[i];
    if (a.src == src && a.tgt == tgt && a.alpha == std::vector<int>{0, 1})
      found = int(i);
  }
  REQUIRE(found >= 0);
  // the image is the class of the long edge (1, 2) of the triangle
  int c012 = F.C.objects[tgt].idx;
  int e12 = X.pullback_cell(2, c012, Monotone{std::vector<int>{1, 2}});
  EdgeWord w;
  w.edges = {e12};
  CHECK(F.arrow_class[found] == F.h1.class_of_edge_word(X, w));
}

TEST_CASE("localization comparison certifies small complexes") {
  for (auto X : {standard_simplex(2, 3), spine(3, 3), horn(2, 1, 3)}) {
    auto R = compare_localization(X);
    CHECK_MESSAGE(R.conclusive, R.detail);
    CHECK(R.marked_connectivity);
    CHECK(R.equivalence);
    for (const auto& row : R.rows) CHECK(row.match);
  }
}

TEST_CASE("localization comparison on the triangle boundary") {
  auto X = boundary(2, 3);
  auto R = compare_localization(X);
  CHECK(R.conclusive);
  CHECK(R.equivalence);
  bool saw02 = false;
  for (const auto& row : R.rows)
    if (row.x == 0 && row.y == 2) {
      saw02 = true;
      CHECK(row.loc_classes == 2);
      CHECK(row.h1_classes == 2);
    }
  CHECK(saw02);
  auto tbl = R.table();
  CHECK(tbl.find("equivalence certified") != std::string::npos);
}

TEST_CASE("localization comparison on a discrete complex") {
  auto X = disjoint_union(standard_simplex(0, 3), standard_simplex(0, 3));
  auto R = compare_localization(X);
  CHECK(R.conclusive);
  CHECK(R.equivalence);
  for (const auto& row : R.rows) {
    int expect = row.x == row.y ? 1 : 0;
    CHECK(row.loc_classes == expect);
    CHECK(row.h1_classes == expect);
  }
}

TEST_CASE("verification mode agrees with the reduced localization") {
  // the zigzag localization counts, computed per vertex pair, match the
  // reduced saturation on a small complex
  auto X = spine(2, 3);
  auto C = simplex_category(X);
  auto L = localize(C);
  auto RL = localize_reduced(X);
  REQUIRE(RL.exact);
  for (int x = 0; x < int(X.cells[0].size()); ++x)
    for (int y = 0; y < int(X.cells[0].size()); ++y) {
      int a = C.obj_index.at("0:" + X.cells[0][x]);
      int b = C.obj_index.at("0:" + X.cells[0][y]);
      CHECK(count_loc_classes(L, a, b, 8) ==
            int(RL.sat.hom_classes(RL.pres, x, y).size()));
    }
}
