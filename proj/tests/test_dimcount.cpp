#include <doctest.h>

#include <map>

#include "curveatlas/bounds.hpp"
#include "curveatlas/dimcount.hpp"

using namespace curveatlas;

TEST_CASE("Severi expected dimension on Hirzebruch surfaces") {
  const SurfaceModel f1 = SurfaceModel::hirzebruch(1);
  CHECK(severi_expected_dim(f1, DivisorClass{{5, 8}}, 0) == 38);
  for (i64 r = 10; r <= 14; ++r)
    CHECK(severi_expected_dim(f1, DivisorClass{{5, 10}}, 14 - r) == 50 - (14 - r));
  // codimension exhausting the system: dim|L| nodes leave a finite set, one
  // more empties it
  const i64 full = severi_expected_dim(f1, DivisorClass{{4, 9}}, 0);
  CHECK(severi_expected_dim(f1, DivisorClass{{4, 9}}, full) == 0);
  CHECK(severi_expected_dim(f1, DivisorClass{{4, 9}}, full + 1) == -1);
}

TEST_CASE("family dimension modulo surface automorphisms") {
  const SurfaceModel f1 = SurfaceModel::hirzebruch(1);
  CHECK(family_dim_mod_aut(38, f1).value == 32);
  CHECK(family_dim_mod_aut(39, f1).value == 33);
  CHECK(surface_aut_dim(SurfaceModel::hirzebruch(3)) == 8);
  CHECK(surface_aut_dim(SurfaceModel::blow_up(1)) == 6);
  CHECK_THROWS_AS(surface_aut_dim(SurfaceModel::hirzebruch(5)), std::invalid_argument);
  CHECK_THROWS_AS(surface_aut_dim(SurfaceModel::blow_up(5)), std::invalid_argument);

  const FamilyDim f2 = FamilyDim::of({{"dim |(10;4,3^4)|", 31},
                                      {"dim G(1,14)", grassmannian_dim(1, 14)},
                                      {"- dim PGL(5)", -pgl_dim(4)}});
  CHECK(f2.value == 33);
}

TEST_CASE("Grassmannian dimensions") {
  CHECK(grassmannian_dim(1, 14) == 26);
  CHECK(grassmannian_dim(1, 2) == 2);
  for (i64 n = 0; n <= 20; ++n) CHECK(grassmannian_dim(0, n) == n);
  CHECK_THROWS_AS(grassmannian_dim(3, 2), std::out_of_range);
}

TEST_CASE("liaison genus relation and its involution") {
  CHECK(liaison_linked_genus(4, 4, 11, 5, 13) == 1);
  CHECK(liaison_linked_genus(3, 3, 5, 4, 1) == 0);
  for (i64 g = 0; g <= 20; ++g) CHECK(liaison_linked_genus(4, 3, 9, 9, g) == g);  // d = e
  for (i64 s = 2; s <= 5; ++s)
    for (i64 t = 2; t <= 5; ++t)
      for (i64 d = 1; d <= 15; ++d)
        for (i64 e = 1; e <= 15; ++e) {
          if ((s + t - 4) * (d - e) % 2 != 0) continue;
          for (i64 g : {0L, 3L, 13L}) {
            const i64 h = liaison_linked_genus(s, t, d, e, g);
            CHECK(liaison_linked_genus(s, t, e, d, h) == g);
          }
        }
  CHECK_THROWS_AS(liaison_linked_genus(4, 3, 10, 5, 13), std::invalid_argument);
}

TEST_CASE("curve Riemann-Roch and split normal bundles") {
  CHECK(curve_h0(26, 14, 0) == 13);
  CHECK(curve_h0(28, 18, 2) == 13);
  CHECK(curve_h0(30, 21, 3) == 13);
  CHECK(ci_normal_h0(12, 13, {2, 2, 3}, {1, 1, 0}) == 50);
  // split-surface route: 26 from the surface part plus 26 from O(2)+O(2)
  CHECK(ci_normal_h0(13, 14, {2, 2}, {0, 0}) == 26);
  CHECK(surface_curve_normal_h0(blowup_class(8, {3, 2, 2, 2, 2})).ledger[0].second +
            ci_normal_h0(13, 14, {2, 2}, {0, 0}) ==
        52);
  CHECK_THROWS_AS(ci_normal_h0(12, 13, {2, 2, 3}, {0, 0}), std::invalid_argument);
}

TEST_CASE("normal-bundle sections for curves on the quartic del Pezzo") {
  const FamilyDim a = surface_curve_normal_h0(blowup_class(8, {3, 2, 2, 2, 2}));
  CHECK(a.value == 52);
  CHECK(a.ledger[0].second == 26);
  CHECK(a.ledger[1].second == 26);
  const FamilyDim b = surface_curve_normal_h0(blowup_class(10, {4, 3, 3, 3, 3}));
  CHECK(b.value == 57);
  CHECK(b.ledger[0].second == 31);
  const FamilyDim c = surface_curve_normal_h0(blowup_class(10, {3, 3, 3, 3, 3}));
  CHECK(c.value == 61);
  CHECK(c.ledger[0].second == 35);
  CHECK_THROWS_AS(surface_curve_normal_h0(blowup_class(9, {3, 3, 3, 3, 3})),
                  std::invalid_argument);
}

TEST_CASE("family-dimension regression table") {
  std::map<std::string, i64> expected = {
      {"dim G1 (scroll family, (21,18,8))", 32},
      {"dim G2 (scroll family, (21,18,8))", 33},
      {"dim F2 ((20,18,7), del Pezzo family)", 33},
      {"dim F1 ((20,18,7), nodal scroll family)", 34},
      {"dim F0 ((20,18,7), projected scroll family)", 33},
      {"dim G_{M1,1} ((26,21,10) scroll family)", 37},
      {"dim G_{M2,0} ((26,21,10) scroll family)", 38},
      {"dim H_{11,13,3} via liaison", 44},
      {"dim Sigma (pencils of quartics through linked (11,13)+(5,1))", 46},
      {"dim of the del Pezzo family at (12,13,4)", 50},
      {"h0(N_C|P4) for the (12,13,4) complete intersection", 50},
      {"expected dim of the (13,14,4) Hilbert scheme", 52},
      {"h0(N_C|P4), C = (10;4,3^4) on the quartic del Pezzo", 57},
      {"h0(N_C|P4), C = (10;3^5) on the quartic del Pezzo", 61},
  };
  const auto table = paper_family_dims();
  std::map<std::string, i64> got;
  for (const auto& [label, fd] : table) {
    got[label] = fd.value;
    i64 sum = 0;
    for (const auto& [l, v] : fd.ledger) sum += v;
    CHECK(sum == fd.value);  // ledgers re-sum
    CHECK(!fd.ledger.empty());
  }
  for (const auto& [label, v] : expected) {
    REQUIRE(got.count(label) == 1);
    CHECK(got[label] == v);
  }
  for (i64 r = 10; r <= 14; ++r) {
    CHECK(got["dim G_N1 at r=" + std::to_string(r) + " (g=r+12 scroll family)"] == 30 + r);
    CHECK(got["dim G_31 at r=" + std::to_string(r) + " (elliptic triple covers)"] == 2 * r + 23);
    CHECK(got["lambda(2r+7,r+12,r) at r=" + std::to_string(r)] == 40 - r);
  }
  CHECK(got["dim G(1,14)"] == 26);
}

TEST_CASE("explain prints one cited line per summand") {
  const FamilyDim fd = FamilyDim::of({{"first", 40}, {"second", -6}});
  const std::string text = fd.explain();
  CHECK(text.find("first") != std::string::npos);
  CHECK(text.find("-6") != std::string::npos);
  CHECK(text.find("= 34") != std::string::npos);
}

TEST_CASE("Hurwitz space dimension") {
  CHECK(hurwitz_dim(3, 1, 22) == 42);              // 2g - 2 for elliptic triple covers
  CHECK(hurwitz_dim(2, 0, 10) == 2 * 10 + 1 - 2);  // hyperelliptic locus 2g-1
}
