#include <doctest.h>

#include <fstream>
#include <sstream>

#include "curveatlas/ampleness.hpp"

using namespace curveatlas;

namespace {

const AxiomTable& axioms() { return AxiomTable::paper_defaults(); }

DivisorClass bp(const std::string& text) { return parse_blowup_class(text).cls; }

}  // namespace

TEST_CASE("smooth-member threshold on few blown-up points") {
  CHECK(check_smooth_member(6, bp("(9;3^5,2)")) == SmallCase::Yes);
  CHECK(check_smooth_member(5, bp("(5;5,0^4)")) == SmallCase::No);
  CHECK(check_smooth_member(6, blowup_class(9, {3, 3, 3, 3, 3, -1})) == SmallCase::No);
  CHECK(check_smooth_member(7, bp("(9;3^6,2)")) == SmallCase::OutOfScope);
  CHECK(check_smooth_member(5, bp("(4;3,3,3,1,1)")) == SmallCase::OutOfScope);  // a < b1+b2+b3
  CHECK(check_smooth_member(3, bp("(3;1,1,1)")) == SmallCase::Yes);
}

TEST_CASE("linear normality threshold and its exceptional family") {
  CHECK(check_linear_normality_small(6, bp("(9;3^5,2)")).value == SmallCase::Yes);
  CHECK(check_linear_normality_small(6, bp("(10;6,2^2,1^3)")).value == SmallCase::Yes);
  CHECK(check_linear_normality_small(6, bp("(9;3^5,0)")).value == SmallCase::No);

  // (λ+3t; λ+t, t, ..., t): normal iff t >= 2
  for (i64 s = 3; s <= 6; ++s) {
    for (i64 lambda = 2; lambda <= 4; ++lambda) {
      std::vector<i64> b{lambda + 1};
      b.insert(b.end(), s - 1, 1);
      const auto res_t1 = check_linear_normality_small(s, blowup_class(lambda + 3, b));
      CHECK(res_t1.value == SmallCase::No);
      CHECK(!res_t1.note.empty());

      std::vector<i64> b2{lambda + 2};
      b2.insert(b2.end(), s - 1, 2);
      CHECK(check_linear_normality_small(s, blowup_class(lambda + 6, b2)).value == SmallCase::Yes);
    }
  }
}

TEST_CASE("linear normality through a dominated very ample embedding") {
  const DivisorClass bordiga10 = bp("(4;1^10)");
  for (i64 delta = 1; delta <= 8; ++delta) {
    std::vector<i64> b{3};
    b.insert(b.end(), delta, 2);
    b.insert(b.end(), 9 - delta, 1);
    CHECK(check_linear_normality_corollary_b(bordiga10, blowup_class(9, b), 10, axioms()) ==
          CorollaryB::Yes);
  }
  const DivisorClass bordiga9 = bp("(4;1^9)");
  for (i64 delta = 1; delta <= 4; ++delta) {
    std::vector<i64> b{3, 3, 3, 3, 3};
    b.insert(b.end(), delta - 1, 2);
    b.insert(b.end(), 5 - delta, 1);
    CHECK(check_linear_normality_corollary_b(bordiga9, blowup_class(10, b), 9, axioms()) ==
          CorollaryB::Yes);
  }
  CHECK(check_linear_normality_corollary_b(bordiga10, bordiga10, 10, axioms()) ==
        CorollaryB::NotApplicable);
  // embed with b_s = 0 is outside the hypotheses
  CHECK(check_linear_normality_corollary_b(bp("(4;1^9,0)"), bp("(9;3,2,1^8)"), 10, axioms()) ==
        CorollaryB::NotApplicable);
}

TEST_CASE("very-ampleness certificates via decomposition") {
  for (i64 delta = 1; delta <= 4; ++delta) {
    std::vector<i64> b1{3, 3, 3, 3, 3};
    b1.insert(b1.end(), delta - 1, 2);
    b1.insert(b1.end(), 5 - delta, 1);
    const auto cert = certify_very_ample(9, blowup_class(10, b1), axioms());
    REQUIRE(cert.has_value());
    CHECK(cert->revalidate());
    REQUIRE(!cert->summands.empty());
    // first summand is a very ample axiom at natural length
    CHECK(axioms().find_very_ample(cert->summands[0].first, 9).has_value());
    for (std::size_t i = 1; i < cert->summands.size(); ++i)
      CHECK(axioms().find_base_point_free(cert->summands[i].first, 9).has_value());

    std::vector<i64> b2{6, 4, 3, 3, 3};
    b2.insert(b2.end(), 4 - delta, 2);
    b2.insert(b2.end(), delta, 1);
    CHECK(certify_very_ample(9, blowup_class(12, b2), axioms()).has_value());

    std::vector<i64> b3{8, 4, 4, 4, 3};
    b3.insert(b3.end(), 4 - delta, 2);
    b3.insert(b3.end(), delta, 1);
    CHECK(certify_very_ample(9, blowup_class(14, b3), axioms()).has_value());
  }

  for (i64 delta = 1; delta <= 8; ++delta) {
    std::vector<i64> b{3};
    b.insert(b.end(), delta, 2);
    b.insert(b.end(), 9 - delta, 1);
    CHECK(certify_very_ample(10, blowup_class(9, b), axioms()).has_value());
  }

  // direct axioms certify themselves
  const auto direct = certify_very_ample(5, bp("(3;1^5)"), axioms());
  REQUIRE(direct.has_value());
  CHECK(direct->summands.empty());
  CHECK(!direct->citation.empty());

  // a recorded non-very-ample system must not acquire a certificate
  CHECK(!certify_very_ample(3, bp("(5;4,1^2)"), axioms()).has_value());
  CHECK(axioms().find_not_very_ample(bp("(5;4,1)"), 2).has_value());
  CHECK(axioms().find_not_very_ample(bp("(4;3,1^4)"), 5).has_value());
}

TEST_CASE("restriction-map isomorphism route") {
  SurfaceModel f1 = SurfaceModel::hirzebruch(1);
  f1.polarization = DivisorClass{{1, 2}};  // H
  // D = 2H-L = 2C0+3f against C = 5H-2L = 5C0+8f: D-C = K-H and 3H-L very ample
  CHECK(restriction_iso_check(f1, DivisorClass{{2, 3}}, DivisorClass{{5, 8}}, axioms()) ==
        RestrictionIso::Iso);
  // D = H+2L = C0+4f against C = 4H+L = 4C0+9f
  CHECK(restriction_iso_check(f1, DivisorClass{{1, 4}}, DivisorClass{{4, 9}}, axioms()) ==
        RestrictionIso::Iso);
  CHECK(restriction_iso_check(f1, DivisorClass{{2, 3}}, DivisorClass{{2, 3}}, axioms()) ==
        RestrictionIso::Unknown);

  // octic models: kernel class -(5;2,1^(8-r)) certified through (3;1^(9-r)) + pullback
  for (i64 r = 3; r <= 7; ++r) {
    std::vector<i64> hb{1};
    hb.insert(hb.end(), 8 - r, 0);
    SurfaceModel surf = SurfaceModel::blow_up(9 - r, blowup_class(2, hb));
    std::vector<i64> cb{3};
    cb.insert(cb.end(), 8 - r, 2);
    std::vector<i64> db(static_cast<std::size_t>(9 - r), 1);
    CHECK(restriction_iso_check(surf, blowup_class(3, db), blowup_class(8, cb), axioms()) ==
          RestrictionIso::Iso);
  }

  SurfaceModel no_pol = SurfaceModel::hirzebruch(1);
  CHECK(restriction_iso_check(no_pol, DivisorClass{{2, 3}}, DivisorClass{{5, 8}}, axioms()) ==
        RestrictionIso::Unknown);
}

TEST_CASE("axiom table parsing round-trips the shipped file") {
  std::ifstream in(std::string(CURVEATLAS_REPO_DATA_DIR) + "/axioms_paper.txt");
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  const AxiomTable from_file = AxiomTable::parse(buf.str());
  REQUIRE(from_file.all().size() == axioms().all().size());
  for (std::size_t i = 0; i < from_file.all().size(); ++i) {
    CHECK(from_file.all()[i].cls == axioms().all()[i].cls);
    CHECK(from_file.all()[i].property == axioms().all()[i].property);
    CHECK(from_file.all()[i].citation == axioms().all()[i].citation);
  }
  for (const auto& ax : axioms().all()) CHECK(!ax.citation.empty());
}

TEST_CASE("axiom table rejects uncited lines") {
  CHECK_THROWS_AS(AxiomTable::parse("(3;1) P2_1 very_ample"), std::invalid_argument);
  CHECK_THROWS_AS(AxiomTable::parse("(3;1) F1 very_ample cite"), std::invalid_argument);
  CHECK_THROWS_AS(AxiomTable::parse("(3;1) P2_1 sorta_ample cite"), std::invalid_argument);
  CHECK(AxiomTable::parse("# comment only\n\n").all().empty());
}

TEST_CASE("linear normality implies a smooth member on the shared domain") {
  for (i64 s = 3; s <= 6; ++s)
    for (i64 a = 0; a <= 10; ++a)
      for (i64 b1 = -1; b1 <= 4; ++b1)
        for (i64 b_rest = -1; b_rest <= b1; ++b_rest) {
          std::vector<i64> b{b1};
          b.insert(b.end(), s - 1, b_rest);
          const DivisorClass cls = blowup_class(a, b);
          if (check_linear_normality_small(s, cls).value == SmallCase::Yes)
            CHECK(check_smooth_member(s, cls) == SmallCase::Yes);
        }
}

TEST_CASE("certificates stay within nonnegative decompositions") {
  // the search must not write (8;3) = (9;4) + (-1;-1): remainders stay >= 0
  const auto cert = certify_very_ample(1, bp("(8;3)"), axioms());
  REQUIRE(cert.has_value());
  if (!cert->summands.empty()) {
    for (const auto& [cls, cit] : cert->summands)
      for (i64 v : blowup_view(cls)) CHECK(v >= 0);
  }
}
