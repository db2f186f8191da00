#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "curveatlas/picard.hpp"
#include "curveatlas/solvers.hpp"

using namespace curveatlas;

namespace {

// independent oracles: naive enumeration checking the defining equations

std::vector<std::pair<i64, i64>> scroll_oracle(i64 n, i64 d, i64 g) {
  std::vector<std::pair<i64, i64>> out;
  for (i64 a = 1; a <= 60; ++a)
    for (i64 b = -200; b <= 200; ++b)
      if (n * a + b == d && n * a * (a - 1) / 2 + (a - 1) * (b - 1) == g) out.emplace_back(a, b);
  return out;
}

std::vector<std::array<i64, 3>> cone_oracle(i64 n, i64 d) {
  std::vector<std::array<i64, 3>> out;
  for (i64 k = 2; k <= d; ++k) {
    const i64 m = d - n * k;
    if (m < 0) continue;
    out.push_back({k, m, (k - 1) * (2 * d - n * k - 2) / 2});
  }
  return out;
}

// every sorted tuple with a, b1 <= 24, bucketed by (degree, self-intersection);
// covers deg <= 18, self >= -10 (the Schwartz cap keeps a <= 24 there)
const std::map<std::pair<i64, i64>, std::vector<std::array<i64, 6>>>& delpezzo_buckets() {
  static const auto m = [] {
    std::map<std::pair<i64, i64>, std::vector<std::array<i64, 6>>> out;
    for (i64 a = 0; a <= 24; ++a)
      for (i64 b1 = 0; b1 <= 24; ++b1)
        for (i64 b2 = 0; b2 <= b1; ++b2)
          for (i64 b3 = 0; b3 <= b2; ++b3)
            for (i64 b4 = 0; b4 <= b3; ++b4)
              for (i64 b5 = 0; b5 <= b4; ++b5) {
                const i64 deg = 3 * a - (b1 + b2 + b3 + b4 + b5);
                const i64 self = a * a - (b1 * b1 + b2 * b2 + b3 * b3 + b4 * b4 + b5 * b5);
                if (deg >= 1 && deg <= 18 && self >= -10 && self <= 81)
                  out[{deg, self}].push_back({a, b1, b2, b3, b4, b5});
              }
    return out;
  }();
  return m;
}

}  // namespace

TEST_CASE("scroll solutions match the tabulated lists") {
  auto as_pairs = [](const std::vector<ScrollSolution>& v) {
    std::vector<std::pair<i64, i64>> p;
    for (const auto& s : v) p.emplace_back(s.a, s.b);
    return p;
  };
  CHECK(as_pairs(scroll_solutions(3, 13, 18)) ==
        std::vector<std::pair<i64, i64>>{{4, 1}, {5, -2}});
  CHECK(scroll_solutions(3, 14, 19).empty());
  CHECK(as_pairs(scroll_solutions(3, 14, 21)) == std::vector<std::pair<i64, i64>>{{4, 2}});
  CHECK(as_pairs(scroll_solutions(3, 14, 20)) == std::vector<std::pair<i64, i64>>{{6, -4}});
  for (i64 r = 7; r <= 13; ++r)
    CHECK(as_pairs(scroll_solutions(r - 1, 2 * r + 4, r + 9)) ==
          std::vector<std::pair<i64, i64>>{{3, 7 - r}});
  CHECK(as_pairs(scroll_solutions(5, 16, 15)) ==
        std::vector<std::pair<i64, i64>>{{3, 1}, {4, -4}});
}

TEST_CASE("scroll solutions agree with the brute-force oracle") {
  for (i64 n = 2; n <= 6; ++n)
    for (i64 d = 1; d <= 40; ++d) {
      // collect oracle hits once per (n,d), grouped by genus
      std::map<i64, std::vector<std::pair<i64, i64>>> by_genus;
      for (i64 a = 1; a <= 60; ++a) {
        const i64 b = d - n * a;
        if (b < -200 || b > 200) continue;
        const i64 g = n * a * (a - 1) / 2 + (a - 1) * (b - 1);
        if (g >= 0 && g <= 60) by_genus[g].emplace_back(a, b);
      }
      for (i64 g = 0; g <= 60; ++g) {
        const auto got = scroll_solutions(n, d, g);
        std::vector<std::pair<i64, i64>> pairs;
        for (const auto& s : got) pairs.emplace_back(s.a, s.b);
        const auto it = by_genus.find(g);
        const std::vector<std::pair<i64, i64>> expect =
            it == by_genus.end() ? std::vector<std::pair<i64, i64>>{} : it->second;
        REQUIRE(pairs == expect);
      }
    }
  // spot-check the full two-variable oracle on the tabulated cases
  CHECK(scroll_oracle(3, 13, 18) == std::vector<std::pair<i64, i64>>{{4, 1}, {5, -2}});
  CHECK(scroll_oracle(3, 14, 20) == std::vector<std::pair<i64, i64>>{{6, -4}});
}

TEST_CASE("scroll solutions re-substitute into their equations") {
  for (i64 n = 2; n <= 6; ++n)
    for (i64 d = 1; d <= 40; ++d)
      for (i64 g : {0L, 5L, 12L, 18L, 21L, 26L, 40L})
        for (const auto& s : scroll_solutions(n, d, g)) {
          CHECK(n * s.a + s.b == d);
          CHECK(n * s.a * (s.a - 1) / 2 + (s.a - 1) * (s.b - 1) == g);
          CHECK(s.pa == g);
        }
}

TEST_CASE("cone solutions match the tabulated tables") {
  const auto c13 = cone_solutions(3, 13);
  REQUIRE(c13.size() == 3);
  CHECK((c13[0].k == 2 && c13[0].m == 7 && c13[0].pa == 9));
  CHECK((c13[1].k == 3 && c13[1].m == 4 && c13[1].pa == 15));
  CHECK((c13[2].k == 4 && c13[2].m == 1 && c13[2].pa == 18));

  const auto c14 = cone_solutions(3, 14);
  REQUIRE(c14.size() == 3);
  CHECK((c14[0].k == 2 && c14[0].m == 8 && c14[0].pa == 10));
  CHECK((c14[1].k == 3 && c14[1].m == 5 && c14[1].pa == 17));
  CHECK((c14[2].k == 4 && c14[2].m == 2 && c14[2].pa == 21));

  for (i64 n = 2; n <= 8; ++n) {
    const auto sols = cone_solutions(n, 2 * n);
    const bool found = std::any_of(sols.begin(), sols.end(), [&](const ConeSolution& c) {
      return c.k == 2 && c.m == 0 && c.pa == n - 1;
    });
    CHECK(found);
  }
}

TEST_CASE("cone solutions agree with the oracle and grow in genus") {
  for (i64 n = 2; n <= 6; ++n)
    for (i64 d = 1; d <= 40; ++d) {
      const auto got = cone_solutions(n, d);
      const auto expect = cone_oracle(n, d);
      REQUIRE(got.size() == expect.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i].k == expect[i][0]);
        CHECK(got[i].m == expect[i][1]);
        CHECK(got[i].pa == expect[i][2]);
      }
      for (std::size_t i = 1; i < got.size(); ++i) CHECK(got[i - 1].pa < got[i].pa);
    }
}

TEST_CASE("del Pezzo class enumeration matches the tabulated lists") {
  auto views = [](const std::vector<DelPezzoSolution>& v) {
    std::vector<std::string> out;
    for (const auto& s : v)
      out.push_back(format_blowup_class(blowup_class(s.a, {s.b[0], s.b[1], s.b[2], s.b[3], s.b[4]})));
    return out;
  };
  CHECK(views(delpezzo_solutions(12, 36)) == std::vector<std::string>{"(9;3^5)"});
  CHECK(views(delpezzo_solutions(14, 48)) ==
        std::vector<std::string>{"(10;4,3^4)", "(11;4^4,3)"});
  CHECK(views(delpezzo_solutions(15, 55)) ==
        std::vector<std::string>{"(10;3^5)", "(11;4^3,3^2)", "(12;5,4^4)"});
}

TEST_CASE("del Pezzo enumeration agrees with the brute-force oracle") {
  const auto& buckets = delpezzo_buckets();
  for (i64 deg = 1; deg <= 18; ++deg)
    for (i64 self = -10; self <= 81; ++self) {
      const auto got = delpezzo_solutions(deg, self);
      std::vector<std::array<i64, 6>> flat;
      for (const auto& s : got)
        flat.push_back({s.a, s.b[0], s.b[1], s.b[2], s.b[3], s.b[4]});
      std::sort(flat.begin(), flat.end());
      const auto it = buckets.find({deg, self});
      std::vector<std::array<i64, 6>> expect =
          it == buckets.end() ? std::vector<std::array<i64, 6>>{} : it->second;
      std::sort(expect.begin(), expect.end());
      REQUIRE(flat == expect);
    }
}

TEST_CASE("quadratically related del Pezzo class lists share all invariants") {
  for (const auto& [deg, self] : std::vector<std::pair<i64, i64>>{{14, 48}, {15, 55}}) {
    const auto sols = delpezzo_solutions(deg, self);
    REQUIRE(!sols.empty());
    const i64 genus = delpezzo_genus(sols[0]);
    for (const auto& s : sols) {
      i64 sb = 0, sb2 = 0;
      for (i64 bi : s.b) sb += bi, sb2 += bi * bi;
      CHECK(3 * s.a - sb == deg);
      CHECK(s.a * s.a - sb2 == self);
      CHECK(delpezzo_genus(s) == genus);
    }
  }
}

TEST_CASE("del Pezzo multiplicity floor filters the list") {
  CHECK(delpezzo_solutions(12, 36, 3).size() == 1);
  CHECK(delpezzo_solutions(12, 36, 4).empty());
  // min_b = 0 admits zero entries elsewhere: a legal class with a zero
  const auto sols = delpezzo_solutions(3, 1, 0);  // (2;1,1,1,0,0) etc.
  for (const auto& s : sols) CHECK(s.b[4] >= 0);
}

TEST_CASE("Veronese parity and genus check") {
  CHECK(!veronese_plane_genus(13).has_value());
  CHECK(veronese_plane_genus(14) == 15);  // eliminates the Veronese branch at (14,14)
  CHECK(veronese_plane_genus(12) == 10);
  for (i64 e = 1; e <= 20; ++e) CHECK(veronese_plane_genus(2 * e) == (e - 1) * (e - 2) / 2);
}

TEST_CASE("quadric types match the tabulated cases and the oracle") {
  CHECK(quadric_type_solutions(9, 11).empty());
  CHECK(quadric_type_solutions(10, 12) == std::vector<std::pair<i64, i64>>{{3, 7}});
  CHECK(quadric_type_solutions(11, 13).empty());
  for (i64 d = 0; d <= 40; ++d)
    for (i64 g = 0; g <= 60; ++g) {
      std::vector<std::pair<i64, i64>> expect;
      for (i64 a = 0; a <= d; ++a) {
        const i64 b = d - a;
        if (a <= b && (a - 1) * (b - 1) == g) expect.emplace_back(a, b);
      }
      CHECK(quadric_type_solutions(d, g) == expect);
    }
}
