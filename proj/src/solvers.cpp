#include "curveatlas/solvers.hpp"

#include <cstdlib>
#include <stdexcept>

namespace curveatlas {

namespace {

i64 scroll_genus(i64 n, i64 a, i64 b) { return n * a * (a - 1) / 2 + (a - 1) * (b - 1); }

}  // namespace

std::vector<ScrollSolution> scroll_solutions(i64 n, i64 d, i64 g) {
  if (n < 2 || d < 1) throw std::invalid_argument("scroll_solutions: need n >= 2, d >= 1");
  std::vector<ScrollSolution> out;
  // 2g = (a-1)(2(d-1) - na) vanishes at a = 2(d-1)/n; beyond that the genus
  // is negative, so this bound is complete for g >= 0.
  const i64 a_max = 2 * (d - 1) / n + 1;
  for (i64 a = 1; a <= std::max<i64>(a_max, 1); ++a) {
    const i64 b = d - n * a;
    if (scroll_genus(n, a, b) == g) out.push_back({a, b, g});
  }
  return out;
}

std::vector<ConeSolution> cone_solutions(i64 n, i64 d) {
  if (n < 2 || d < 1) throw std::invalid_argument("cone_solutions: need n >= 2, d >= 1");
  std::vector<ConeSolution> out;
  for (i64 k = 2; d - n * k >= 0; ++k) {
    const i64 m = d - n * k;
    const i64 twice = (k - 1) * (2 * d - n * k - 2);
    if (twice % 2 != 0) throw std::logic_error("cone genus parity violated");
    out.push_back({k, m, twice / 2});
  }
  return out;
}

std::vector<DelPezzoSolution> delpezzo_solutions(i64 degree, i64 self_int, i64 min_b) {
  std::vector<DelPezzoSolution> out;
  // Schwartz: (3a - degree)^2 <= 5(a^2 - self_int) caps a; the feasible set of
  // the upward quadratic 4a^2 - 6*degree*a + (degree^2 + 5*self_int) <= 0 is an
  // interval inside [0, 2|degree| + |self_int| + 2], scanned exactly.
  const i64 a_cap = 2 * std::abs(degree) + std::abs(self_int) + 2;
  for (i64 a = 0; a <= a_cap; ++a) {
    if (4 * a * a - 6 * degree * a + degree * degree + 5 * self_int > 0) continue;
    const i64 sb = 3 * a - degree;
    const i64 sb2 = a * a - self_int;
    if (sb < 5 * min_b || sb2 < 0) continue;
    std::array<i64, 5> b{};
    // b1 >= b2 >= ... >= b5 >= min_b with sum = sb, sum of squares = sb2
    for (b[0] = sb; b[0] >= min_b; --b[0]) {
      if (b[0] * b[0] > sb2) continue;
      for (b[1] = std::min(b[0], sb - b[0]); b[1] >= min_b; --b[1]) {
        for (b[2] = std::min(b[1], sb - b[0] - b[1]); b[2] >= min_b; --b[2]) {
          for (b[3] = std::min(b[2], sb - b[0] - b[1] - b[2]); b[3] >= min_b; --b[3]) {
            b[4] = sb - b[0] - b[1] - b[2] - b[3];
            if (b[4] < min_b || b[4] > b[3]) continue;
            if (b[0] * b[0] + b[1] * b[1] + b[2] * b[2] + b[3] * b[3] + b[4] * b[4] == sb2)
              out.push_back({a, b});
          }
        }
      }
    }
  }
  return out;
}

std::vector<std::pair<i64, i64>> quadric_type_solutions(i64 d, i64 g) {
  std::vector<std::pair<i64, i64>> out;
  for (i64 a = 0; 2 * a <= d; ++a) {
    const i64 b = d - a;
    if ((a - 1) * (b - 1) == g) out.emplace_back(a, b);
  }
  return out;
}

std::optional<i64> veronese_plane_genus(i64 d) {
  if (d % 2 != 0) return std::nullopt;
  const i64 e = d / 2;
  return (e - 1) * (e - 2) / 2;
}

i64 delpezzo_genus(const DelPezzoSolution& s) {
  i64 sb = 0, sb2 = 0;
  for (i64 bi : s.b) {
    sb += bi;
    sb2 += bi * bi;
  }
  // adjunction on P^2_5: 2g - 2 = C^2 + K.C
  const i64 twice = (s.a * s.a - sb2) + (-3 * s.a + sb);
  return twice / 2 + 1;
}

}  // namespace curveatlas
