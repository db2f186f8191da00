#pragma once

// Exhaustive integer enumeration of curve classes on minimal-degree surfaces
// (smooth scrolls and rational normal cones) and on the quartic del Pezzo in
// P^4. Every returned solution re-substitutes exactly into its defining
// equations.

#include <array>
#include <optional>
#include <cstdint>
#include <vector>

namespace curveatlas {

using i64 = std::int64_t;

/// Class aH + bL on a degree-n smooth scroll: na + b = d and
/// n a(a-1)/2 + (a-1)(b-1) = g.
struct ScrollSolution {
  i64 a;
  i64 b;
  i64 pa;  // = g of the defining equations
};

/// Curve through the vertex picture on a cone over a rational normal curve
/// of degree n: strict transform k h + (d - nk) f on F_n, vertex
/// multiplicity m = d - nk >= 0, p_a = (k-1)(2d - nk - 2)/2.
struct ConeSolution {
  i64 k;
  i64 m;
  i64 pa;
};

/// Class (a; b1 >= ... >= b5), b_i >= 0, on the quartic del Pezzo P^2_5:
/// 3a - sum b_i = degree, a^2 - sum b_i^2 = self-intersection.
struct DelPezzoSolution {
  i64 a;
  std::array<i64, 5> b;
};

/// All (a, b), a >= 1, solving the scroll degree/genus equations; ascending
/// in a; complete (the genus is the downward parabola (a-1)(d-1-na/2), so
/// a <= 2(d-1)/n + 1 exhausts every a with nonnegative genus).
std::vector<ScrollSolution> scroll_solutions(i64 n, i64 d, i64 g);

/// All fiber degrees k >= 2 with vertex multiplicity m = d - nk >= 0,
/// ascending in k.
std::vector<ConeSolution> cone_solutions(i64 n, i64 d);

/// Complete list of del Pezzo classes with the given degree and
/// self-intersection; b_i >= min_b (default 0). Search is capped by the
/// Schwartz inequality (sum b_i)^2 <= 5 sum b_i^2.
std::vector<DelPezzoSolution> delpezzo_solutions(i64 degree, i64 self_int, i64 min_b = 0);

/// Curves of type (a, b), a <= b, on a smooth quadric in P^3 with a + b = d
/// and (a-1)(b-1) = g.
std::vector<std::pair<i64, i64>> quadric_type_solutions(i64 d, i64 g);

/// Arithmetic genus of a del Pezzo class (independent of the solver path).
i64 delpezzo_genus(const DelPezzoSolution& s);

/// Curves on a Veronese surface have even degree 2e and arithmetic genus
/// (e-1)(e-2)/2; nullopt for odd degree.
std::optional<i64> veronese_plane_genus(i64 d);

}  // namespace curveatlas
