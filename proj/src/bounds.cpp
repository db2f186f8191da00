#include "curveatlas/bounds.hpp"

namespace curveatlas {

namespace {

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

i64 pi_bound(i64 d, i64 r) {
  if (r < 2) throw std::invalid_argument("pi(d,r): r must be >= 2");
  if (d < r) throw std::out_of_range("pi(d,r): nondegenerate range needs d >= r");
  const i64 m = (d - 1) / (r - 1);
  const i64 eps = (d - 1) - m * (r - 1);
  return m * (m - 1) * (r - 1) / 2 + m * eps;
}

i64 pi1_bound(i64 d, i64 r) {
  if (r < 2) throw std::invalid_argument("pi1(d,r): r must be >= 2");
  if (d < 2 * r)
    throw std::domain_error("pi1(d,r): closed form is calibrated only for d >= 2r");
  const i64 m = d / r;
  const i64 eps = d - m * r;
  return m * (m - 1) * r / 2 + m * eps + (eps == 0 ? 1 : 0);
}

i64 rho(i64 d, i64 g, i64 r) { return g - (r + 1) * (g - d + r); }

i64 lambda_dim(i64 d, i64 g, i64 r) { return 3 * g - 3 + rho(d, g, r); }

i64 hilb_expected_dim(i64 d, i64 g, i64 r) { return lambda_dim(d, g, r) + pgl_dim(r); }

i64 castelnuovo_severi_max_genus(i64 m, i64 h, i64 n, i64 q) {
  return m * h + n * q + (m - 1) * (n - 1);
}

i64 max_birational_dim(i64 d, i64 g) {
  if (d < 0 || g < 0) throw std::invalid_argument("max_birational_dim: d, g must be >= 0");
  return d <= g ? floor_div(d + 1, 3) : floor_div(2 * d - g + 1, 3);
}

i64 max_speciality(i64 d, i64 g) {
  if (d < 0 || g < 0) throw std::invalid_argument("max_speciality: d, g must be >= 0");
  return d <= g ? floor_div(3 * g - 2 * d + 1, 3) : floor_div(2 * g - d + 1, 3);
}

i64 pgl_dim(i64 r) { return (r + 1) * (r + 1) - 1; }

}  // namespace curveatlas
