#pragma once

// Castelnuovo genus bounds, Brill-Noether numbers, the Castelnuovo-Severi
// inequality and the birational-dimension bounds used by the classifier.

#include <cstdint>
#include <stdexcept>

namespace curveatlas {

using i64 = std::int64_t;

struct CurveTriple {
  i64 d;  // degree, >= 1
  i64 g;  // genus, >= 0
  i64 r;  // ambient projective dimension, >= 2

  i64 alpha() const { return g - d + r; }  // index of speciality, derived
};

/// First Castelnuovo bound: max arithmetic genus of an irreducible
/// nondegenerate degree-d curve in P^r. Requires d >= r >= 2.
i64 pi_bound(i64 d, i64 r);

/// Second Castelnuovo bound (curves not on a surface of minimal degree).
/// Closed form calibrated on the tabulated values; refuses d < 2r, where the
/// calibration is unverified.
i64 pi1_bound(i64 d, i64 r);

/// Brill-Noether number rho = g - (r+1)(g-d+r).
i64 rho(i64 d, i64 g, i64 r);

/// lambda = 3g - 3 + rho: lower bound for dim of any component of G^r_d.
i64 lambda_dim(i64 d, i64 g, i64 r);

/// Expected Hilbert-scheme dimension lambda + dim PGL(r+1).
i64 hilb_expected_dim(i64 d, i64 g, i64 r);

/// Castelnuovo-Severi: a genus-g curve with coverings of degrees m, n onto
/// curves of genera h, q (no common factorization) has
/// g <= m h + n q + (m-1)(n-1).
i64 castelnuovo_severi_max_genus(i64 m, i64 h, i64 n, i64 q);

/// Max dimension r of a birationally very ample g^r_d on a genus-g curve:
/// floor((d+1)/3) if d <= g, floor((2d-g+1)/3) otherwise.
i64 max_birational_dim(i64 d, i64 g);

/// The same bound read as a cap on the index of speciality:
/// floor((3g-2d+1)/3) if d <= g, floor((2g-d+1)/3) otherwise.
i64 max_speciality(i64 d, i64 g);

/// dim PGL(r+1) = (r+1)^2 - 1.
i64 pgl_dim(i64 r);

}  // namespace curveatlas
