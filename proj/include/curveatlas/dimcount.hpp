#pragma once

// Dimension accounting for families of curves and linear series: Severi
// varieties on Hirzebruch surfaces, automorphism quotients, Grassmannian and
// liaison counts, and normal-bundle section counts for complete
// intersections. Every value carries a ledger of cited summands.

#include <map>
#include <string>
#include <vector>

#include "curveatlas/picard.hpp"

namespace curveatlas {

struct FamilyDim {
  i64 value = 0;
  std::vector<std::pair<std::string, i64>> ledger;  // label -> signed summand

  static FamilyDim of(std::vector<std::pair<std::string, i64>> entries);
  std::string explain() const;  // one "label: value" line per summand
};

/// Expected dimension of the δ-nodal Severi variety of |aC0 + bf| on F_e
/// (irreducible of this dimension when non-empty, Tyomkin):
/// (a+1)(2b+2-ae)/2 - 1 - δ.
i64 severi_expected_dim(const SurfaceModel& s, const DivisorClass& l, i64 delta);

/// Registered automorphism-group dimensions for the modular quotients.
/// F_1 -> 6 (C^2 x| GL(2)); F_n -> n+5 for n <= 4 (Sym^n C^2 x| GL(2)/mu_n).
i64 surface_aut_dim(const SurfaceModel& s);

/// sev_dim - dim Aut(S), ledger-backed.
FamilyDim family_dim_mod_aut(i64 sev_dim, const SurfaceModel& s);

/// dim G(k, n) = (k+1)(n-k) for 0 <= k <= n.
i64 grassmannian_dim(i64 k, i64 n);

/// Hurwitz space X_{n,γ} of degree-n covers of genus-γ curves by genus-g
/// curves: 2g + (2n-3)(1-γ) - 2.
i64 hurwitz_dim(i64 n, i64 gamma, i64 g);

/// Liaison: curves of degrees d, e linked in a complete intersection of
/// surfaces of degrees s, t satisfy 2(g-h) = (s+t-4)(d-e).
i64 liaison_linked_genus(i64 s, i64 t, i64 d, i64 e, i64 g);

/// Curve Riemann-Roch h^0 = deg - g + 1 + h0_residual (caller supplies the
/// speciality correction with its citation). Nonspecial inputs with deg < g
/// give h^0 < 1; that is a caller-domain issue, not an error here.
i64 curve_h0(i64 deg, i64 g, i64 h0_residual);

/// h^0 of a split normal bundle of a complete intersection curve:
/// sum over hypersurface degrees m of curve_h0(m*d, g, residual).
i64 ci_normal_h0(i64 d, i64 g, const std::vector<i64>& hypersurface_degrees,
                 const std::vector<i64>& residual_h0s);

/// h^0(N_{C|P^4}) for a curve C on a quartic del Pezzo S in P^4 (complete
/// intersection of two quadrics): h^0(N_{C|S}) = chi(S, C) - 1 plus
/// 2 * curve_h0(2 deg C, p_a C, residual). The residual h^0(K_C - 2H) comes
/// from a cited table; unknown classes are an error.
FamilyDim surface_curve_normal_h0(const DivisorClass& c);

/// The named family-dimension regression table (each entry ledger-backed,
/// reproducing the tabulated classification values).
std::vector<std::pair<std::string, FamilyDim>> paper_family_dims();

}  // namespace curveatlas
