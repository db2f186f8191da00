#pragma once

// Exact divisor-class arithmetic on the two rational-surface families used
// throughout: Hirzebruch surfaces F_e (basis C0, f with C0^2 = -e) and the
// plane blown up at s general points P^2_s (basis l, e_1, ..., e_s).
//
// Presentation convention for F_e is the (C0, f) basis; the (h, f) basis of
// the cone picture (h = C0 + e f) is available through scroll_from_ruled /
// ruled_from_scroll.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace curveatlas {

using i64 = std::int64_t;

struct DivisorClass {
  std::vector<i64> c;  // coordinates in the surface's Picard basis

  DivisorClass() = default;
  explicit DivisorClass(std::vector<i64> coeffs) : c(std::move(coeffs)) {}

  std::size_t rank() const { return c.size(); }

  bool operator==(const DivisorClass& o) const = default;
  DivisorClass operator+(const DivisorClass& o) const;
  DivisorClass operator-(const DivisorClass& o) const;
  DivisorClass operator-() const;
  DivisorClass operator*(i64 k) const;
  bool is_zero() const;
};

/// Builds the class a*l - sum b_i e_i on P^2_s from the (a; b_1,...,b_s)
/// notation. Raw coordinates are (a, -b_1, ..., -b_s).
DivisorClass blowup_class(i64 a, const std::vector<i64>& b);

/// The (a; b...) view of a blow-up class: first = a, rest = b_i (negated
/// exceptional coordinates).
std::vector<i64> blowup_view(const DivisorClass& d);

enum class SurfaceKind { Hirzebruch, BlowUp };

struct SurfaceModel {
  SurfaceKind kind;
  i64 param;  // e for F_e, s for P^2_s
  std::vector<std::string> basis_labels;
  std::vector<std::vector<i64>> gram;  // symmetric intersection matrix
  DivisorClass canonical;
  std::optional<DivisorClass> polarization;

  static SurfaceModel hirzebruch(i64 e);
  static SurfaceModel blow_up(i64 s);
  static SurfaceModel blow_up(i64 s, DivisorClass polarization);

  std::size_t rank() const { return gram.size(); }
};

i64 intersect(const SurfaceModel& s, const DivisorClass& d1, const DivisorClass& d2);

/// Adjunction: p_a(D) = D.(D+K)/2 + 1. The division is exact on these
/// lattices (D^2 + D.K is always even); violation throws logic_error.
i64 arithmetic_genus(const SurfaceModel& s, const DivisorClass& d);

/// Riemann-Roch Euler characteristic chi(D) = D.(D-K)/2 + 1 (chi(O)=1 on
/// both families). Equals h^0 only when the caller knows h^1 = h^2 = 0.
i64 riemann_roch_chi(const SurfaceModel& s, const DivisorClass& d);

/// dim |aH + bL| on a smooth rational normal scroll of degree n: the surface
/// (H hyperplane class, L a line of the ruling): a(a+1)n/2 + (a+1)(b+1) - 1.
i64 scroll_system_dim(i64 n, i64 a, i64 b);

/// Cone picture, h = C0 + nf on F_n: aH + bL reads as aC0 + (na+b)f, and back.
std::pair<i64, i64> ruled_from_scroll(i64 n, i64 a, i64 b);
std::pair<i64, i64> scroll_from_ruled(i64 n, i64 x, i64 y);

/// Smooth cubic scroll picture, H = C0 + 2f on F_1: aH + bL = aC0 + (2a+b)f.
std::pair<i64, i64> f1_from_scroll(i64 a, i64 b);
std::pair<i64, i64> scroll_from_f1(i64 x, i64 y);

enum class ConvertDirection { F1ToBlowUp, BlowUpToF1 };

/// The lattice isometry F_1 <-> P^2_1 from the scroll identifications
/// (H,L) <-> (C0+2f, f) <-> (2l-e, l-e). Carries K to K and preserves the
/// pairing; round-trips to the identity.
DivisorClass convert_f1_blowup(const DivisorClass& d, ConvertDirection dir);

/// Checked form: the source surface must be F_1 (resp. P^2_1).
DivisorClass convert_f1_blowup(const SurfaceModel& s, const DivisorClass& d,
                               ConvertDirection dir);

/// Degree and genus of a curve class C on a polarized blow-up: (C.H, p_a(C)).
std::pair<i64, i64> blowup_curve_invariants(const SurfaceModel& s, const DivisorClass& c,
                                            const DivisorClass& h);

// --- textual (a; b1^m1, ...) notation ---------------------------------------

struct ParsedClass {
  DivisorClass cls;             // canonical: b sorted descending
  std::vector<int> permutation; // applied to the b-entries to sort them
};

/// Parses "(a; b1^m1, b2, ...)" with the exponent shorthand; b-entries are
/// sorted to the canonical descending order (the applied permutation is
/// recorded). Exponent 0 collapses the block.
ParsedClass parse_blowup_class(const std::string& text);

/// Prints a blow-up class in (a; ...) notation, collapsing repeated entries
/// into b^m blocks and omitting zero-length blocks.
std::string format_blowup_class(const DivisorClass& d);

/// Hirzebruch classes print as x*C0+y*f.
std::string format_ruled_class(const DivisorClass& d);

}  // namespace curveatlas
