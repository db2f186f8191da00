#pragma once

// Certificate-based positivity logic for linear systems on blown-up planes.
// Everything is axiom-driven: the table holds exactly the systems the
// classification relies on, each with a literature citation. Nothing is
// inferred beyond (a) the small-s smooth-member / linear-normality
// thresholds and (b) decomposition into one very ample plus base-point-free
// summands. Unknown is an honest third value, never a refutation.

#include <optional>
#include <string>
#include <vector>

#include "curveatlas/picard.hpp"

namespace curveatlas {

enum class Positivity { VeryAmple, BasePointFree, NotVeryAmple };

struct PositivityAxiom {
  DivisorClass cls;  // on P^2_s, raw coordinates, natural length (no padding)
  i64 s;
  Positivity property;
  std::string citation;
};

class AxiomTable {
 public:
  /// The table shipped with the library (same content as data/axioms_paper.txt).
  static const AxiomTable& paper_defaults();

  /// Line-oriented format: `<class> P2_<s> <property> <citation...>`, where
  /// property is very_ample | base_point_free | not_very_ample. '#' starts a
  /// comment. A missing citation is a parse error.
  static AxiomTable parse(const std::string& text);

  void add(PositivityAxiom ax);

  /// Exact match of a natural-length very ample axiom on P^2_s.
  std::optional<PositivityAxiom> find_very_ample(const DivisorClass& cls, i64 s) const;

  /// Base-point-free match allowing zero-padding of an axiom stated on fewer
  /// points (very ample axioms qualify: they are in particular bpf, and
  /// pulling back along further blow-ups keeps bpf).
  std::optional<PositivityAxiom> find_base_point_free(const DivisorClass& cls, i64 s) const;

  /// Recorded non-very-ample systems (obstruction citations).
  std::optional<PositivityAxiom> find_not_very_ample(const DivisorClass& cls, i64 s) const;

  const std::vector<PositivityAxiom>& all() const { return axioms_; }

 private:
  std::vector<PositivityAxiom> axioms_;
};

/// Pads a class on P^2_{s0} to P^2_s by appending zero multiplicities.
DivisorClass pad_to(const DivisorClass& cls, i64 s);

struct PositivityCertificate {
  DivisorClass target;
  Positivity property;
  // Either a direct axiom (summands empty) or a decomposition: first summand
  // very ample, the rest base-point-free; summands add to target exactly.
  std::vector<std::pair<DivisorClass, std::string>> summands;
  std::string citation;

  bool revalidate() const;  // re-sums the decomposition
};

enum class SmallCase { Yes, No, OutOfScope };

struct NormalityResult {
  SmallCase value;
  std::string note;  // nonempty when the exceptional family decides
};

/// Small-s threshold criterion on P^2_s, 3 <= s <= 6: a general member of
/// (a;b_1,...,b_s) with a >= b1+b2+b3, a >= max(0,b1), b sorted is smooth and
/// connected iff b_s >= 0 and the class is not (a;a,0,...,0) with a >= 2.
SmallCase check_smooth_member(i64 s, const DivisorClass& cls);

/// Linear normality under the anticanonical embedding P^2_s -> P^{9-s}:
/// b_s >= 1 decides, except for the family (λ+3t; λ+t, t, ..., t), λ >= 2,
/// which is linearly normal iff t >= 2.
NormalityResult check_linear_normality_small(i64 s, const DivisorClass& cls);

enum class CorollaryB { Yes, NotApplicable };

/// Linear-normality criterion for a curve in |L| on P^2_s embedded by a very
/// ample system `embed` (b_s >= 1, sum b_i < 3a): holds when L dominates
/// embed coordinatewise and L - embed carries a smooth connected member
/// (small-s threshold, or a cited bpf system with positive self-intersection).
CorollaryB check_linear_normality_corollary_b(const DivisorClass& embed, const DivisorClass& L,
                                              i64 s, const AxiomTable& axioms);

/// Bounded search for cls = V + sum B_i with V a very ample axiom and each
/// B_i base-point-free (padded); sufficient only, nullopt is not a refutation.
std::optional<PositivityCertificate> certify_very_ample(i64 s, const DivisorClass& cls,
                                                        const AxiomTable& axioms);

/// Bounded search for cls = sum B_i with every B_i a (padded) base-point-free
/// axiom; a sum of base-point-free systems is base-point-free.
std::optional<PositivityCertificate> certify_base_point_free(i64 s, const DivisorClass& cls,
                                                             const AxiomTable& axioms);

enum class RestrictionIso { Iso, Unknown };

/// Mechanical Kodaira-vanishing route for the restriction map
/// H^0(S, D) -> H^0(C, D|C) being an isomorphism: D - C = K_S - P with P the
/// polarization, and P - K_S certified very ample. Unknown otherwise.
RestrictionIso restriction_iso_check(const SurfaceModel& s, const DivisorClass& d,
                                     const DivisorClass& c, const AxiomTable& axioms);

}  // namespace curveatlas
