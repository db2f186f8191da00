#pragma once

// Decision layer: existence verdicts for linearly normal curves of index of
// speciality alpha (complete table for alpha = 5), irreducibility statuses
// for the low-genus rows, the general-alpha rule cascade, and constructive
// witnesses / obstructions assembled from the other modules.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curveatlas/ampleness.hpp"
#include "curveatlas/bounds.hpp"
#include "curveatlas/picard.hpp"

namespace curveatlas {

enum class Status { Empty, NonEmpty, Unknown };

enum class WitnessKind {
  BrillNoetherGeneral,
  ExtremalOnScroll,
  BlownPlaneSystem,
  GonalResidual,
  TripleCoverElliptic,
  QuadricType,
};

struct Witness {
  WitnessKind kind;
  std::map<std::string, std::string> params;
  std::string citation;
};

enum class ObstructionKind {
  GenusExceedsPi,
  NoIntegerSolutions,
  CompoundResidual,
  HyperellipticNoSpecialVA,
};

struct Obstruction {
  std::vector<ObstructionKind> kinds;  // primary first
  std::map<std::string, std::string> params;
  std::string citation;

  bool has(ObstructionKind k) const;
};

struct Verdict {
  CurveTriple triple;
  Status status;
  std::optional<Witness> witness;          // set iff NonEmpty
  std::optional<Obstruction> obstruction;  // set iff Empty
};

enum class Irreducibility {
  Irreducible,
  Reducible,
  ExpectedDimComponentOnly,
  MatchesHurwitz31,
  Unknown,
  Empty,
};

struct IrreducibilityStatus {
  Irreducibility value;
  std::optional<i64> component_count;  // when the table asserts an exact count
  std::string citation;
};

/// The complete alpha = 5 existence decision (d = g + r - 5). r >= 3.
Verdict classify_alpha5(i64 r, i64 g);

/// Tabulated irreducibility for alpha = 5 with citations; Empty rows mirror
/// classify_alpha5, undecided rows are Unknown.
IrreducibilityStatus irreducibility_alpha5(i64 r, i64 g);

/// Witness from multiples of the gonality pencil on a general k-gonal curve:
/// e = g - r + alpha - 2, sigma = e mod (alpha-1), k = (e - sigma)/(alpha-1);
/// exists iff k >= 4, 2k - g - 2 < 0 and g >= 2m + n(k-1) with m = sigma + 2,
/// n = alpha - 1. alpha >= 3.
std::optional<Witness> gonal_witness(i64 alpha, i64 r, i64 g);

/// The raw general-alpha rule cascade (no alpha = 5 table consultation);
/// exposed so consistency against the alpha = 5 table is a real check.
Verdict classify_general_rules(i64 alpha, i64 r, i64 g);

/// General-alpha classification; for alpha = 5 the answer defers to the
/// complete table (after a consistency check against the rule cascade).
Verdict classify_general(i64 alpha, i64 r, i64 g);

/// Compounded-residual case enumeration: all (k, f, delta) with k >= 2,
/// f >= 4, k*f + delta = e, delta >= 0 (ascending k, descending f).
/// genus_bound is the curve genus asserting the compound hypothesis
/// (recorded with the cases; the list itself is pure arithmetic).
std::vector<std::array<i64, 3>> compound_obstruction_cases(i64 e, i64 genus_bound);

/// Re-validates a NonEmpty witness without consulting the verdict tables:
/// recomputes degree/genus through the picard/solvers route appropriate to
/// its kind, or re-checks the gonality-pencil inequalities.
bool revalidate_witness(const Witness& w, i64 alpha, i64 r, i64 g);

std::string to_string(Status s);
std::string to_string(WitnessKind k);
std::string to_string(ObstructionKind k);
std::string to_string(Irreducibility s);

}  // namespace curveatlas
