#pragma once

// Atlas generation: materializes the existence and irreducibility
// classifications over an (r, g) rectangle, with deterministic CSV / JSON /
// SVG emission (row-major in (r, g); bit-identical across runs).

#include <string>
#include <vector>

#include "curveatlas/classifier.hpp"

namespace curveatlas {

struct AtlasCell {
  i64 r;
  i64 g;
  i64 d;
  Verdict verdict;
  IrreducibilityStatus irreducibility;
};

struct AtlasGrid {
  i64 alpha;
  i64 r_min, r_max;
  i64 g_min, g_max;  // rows below r+3 are still classified (they are empty)
  std::vector<AtlasCell> cells;  // row-major: r outer, g inner
};

/// Builds the grid for the given alpha. For alpha != 5 the general rule
/// cascade decides each cell and irreducibility is not tabulated (Unknown /
/// Empty only).
AtlasGrid build_atlas(i64 alpha, i64 r_min, i64 r_max, i64 g_min, i64 g_max);

/// Default grid bounds mirroring the summary figures: r in [3, rmax],
/// g in [6, 49].
AtlasGrid build_atlas(i64 alpha, i64 r_max);

std::string atlas_existence_csv(const AtlasGrid& grid);
std::string atlas_irreducibility_csv(const AtlasGrid& grid);
std::string atlas_existence_json(const AtlasGrid& grid);
std::string atlas_irreducibility_json(const AtlasGrid& grid);

/// Scatter of statuses over (r, g) with a legend; pure presentation of the
/// grid data (same input, same bytes).
std::string atlas_existence_svg(const AtlasGrid& grid);
std::string atlas_irreducibility_svg(const AtlasGrid& grid);

/// Verdict serialization used by the CLI: {d,g,r,alpha,status,evidence:{...}}.
std::string verdict_json(const Verdict& v, const IrreducibilityStatus& irr);

}  // namespace curveatlas
