#pragma once

#include <optional>
#include <string>

#include "latrect/geometry.hpp"

namespace latrect {

/// One line per row of the bounding box, highest row first; '#' for a cell of
/// the region and '.' otherwise. A lattice axis is drawn as a '|' column
/// between cells; a half axis marks the cells it bisects with '+' (filled) or
/// ':' (empty). The empty region renders as "".
std::string render_ascii(const CellRegion &region, const std::optional<Axis> &axis = std::nullopt);

/// Deterministic SVG: unit cells as 1x1 rects in user units scaled by a
/// fixed transform, fixed stroke, optional dashed axis line.
std::string render_svg(const CellRegion &region, const std::optional<Axis> &axis = std::nullopt);

}  // namespace latrect
