#pragma once

#include <string>
#include <utility>
#include <vector>

#include "opspec/region.hpp"

namespace opspec {

using NamedRegion = std::pair<std::string, Region>;

/// Deterministic SVG drawing of named regions, one layer per name, with a
/// legend. Filled cells for areas, strokes for circles and arcs (dashed when
/// the boundary is not part of the set), dots for points, the first fifty
/// terms of every sequence plus a cross at its limit.
std::string render_svg(const std::vector<NamedRegion>& layers);

/// Writes render_svg to `path`; throws Error("io-error") on failure.
void emit_svg(const std::vector<NamedRegion>& layers, const std::string& path);

}  // namespace opspec
