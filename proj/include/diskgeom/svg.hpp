#pragma once

#include <string>

#include "diskgeom/scene.hpp"

namespace diskgeom {

/// Deterministic SVG 1.1 document, viewBox [-1.2, -1.2, 2.4, 2.4] scaled to
/// `size` pixels. Same scene, same bytes.
std::string emit_svg(const Scene& scene, int size);

}  // namespace diskgeom
