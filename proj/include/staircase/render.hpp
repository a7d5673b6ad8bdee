#ifndef STAIRCASE_RENDER_HPP
#define STAIRCASE_RENDER_HPP

#include <span>
#include <string>

#include "staircase/lattice.hpp"
#include "staircase/monomial_module.hpp"

namespace staircase {

struct RenderOptions {
  Rect viewport;
  bool color = false;            // ANSI highlighting in ASCII output
  std::int64_t max_cells = 1 << 16;
  std::int64_t cell_px = 24;     // SVG pixels per lattice cell
};

/// Viewport covering the path vertices and all generators, one cell of
/// padding on each side.
Rect default_viewport(const BoundaryPath& path, std::span<const LatticePoint> generators);

/// Character grid of the region on or above the path, top row first:
/// '*' generator, '#' member, '.' outside. Deterministic bytes for fixed
/// options.
std::string render_ascii(const BoundaryPath& path, std::span<const LatticePoint> generators,
                         const RenderOptions& options);

/// SVG 1.1 document: one filled polygon for the region clipped to the
/// viewport, one polyline for the boundary (rays extended to the viewport
/// edge), one circle per generator. The y axis points up as in the figures.
std::string render_svg(const BoundaryPath& path, std::span<const LatticePoint> generators,
                       const RenderOptions& options);

}  // namespace staircase

#endif  // STAIRCASE_RENDER_HPP
