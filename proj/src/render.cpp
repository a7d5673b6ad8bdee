#include "staircase/render.hpp"

#include <algorithm>

namespace staircase {

namespace {

bool region_contains(const BoundaryPath& path, LatticePoint p) {
  const std::optional<Rational> floor = path.floor_at(p.x);
  return floor && Rational(p.y) >= *floor;
}

void check_cell_cap(Rect r, std::int64_t max_cells) {
  const std::int64_t width = checked_add(checked_sub(r.x1, r.x0), 1);
  const std::int64_t height = checked_add(checked_sub(r.y1, r.y0), 1);
  if (width < 1 || height < 1) throw ViewportTooLarge("viewport rectangle is empty");
  if (checked_mul(width, height) > max_cells) {
    throw ViewportTooLarge("viewport has " + std::to_string(width * height) +
                           " cells, cap is " + std::to_string(max_cells));
  }
}

}  // namespace

Rect default_viewport(const BoundaryPath& path, std::span<const LatticePoint> generators) {
  std::vector<LatticePoint> extent = path.vertices();
  extent.insert(extent.end(), generators.begin(), generators.end());
  Rect r{extent.front().x, extent.front().x, extent.front().y, extent.front().y};
  for (const LatticePoint& p : extent) {
    r.x0 = std::min(r.x0, p.x);
    r.x1 = std::max(r.x1, p.x);
    r.y0 = std::min(r.y0, p.y);
    r.y1 = std::max(r.y1, p.y);
  }
  r.x0 = checked_sub(r.x0, 1);
  r.y0 = checked_sub(r.y0, 1);
  r.x1 = checked_add(r.x1, 1);
  r.y1 = checked_add(r.y1, 1);
  return r;
}

std::string render_ascii(const BoundaryPath& path, std::span<const LatticePoint> generators,
                         const RenderOptions& options) {
  const Rect r = options.viewport;
  check_cell_cap(r, options.max_cells);
  std::string out;
  for (std::int64_t y = r.y1; y >= r.y0; --y) {
    for (std::int64_t x = r.x0; x <= r.x1; ++x) {
      const LatticePoint p{x, y};
      const bool generator = std::find(generators.begin(), generators.end(), p) != generators.end();
      if (generator) {
        if (options.color) {
          out += "\x1b[31m*\x1b[0m";
        } else {
          out += '*';
        }
      } else if (region_contains(path, p)) {
        out += '#';
      } else {
        out += '.';
      }
    }
    out += '\n';
  }
  return out;
}

std::string render_svg(const BoundaryPath& path, std::span<const LatticePoint> generators,
                       const RenderOptions& options) {
  const Rect r = options.viewport;
  check_cell_cap(r, options.max_cells);
  const std::int64_t cell = options.cell_px;
  const std::int64_t width = checked_mul(checked_add(checked_sub(r.x1, r.x0), 2), cell);
  const std::int64_t height = checked_mul(checked_add(checked_sub(r.y1, r.y0), 2), cell);
  const auto px = [&](std::int64_t x) { return checked_mul(checked_add(checked_sub(x, r.x0), 1), cell); };
  const auto py = [&](std::int64_t y) { return checked_mul(checked_add(checked_sub(r.y1, y), 1), cell); };

  // Boundary points, rays clamped to the viewport edge.
  std::vector<std::pair<std::int64_t, std::int64_t>> boundary;
  const std::vector<LatticePoint> vertices = path.vertices();
  if (path.has_left_vertical_ray()) {
    const std::int64_t ray_top = std::max(vertices.front().y, r.y1);
    if (ray_top != vertices.front().y) boundary.emplace_back(px(vertices.front().x), py(ray_top));
  }
  for (const LatticePoint& v : vertices) boundary.emplace_back(px(v.x), py(v.y));
  if (path.has_right_horizontal_ray()) {
    const std::int64_t ray_right = std::max(vertices.back().x, r.x1);
    if (ray_right != vertices.back().x) boundary.emplace_back(px(ray_right), py(vertices.back().y));
  }

  const auto point_list = [](const std::vector<std::pair<std::int64_t, std::int64_t>>& pts) {
    std::string s;
    for (const auto& [x, y] : pts) {
      if (!s.empty()) s += ' ';
      s += std::to_string(x) + "," + std::to_string(y);
    }
    return s;
  };

  // Close the region through the upper-right viewport corner.
  std::vector<std::pair<std::int64_t, std::int64_t>> region = boundary;
  region.emplace_back(boundary.back().first, boundary.front().second);
  if (region.back() == boundary.front()) region.pop_back();

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
         " " + std::to_string(height) + "\">\n";
  svg += "<polygon points=\"" + point_list(region) + "\" fill=\"#d3d3d3\"/>\n";
  svg += "<polyline points=\"" + point_list(boundary) +
         "\" fill=\"none\" stroke=\"red\" stroke-width=\"" + std::to_string(cell / 8) + "\"/>\n";
  for (const LatticePoint& g : generators) {
    svg += "<circle cx=\"" + std::to_string(px(g.x)) + "\" cy=\"" + std::to_string(py(g.y)) +
           "\" r=\"" + std::to_string(cell / 5) + "\" fill=\"blue\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace staircase
