#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "acp/core.hpp"

namespace acp {

// Circle in units where the bounding circle has radius 1 and centre 0.
struct PositionedCircle {
  Curvature curvature = 0;
  double x = 0;
  double y = 0;
  double radius = 0;
};

// Bounding circle at the origin, second circle on the positive x-axis, third
// in the closed upper half-plane, fourth tangent to all three (upper choice
// when the configuration is mirror symmetric).
std::array<PositionedCircle, 4> layout_root(const PackingDescriptor& packing);

// A placed circle together with the quadruple it completes; `coord` is its
// slot, the other three slots are its tangent parents.
struct PlacedVisit {
  std::array<PositionedCircle, 4> quad;
  int coord = 0;
  int depth = 0;
};

// Root circles then every circle of curvature < max_curvature in traversal
// order. Positions come from propagating curvature*centre with the same
// generator rule as the curvatures.
std::vector<PositionedCircle> place_circles(const PackingDescriptor& packing,
                                            Curvature max_curvature);
std::vector<PlacedVisit> placed_visits(const PackingDescriptor& packing, Curvature max_curvature);

struct SvgOptions {
  int canvas_px = 800;
  std::string stroke = "black";
  std::string fill = "none";
  double stroke_width = 0.5;
  bool labels = true;
  double label_min_radius_px = 10.0;
};

std::string render_svg(const PackingDescriptor& packing, Curvature max_curvature,
                       const SvgOptions& options = {});

}  // namespace acp
