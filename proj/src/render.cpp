#include "acp/render.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <vector>

#include "acp/error.hpp"
#include "acp/traversal.hpp"

namespace acp {

namespace {

using Point = std::complex<double>;

PositionedCircle make_circle(Curvature k, Point centre, double scale) {
  return {k, centre.real(), centre.imag(), scale / std::abs(static_cast<double>(k))};
}

// Intersections of |z| = ra and |z - c| = rb, c on the positive real axis;
// returns the upper one (the lower is its conjugate). Collinear placements
// (y = 0 exactly) leave a rounding-level y^2, which would otherwise become a
// sqrt(eps) offset, so those are snapped to the axis.
Point upper_intersection(double ra, double c, double rb) {
  const long double a = ra, b = rb, d = c;
  const long double x = (a * a - b * b + d * d) / (2 * d);
  const long double y2 = (a - x) * (a + x);
  if (y2 < -1e-9L) throw InvariantViolation("degenerate root layout");
  const long double y = y2 <= 1e-15L * a * a ? 0.0L : std::sqrt(y2);
  return {static_cast<double>(x), static_cast<double>(y)};
}

struct Slot {
  Curvature k = 0;
  Point w;  // curvature * centre, in bounding-radius units scaled by |v1|
};

struct Frame {
  std::array<Slot, 4> s;
  int coord = 0;
  int depth = 0;
};

PlacedVisit to_visit(const Frame& f, double scale) {
  PlacedVisit v;
  v.coord = f.coord;
  v.depth = f.depth;
  for (int i = 0; i < 4; ++i) {
    v.quad[i] = make_circle(f.s[i].k, f.s[i].w / static_cast<double>(f.s[i].k) * scale, scale);
  }
  return v;
}

Frame child_of(const Frame& f, int j) {
  Frame c = f;
  Curvature ksum = 0;
  Point wsum = 0;
  for (int i = 0; i < 4; ++i) {
    if (i == j) continue;
    ksum += f.s[i].k;
    wsum += f.s[i].w;
  }
  c.s[j].k = 2 * ksum - f.s[j].k;
  c.s[j].w = 2.0 * wsum - f.s[j].w;
  c.coord = j;
  c.depth = f.depth + 1;
  return c;
}

}  // namespace

std::array<PositionedCircle, 4> layout_root(const PackingDescriptor& packing) {
  const Quadruple& q = packing.root;
  const double scale = std::abs(static_cast<double>(q[0]));
  const double r2 = scale / static_cast<double>(q[1]);
  const double r3 = scale / static_cast<double>(q[2]);
  const double r4 = scale / static_cast<double>(q[3]);
  const double d2 = 1.0 - r2;
  if (d2 <= 0) throw InvariantViolation("root circle as large as the bounding circle");
  const Point c2{d2, 0.0};
  const Point c3 = upper_intersection(1.0 - r3, d2, r2 + r3);
  const Point up = upper_intersection(1.0 - r4, d2, r2 + r4);
  const Point down = std::conj(up);
  const double miss_up = std::abs(std::abs(up - c3) - (r3 + r4));
  const double miss_down = std::abs(std::abs(down - c3) - (r3 + r4));
  const Point c4 = (miss_up <= miss_down + 1e-12) ? up : down;
  return {PositionedCircle{q[0], 0.0, 0.0, 1.0}, make_circle(q[1], c2, scale),
          make_circle(q[2], c3, scale), make_circle(q[3], c4, scale)};
}

std::vector<PlacedVisit> placed_visits(const PackingDescriptor& packing, Curvature max_curvature) {
  if (max_curvature < packing.max_root_entry()) {
    throw UsageError("max curvature must be at least the largest root curvature");
  }
  if (max_curvature > kMaxBound) throw ArithmeticOverflow("max curvature exceeds the 2^31 cap");
  const auto root = layout_root(packing);
  const double scale = std::abs(static_cast<double>(packing.root[0]));
  Frame base;
  for (int i = 0; i < 4; ++i) {
    base.s[i].k = root[i].curvature;
    base.s[i].w = Point{root[i].x, root[i].y} * (static_cast<double>(root[i].curvature) / scale);
  }

  std::vector<PlacedVisit> out;
  std::vector<Frame> stack;
  for (int j = 0; j < 4; ++j) {
    Frame c = child_of(base, j);
    if (c.s[j].k < max_curvature) stack.push_back(c);
  }
  // Same visiting order as the curvature traversal: root children in turn,
  // each subtree depth first.
  std::vector<Frame> roots(stack.begin(), stack.end());
  stack.clear();
  for (const Frame& r : roots) {
    stack.push_back(r);
    while (!stack.empty()) {
      const Frame f = stack.back();
      stack.pop_back();
      out.push_back(to_visit(f, scale));
      for (int j = 0; j < 4; ++j) {
        if (j == f.coord) continue;
        Frame c = child_of(f, j);
        if (c.s[j].k < max_curvature) stack.push_back(c);
      }
    }
  }
  return out;
}

std::vector<PositionedCircle> place_circles(const PackingDescriptor& packing,
                                            Curvature max_curvature) {
  const auto root = layout_root(packing);
  std::vector<PositionedCircle> out;
  for (const PositionedCircle& c : root) {
    if (c.curvature < max_curvature) out.push_back(c);
  }
  for (const PlacedVisit& v : placed_visits(packing, max_curvature)) out.push_back(v.quad[v.coord]);
  return out;
}

std::string render_svg(const PackingDescriptor& packing, Curvature max_curvature,
                       const SvgOptions& options) {
  if (options.canvas_px <= 0) throw UsageError("canvas size must be positive");
  const double half = options.canvas_px / 2.0;
  std::string svg;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
                "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
                "width=\"%d\" height=\"%d\" viewBox=\"0 0 %d %d\">\n",
                options.canvas_px, options.canvas_px, options.canvas_px, options.canvas_px);
  svg += buf;
  std::snprintf(buf, sizeof buf, "\" stroke-width=\"%.3f\"/>\n", options.stroke_width);
  const std::string stroke_attrs =
      " stroke=\"" + options.stroke + "\" fill=\"" + options.fill + buf;
  std::string labels;
  for (const PositionedCircle& c : place_circles(packing, max_curvature)) {
    const double cx = (c.x + 1.0) * half;
    const double cy = (1.0 - c.y) * half;
    const double r = c.radius * half;
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.4f\" cy=\"%.4f\" r=\"%.4f\"", cx, cy, r);
    svg += buf;
    svg += stroke_attrs;
    if (options.labels && c.curvature > 0 && r >= options.label_min_radius_px) {
      std::snprintf(buf, sizeof buf,
                    "<text x=\"%.4f\" y=\"%.4f\" font-size=\"%.2f\" text-anchor=\"middle\" "
                    "dominant-baseline=\"central\">%lld</text>\n",
                    cx, cy, std::min(r, 24.0), static_cast<long long>(c.curvature));
      labels += buf;
    }
  }
  svg += labels;
  svg += "</svg>\n";
  return svg;
}

}  // namespace acp
