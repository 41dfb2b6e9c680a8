#include "patchwork/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace patchwork {

long long cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool same_segment(const LatticeSegment& s, const LatticeSegment& t) {
  return (s.a == t.a && s.b == t.b) || (s.a == t.b && s.b == t.a);
}

int LatticePolygon::dim() const {
  if (vertices.size() <= 1) return 0;
  if (vertices.size() == 2) return 1;
  return 2;
}

std::vector<LatticeSegment> LatticePolygon::edges() const {
  std::vector<LatticeSegment> out;
  if (dim() == 0) return out;
  if (dim() == 1) {
    out.push_back({vertices[0], vertices[1]});
    return out;
  }
  for (size_t i = 0; i < vertices.size(); ++i)
    out.push_back({vertices[i], vertices[(i + 1) % vertices.size()]});
  return out;
}

bool LatticePolygon::contains(const LatticePoint& p) const {
  if (vertices.empty()) return false;
  if (dim() == 0) return p == vertices[0];
  if (dim() == 1) {
    const auto &a = vertices[0], &b = vertices[1];
    if (cross(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
  }
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (cross(vertices[i], vertices[(i + 1) % vertices.size()], p) < 0) return false;
  }
  return true;
}

bool LatticePolygon::contains_interior(const LatticePoint& p) const {
  if (dim() < 2) return false;
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (cross(vertices[i], vertices[(i + 1) % vertices.size()], p) <= 0) return false;
  }
  return true;
}

std::vector<LatticePoint> LatticePolygon::lattice_points() const {
  std::vector<LatticePoint> out;
  if (vertices.empty()) return out;
  if (dim() == 0) return {vertices[0]};
  if (dim() == 1) return segment_lattice_points({vertices[0], vertices[1]});
  long long xmin = vertices[0].x, xmax = vertices[0].x;
  long long ymin = vertices[0].y, ymax = vertices[0].y;
  for (const auto& v : vertices) {
    xmin = std::min(xmin, v.x); xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y); ymax = std::max(ymax, v.y);
  }
  for (long long x = xmin; x <= xmax; ++x)
    for (long long y = ymin; y <= ymax; ++y)
      if (contains({x, y})) out.push_back({x, y});
  return out;
}

std::string LatticePolygon::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (i) s += ",";
    s += "(" + std::to_string(vertices[i].x) + "," + std::to_string(vertices[i].y) + ")";
  }
  return s + "]";
}

long long integer_length(const LatticeSegment& seg) {
  long long dx = std::llabs(seg.b.x - seg.a.x);
  long long dy = std::llabs(seg.b.y - seg.a.y);
  return std::gcd(dx, dy);
}

std::vector<LatticePoint> segment_lattice_points(const LatticeSegment& seg) {
  long long g = integer_length(seg);
  std::vector<LatticePoint> out;
  if (g == 0) return {seg.a};
  long long sx = (seg.b.x - seg.a.x) / g, sy = (seg.b.y - seg.a.y) / g;
  for (long long t = 0; t <= g; ++t) out.push_back({seg.a.x + t * sx, seg.a.y + t * sy});
  return out;
}

long long area2(const LatticePolygon& poly) {
  if (poly.dim() < 2) return 0;
  long long s = 0;
  const auto& v = poly.vertices;
  for (size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    s += a.x * b.y - b.x * a.y;
  }
  return s;  // CCW input: nonnegative
}

long long boundary_count(const LatticePolygon& poly) {
  if (poly.dim() == 0) return 1;
  if (poly.dim() == 1) return integer_length({poly.vertices[0], poly.vertices[1]}) + 1;
  long long b = 0;
  for (const auto& e : poly.edges()) b += integer_length(e);
  return b;
}

long long interior_count(const LatticePolygon& poly) {
  if (poly.dim() < 2) return 0;
  long long n = 0;
  for (const auto& p : poly.lattice_points())
    if (poly.contains_interior(p)) ++n;
  return n;
}

LatticePolygon convex_hull(std::vector<LatticePoint> pts) {
  if (pts.empty()) throw std::invalid_argument("convex_hull: empty input");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1) return LatticePolygon{{pts[0]}};

  // Andrew's monotone chain; strict turns only, so collinear vertices drop out.
  std::vector<LatticePoint> hull(2 * pts.size());
  size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  if (hull.size() == 2 || hull.size() == 1) {
    // Collinear input: keep the two extreme points.
    return LatticePolygon{{pts.front(), pts.back()}};
  }
  return LatticePolygon{hull};
}

LatticePolygon make_rect(long long x0, long long y0, long long x1, long long y1) {
  return LatticePolygon{{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}};
}

bool is_valid_polygon(const LatticePolygon& poly) {
  if (poly.vertices.empty()) return false;
  if (poly.dim() == 0) return true;
  if (poly.dim() == 1) return poly.vertices[0] != poly.vertices[1];
  const auto& v = poly.vertices;
  for (size_t i = 0; i < v.size(); ++i) {
    if (cross(v[i], v[(i + 1) % v.size()], v[(i + 2) % v.size()]) <= 0) return false;
  }
  return true;
}

}  // namespace patchwork
