#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace patchwork {

// Exact integer geometry of convex lattice polygons in the plane.
// No floating point in this module.

struct LatticePoint {
  long long x = 0;
  long long y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.x + b.x, a.y + b.y}; }
inline LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.x - b.x, a.y - b.y}; }

// 2x2 determinant of (b-a, c-a); positive iff a,b,c is a left turn.
long long cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);

struct LatticeSegment {
  LatticePoint a, b;  // a != b
  friend bool operator==(const LatticeSegment&, const LatticeSegment&) = default;
};

// Same unordered pair of endpoints.
bool same_segment(const LatticeSegment& s, const LatticeSegment& t);

// Convex lattice polygon, CCW vertex order, no three consecutive collinear
// vertices. Degenerate cases (single point, segment) are representable and
// reported by dim().
struct LatticePolygon {
  std::vector<LatticePoint> vertices;

  int dim() const;  // 0 point, 1 segment, 2 polygon
  std::vector<LatticeSegment> edges() const;
  bool contains(const LatticePoint& p) const;          // closed containment
  bool contains_interior(const LatticePoint& p) const;  // strict
  std::vector<LatticePoint> lattice_points() const;    // all of poly cap Z^2
  std::string to_string() const;
  friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;
};

// Number of lattice points on seg minus 1, i.e. gcd(|dx|, |dy|).
long long integer_length(const LatticeSegment& seg);

// Lattice points of a segment, in order from a to b (inclusive).
std::vector<LatticePoint> segment_lattice_points(const LatticeSegment& seg);

// Twice the Euclidean area (shoelace); exact, nonnegative for CCW input.
long long area2(const LatticePolygon& poly);

// Number of lattice points on the boundary.
long long boundary_count(const LatticePolygon& poly);

// Number of lattice points strictly inside, by direct enumeration (so that
// Pick's identity is an independent cross-check against area2).
long long interior_count(const LatticePolygon& poly);

// Minimal convex polygon containing all points, CCW, collinear vertices
// removed. Throws std::invalid_argument on empty input.
LatticePolygon convex_hull(std::vector<LatticePoint> points);

LatticePolygon make_rect(long long x0, long long y0, long long x1, long long y1);

// True if vertices form a strictly convex CCW polygon (or a valid degenerate one).
bool is_valid_polygon(const LatticePolygon& poly);

}  // namespace patchwork
