#pragma once

#include <map>
#include <vector>

#include "patchwork/lattice.hpp"
#include "patchwork/rational.hpp"

namespace patchwork {

// Rational-valued lifting on the lattice points of a polygon.
struct LiftingFunction {
  LatticePolygon domain;
  std::map<LatticePoint, QQ> values;

  const QQ& at(const LatticePoint& p) const;
  bool has(const LatticePoint& p) const { return values.count(p) != 0; }
  bool defined_on_domain() const;

  // Same subdivision, all values integers (multiplied by the lcm of
  // denominators). Used before substituting t into the Viro polynomial.
  LiftingFunction scaled_integral() const;
};

// Affine function a*x + b*y + c with rational coefficients.
struct AffineQQ {
  QQ a, b, c;
  QQ eval(const LatticePoint& p) const { return a * p.x + b * p.y + c; }
  friend bool operator==(const AffineQQ&, const AffineQQ&) = default;
};

struct Subdivision {
  LatticePolygon domain;
  std::vector<LatticePolygon> cells;
  struct SharedEdge {
    size_t cell_a, cell_b;
    LatticeSegment seg;
  };
  std::vector<SharedEdge> shared_edges;
};

// Projection of the lower faces of the lifted lattice points; cells are the
// maximal domains of linearity of the induced convex function.
Subdivision regular_subdivision(const LatticePolygon& domain, const LiftingFunction& lift);

// True iff the lift is affine on each cell's vertex set, every lattice point
// of the domain lies on or above each cell's affine extension, the cells
// cover the domain, and the affine pieces genuinely differ across every
// shared edge. Throws std::invalid_argument when a cell contains a lattice
// point with no lift value.
bool is_convex_subdivision(const Subdivision& sub, const LiftingFunction& lift);

// One vertex per cell, one edge per shared (codimension-1) edge.
std::vector<std::vector<size_t>> adjacency_graph(const Subdivision& sub);

struct OrientedAdjacency {
  Subdivision subdivision;
  struct OrientedEdge {
    size_t source, target;
    LatticeSegment seg;
  };
  std::vector<OrientedEdge> edges;
  std::vector<std::vector<LatticeSegment>> incoming_facets;  // per cell
  std::vector<size_t> topological_order;                     // sources first
};

// Orients every shared edge from the cell on the negative side of the
// direction to the cell on the positive side. Throws std::invalid_argument
// naming the offending edge when some dual edge pairs to zero with the
// direction, or when the result has a directed cycle.
OrientedAdjacency sweep_orientation(const Subdivision& sub, const QQ& dir_x, const QQ& dir_y);

// Affine function through three lifted points (the xy-projections must not
// be collinear).
AffineQQ plane_through(const LatticePoint& p, const QQ& wp, const LatticePoint& q, const QQ& wq,
                       const LatticePoint& r, const QQ& wr);

}  // namespace patchwork
