#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "patchwork/polynomial.hpp"

namespace patchwork {

enum class SingKind { Node, Cusp };

struct ChartNode {
  QPoint at;
  SingKind kind = SingKind::Node;
  friend bool operator==(const ChartNode&, const ChartNode&) = default;
};

// One quadrant copy of a cell chart. Coordinates are stored in the signed
// copy s_eps(cell): x-signs match bit 0 of the quadrant index, y-signs bit 1
// (zero coordinates sit on the axes shared with the mirror quadrant).
struct QuadrantChart {
  std::vector<std::vector<QPoint>> arcs;   // open polylines, endpoints on edge copies or nodes
  std::vector<std::vector<QPoint>> ovals;  // closed polylines (last vertex joins the first)
  std::vector<ChartNode> nodes;
};

// Piecewise-linear chart data of one cell of a subdivision.
struct CellChart {
  LatticePolygon cell;
  std::array<QuadrantChart, 4> quadrants;

  long long node_count() const;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> errors;
  void fail(std::string msg) {
    ok = false;
    errors.push_back(std::move(msg));
  }
};

// Checks the CellChart invariants: vertices inside the signed cell copy, arc
// endpoints on edge copies or at declared nodes, arcs/ovals pairwise disjoint
// except at nodes, node degrees (4 for a node, 2 for a cusp). With a
// polynomial attached, also checks per-edge crossing counts against
// edge_root_data.
ValidationReport validate_cell_chart(const CellChart& chart,
                                     const SparsePolynomial* f = nullptr);

// The glued curve in Delta_* coordinates. Canonical form: the segment set is
// sorted, so gluing in any order yields a comparable value.
struct GluedCurve {
  LatticePolygon domain;
  std::vector<std::pair<QPoint, QPoint>> segments;
  std::vector<ChartNode> nodes;
  long long declared_node_sum = 0;
  // Outer-boundary identification table (only for rectangle domains): welded
  // pairs of boundary points.
  std::vector<std::pair<QPoint, QPoint>> outer_identifications;

  friend bool operator==(const GluedCurve&, const GluedCurve&) = default;
};

// Glues cell charts across the subdivision: matches crossing lists on every
// shared edge copy (by order along the edge, snapping matched pairs to their
// midpoints), welds axis crossings between mirror quadrants, and records the
// outer identifications of the rectangle quotient. Throws
// std::invalid_argument on a crossing-count mismatch.
GluedCurve glue_charts(const Subdivision& sub, const std::vector<CellChart>& charts);

// Geometric transforms mirroring the block operations on polynomials.
CellChart chart_shift(const CellChart& chart, long long dx, long long dy);
// Exponent flip (i,j) -> (i, h - j); quadrants are preserved since y -> 1/y
// keeps the sign of y.
CellChart chart_flip_y(const CellChart& chart, long long h);

struct CurveSummary {
  long long components = 0;
  long long ovals = 0;
  long long node_count = 0;
  std::array<long long, 4> per_quadrant{};            // open-quadrant component counts
  std::vector<std::array<int, 2>> component_classes;  // Z/2 torus classes
};

CurveSummary curve_summary(const GluedCurve& g);

// Open-quadrant component counts of the glued curve, with declared nodes
// optionally resolved. A resolution entry maps a node position to a pairing
// parity: with the four incident ends sorted counterclockwise, parity 0
// joins ends (0,1) and (2,3), parity 1 joins (1,2) and (3,0). Nodes without
// an entry keep all four ends connected (the nodal curve itself). Does not
// need the torus quotient, so it also works on non-rectangular domains.
std::array<long long, 4> per_quadrant_counts(const GluedCurve& g,
                                             const std::map<QPoint, int>& resolutions = {});

}  // namespace patchwork
