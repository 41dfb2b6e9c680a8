#pragma once

#include <array>

#include "patchwork/chart.hpp"

namespace patchwork {

// Half-edge arrangement of a glued curve on the torus quotient of a
// rectangle. The torus is cut open along the outer boundary (the seams), a
// planar DCEL is built in the fundamental rectangle, and the seams are then
// re-identified. Fine faces are the faces of the curve-plus-seams complex;
// torus faces merge fine faces across the seams and are the faces of the
// curve complex itself.
struct Arrangement {
  LatticePolygon domain;
  long long dx = 0, dy = 0;  // domain = [0,dx] x [0,dy]

  // Planar complex in [-dx,dx] x [-dy,dy].
  std::vector<QPoint> pvx;
  struct PEdge {
    int a = -1, b = -1;
    bool seam = false;
  };
  std::vector<PEdge> pedges;

  // Torus identifications.
  std::vector<int> torus_of_vx;  // planar vertex -> torus vertex
  int n_tvx = 0;
  std::vector<QPoint> tvx_rep;       // canonical planar position per torus vertex
  std::vector<int> torus_of_edge;    // planar edge -> torus edge
  int n_tedges = 0;
  std::vector<int> tedge_rep;        // torus edge -> representative planar edge
  std::vector<bool> tedge_seam;
  std::vector<std::array<int, 2>> tedge_copies;  // planar copies (second = -1 for curve edges)

  // Half-edges: 2*e is a->b, 2*e+1 is b->a; faces on the left.
  std::vector<int> he_next;
  std::vector<int> walk_of_he;
  struct Walk {
    std::vector<int> hes;
    QQ area2 = 0;
    int fine_face = -1;
  };
  std::vector<Walk> walks;

  struct FineFace {
    int outer_walk = -1;
    long long holes = 0;
    std::vector<int> all_walks;
  };
  std::vector<FineFace> fine;
  std::vector<int> face_of_he;  // fine face on the left of each half-edge, -1 outside

  struct TorusFace {
    std::vector<int> fine_ids;
    long long chi_c = 0;  // compactly-supported Euler characteristic of the open face
    bool disk = false;
  };
  std::vector<TorusFace> tfaces;
  std::vector<int> tface_of_fine;

  long long curve_V = 0, curve_E = 0;  // torus counts of the curve 1-complex

  struct NodeInfo {
    int tvx = -1;
    SingKind kind = SingKind::Node;
    std::vector<int> ends_ccw;  // outgoing half-edges at the node, CCW
  };
  std::vector<NodeInfo> nodes;

  // V - E + sum of face chi_c over the torus curve complex; 0 on the torus.
  long long euler_sum() const;

  // Seam-crossing parities (x,y) picked up when traversing the torus edge,
  // measured against the canonical vertex representatives.
  std::array<int, 2> tedge_weight(int tedge) const;

  // Fine face containing a point strictly inside it, or -1.
  int locate_fine_face(const QPoint& p) const;

  // Fine face ids of the four sectors around a node, sector i lying between
  // ends_ccw[i] and ends_ccw[i+1].
  std::array<int, 4> node_sectors(int node_index) const;
};

// Throws std::invalid_argument when the domain is not a rectangle with a
// corner at the origin or the curve data cannot be welded on the torus.
Arrangement build_torus_arrangement(const GluedCurve& g);

}  // namespace patchwork
