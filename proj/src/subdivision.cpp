#include "patchwork/subdivision.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace patchwork {

const QQ& LiftingFunction::at(const LatticePoint& p) const {
  auto it = values.find(p);
  if (it == values.end())
    throw std::invalid_argument("lifting has no value at (" + std::to_string(p.x) + "," +
                                std::to_string(p.y) + ")");
  return it->second;
}

bool LiftingFunction::defined_on_domain() const {
  for (const auto& p : domain.lattice_points())
    if (!has(p)) return false;
  return true;
}

LiftingFunction LiftingFunction::scaled_integral() const {
  ZZ l = 1;
  for (const auto& [p, v] : values) l = boost::multiprecision::lcm(l, qq_den(v));
  LiftingFunction out;
  out.domain = domain;
  for (const auto& [p, v] : values) out.values[p] = v * QQ(l);
  return out;
}

AffineQQ plane_through(const LatticePoint& p, const QQ& wp, const LatticePoint& q, const QQ& wq,
                       const LatticePoint& r, const QQ& wr) {
  // Solve for (a,b,c): a*x + b*y + c = w at the three points.
  QQ det = QQ(cross(p, q, r));
  if (det == 0) throw std::invalid_argument("plane_through: collinear points");
  QQ dq_x = QQ(q.x - p.x), dq_y = QQ(q.y - p.y);
  QQ dr_x = QQ(r.x - p.x), dr_y = QQ(r.y - p.y);
  QQ dw_q = wq - wp, dw_r = wr - wp;
  AffineQQ f;
  f.a = (dw_q * dr_y - dw_r * dq_y) / det;
  f.b = (dw_r * dq_x - dw_q * dr_x) / det;
  f.c = wp - f.a * p.x - f.b * p.y;
  return f;
}

namespace {

// Sign of the 3x3 determinant deciding whether the lifted point d lies above
// (+), on (0) or below (-) the plane through lifted a, b, c, where (a,b,c)
// is counterclockwise in the xy-plane.
int side_of_plane(const LatticePoint& a, const QQ& wa, const LatticePoint& b, const QQ& wb,
                  const LatticePoint& c, const QQ& wc, const LatticePoint& d, const QQ& wd) {
  QQ b1 = QQ(b.x - a.x), b2 = QQ(b.y - a.y), b3 = wb - wa;
  QQ c1 = QQ(c.x - a.x), c2 = QQ(c.y - a.y), c3 = wc - wa;
  QQ d1 = QQ(d.x - a.x), d2 = QQ(d.y - a.y), d3 = wd - wa;
  QQ det = b1 * (c2 * d3 - c3 * d2) - b2 * (c1 * d3 - c3 * d1) + b3 * (c1 * d2 - c2 * d1);
  return sign_of(det);
}

struct PlaneKey {
  QQ a, b, c;
  bool operator<(const PlaneKey& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
  }
};

}  // namespace

Subdivision regular_subdivision(const LatticePolygon& domain, const LiftingFunction& lift) {
  Subdivision out;
  out.domain = domain;
  if (domain.dim() < 2) {
    out.cells.push_back(domain);
    return out;
  }
  std::vector<LatticePoint> pts = domain.lattice_points();
  for (const auto& p : pts) lift.at(p);  // force the error early

  auto height = [&](const LatticePoint& p) -> const QQ& { return lift.at(p); };

  // Pivot: among candidate points strictly on the left of (u -> v), find the
  // supporting plane of the lower hull through the lifted edge. Returns all
  // lattice points on that plane, or empty when the left side is outside the
  // domain.
  auto pivot = [&](const LatticePoint& u, const LatticePoint& v) -> std::vector<LatticePoint> {
    const LatticePoint* best = nullptr;
    for (const auto& p : pts) {
      if (cross(u, v, p) <= 0) continue;
      if (!best) {
        best = &p;
        continue;
      }
      if (side_of_plane(u, height(u), v, height(v), *best, height(*best), p, height(p)) < 0)
        best = &p;
    }
    if (!best) return {};
    AffineQQ plane = plane_through(u, height(u), v, height(v), *best, height(*best));
    std::vector<LatticePoint> on_plane;
    for (const auto& p : pts)
      if (plane.eval(p) == height(p)) on_plane.push_back(p);
    return on_plane;
  };

  // Start edge: along the boundary edge leaving the lexicographically least
  // vertex, the minimal-slope segment of the lifted 1D points is a genuine
  // lower-hull edge (the first primitive step need not be, e.g. heights
  // 0,5,0).
  LatticePoint v0 = *std::min_element(domain.vertices.begin(), domain.vertices.end());
  size_t v0_idx = 0;
  while (domain.vertices[v0_idx] != v0) ++v0_idx;
  LatticePoint v1 = domain.vertices[(v0_idx + 1) % domain.vertices.size()];
  auto boundary_pts = segment_lattice_points({v0, v1});
  LatticePoint step = boundary_pts[1];
  QQ best_slope = (lift.at(step) - lift.at(v0));
  for (size_t t = 2; t < boundary_pts.size(); ++t) {
    QQ slope = (lift.at(boundary_pts[t]) - lift.at(v0)) / QQ(t);
    if (slope < best_slope) {
      best_slope = slope;
      step = boundary_pts[t];
    }
  }

  std::map<PlaneKey, size_t> cell_of_plane;
  std::set<std::pair<LatticePoint, LatticePoint>> queued;  // directed edges already handled
  std::queue<std::pair<LatticePoint, LatticePoint>> work;
  work.push({v0, step});
  queued.insert({v0, step});

  while (!work.empty()) {
    auto [u, v] = work.front();
    work.pop();
    auto on_plane = pivot(u, v);
    if (on_plane.empty()) continue;  // outside of the domain
    LatticePolygon cell = convex_hull(on_plane);
    AffineQQ plane = plane_through(cell.vertices[0], height(cell.vertices[0]), cell.vertices[1],
                                   height(cell.vertices[1]), cell.vertices[2],
                                   height(cell.vertices[2]));
    PlaneKey key{plane.a, plane.b, plane.c};
    auto [it, fresh] = cell_of_plane.try_emplace(key, out.cells.size());
    if (fresh) {
      out.cells.push_back(cell);
      for (const auto& e : cell.edges()) {
        // The neighbor across (e.a -> e.b) sits on the cell's right, i.e. on
        // the left of the reversed edge.
        if (queued.insert({e.b, e.a}).second) work.push({e.b, e.a});
      }
    }
  }

  // Shared edges: each maximal cell edge appears in exactly one or two cells.
  std::map<std::pair<LatticePoint, LatticePoint>, std::vector<size_t>> edge_cells;
  for (size_t i = 0; i < out.cells.size(); ++i) {
    for (const auto& e : out.cells[i].edges()) {
      auto k = std::minmax(e.a, e.b);
      edge_cells[{k.first, k.second}].push_back(i);
    }
  }
  for (const auto& [k, cs] : edge_cells) {
    if (cs.size() == 2)
      out.shared_edges.push_back({cs[0], cs[1], LatticeSegment{k.first, k.second}});
    else if (cs.size() > 2)
      throw std::logic_error("regular_subdivision: edge shared by >2 cells");
  }
  return out;
}

namespace {

// Affine extension of the lift on one cell (vertices must be coplanar in the
// lifted space; returns false into ok when they are not).
bool cell_plane(const LatticePolygon& cell, const LiftingFunction& lift, AffineQQ& out) {
  const auto& v = cell.vertices;
  if (cell.dim() < 2) return false;
  out = plane_through(v[0], lift.at(v[0]), v[1], lift.at(v[1]), v[2], lift.at(v[2]));
  for (const auto& p : v)
    if (out.eval(p) != lift.at(p)) return false;
  return true;
}

}  // namespace

bool is_convex_subdivision(const Subdivision& sub, const LiftingFunction& lift) {
  // Lift must be defined on every lattice point of every cell (error path).
  for (const auto& cell : sub.cells)
    for (const auto& p : cell.lattice_points()) lift.at(p);

  // Coverage: cells inside the domain and areas adding up.
  long long total = 0;
  for (const auto& cell : sub.cells) {
    for (const auto& v : cell.vertices)
      if (!sub.domain.contains(v)) return false;
    total += area2(cell);
  }
  if (total != area2(sub.domain)) return false;

  std::vector<AffineQQ> planes(sub.cells.size());
  for (size_t i = 0; i < sub.cells.size(); ++i) {
    if (!cell_plane(sub.cells[i], lift, planes[i])) return false;
  }
  // Global convexity: every lattice point of the domain is on or above every
  // cell plane.
  for (const auto& p : sub.domain.lattice_points()) {
    if (!lift.has(p)) throw std::invalid_argument("lattice point with no lift value");
    for (const auto& pl : planes)
      if (lift.at(p) < pl.eval(p)) return false;
  }
  // Strict crease across every shared edge.
  for (const auto& se : sub.shared_edges) {
    if (planes[se.cell_a] == planes[se.cell_b]) return false;
  }
  return true;
}

std::vector<std::vector<size_t>> adjacency_graph(const Subdivision& sub) {
  std::vector<std::vector<size_t>> adj(sub.cells.size());
  for (const auto& se : sub.shared_edges) {
    adj[se.cell_a].push_back(se.cell_b);
    adj[se.cell_b].push_back(se.cell_a);
  }
  return adj;
}

OrientedAdjacency sweep_orientation(const Subdivision& sub, const QQ& dir_x, const QQ& dir_y) {
  OrientedAdjacency out;
  out.subdivision = sub;
  out.incoming_facets.resize(sub.cells.size());

  std::vector<std::vector<size_t>> succ(sub.cells.size());
  std::vector<size_t> indeg(sub.cells.size(), 0);

  for (const auto& se : sub.shared_edges) {
    // Normal of the edge pointing to the left of (a -> b).
    QQ nx = QQ(-(se.seg.b.y - se.seg.a.y));
    QQ ny = QQ(se.seg.b.x - se.seg.a.x);
    QQ pairing = dir_x * nx + dir_y * ny;
    if (pairing == 0)
      throw std::invalid_argument("sweep_orientation: degenerate direction on edge (" +
                                  std::to_string(se.seg.a.x) + "," + std::to_string(se.seg.a.y) +
                                  ")-(" + std::to_string(se.seg.b.x) + "," +
                                  std::to_string(se.seg.b.y) + ")");
    // Which cell is on the left of (a -> b)?
    auto side_of = [&](size_t ci) {
      for (const auto& v : sub.cells[ci].vertices) {
        long long s = cross(se.seg.a, se.seg.b, v);
        if (s != 0) return s > 0;
      }
      throw std::logic_error("cell degenerate against its own edge");
    };
    bool a_left = side_of(se.cell_a);
    size_t left = a_left ? se.cell_a : se.cell_b;
    size_t right = a_left ? se.cell_b : se.cell_a;
    // Flow goes from the negative to the positive side of the direction.
    size_t source = pairing > 0 ? right : left;
    size_t target = pairing > 0 ? left : right;
    out.edges.push_back({source, target, se.seg});
    out.incoming_facets[target].push_back(se.seg);
    succ[source].push_back(target);
    ++indeg[target];
  }

  // Topological sort; a convex subdivision cannot produce a cycle, but the
  // input is not required to be one.
  std::queue<size_t> q;
  for (size_t i = 0; i < indeg.size(); ++i)
    if (indeg[i] == 0) q.push(i);
  while (!q.empty()) {
    size_t c = q.front();
    q.pop();
    out.topological_order.push_back(c);
    for (size_t t : succ[c])
      if (--indeg[t] == 0) q.push(t);
  }
  if (out.topological_order.size() != sub.cells.size())
    throw std::invalid_argument("sweep_orientation: directed cycle in dual graph");
  return out;
}

}  // namespace patchwork
