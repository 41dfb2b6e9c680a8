#include "patchwork/chart.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "patchwork/arrangement.hpp"

namespace patchwork {

namespace {

QPoint signed_copy(const LatticePoint& p, int qi) {
  QPoint out{QQ(p.x), QQ(p.y)};
  if (qi & 1) out.x = -out.x;
  if (qi & 2) out.y = -out.y;
  return out;
}

// Exact point-on-segment test in the plane.
bool on_segment(const QPoint& p, const QPoint& a, const QPoint& b) {
  QQ cr = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
  if (cr != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

int orient(const QPoint& a, const QPoint& b, const QPoint& c) {
  QQ cr = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sign_of(cr);
}

// Do closed segments intersect anywhere?
bool segments_intersect(const QPoint& a, const QPoint& b, const QPoint& c, const QPoint& d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d);
  int o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4 && (o1 != 0 || o2 != 0) && (o3 != 0 || o4 != 0)) return true;
  if (o1 == 0 && on_segment(c, a, b)) return true;
  if (o2 == 0 && on_segment(d, a, b)) return true;
  if (o3 == 0 && on_segment(a, c, d)) return true;
  if (o4 == 0 && on_segment(b, c, d)) return true;
  return false;
}

bool point_in_signed_cell(const QPoint& p, const LatticePolygon& cell, int qi) {
  QPoint q = p;
  if (qi & 1) q.x = -q.x;
  if (qi & 2) q.y = -q.y;
  // |p| must lie in the cell; sign pattern must match the quadrant.
  if ((qi & 1) ? p.x > 0 : p.x < 0) return false;
  if ((qi & 2) ? p.y > 0 : p.y < 0) return false;
  const auto& v = cell.vertices;
  for (size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    QQ cr = QQ(b.x - a.x) * (q.y - a.y) - QQ(b.y - a.y) * (q.x - a.x);
    if (cr < 0) return false;
  }
  return true;
}

std::string pt_str(const QPoint& p) {
  return "(" + to_string(p.x) + "," + to_string(p.y) + ")";
}

}  // namespace

long long CellChart::node_count() const {
  long long n = 0;
  for (const auto& q : quadrants) n += static_cast<long long>(q.nodes.size());
  return n;
}

ValidationReport validate_cell_chart(const CellChart& chart, const SparsePolynomial* f) {
  ValidationReport rep;
  for (int qi = 0; qi < 4; ++qi) {
    const auto& q = chart.quadrants[qi];
    std::vector<QPoint> node_pts;
    for (const auto& n : q.nodes) node_pts.push_back(n.at);

    auto on_edge_copy = [&](const QPoint& p) {
      for (const auto& e : chart.cell.edges())
        if (on_segment(p, signed_copy(e.a, qi), signed_copy(e.b, qi))) return true;
      return false;
    };
    auto is_node = [&](const QPoint& p) {
      return std::find(node_pts.begin(), node_pts.end(), p) != node_pts.end();
    };

    std::map<QPoint, int> node_degree;
    std::vector<std::pair<QPoint, QPoint>> segs;
    std::vector<int> seg_poly;  // polyline id per segment, for adjacency exceptions
    int poly_id = 0;
    auto add_polyline = [&](const std::vector<QPoint>& pts, bool oval) {
      for (size_t i = 0; i + 1 < pts.size(); ++i) {
        segs.push_back({pts[i], pts[i + 1]});
        seg_poly.push_back(poly_id);
      }
      if (oval && pts.size() >= 3) {
        segs.push_back({pts.back(), pts.front()});
        seg_poly.push_back(poly_id);
      }
      ++poly_id;
    };

    for (const auto& arc : q.arcs) {
      if (arc.size() < 2) {
        rep.fail(std::string("quadrant ") + kQuadrantNames[qi] + ": arc with fewer than 2 points");
        continue;
      }
      for (const auto& p : arc)
        if (!point_in_signed_cell(p, chart.cell, qi))
          rep.fail(std::string("quadrant ") + kQuadrantNames[qi] + ": point " + pt_str(p) +
                   " outside the cell copy");
      for (int side = 0; side < 2; ++side) {
        const QPoint& endp = side == 0 ? arc.front() : arc.back();
        if (is_node(endp))
          node_degree[endp]++;
        else if (!on_edge_copy(endp))
          rep.fail(std::string("quadrant ") + kQuadrantNames[qi] + ": arc endpoint " +
                   pt_str(endp) + " is neither on a cell edge copy nor at a declared node");
      }
      for (size_t i = 1; i + 1 < arc.size(); ++i) {
        if (on_edge_copy(arc[i]))
          rep.fail(std::string("quadrant ") + kQuadrantNames[qi] + ": interior arc vertex " +
                   pt_str(arc[i]) + " lies on the cell boundary");
        if (is_node(arc[i]))
          rep.fail(std::string("quadrant ") + kQuadrantNames[qi] +
                   ": arc passes through a node at an interior vertex " + pt_str(arc[i]));
      }
      add_polyline(arc, false);
    }
    for (const auto& oval : q.ovals) {
      if (oval.size() < 3) {
        rep.fail(std::string("quadrant ") + kQuadrantNames[qi] + ": oval with fewer than 3 points");
        continue;
      }
      for (const auto& p : oval) {
        if (!point_in_signed_cell(p, chart.cell, qi))
          rep.fail(std::string("quadrant ") + kQuadrantNames[qi] + ": point " + pt_str(p) +
                   " outside the cell copy");
        if (on_edge_copy(p))
          rep.fail(std::string("quadrant ") + kQuadrantNames[qi] + ": oval vertex " + pt_str(p) +
                   " lies on the cell boundary");
        if (is_node(p))
          rep.fail(std::string("quadrant ") + kQuadrantNames[qi] + ": oval through a node");
      }
      add_polyline(oval, true);
    }

    // Pairwise disjointness except at shared node endpoints and consecutive
    // segments of the same polyline.
    for (size_t i = 0; i < segs.size(); ++i) {
      for (size_t j = i + 1; j < segs.size(); ++j) {
        if (!segments_intersect(segs[i].first, segs[i].second, segs[j].first, segs[j].second))
          continue;
        // Allowed: common endpoint that is a node, or adjacency in one polyline.
        std::vector<QPoint> shared;
        for (const QPoint& p : {segs[i].first, segs[i].second})
          if (p == segs[j].first || p == segs[j].second) shared.push_back(p);
        bool ok = !shared.empty();
        for (const auto& p : shared)
          if (!is_node(p) && seg_poly[i] != seg_poly[j]) ok = false;
        if (seg_poly[i] == seg_poly[j] && shared.empty()) ok = false;
        if (!ok)
          rep.fail(std::string("quadrant ") + kQuadrantNames[qi] + ": arcs intersect near " +
                   pt_str(segs[i].first) + " outside a declared node");
      }
    }

    for (const auto& n : q.nodes) {
      int want = n.kind == SingKind::Node ? 4 : 2;
      int got = node_degree.count(n.at) ? node_degree[n.at] : 0;
      if (got != want)
        rep.fail(std::string("quadrant ") + kQuadrantNames[qi] + ": singular point " +
                 pt_str(n.at) + " has " + std::to_string(got) + " incident arc-ends, expected " +
                 std::to_string(want));
    }
  }

  if (f != nullptr && rep.ok) {
    for (const auto& e : chart.cell.edges()) {
      EdgeRootData rd;
      try {
        rd = edge_root_data(*f, e);
      } catch (const std::exception&) {
        continue;  // zero truncation: no crossing constraint
      }
      long long len = integer_length(e);
      long long vx = (e.b.x - e.a.x) / len, vy = (e.b.y - e.a.y) / len;
      for (int qi = 0; qi < 4; ++qi) {
        long long parity = ((qi & 1) ? vx : 0) + ((qi & 2) ? vy : 0);
        long long expected = (parity % 2 == 0) ? rd.positive_roots : rd.negative_roots;
        long long got = 0;
        QPoint A = signed_copy(e.a, qi), B = signed_copy(e.b, qi);
        for (const auto& arc : chart.quadrants[qi].arcs)
          for (const QPoint& endp : {arc.front(), arc.back()})
            if (on_segment(endp, A, B)) ++got;
        if (got != expected)
          rep.fail(std::string("edge ") + "(" + std::to_string(e.a.x) + "," +
                   std::to_string(e.a.y) + ")-(" + std::to_string(e.b.x) + "," +
                   std::to_string(e.b.y) + ") quadrant " + kQuadrantNames[qi] + ": " +
                   std::to_string(got) + " crossings, root data expects " +
                   std::to_string(expected));
      }
    }
  }
  return rep;
}

namespace {

struct ArcRef {
  size_t cell, quadrant, arc;
};

}  // namespace

GluedCurve glue_charts(const Subdivision& sub, const std::vector<CellChart>& charts) {
  if (charts.size() != sub.cells.size())
    throw std::invalid_argument("glue_charts: one chart per cell required");
  for (size_t i = 0; i < charts.size(); ++i)
    if (!(charts[i].cell == sub.cells[i]))
      throw std::invalid_argument("glue_charts: chart cell mismatch at index " +
                                  std::to_string(i));

  GluedCurve out;
  out.domain = sub.domain;

  // Rectangle quotient data (outer identifications only then).
  bool rect = false;
  long long DX = 0, DY = 0;
  {
    const auto& v = sub.domain.vertices;
    if (v.size() == 4) {
      for (const auto& p : v) {
        DX = std::max(DX, p.x);
        DY = std::max(DY, p.y);
      }
      std::set<std::pair<long long, long long>> want = {{0, 0}, {DX, 0}, {DX, DY}, {0, DY}};
      rect = true;
      for (const auto& p : v)
        if (!want.count({p.x, p.y})) rect = false;
    }
  }
  auto wrap = [&](QPoint p) {
    if (!rect) return p;
    if (p.x == QQ(-DX)) p.x = QQ(DX);
    if (p.y == QQ(-DY)) p.y = QQ(DY);
    return p;
  };

  // Mutable copy of all polylines.
  std::vector<std::vector<QPoint>> arcs;   // flattened arcs
  std::vector<ArcRef> arc_refs;
  std::vector<std::vector<QPoint>> ovals;  // pass through untouched
  for (size_t c = 0; c < charts.size(); ++c) {
    for (int qi = 0; qi < 4; ++qi) {
      for (size_t a = 0; a < charts[c].quadrants[qi].arcs.size(); ++a) {
        arcs.push_back(charts[c].quadrants[qi].arcs[a]);
        arc_refs.push_back({c, static_cast<size_t>(qi), a});
      }
      for (const auto& ov : charts[c].quadrants[qi].ovals) ovals.push_back(ov);
      for (const auto& n : charts[c].quadrants[qi].nodes) out.nodes.push_back(n);
      out.declared_node_sum += static_cast<long long>(charts[c].quadrants[qi].nodes.size());
    }
  }

  // Classify every arc end that is not a node end.
  struct End {
    size_t arc;
    int side;  // 0 front, 1 back
    QPoint pos;
    QPoint wrapped;
    bool wrapped_x = false, wrapped_y = false;
  };
  struct GroupKey {
    QPoint a, b;  // wrapped, normalized segment
    bool operator<(const GroupKey& o) const {
      if (!(a == o.a)) return a < o.a;
      return b < o.b;
    }
  };
  std::map<GroupKey, std::map<std::pair<size_t, size_t>, std::vector<End>>> groups;

  std::set<QPoint> node_positions;
  for (const auto& n : out.nodes) node_positions.insert(n.at);

  for (size_t ai = 0; ai < arcs.size(); ++ai) {
    const auto& ref = arc_refs[ai];
    const auto& cell = charts[ref.cell].cell;
    for (int side = 0; side < 2; ++side) {
      QPoint p = side == 0 ? arcs[ai].front() : arcs[ai].back();
      if (node_positions.count(p)) continue;
      // Which edge copy is it on?
      bool found = false;
      for (const auto& e : cell.edges()) {
        QPoint A = signed_copy(e.a, static_cast<int>(ref.quadrant));
        QPoint B = signed_copy(e.b, static_cast<int>(ref.quadrant));
        if (!on_segment(p, A, B)) continue;
        if (p == A || p == B)
          throw std::invalid_argument("glue_charts: crossing at a cell corner " + pt_str(p));
        End end;
        end.arc = ai;
        end.side = side;
        end.pos = p;
        end.wrapped = wrap(p);
        end.wrapped_x = !(end.wrapped.x == p.x);
        end.wrapped_y = !(end.wrapped.y == p.y);
        QPoint WA = wrap(A), WB = wrap(B);
        GroupKey key = WA < WB ? GroupKey{WA, WB} : GroupKey{WB, WA};
        groups[key][{ref.cell, ref.quadrant}].push_back(end);
        found = true;
        break;
      }
      if (!found)
        throw std::invalid_argument("glue_charts: arc endpoint " + pt_str(p) +
                                    " not on any edge copy");
    }
  }

  // Match within each geometric edge copy.
  for (auto& [key, sides] : groups) {
    if (sides.size() == 1) {
      // Crossings on a free boundary edge of a non-rectangle domain stay
      // unmatched ends; on a rectangle everything must pair up.
      if (rect)
        throw std::invalid_argument("glue_charts: crossing-count mismatch on edge copy " +
                                    pt_str(key.a) + "-" + pt_str(key.b) +
                                    " (one side has no chart data)");
      continue;
    }
    if (sides.size() > 2)
      throw std::invalid_argument("glue_charts: edge copy " + pt_str(key.a) + "-" + pt_str(key.b) +
                                  " borders more than two chart sides");
    auto it = sides.begin();
    auto& sideA = it->second;
    auto& sideB = std::next(it)->second;
    if (sideA.size() != sideB.size())
      throw std::invalid_argument(
          "glue_charts: crossing-count mismatch on edge copy " + pt_str(key.a) + "-" +
          pt_str(key.b) + " (" + std::to_string(sideA.size()) + " vs " +
          std::to_string(sideB.size()) + ")");
    auto by_param = [&](const End& e1, const End& e2) { return e1.wrapped < e2.wrapped; };
    std::sort(sideA.begin(), sideA.end(), by_param);
    std::sort(sideB.begin(), sideB.end(), by_param);
    for (size_t i = 0; i < sideA.size(); ++i) {
      QPoint target{(sideA[i].wrapped.x + sideB[i].wrapped.x) / 2,
                    (sideA[i].wrapped.y + sideB[i].wrapped.y) / 2};
      bool outer = sideA[i].wrapped_x || sideA[i].wrapped_y || sideB[i].wrapped_x ||
                   sideB[i].wrapped_y;
      for (End* end : {&sideA[i], &sideB[i]}) {
        QPoint t = target;
        if (end->wrapped_x) t.x = -t.x;
        if (end->wrapped_y) t.y = -t.y;
        auto& poly = arcs[end->arc];
        if (end->side == 0)
          poly.front() = t;
        else
          poly.back() = t;
      }
      if (outer) {
        QPoint ta = target, tb = target;
        if (sideA[i].wrapped_x || sideB[i].wrapped_x) tb.x = -tb.x;
        if (sideA[i].wrapped_y || sideB[i].wrapped_y) tb.y = -tb.y;
        out.outer_identifications.push_back({ta, tb});
      }
    }
    // Welded positions must stay distinct along the edge.
    for (size_t i = 0; i + 1 < sideA.size(); ++i) {
      QPoint a{(sideA[i].wrapped.x + sideB[i].wrapped.x) / 2,
               (sideA[i].wrapped.y + sideB[i].wrapped.y) / 2};
      QPoint b{(sideA[i + 1].wrapped.x + sideB[i + 1].wrapped.x) / 2,
               (sideA[i + 1].wrapped.y + sideB[i + 1].wrapped.y) / 2};
      if (a == b)
        throw std::invalid_argument("glue_charts: snapped crossings collide at " + pt_str(a));
    }
  }

  // Emit canonical segment set.
  auto push_segment = [&](const QPoint& a, const QPoint& b) {
    if (a == b) throw std::invalid_argument("glue_charts: zero-length segment at " + pt_str(a));
    if (b < a)
      out.segments.push_back({b, a});
    else
      out.segments.push_back({a, b});
  };
  for (const auto& poly : arcs)
    for (size_t i = 0; i + 1 < poly.size(); ++i) push_segment(poly[i], poly[i + 1]);
  for (const auto& ov : ovals) {
    for (size_t i = 0; i + 1 < ov.size(); ++i) push_segment(ov[i], ov[i + 1]);
    push_segment(ov.back(), ov.front());
  }
  std::sort(out.segments.begin(), out.segments.end());
  std::sort(out.outer_identifications.begin(), out.outer_identifications.end());
  return out;
}

CellChart chart_shift(const CellChart& chart, long long dx, long long dy) {
  CellChart out;
  std::vector<LatticePoint> vs;
  for (const auto& v : chart.cell.vertices) vs.push_back({v.x + dx, v.y + dy});
  out.cell = convex_hull(vs);
  for (int qi = 0; qi < 4; ++qi) {
    QQ ox = (qi & 1) ? QQ(-dx) : QQ(dx);
    QQ oy = (qi & 2) ? QQ(-dy) : QQ(dy);
    auto mv = [&](QPoint p) { return QPoint{p.x + ox, p.y + oy}; };
    for (const auto& arc : chart.quadrants[qi].arcs) {
      std::vector<QPoint> na;
      for (const auto& p : arc) na.push_back(mv(p));
      out.quadrants[qi].arcs.push_back(std::move(na));
    }
    for (const auto& ov : chart.quadrants[qi].ovals) {
      std::vector<QPoint> no;
      for (const auto& p : ov) no.push_back(mv(p));
      out.quadrants[qi].ovals.push_back(std::move(no));
    }
    for (const auto& n : chart.quadrants[qi].nodes)
      out.quadrants[qi].nodes.push_back({mv(n.at), n.kind});
  }
  return out;
}

CellChart chart_flip_y(const CellChart& chart, long long h) {
  CellChart out;
  std::vector<LatticePoint> vs;
  for (const auto& v : chart.cell.vertices) vs.push_back({v.x, h - v.y});
  out.cell = convex_hull(vs);
  for (int qi = 0; qi < 4; ++qi) {
    QQ H = (qi & 2) ? QQ(-h) : QQ(h);
    auto mv = [&](QPoint p) { return QPoint{p.x, H - p.y}; };
    for (const auto& arc : chart.quadrants[qi].arcs) {
      std::vector<QPoint> na;
      for (const auto& p : arc) na.push_back(mv(p));
      out.quadrants[qi].arcs.push_back(std::move(na));
    }
    for (const auto& ov : chart.quadrants[qi].ovals) {
      std::vector<QPoint> no;
      for (const auto& p : ov) no.push_back(mv(p));
      out.quadrants[qi].ovals.push_back(std::move(no));
    }
    for (const auto& n : chart.quadrants[qi].nodes)
      out.quadrants[qi].nodes.push_back({mv(n.at), n.kind});
  }
  return out;
}

CurveSummary curve_summary(const GluedCurve& g) {
  CurveSummary out;
  out.node_count = static_cast<long long>(g.nodes.size());

  Arrangement arr = build_torus_arrangement(g);

  // Components of the curve 1-complex on the torus.
  std::vector<int> uf(arr.n_tvx);
  for (int i = 0; i < arr.n_tvx; ++i) uf[i] = i;
  std::function<int(int)> find = [&](int a) { return uf[a] == a ? a : uf[a] = find(uf[a]); };
  std::vector<int> curve_edge_of_tedge;
  for (int te = 0; te < arr.n_tedges; ++te) {
    if (arr.tedge_seam[te]) continue;
    int pe = arr.tedge_rep[te];
    int a = arr.torus_of_vx[arr.pedges[pe].a];
    int b = arr.torus_of_vx[arr.pedges[pe].b];
    uf[find(a)] = find(b);
  }
  std::map<int, size_t> comp_of_root;
  std::vector<std::array<int, 2>> clazz;
  std::vector<long long> comp_edges;
  std::vector<bool> comp_has_node;
  std::vector<std::set<int>> comp_vertices;
  for (int te = 0; te < arr.n_tedges; ++te) {
    if (arr.tedge_seam[te]) continue;
    int pe = arr.tedge_rep[te];
    int root = find(arr.torus_of_vx[arr.pedges[pe].a]);
    auto [it, fresh] = comp_of_root.try_emplace(root, clazz.size());
    if (fresh) {
      clazz.push_back({0, 0});
      comp_edges.push_back(0);
      comp_has_node.push_back(false);
      comp_vertices.push_back({});
    }
    auto w = arr.tedge_weight(te);
    clazz[it->second][0] ^= w[0];
    clazz[it->second][1] ^= w[1];
    ++comp_edges[it->second];
    comp_vertices[it->second].insert(arr.torus_of_vx[arr.pedges[pe].a]);
    comp_vertices[it->second].insert(arr.torus_of_vx[arr.pedges[pe].b]);
  }
  for (const auto& nd : arr.nodes) {
    auto it = comp_of_root.find(find(nd.tvx));
    if (it != comp_of_root.end()) comp_has_node[it->second] = true;
  }
  out.components = static_cast<long long>(clazz.size());
  out.component_classes = clazz;
  for (size_t c = 0; c < clazz.size(); ++c) {
    // An oval is an embedded null-homologous circle: no node on it and as
    // many vertices as edges.
    if (!comp_has_node[c] && clazz[c] == std::array<int, 2>{0, 0} &&
        static_cast<long long>(comp_vertices[c].size()) == comp_edges[c])
      ++out.ovals;
  }

  // Per-quadrant counts: drop vertices on the axes or the outer boundary and
  // count components of what remains, per open quadrant.
  out.per_quadrant = per_quadrant_counts(g);
  return out;
}

std::array<long long, 4> per_quadrant_counts(const GluedCurve& g,
                                             const std::map<QPoint, int>& resolutions) {
  long long dmx = 0, dmy = 0;
  for (const auto& v : g.domain.vertices) {
    dmx = std::max(dmx, std::llabs(v.x));
    dmy = std::max(dmy, std::llabs(v.y));
  }
  const QQ DX(dmx), DY(dmy);
  auto interior_vx = [&](const QPoint& p) {
    return p.x != 0 && p.y != 0 && p.x != DX && p.x != -DX && p.y != DY && p.y != -DY;
  };
  std::set<QPoint> node_positions;
  for (const auto& n : g.nodes) node_positions.insert(n.at);

  std::vector<int> uf(g.segments.size());
  for (size_t i = 0; i < uf.size(); ++i) uf[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int a) { return uf[a] == a ? a : uf[a] = find(uf[a]); };
  auto unite = [&](int a, int b) { uf[find(a)] = find(b); };

  std::map<QPoint, std::vector<int>> segs_at;
  for (size_t i = 0; i < g.segments.size(); ++i) {
    for (const QPoint& p : {g.segments[i].first, g.segments[i].second}) {
      if (!interior_vx(p)) continue;
      segs_at[p].push_back(static_cast<int>(i));
    }
  }
  for (const auto& [p, ids] : segs_at) {
    auto res = resolutions.find(p);
    if (!node_positions.count(p) || res == resolutions.end()) {
      for (size_t i = 1; i < ids.size(); ++i) unite(ids[0], ids[i]);
      continue;
    }
    if (ids.size() != 4) continue;  // malformed node; leave disconnected
    // Sort the incident ends counterclockwise by outgoing direction.
    std::vector<std::pair<int, QPoint>> ends;
    for (int id : ids) {
      const auto& s = g.segments[id];
      QPoint other = s.first == p ? s.second : s.first;
      ends.push_back({id, QPoint{other.x - p.x, other.y - p.y}});
    }
    auto angle_class = [](const QPoint& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; };
    std::sort(ends.begin(), ends.end(), [&](const auto& a, const auto& b) {
      int ca = angle_class(a.second), cb = angle_class(b.second);
      if (ca != cb) return ca < cb;
      return a.second.x * b.second.y - a.second.y * b.second.x > 0;
    });
    int parity = res->second & 1;
    unite(ends[(0 + parity) % 4].first, ends[(1 + parity) % 4].first);
    unite(ends[(2 + parity) % 4].first, ends[(3 + parity) % 4].first);
  }

  std::array<long long, 4> out{};
  std::map<int, int> quad_roots[4];
  for (size_t i = 0; i < g.segments.size(); ++i) {
    QPoint mid{(g.segments[i].first.x + g.segments[i].second.x) / 2,
               (g.segments[i].first.y + g.segments[i].second.y) / 2};
    int qi = quadrant_index(mid.x < 0, mid.y < 0);
    quad_roots[qi][find(static_cast<int>(i))] = 1;
  }
  for (int qi = 0; qi < 4; ++qi) out[qi] = static_cast<long long>(quad_roots[qi].size());
  return out;
}

}  // namespace patchwork
