#include "patchwork/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace patchwork {

namespace {

// CCW angular comparison of direction vectors (exact).
// Class 0: upper half plane including positive x-axis; class 1: the rest.
int angle_class(const QQ& x, const QQ& y) {
  if (y > 0 || (y == 0 && x > 0)) return 0;
  return 1;
}

bool angle_less(const std::pair<QQ, QQ>& u, const std::pair<QQ, QQ>& v) {
  int cu = angle_class(u.first, u.second), cv = angle_class(v.first, v.second);
  if (cu != cv) return cu < cv;
  QQ cr = u.first * v.second - u.second * v.first;
  return cr > 0;
}

}  // namespace

long long Arrangement::euler_sum() const {
  long long s = curve_V - curve_E;
  for (const auto& f : tfaces) s += f.chi_c;
  return s;
}

std::array<int, 2> Arrangement::tedge_weight(int te) const {
  int pe = tedge_rep[te];
  std::array<int, 2> w{0, 0};
  for (int end = 0; end < 2; ++end) {
    int pv = end == 0 ? pedges[pe].a : pedges[pe].b;
    const QPoint& pos = pvx[pv];
    const QPoint& rep = tvx_rep[torus_of_vx[pv]];
    if (pos.x != rep.x) w[0] ^= 1;
    if (pos.y != rep.y) w[1] ^= 1;
  }
  return w;
}

int Arrangement::locate_fine_face(const QPoint& p) const {
  for (size_t f = 0; f < fine.size(); ++f) {
    long long crossings = 0;
    for (int wid : fine[f].all_walks) {
      std::set<int> seen;  // planar edges of the walk, each once
      for (int h : walks[wid].hes) seen.insert(h / 2);
      for (int e : seen) {
        const QPoint& a = pvx[pedges[e].a];
        const QPoint& b = pvx[pedges[e].b];
        bool up = a.y <= p.y && p.y < b.y;
        bool down = b.y <= p.y && p.y < a.y;
        if (!up && !down) continue;
        QQ xstar = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
        if (xstar < p.x) ++crossings;
      }
    }
    if (crossings % 2 == 1) return static_cast<int>(f);
  }
  return -1;
}

std::array<int, 4> Arrangement::node_sectors(int node_index) const {
  const auto& n = nodes[node_index];
  std::array<int, 4> out{-1, -1, -1, -1};
  for (size_t i = 0; i < n.ends_ccw.size() && i < 4; ++i)
    out[i] = face_of_he[n.ends_ccw[i]];
  return out;
}

Arrangement build_torus_arrangement(const GluedCurve& g) {
  Arrangement arr;
  arr.domain = g.domain;
  // Require a rectangle with a corner at the origin.
  {
    const auto& v = g.domain.vertices;
    bool ok = g.domain.dim() == 2 && v.size() == 4;
    long long dx = 0, dy = 0;
    if (ok) {
      for (const auto& p : v) {
        dx = std::max(dx, p.x);
        dy = std::max(dy, p.y);
      }
      std::set<std::pair<long long, long long>> want = {
          {0, 0}, {dx, 0}, {dx, dy}, {0, dy}};
      for (const auto& p : v)
        if (!want.count({p.x, p.y})) ok = false;
    }
    if (!ok) throw std::invalid_argument("torus arrangement: parent polytope is not a rectangle");
    arr.dx = dx;
    arr.dy = dy;
  }
  const QQ DX(arr.dx), DY(arr.dy);

  // --- planar vertices ---
  std::map<QPoint, int> vx_id;
  auto add_vx = [&](const QPoint& p) {
    auto [it, fresh] = vx_id.try_emplace(p, static_cast<int>(arr.pvx.size()));
    if (fresh) arr.pvx.push_back(p);
    return it->second;
  };
  for (const auto& [a, b] : g.segments) {
    add_vx(a);
    add_vx(b);
  }
  add_vx({-DX, -DY});
  add_vx({DX, -DY});
  add_vx({DX, DY});
  add_vx({-DX, DY});

  auto on_boundary = [&](const QPoint& p) {
    return p.x == DX || p.x == -DX || p.y == DY || p.y == -DY;
  };

  // --- planar edges: curve segments + boundary sides split at vertices ---
  std::set<std::pair<int, int>> edge_set;
  auto add_edge = [&](int a, int b, bool seam) {
    if (a == b) throw std::invalid_argument("torus arrangement: zero-length segment");
    auto key = std::minmax(a, b);
    if (!edge_set.insert({key.first, key.second}).second)
      throw std::invalid_argument("torus arrangement: duplicate segment");
    arr.pedges.push_back({key.first, key.second, seam});
  };
  for (const auto& [a, b] : g.segments) {
    if (on_boundary(a) && on_boundary(b) &&
        ((a.x == b.x && (a.x == DX || a.x == -DX)) || (a.y == b.y && (a.y == DY || a.y == -DY))))
      throw std::invalid_argument("torus arrangement: curve segment lies on the outer boundary");
    add_edge(add_vx(a), add_vx(b), false);
  }
  // Boundary sides.
  struct Side {
    bool vertical;
    QQ fixed;
  };
  Side sides[4] = {{true, DX}, {true, -DX}, {false, DY}, {false, -DY}};
  for (const auto& s : sides) {
    std::vector<int> ids;
    for (size_t i = 0; i < arr.pvx.size(); ++i) {
      const auto& p = arr.pvx[i];
      if (s.vertical ? (p.x == s.fixed) : (p.y == s.fixed)) ids.push_back(static_cast<int>(i));
    }
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
      return s.vertical ? arr.pvx[a].y < arr.pvx[b].y : arr.pvx[a].x < arr.pvx[b].x;
    });
    for (size_t i = 0; i + 1 < ids.size(); ++i) add_edge(ids[i], ids[i + 1], true);
  }

  // --- half-edge structure ---
  const int nhe = static_cast<int>(arr.pedges.size()) * 2;
  auto he_from = [&](int h) { return h % 2 == 0 ? arr.pedges[h / 2].a : arr.pedges[h / 2].b; };
  auto he_to = [&](int h) { return h % 2 == 0 ? arr.pedges[h / 2].b : arr.pedges[h / 2].a; };
  std::vector<std::vector<int>> out_hes(arr.pvx.size());
  for (int h = 0; h < nhe; ++h) out_hes[he_from(h)].push_back(h);
  for (auto& hes : out_hes) {
    std::sort(hes.begin(), hes.end(), [&](int h1, int h2) {
      const QPoint& o1 = arr.pvx[he_from(h1)];
      const QPoint& p1 = arr.pvx[he_to(h1)];
      const QPoint& p2 = arr.pvx[he_to(h2)];
      return angle_less({p1.x - o1.x, p1.y - o1.y}, {p2.x - o1.x, p2.y - o1.y});
    });
  }
  arr.he_next.assign(nhe, -1);
  for (int h = 0; h < nhe; ++h) {
    int v = he_to(h);
    int twin = h % 2 == 0 ? h + 1 : h - 1;
    const auto& hes = out_hes[v];
    auto it = std::find(hes.begin(), hes.end(), twin);
    size_t idx = static_cast<size_t>(it - hes.begin());
    // Predecessor in CCW order traverses the face on the left of h.
    arr.he_next[h] = hes[(idx + hes.size() - 1) % hes.size()];
  }

  // --- face walks ---
  arr.walk_of_he.assign(nhe, -1);
  for (int h0 = 0; h0 < nhe; ++h0) {
    if (arr.walk_of_he[h0] >= 0) continue;
    Arrangement::Walk w;
    int h = h0;
    do {
      arr.walk_of_he[h] = static_cast<int>(arr.walks.size());
      w.hes.push_back(h);
      h = arr.he_next[h];
    } while (h != h0);
    QQ a2 = 0;
    for (int he : w.hes) {
      const QPoint& p = arr.pvx[he_from(he)];
      const QPoint& q = arr.pvx[he_to(he)];
      a2 += p.x * q.y - q.x * p.y;
    }
    w.area2 = a2;
    arr.walks.push_back(std::move(w));
  }

  // --- hole containment: parent walk of every non-outer walk ---
  const int nwalks = static_cast<int>(arr.walks.size());
  std::vector<int> parent(nwalks, -2);  // -2 unknown, -1 unbounded
  for (int wid = 0; wid < nwalks; ++wid) {
    if (arr.walks[wid].area2 > 0) continue;  // outer walk of its own face
    // Leftmost-lowest vertex on the walk.
    int vbest = -1;
    for (int h : arr.walks[wid].hes) {
      int v = he_from(h);
      if (vbest < 0 || arr.pvx[v] < arr.pvx[vbest]) vbest = v;
    }
    const QPoint& vp = arr.pvx[vbest];
    std::set<int> own;
    for (int h : arr.walks[wid].hes) own.insert(h / 2);
    QQ best_x;
    int best_he = -1;
    for (size_t e = 0; e < arr.pedges.size(); ++e) {
      if (own.count(static_cast<int>(e))) continue;
      const QPoint& a = arr.pvx[arr.pedges[e].a];
      const QPoint& b = arr.pvx[arr.pedges[e].b];
      bool up = a.y <= vp.y && vp.y < b.y;     // a->b crosses upward
      bool down = b.y <= vp.y && vp.y < a.y;   // a->b crosses downward
      if (!up && !down) continue;
      QQ xstar = a.x + (vp.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (xstar >= vp.x) continue;
      if (best_he < 0 || xstar > best_x) {
        best_x = xstar;
        // v lies to the right; the half-edge with v on its left runs downward.
        best_he = up ? static_cast<int>(2 * e + 1) : static_cast<int>(2 * e);
      }
    }
    parent[wid] = best_he < 0 ? -1 : arr.walk_of_he[best_he];
  }

  // Resolve each walk to a fine face (outer walks root the faces).
  std::vector<int> face_of_walk(nwalks, -2);
  std::function<int(int)> resolve = [&](int wid) -> int {
    if (face_of_walk[wid] != -2) return face_of_walk[wid];
    if (arr.walks[wid].area2 > 0) {
      int f = static_cast<int>(arr.fine.size());
      arr.fine.push_back({});
      arr.fine.back().outer_walk = wid;
      return face_of_walk[wid] = f;
    }
    if (parent[wid] == -1) return face_of_walk[wid] = -1;
    face_of_walk[wid] = -3;  // cycle guard
    int f = resolve(parent[wid]);
    return face_of_walk[wid] = f;
  };
  for (int wid = 0; wid < nwalks; ++wid) resolve(wid);
  for (int wid = 0; wid < nwalks; ++wid) {
    int f = face_of_walk[wid];
    arr.walks[wid].fine_face = f;
    if (f >= 0) {
      arr.fine[f].all_walks.push_back(wid);
      if (arr.fine[f].outer_walk != wid) ++arr.fine[f].holes;
    }
  }
  arr.face_of_he.assign(nhe, -1);
  for (int h = 0; h < nhe; ++h) arr.face_of_he[h] = face_of_walk[arr.walk_of_he[h]];

  // --- torus identification ---
  auto canon = [&](const QPoint& p) {
    QPoint c = p;
    if (c.x == -DX) c.x = DX;
    if (c.y == -DY) c.y = DY;
    return c;
  };
  std::map<QPoint, int> tvx_id;
  arr.torus_of_vx.resize(arr.pvx.size());
  for (size_t i = 0; i < arr.pvx.size(); ++i) {
    QPoint c = canon(arr.pvx[i]);
    auto [it, fresh] = tvx_id.try_emplace(c, arr.n_tvx);
    if (fresh) {
      ++arr.n_tvx;
      arr.tvx_rep.push_back(c);
    }
    arr.torus_of_vx[i] = it->second;
  }
  std::map<std::pair<int, int>, int> seam_tedge;  // canonical torus vertex pair -> torus edge
  arr.torus_of_edge.resize(arr.pedges.size());
  for (size_t e = 0; e < arr.pedges.size(); ++e) {
    if (!arr.pedges[e].seam) {
      arr.torus_of_edge[e] = arr.n_tedges++;
      arr.tedge_rep.push_back(static_cast<int>(e));
      arr.tedge_seam.push_back(false);
      arr.tedge_copies.push_back({static_cast<int>(e), -1});
      continue;
    }
    auto key = std::minmax(arr.torus_of_vx[arr.pedges[e].a], arr.torus_of_vx[arr.pedges[e].b]);
    auto [it, fresh] = seam_tedge.try_emplace(std::pair<int, int>(key), arr.n_tedges);
    if (fresh) {
      ++arr.n_tedges;
      arr.tedge_rep.push_back(static_cast<int>(e));
      arr.tedge_seam.push_back(true);
      arr.tedge_copies.push_back({static_cast<int>(e), -1});
    } else {
      if (arr.tedge_copies[it->second][1] != -1)
        throw std::invalid_argument("torus arrangement: seam edge with more than two copies");
      arr.tedge_copies[it->second][1] = static_cast<int>(e);
    }
    arr.torus_of_edge[e] = it->second;
  }
  for (int te = 0; te < arr.n_tedges; ++te) {
    if (arr.tedge_seam[te] && arr.tedge_copies[te][1] == -1)
      throw std::invalid_argument(
          "torus arrangement: unmatched seam segment (outer crossings do not wrap)");
  }

  // --- torus faces: merge fine faces across the seams ---
  std::vector<int> uf(arr.fine.size());
  for (size_t i = 0; i < uf.size(); ++i) uf[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int a) { return uf[a] == a ? a : uf[a] = find(uf[a]); };
  auto inner_face = [&](int pe) {
    int f0 = arr.face_of_he[2 * pe], f1 = arr.face_of_he[2 * pe + 1];
    return std::max(f0, f1);  // the other side of a boundary edge is -1
  };
  for (int te = 0; te < arr.n_tedges; ++te) {
    if (!arr.tedge_seam[te]) continue;
    int f1 = inner_face(arr.tedge_copies[te][0]);
    int f2 = inner_face(arr.tedge_copies[te][1]);
    if (f1 < 0 || f2 < 0) throw std::logic_error("seam edge without inner face");
    uf[find(f1)] = find(f2);
  }
  std::map<int, int> root_to_tface;
  arr.tface_of_fine.assign(arr.fine.size(), -1);
  for (size_t f = 0; f < arr.fine.size(); ++f) {
    int r = find(static_cast<int>(f));
    auto [it, fresh] = root_to_tface.try_emplace(r, static_cast<int>(arr.tfaces.size()));
    if (fresh) arr.tfaces.push_back({});
    arr.tface_of_fine[f] = it->second;
    arr.tfaces[it->second].fine_ids.push_back(static_cast<int>(f));
  }
  // chi_c per torus face: fine contributions, minus interior seam edges, plus
  // interior seam-only vertices.
  std::vector<bool> vertex_on_curve(arr.n_tvx, false);
  for (size_t e = 0; e < arr.pedges.size(); ++e) {
    if (!arr.pedges[e].seam) {
      vertex_on_curve[arr.torus_of_vx[arr.pedges[e].a]] = true;
      vertex_on_curve[arr.torus_of_vx[arr.pedges[e].b]] = true;
    }
  }
  for (size_t f = 0; f < arr.fine.size(); ++f)
    arr.tfaces[arr.tface_of_fine[f]].chi_c += 1 - arr.fine[f].holes;
  for (int te = 0; te < arr.n_tedges; ++te) {
    if (!arr.tedge_seam[te]) continue;
    int tf = arr.tface_of_fine[inner_face(arr.tedge_copies[te][0])];
    arr.tfaces[tf].chi_c -= 1;
  }
  // Seam-only torus vertices are interior to the unique torus face around
  // them.
  std::vector<std::set<int>> tvx_faces(arr.n_tvx);
  for (int h = 0; h < nhe; ++h) {
    int f = arr.face_of_he[h];
    if (f >= 0) {
      tvx_faces[arr.torus_of_vx[he_from(h)]].insert(arr.tface_of_fine[f]);
      tvx_faces[arr.torus_of_vx[he_to(h)]].insert(arr.tface_of_fine[f]);
    }
  }
  for (int v = 0; v < arr.n_tvx; ++v) {
    if (vertex_on_curve[v]) continue;
    if (tvx_faces[v].size() == 1) arr.tfaces[*tvx_faces[v].begin()].chi_c += 1;
    else if (!tvx_faces[v].empty())
      throw std::logic_error("seam-only vertex adjacent to several torus faces");
  }
  for (auto& tf : arr.tfaces) tf.disk = (tf.chi_c == 1);

  // --- curve complex counts ---
  std::set<int> curve_vs;
  for (int v = 0; v < arr.n_tvx; ++v)
    if (vertex_on_curve[v]) curve_vs.insert(v);
  arr.curve_V = static_cast<long long>(curve_vs.size());
  for (int te = 0; te < arr.n_tedges; ++te)
    if (!arr.tedge_seam[te]) ++arr.curve_E;

  // --- nodes ---
  for (const auto& nd : g.nodes) {
    auto it = vx_id.find(nd.at);
    if (it == vx_id.end())
      throw std::invalid_argument("torus arrangement: node at a point with no curve vertex");
    Arrangement::NodeInfo info;
    info.tvx = arr.torus_of_vx[it->second];
    info.kind = nd.kind;
    for (int h : out_hes[it->second])
      if (!arr.pedges[h / 2].seam) info.ends_ccw.push_back(h);
    size_t want = nd.kind == SingKind::Node ? 4 : 2;
    if (info.ends_ccw.size() != want)
      throw std::invalid_argument("torus arrangement: node with wrong branch count");
    arr.nodes.push_back(std::move(info));
  }
  return arr;
}

}  // namespace patchwork
