#include "patchwork/surfaces.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace patchwork {

Tridegree Tridegree::normalized() const {
  std::array<long long, 3> d{d1, d2, d3};
  std::sort(d.begin(), d.end(), std::greater<>());
  return {d[0], d[1], d[2]};
}

int intersection_form(const HomologyClass& a, const HomologyClass& b) {
  if (a.bits.size() != 3 || b.bits.size() != 3)
    throw std::invalid_argument("intersection_form: rank-3 classes required");
  int s = 0;
  for (int i = 0; i < 3; ++i) s ^= (a.bits[i] & b.bits[i]);
  return s;
}

HomologyClass surface_class(const Tridegree& d) {
  return {{static_cast<int>(((d.d1 % 2) + 2) % 2), static_cast<int>(((d.d2 % 2) + 2) % 2),
           static_cast<int>(((d.d3 % 2) + 2) % 2)}};
}

std::pair<long long, long long> hodge_numbers(long long d1, long long d2) {
  if (d1 < 1 || d2 < 1) throw std::invalid_argument("hodge_numbers: degrees must be >= 1");
  long long h20 = d1 * d2 - d1 - d2 + 1;
  long long h11 = 6 * d1 * d2 - 2 * d1 - 2 * d2 + 4;
  return {h20, h11};
}

BettiBounds betti_bounds(long long d1, long long d2) {
  auto [h20, h11] = hodge_numbers(d1, d2);
  BettiBounds b;
  b.b0_bound = (h20 + h11 + 1) / 2;
  b.b1_bound = h20 + h11;
  b.b1_max = 7 * d1 * d2 - 3 * d1 - 3 * d2 + 5;
  b.b1_max_even = b.b1_max - (b.b1_max % 2 == 0 ? 0 : 1);
  return b;
}

RegionComplex sign_regions(Arrangement arr, int seed_fine_face, int seed_sign) {
  if (seed_fine_face < 0 || seed_fine_face >= static_cast<int>(arr.fine.size()))
    throw std::invalid_argument("sign_regions: seed face out of range");
  if (seed_sign != 1 && seed_sign != -1)
    throw std::invalid_argument("sign_regions: sign must be +1 or -1");

  RegionComplex rc;
  rc.face_sign.assign(arr.fine.size(), 0);
  rc.face_sign[seed_fine_face] = seed_sign;

  // Constraints: opposite across curve edges, equal across seams.
  struct Constraint {
    int f1, f2;
    bool flip;
  };
  std::vector<Constraint> cons;
  std::vector<std::vector<std::pair<int, bool>>> adj(arr.fine.size());
  auto inner_face = [&](int pe) {
    return std::max(arr.face_of_he[2 * pe], arr.face_of_he[2 * pe + 1]);
  };
  for (int te = 0; te < arr.n_tedges; ++te) {
    if (arr.tedge_seam[te]) {
      int f1 = inner_face(arr.tedge_copies[te][0]);
      int f2 = inner_face(arr.tedge_copies[te][1]);
      cons.push_back({f1, f2, false});
    } else {
      int pe = arr.tedge_rep[te];
      int f1 = arr.face_of_he[2 * pe], f2 = arr.face_of_he[2 * pe + 1];
      if (f1 < 0 || f2 < 0)
        throw std::invalid_argument("sign_regions: curve edge bounding the cut rectangle");
      cons.push_back({f1, f2, true});
    }
  }
  for (const auto& c : cons) {
    adj[c.f1].push_back({c.f2, c.flip});
    adj[c.f2].push_back({c.f1, c.flip});
  }
  std::queue<int> q;
  q.push(seed_fine_face);
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    for (auto [g, flip] : adj[f]) {
      int want = flip ? -rc.face_sign[f] : rc.face_sign[f];
      if (rc.face_sign[g] == 0) {
        rc.face_sign[g] = want;
        q.push(g);
      } else if (rc.face_sign[g] != want) {
        throw std::invalid_argument("sign_regions: inconsistent sign propagation (odd cycle)");
      }
    }
  }
  for (int s : rc.face_sign)
    if (s == 0) throw std::invalid_argument("sign_regions: arrangement not sign-connected");
  rc.arr = std::move(arr);
  return rc;
}

RegionComplex sign_regions(Arrangement arr, const QPoint& seed_point, int seed_sign) {
  int f = arr.locate_fine_face(seed_point);
  if (f < 0) throw std::invalid_argument("sign_regions: seed point not inside any face");
  return sign_regions(std::move(arr), f, seed_sign);
}

RegionComplex blow_up_nodes(RegionComplex rc) {
  if (rc.blowup_applied) throw std::invalid_argument("blow_up_nodes: already applied");
  for (size_t n = 0; n < rc.arr.nodes.size(); ++n) {
    if (rc.arr.nodes[n].kind != SingKind::Node) continue;
    auto sect = rc.arr.node_sectors(static_cast<int>(n));
    std::array<int, 4> s;
    for (int i = 0; i < 4; ++i) {
      if (sect[i] < 0) throw std::invalid_argument("blow_up_nodes: node sector outside domain");
      s[i] = rc.face_sign[sect[i]];
    }
    if (!(s[0] == s[2] && s[1] == s[3] && s[0] == -s[1]))
      throw std::invalid_argument("blow_up_nodes: node with non-alternating sector signs");
  }
  rc.blowup_applied = true;
  return rc;
}

namespace {

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(size_t n) : up(n) {
    for (size_t i = 0; i < n; ++i) up[i] = static_cast<int>(i);
  }
  int find(int a) { return up[a] == a ? a : up[a] = find(up[a]); }
  void unite(int a, int b) { up[find(a)] = find(b); }
};

}  // namespace

RegionAnalysis analyze_region(const RegionComplex& rc, int sign) {
  const Arrangement& arr = rc.arr;
  RegionAnalysis out;

  auto he_from = [&](int h) {
    return h % 2 == 0 ? arr.pedges[h / 2].a : arr.pedges[h / 2].b;
  };
  auto he_to = [&](int h) { return h % 2 == 0 ? arr.pedges[h / 2].b : arr.pedges[h / 2].a; };

  // Fine faces of the requested sign, merged when they share a torus vertex.
  std::vector<std::vector<int>> faces_at_tvx(arr.n_tvx);
  for (int h = 0; h < static_cast<int>(arr.he_next.size()); ++h) {
    int f = arr.face_of_he[h];
    if (f < 0) continue;
    faces_at_tvx[arr.torus_of_vx[he_from(h)]].push_back(f);
    faces_at_tvx[arr.torus_of_vx[he_to(h)]].push_back(f);
  }
  UnionFind uf(arr.fine.size());
  for (int v = 0; v < arr.n_tvx; ++v) {
    int prev = -1;
    for (int f : faces_at_tvx[v]) {
      if (rc.face_sign[f] != sign) continue;
      if (prev >= 0) uf.unite(prev, f);
      prev = f;
    }
  }
  std::map<int, size_t> comp_of_root;
  for (size_t f = 0; f < arr.fine.size(); ++f) {
    if (rc.face_sign[f] != sign) continue;
    int r = uf.find(static_cast<int>(f));
    auto [it, fresh] = comp_of_root.try_emplace(r, out.components.size());
    if (fresh) out.components.push_back({});
    out.components[it->second].faces.push_back(static_cast<int>(f));
  }

  // Closure cells per component.
  for (auto& comp : out.components) {
    std::set<int> comp_faces(comp.faces.begin(), comp.faces.end());
    std::set<int> tvs, tes;
    bool any_curve_edge = false;
    for (int f : comp.faces) {
      for (int wid : arr.fine[f].all_walks) {
        for (int h : arr.walks[wid].hes) {
          int e = h / 2;
          tes.insert(arr.torus_of_edge[e]);
          tvs.insert(arr.torus_of_vx[arr.pedges[e].a]);
          tvs.insert(arr.torus_of_vx[arr.pedges[e].b]);
          if (!arr.pedges[e].seam) any_curve_edge = true;
        }
      }
    }
    long long chi = 0;
    chi += static_cast<long long>(tvs.size());
    chi -= static_cast<long long>(tes.size());
    for (int f : comp.faces) chi += 1 - arr.fine[f].holes;
    comp.chi = chi;
    comp.has_boundary = any_curve_edge;

    // Cycle basis of the closure 1-skeleton. At every node the region has
    // two opposite sectors joined by an exceptional arc in the blown-up
    // surface; a cycle crosses the exceptional circle exactly when it
    // switches sectors there. Model: one corner vertex per same-sign
    // sector, joined by an edge of exceptional parity 1, with each branch
    // edge attached to the corner of the sector it borders.
    std::map<int, size_t> node_of_tvx;
    for (size_t n = 0; n < arr.nodes.size(); ++n)
      if (arr.nodes[n].kind == SingKind::Node) node_of_tvx[arr.nodes[n].tvx] = n;
    int base = arr.n_tvx;
    auto corner_vertex = [&](int h_out) -> int {
      // h_out leaves the edge endpoint; returns the graph vertex there.
      int v = arr.torus_of_vx[he_from(h_out)];
      auto it = node_of_tvx.find(v);
      if (it == node_of_tvx.end()) return v;
      const auto& nd = arr.nodes[it->second];
      auto sect = arr.node_sectors(static_cast<int>(it->second));
      for (size_t i = 0; i < nd.ends_ccw.size(); ++i) {
        if (nd.ends_ccw[i] / 2 != h_out / 2) continue;
        // Sector i lies between ends i and i+1; sector i-1 on the other side.
        int s_after = sect[i];
        int s_before = sect[(i + 3) % 4];
        int sector = -1;
        if (s_after >= 0 && rc.face_sign[s_after] == sign) sector = static_cast<int>(i);
        else if (s_before >= 0 && rc.face_sign[s_before] == sign)
          sector = static_cast<int>((i + 3) % 4);
        if (sector < 0) return v;  // edge not bordering this region here
        return base + 2 * static_cast<int>(it->second) + (sector < 2 ? 0 : 1);
      }
      return v;
    };

    struct GEdge {
      int u, v;
      std::array<int, 3> w;
    };
    std::vector<GEdge> gedges;
    std::set<int> gverts;
    for (int te : tes) {
      int pe = arr.tedge_rep[te];
      auto wxy = arr.tedge_weight(te);
      int u = corner_vertex(2 * pe);      // out of endpoint a
      int v = corner_vertex(2 * pe + 1);  // out of endpoint b
      gedges.push_back({u, v, {wxy[0], wxy[1], 0}});
      gverts.insert(u);
      gverts.insert(v);
    }
    // Exceptional-arc crossings at nodes whose same-sign sectors belong here.
    for (size_t n = 0; n < arr.nodes.size(); ++n) {
      if (arr.nodes[n].kind != SingKind::Node) continue;
      auto sect = arr.node_sectors(static_cast<int>(n));
      bool mine = false;
      for (int f : sect)
        if (f >= 0 && rc.face_sign[f] == sign && comp_faces.count(f)) mine = true;
      if (!mine) continue;
      int u = base + 2 * static_cast<int>(n);
      int v = u + 1;
      gedges.push_back({u, v, {0, 0, 1}});
      gverts.insert(u);
      gverts.insert(v);
    }

    // Spanning forest; fundamental cycles give the basis classes.
    std::map<int, std::array<int, 3>> acc;  // accumulated weight from root
    std::map<int, std::vector<std::pair<int, std::array<int, 3>>>> gadj;
    for (const auto& e : gedges) {
      gadj[e.u].push_back({e.v, e.w});
      gadj[e.v].push_back({e.u, e.w});
    }
    std::set<int> visited;
    std::set<std::pair<int, int>> tree;
    for (int root : gverts) {
      if (visited.count(root)) continue;
      acc[root] = {0, 0, 0};
      visited.insert(root);
      std::queue<int> bfs;
      bfs.push(root);
      while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        for (const auto& [v, w] : gadj[u]) {
          if (visited.count(v)) continue;
          visited.insert(v);
          acc[v] = {acc[u][0] ^ w[0], acc[u][1] ^ w[1], acc[u][2] ^ w[2]};
          tree.insert(std::minmax(u, v));
          bfs.push(v);
        }
      }
    }
    for (const auto& e : gedges) {
      if (e.u != e.v && tree.count(std::minmax(e.u, e.v))) continue;
      std::array<int, 3> cyc{acc[e.u][0] ^ acc[e.v][0] ^ e.w[0],
                             acc[e.u][1] ^ acc[e.v][1] ^ e.w[1],
                             acc[e.u][2] ^ acc[e.v][2] ^ e.w[2]};
      if (cyc != std::array<int, 3>{0, 0, 0}) comp.cycle_basis.push_back(cyc);
    }
    out.chi_total += comp.chi;
  }
  return out;
}

OrientabilityReport orientability_check(const RegionComplex& rc, long long k, long long l) {
  RegionAnalysis neg = analyze_region(rc, -1);
  OrientabilityReport rep;
  for (const auto& comp : neg.components) {
    bool ori = true, exc = false;
    for (const auto& c : comp.cycle_basis) {
      if ((c[0] * k + c[1] * l) % 2 != 0) ori = false;
      if (c[2] % 2 != 0) exc = true;
    }
    rep.orientable.push_back(ori);
    rep.exceptional_odd.push_back(exc);
  }
  return rep;
}

SurfaceTopology double_cover_topology(const RegionComplex& rc, long long k, long long l) {
  if (!rc.blowup_applied)
    throw std::invalid_argument("double_cover_topology: blow-up not applied");
  RegionAnalysis neg = analyze_region(rc, -1);
  OrientabilityReport ori = orientability_check(rc, k, l);
  SurfaceTopology st;
  for (size_t c = 0; c < neg.components.size(); ++c) {
    if (ori.exceptional_odd[c])
      throw std::invalid_argument(
          "double_cover_topology: component with odd exceptional cycle (not an embedded surface)");
    const auto& comp = neg.components[c];
    auto push = [&](long long chi) {
      SurfaceComponent sc;
      sc.chi = chi;
      sc.orientable = ori.orientable[c];
      sc.genus_or_crosscaps = sc.orientable ? (2 - chi) / 2 : (2 - chi);
      st.components.push_back(sc);
    };
    if (comp.has_boundary) {
      push(2 * comp.chi);
    } else {
      push(comp.chi);
      push(comp.chi);
    }
  }
  std::sort(st.components.begin(), st.components.end(),
            [](const SurfaceComponent& a, const SurfaceComponent& b) {
              if (a.chi != b.chi) return a.chi > b.chi;
              return a.orientable > b.orientable;
            });
  st.b0 = static_cast<long long>(st.components.size());
  st.chi = 0;
  for (const auto& comp : st.components) st.chi += comp.chi;
  st.b1 = 2 * st.b0 - st.chi;
  return st;
}

bool euler_parity_guard(const SurfaceTopology& st) {
  for (const auto& c : st.components)
    if (c.chi % 2 != 0) return false;
  return true;
}

}  // namespace patchwork
