#include "patchwork/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace patchwork {

FlipResult flip_y(const SparsePolynomial& f, long long h) {
  FlipResult out;
  std::map<LatticePoint, QQ> coeffs;
  if (h % 2 != 0) {
    long long min_new = 0;
    for (const auto& [p, c] : f.coefficients()) min_new = std::min(min_new, h - p.y);
    out.shift_applied = min_new < 0;
    out.shift_amount = out.shift_applied ? -min_new : 0;
    for (const auto& [p, c] : f.coefficients())
      coeffs[{p.x, h - p.y + out.shift_amount}] = c;
  } else {
    for (const auto& [p, c] : f.coefficients()) coeffs[{p.x, p.y + h - 1}] = c;
  }
  out.poly = SparsePolynomial(std::move(coeffs));
  return out;
}

LiftingProfiles lifting_profiles(long long k, long long l) {
  if (k < 2 || l < 2) throw std::invalid_argument("lifting_profiles: k,l >= 2 required");
  LiftingProfiles out;
  // nu_P on [0,4k] x [0,4l], piecewise linear in j only.
  auto nu_p = [&](long long j) -> QQ {
    if (j <= 2) return QQ(2 - j);  // slope -1, anchor nu(2) = 0
    if (j <= 3) return QQ(0);      // slope 0 on [2,3]
    // slope h-1 on [4h-5, 4h-1] for h = 2..l, slope l on [4l-1, 4l]
    QQ v = 0;
    long long at = 3;
    for (long long h = 2; h <= l; ++h) {
      long long top = 4 * h - 1;
      long long s = h - 1;
      if (j <= top) return v + QQ(s * (j - at));
      v += QQ(s * (top - at));
      at = top;
    }
    return v + QQ(l * (j - at));
  };
  out.nu_P.domain = make_rect(0, 0, 4 * k, 4 * l);
  for (const auto& p : out.nu_P.domain.lattice_points()) out.nu_P.values[p] = nu_p(p.y);
  // nu_L on [0,k] x [0,l]: anchor nu(1) = 0, slope -1 then 1, 2, ..., l-1.
  auto nu_l = [&](long long j) -> QQ {
    if (j == 0) return QQ(1);
    return QQ(j * (j - 1) / 2);
  };
  out.nu_L.domain = make_rect(0, 0, k, l);
  for (const auto& p : out.nu_L.domain.lattice_points()) out.nu_L.values[p] = nu_l(p.y);
  out.nu_M = out.nu_L;
  return out;
}

namespace {

Subdivision subdivision_from_lift(const LatticePolygon& domain, const LiftingFunction& lift) {
  Subdivision sub = regular_subdivision(domain, lift);
  if (!is_convex_subdivision(sub, lift))
    throw std::logic_error("stacking subdivision failed its own convexity check");
  return sub;
}

// Reorders charts to match the subdivision's cell order.
std::vector<CellChart> match_cells(const Subdivision& sub, std::vector<CellChart> charts) {
  std::vector<CellChart> out(sub.cells.size());
  std::vector<bool> used(charts.size(), false);
  for (size_t i = 0; i < sub.cells.size(); ++i) {
    bool found = false;
    for (size_t j = 0; j < charts.size(); ++j) {
      if (used[j] || !(charts[j].cell == sub.cells[i])) continue;
      out[i] = std::move(charts[j]);
      used[j] = true;
      found = true;
      break;
    }
    if (!found)
      throw std::invalid_argument("no chart for subdivision cell " + sub.cells[i].to_string());
  }
  return out;
}

}  // namespace

SurfacePipelineResult run_surface_pipeline(const Subdivision& sub,
                                           const std::vector<CellChart>& charts,
                                           const QPoint& seed, int seed_sign, long long d1,
                                           long long d2) {
  SurfacePipelineResult out;
  out.glued = glue_charts(sub, charts);
  out.summary = curve_summary(out.glued);
  Arrangement arr = build_torus_arrangement(out.glued);
  RegionComplex rc = sign_regions(std::move(arr), seed, seed_sign);
  out.regions = blow_up_nodes(std::move(rc));
  out.negative = analyze_region(out.regions, -1);
  out.positive = analyze_region(out.regions, +1);
  out.orientability = orientability_check(out.regions, d1, d2);
  out.topology = double_cover_topology(out.regions, d1, d2);
  out.chi_Yminus = out.negative.chi_total;
  out.chi_Yplus = out.positive.chi_total;
  out.b0_Yminus = static_cast<long long>(out.negative.components.size());
  for (const auto& comp : out.positive.components)
    if (comp.chi == 1 && comp.has_boundary) ++out.plus_disk_count;
  return out;
}

ExpandedBundle expand_family_blocks(const FamilyFixtures& fx) {
  const long long k = fx.k, l = fx.l;
  if (k < 2 || l < 2) throw std::invalid_argument("family: k,l >= 2 required");
  ExpandedBundle out;
  out.lift = lifting_profiles(k, l).nu_P;
  out.sub = subdivision_from_lift(make_rect(0, 0, 4 * k, 4 * l), out.lift);

  std::vector<CellChart> charts;
  charts.push_back(fx.bottom);                      // rows [0,2]
  charts.push_back(chart_shift(fx.strip1, 0, 2));   // rows [2,3]
  for (long long h = 2; h <= l; ++h) {
    if (h % 2 == 0)
      charts.push_back(chart_shift(fx.base, 0, 4 * h - 5));  // y^(4h-5) P(x,y)
    else
      charts.push_back(chart_flip_y(fx.base, 4 * h - 1));  // y^(4h-1) P(x,1/y)
  }
  charts.push_back(chart_shift(fx.strip_top, 0, 4 * l - 1));  // rows [4l-1,4l]
  out.charts = match_cells(out.sub, std::move(charts));
  return out;
}

ExpandedBundle expand_442_blocks(const C442Fixtures& fx) {
  ExpandedBundle out;
  out.lift.domain = make_rect(0, 0, 8, 8);
  for (const auto& p : out.lift.domain.lattice_points()) {
    long long j = p.y;
    out.lift.values[p] = QQ(j <= 3 ? 3 - j : (j <= 6 ? 0 : j - 6));
  }
  out.sub = subdivision_from_lift(out.lift.domain, out.lift);
  std::vector<CellChart> charts;
  charts.push_back(chart_flip_y(fx.base, 3));      // rows [0,3]: y^3 P(x,1/y)
  charts.push_back(chart_shift(fx.base, 0, 3));    // rows [3,6]: y^3 P(x,y)
  charts.push_back(chart_shift(fx.harnack, 0, 6));  // rows [6,8]: y^6 P_3^0
  out.charts = match_cells(out.sub, std::move(charts));
  return out;
}

namespace {

std::vector<LatticeSegment> bottom_edge_of(const LatticePolygon& cell) {
  long long ymin = cell.vertices[0].y;
  for (const auto& v : cell.vertices) ymin = std::min(ymin, v.y);
  long long x0 = 0, x1 = 0;
  bool first = true;
  for (const auto& v : cell.vertices) {
    if (v.y != ymin) continue;
    if (first) {
      x0 = x1 = v.x;
      first = false;
    } else {
      x0 = std::min(x0, v.x);
      x1 = std::max(x1, v.x);
    }
  }
  return {LatticeSegment{{x0, ymin}, {x1, ymin}}};
}

long long count_nodes(const CellChart& c) { return c.node_count(); }

}  // namespace

GeneralPositionCheck check_general_position(long long k, const std::vector<QPoint>& nodes,
                                            const SparsePolynomial& L, const SparsePolynomial& M) {
  GeneralPositionCheck out;
  // Monomials of the (k,1) system: (i,j), 0<=i<=k, 0<=j<=1.
  std::vector<LatticePoint> mons;
  for (long long j = 0; j <= 1; ++j)
    for (long long i = 0; i <= k; ++i) mons.push_back({i, j});
  const size_t ncols = mons.size();
  // Row-reduce the evaluation matrix (rows = point conditions).
  std::vector<std::vector<QQ>> m;
  for (const auto& p : nodes) {
    std::vector<QQ> row;
    for (const auto& mon : mons) {
      QQ v = 1;
      for (long long i = 0; i < mon.x; ++i) v *= p.x;
      for (long long j = 0; j < mon.y; ++j) v *= p.y;
      row.push_back(v);
    }
    m.push_back(std::move(row));
  }
  size_t rank = 0;
  for (size_t col = 0; col < ncols && rank < m.size(); ++col) {
    size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      QQ f = m[r][col] / m[rank][col];
      for (size_t c2 = col; c2 < ncols; ++c2) m[r][c2] -= f * m[rank][c2];
    }
    ++rank;
  }
  out.dimension = static_cast<long long>(ncols - rank);
  out.dimension_ok = (out.dimension == 2);

  auto vanishes = [&](const SparsePolynomial& f) {
    for (const auto& p : nodes)
      if (f.evaluate(p.x, p.y) != 0) return false;
    return true;
  };
  out.vanish_ok = vanishes(L) && vanishes(M);

  // A (k,1)-polynomial A(x) y + B(x) is irreducible iff A is nonzero and
  // gcd(A,B) is constant; test a fixed generic element of the pencil.
  auto irreducible = [&](const SparsePolynomial& f) {
    upoly::Poly A(k + 1, QQ(0)), B(k + 1, QQ(0));
    for (const auto& [p, c] : f.coefficients()) {
      if (p.y == 1)
        A[p.x] = c;
      else
        B[p.x] = c;
    }
    A = upoly::trim(std::move(A));
    B = upoly::trim(std::move(B));
    if (A.empty()) return false;
    if (B.empty()) return true;
    return upoly::degree(upoly::gcd(A, B)) == 0;
  };
  std::map<LatticePoint, QQ> combo;
  for (const auto& [p, c] : L.coefficients()) combo[p] += 5 * c;
  for (const auto& [p, c] : M.coefficients()) combo[p] += 7 * c;
  out.irreducible_ok = irreducible(L) && irreducible(M) && irreducible(SparsePolynomial(combo));
  return out;
}

FamilyReport assemble_family(const FamilyFixtures& fx) {
  FamilyReport rep;
  const long long k = fx.k, l = fx.l;
  rep.k = k;
  rep.l = l;

  // Fixture certificates before any gluing.
  rep.transversality_ok = true;
  {
    LiftingProfiles lifts = lifting_profiles(k, l);
    Subdivision psub = subdivision_from_lift(make_rect(0, 0, 4 * k, 4 * l), lifts.nu_P);
    Subdivision lsub = subdivision_from_lift(make_rect(0, 0, k, l), lifts.nu_L);
    OrientedAdjacency po = sweep_orientation(psub, QQ(0), QQ(1));
    OrientedAdjacency lo = sweep_orientation(lsub, QQ(0), QQ(1));
    (void)po;
    (void)lo;
    for (long long h = 1; h <= l; ++h) {
      LatticePolygon delta_h = h == 1 ? make_rect(0, 0, 4 * k, 2)
                                      : make_rect(0, 4 * h - 5, 4 * k, 4 * h - 1);
      LatticePolygon lambda_h = make_rect(0, h - 1, k, h);
      std::vector<LatticeSegment> inc_d, inc_l;
      if (h >= 2) {
        inc_d = bottom_edge_of(delta_h);
        inc_l = bottom_edge_of(lambda_h);
      }
      TransversalitySetup setup{delta_h, inc_d,
                                std::vector<SingKind>(2 * k, SingKind::Node)};
      if (!is_s_transversal_nodal(setup).ok) {
        rep.transversality_ok = false;
        rep.failures.push_back("S-transversality fails at level " + std::to_string(h));
      }
      auto tf = theoremfinal_check(delta_h, lambda_h, lambda_h, 2 * k, inc_d, inc_l, inc_l);
      if (!tf.all_ok) {
        rep.transversality_ok = false;
        rep.failures.push_back("transversality hypothesis fails at level " + std::to_string(h));
      }
    }
  }

  GeneralPositionCheck gp = check_general_position(k, fx.level_nodes, fx.L, fx.M);
  rep.general_position_ok = gp.ok();
  if (!rep.general_position_ok) rep.failures.push_back("general position check failed");
  if (!is_pns(fx.L) || !is_pns(fx.M)) {
    rep.general_position_ok = false;
    rep.failures.push_back("L or M block is not peripherally nonsingular");
  }
  if (static_cast<long long>(fx.level_nodes.size()) != 2 * k)
    rep.failures.push_back("level node metadata must list 2k points");

  ExpandedBundle ex = expand_family_blocks(fx);
  rep.pipe = run_surface_pipeline(ex.sub, ex.charts, fx.seed, fx.seed_sign, 2 * k, 2 * l);

  rep.node_count = rep.pipe.summary.node_count;
  rep.nodes_ok = rep.node_count == 2 * k * l;
  if (!rep.nodes_ok) rep.failures.push_back("node count != 2kl");

  long long b0_target = (2 * k - 2) * (l - 2);
  rep.b0_minus_ok = rep.pipe.b0_Yminus >= b0_target;
  if (!rep.b0_minus_ok) rep.failures.push_back("b0(Y-) below (2k-2)(l-2)");

  long long disk_target = (6 * k - 4) * (l - 1) + 3 * (2 * k - 2) * (l - 2);
  rep.disks_ok = rep.pipe.plus_disk_count >= disk_target;
  if (!rep.disks_ok) rep.failures.push_back("plus-disk count below (6k-4)(l-1)+3(2k-2)(l-2)");

  long long comp_bound = (4 * k - 1) * (4 * l - 1) + 1 - 2 * k * l;
  rep.components_ok = rep.pipe.summary.components <= comp_bound;
  if (!rep.components_ok) rep.failures.push_back("curve component count above the bound");

  rep.orientable_ok = true;
  for (bool o : rep.pipe.orientability.orientable)
    if (!o) rep.orientable_ok = false;
  if (!rep.orientable_ok) rep.failures.push_back("nonorientable component in even tridegree");

  rep.chi_even_ok = euler_parity_guard(rep.pipe.topology);
  if (!rep.chi_even_ok) rep.failures.push_back("odd Euler characteristic component");

  BettiBounds bb = betti_bounds(2 * k, 2 * l);
  rep.bounds_ok = rep.pipe.topology.b0 <= bb.b0_bound && rep.pipe.topology.b1 <= bb.b1_bound &&
                  rep.pipe.topology.b1 <= bb.b1_max_even;
  if (!rep.bounds_ok) rep.failures.push_back("Smith-Thom / Comessatti bounds violated");

  rep.identity_ok = rep.pipe.topology.b1 == 2 * rep.pipe.topology.b0 - rep.pipe.topology.chi;
  if (!rep.identity_ok) rep.failures.push_back("b1 != 2 b0 - chi");
  return rep;
}

C442Report construct_442(const C442Fixtures& fx) {
  C442Report rep;
  if (count_nodes(fx.base) != 4)
    rep.failures.push_back("base block must declare 4 nodes");
  if (!harnack_block_check(fx.harnack))
    rep.failures.push_back("Harnack block is not maximal");
  GeneralPositionCheck gp = check_general_position(2, fx.base_nodes, fx.L, fx.M);
  if (!gp.ok()) rep.failures.push_back("general position check failed");
  if (!is_pns(fx.L) || !is_pns(fx.M))
    rep.failures.push_back("L or M block is not peripherally nonsingular");

  ExpandedBundle ex = expand_442_blocks(fx);
  rep.pipe = run_surface_pipeline(ex.sub, ex.charts, fx.seed, fx.seed_sign, 4, 4);
  rep.node_count = rep.pipe.summary.node_count;
  if (rep.node_count != 8) rep.failures.push_back("glued node count != 8");

  auto [h20, h11] = hodge_numbers(4, 4);
  rep.h20 = h20;
  rep.h11 = h11;
  rep.viro_excess = rep.pipe.topology.b1 - h11;
  long long sum_b_X = 2 + (h20 + h11 + h20);  // b0+b4 + b2 of the complex surface
  long long sum_b_RX = 2 * rep.pipe.topology.b0 + rep.pipe.topology.b1;
  rep.m_deficiency = (sum_b_X - sum_b_RX) / 2;

  std::vector<std::pair<long long, long long>> profile;  // (chi, genus)
  for (const auto& c : rep.pipe.topology.components)
    profile.push_back({c.chi, c.genus_or_crosscaps});
  std::sort(profile.begin(), profile.end(), std::greater<>());
  std::vector<std::pair<long long, long long>> want = {{2, 0}, {2, 0}, {2, 0},
                                                       {-2, 2}, {-2, 2}, {-78, 40}};
  std::sort(want.begin(), want.end(), std::greater<>());
  rep.profile_ok = rep.pipe.topology.b0 == 6 && rep.pipe.topology.chi == -76 &&
                   rep.pipe.topology.b1 == 88 && profile == want;
  for (const auto& c : rep.pipe.topology.components)
    if (!c.orientable) rep.profile_ok = false;
  if (!rep.profile_ok) rep.failures.push_back("surface profile differs from 3S + 2S2 + S40");
  return rep;
}

bool harnack_block_check(const CellChart& chart) {
  Subdivision sub;
  sub.domain = chart.cell;
  sub.cells.push_back(chart.cell);
  GluedCurve g;
  try {
    g = glue_charts(sub, {chart});
    CurveSummary s = curve_summary(g);
    return s.components == interior_count(chart.cell) + 1;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace patchwork
