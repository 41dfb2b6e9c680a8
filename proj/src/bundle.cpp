#include "patchwork/bundle.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace patchwork {

using nlohmann::json;

namespace {

json q_to_json(const QQ& q) { return to_string(q); }

QQ q_from_json(const json& j) {
  if (j.is_number_integer()) return QQ(static_cast<long long>(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw BundleFormatError("expected a rational (integer or \"p/q\" string)");
}

json pt_to_json(const QPoint& p) { return json::array({q_to_json(p.x), q_to_json(p.y)}); }

QPoint pt_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw BundleFormatError("expected a point [x, y]");
  return {q_from_json(j[0]), q_from_json(j[1])};
}

json lp_to_json(const LatticePoint& p) { return json::array({p.x, p.y}); }

LatticePoint lp_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw BundleFormatError("expected a lattice point [i, j]");
  return {j[0].get<long long>(), j[1].get<long long>()};
}

json polygon_to_json(const LatticePolygon& poly) {
  json a = json::array();
  for (const auto& v : poly.vertices) a.push_back(lp_to_json(v));
  return a;
}

LatticePolygon polygon_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw BundleFormatError("expected a polygon vertex list");
  LatticePolygon p;
  for (const auto& v : j) p.vertices.push_back(lp_from_json(v));
  return p;
}

json poly_to_json(const SparsePolynomial& f) {
  json a = json::array();
  for (const auto& [p, c] : f.coefficients())
    a.push_back(json::array({p.x, p.y, q_to_json(c)}));
  return a;
}

SparsePolynomial poly_from_json(const json& j) {
  if (!j.is_array()) throw BundleFormatError("expected a coefficient list");
  std::map<LatticePoint, QQ> coeffs;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3) throw BundleFormatError("coefficient entry must be [i,j,c]");
    coeffs[{e[0].get<long long>(), e[1].get<long long>()}] = q_from_json(e[2]);
  }
  return SparsePolynomial(std::move(coeffs));
}

json chart_to_json(const CellChart& chart) {
  json out;
  out["polygon"] = polygon_to_json(chart.cell);
  for (int qi = 0; qi < 4; ++qi) {
    const auto& q = chart.quadrants[qi];
    if (q.arcs.empty() && q.ovals.empty() && q.nodes.empty()) continue;
    json jq;
    if (!q.arcs.empty()) {
      json arcs = json::array();
      for (const auto& arc : q.arcs) {
        json a = json::array();
        for (const auto& p : arc) a.push_back(pt_to_json(p));
        arcs.push_back(a);
      }
      jq["arcs"] = arcs;
    }
    if (!q.ovals.empty()) {
      json ovals = json::array();
      for (const auto& ov : q.ovals) {
        json a = json::array();
        for (const auto& p : ov) a.push_back(pt_to_json(p));
        ovals.push_back(a);
      }
      jq["ovals"] = ovals;
    }
    if (!q.nodes.empty()) {
      json nodes = json::array();
      for (const auto& n : q.nodes)
        nodes.push_back(json{{"at", pt_to_json(n.at)},
                             {"kind", n.kind == SingKind::Node ? "node" : "cusp"}});
      jq["nodes"] = nodes;
    }
    out[kQuadrantNames[qi]] = jq;
  }
  return out;
}

CellChart chart_from_json(const json& j) {
  CellChart chart;
  if (!j.contains("polygon")) throw BundleFormatError("chart without polygon");
  chart.cell = polygon_from_json(j["polygon"]);
  for (int qi = 0; qi < 4; ++qi) {
    if (!j.contains(kQuadrantNames[qi])) continue;
    const json& jq = j[kQuadrantNames[qi]];
    auto& q = chart.quadrants[qi];
    if (jq.contains("arcs"))
      for (const auto& a : jq["arcs"]) {
        std::vector<QPoint> arc;
        for (const auto& p : a) arc.push_back(pt_from_json(p));
        q.arcs.push_back(std::move(arc));
      }
    if (jq.contains("ovals"))
      for (const auto& a : jq["ovals"]) {
        std::vector<QPoint> ov;
        for (const auto& p : a) ov.push_back(pt_from_json(p));
        q.ovals.push_back(std::move(ov));
      }
    if (jq.contains("nodes"))
      for (const auto& n : jq["nodes"]) {
        ChartNode node;
        node.at = pt_from_json(n.at("at"));
        node.kind = parse_singularity(n.at("kind").get<std::string>());
        q.nodes.push_back(node);
      }
  }
  return chart;
}

}  // namespace

std::string bundle_to_json(const Bundle& b) {
  json out;
  out["format"] = "patchwork-bundle";
  out["version"] = b.version;
  out["kind"] = b.kind;
  out["name"] = b.name;
  if (b.kind == "patchwork") {
    out["ambient"] = polygon_to_json(b.ambient);
    json lift = json::array();
    for (const auto& [p, v] : b.lift.values)
      lift.push_back(json::array({p.x, p.y, q_to_json(v)}));
    out["lift"] = lift;
    json cells = json::array();
    for (const auto& cell : b.cells) {
      json jc;
      jc["chart"] = chart_to_json(cell.chart);
      if (cell.polynomial) jc["polynomial"] = poly_to_json(*cell.polynomial);
      cells.push_back(jc);
    }
    out["cells"] = cells;
  } else {
    out["k"] = b.k;
    out["l"] = b.l;
    json blocks;
    for (const auto& [name, chart] : b.blocks) blocks[name] = chart_to_json(chart);
    out["blocks"] = blocks;
    if (b.L) out["L"] = poly_to_json(*b.L);
    if (b.M) out["M"] = poly_to_json(*b.M);
    if (!b.level_nodes.empty()) {
      json pts = json::array();
      for (const auto& p : b.level_nodes) pts.push_back(pt_to_json(p));
      out["level_nodes"] = pts;
    }
  }
  if (b.seed) out["seed"] = json{{"at", pt_to_json(*b.seed)}, {"sign", b.seed_sign > 0 ? "+" : "-"}};
  if (b.tridegree)
    out["tridegree"] = json::array({(*b.tridegree)[0], (*b.tridegree)[1], (*b.tridegree)[2]});
  if (!b.t_schedule.empty()) {
    json ts = json::array();
    for (const auto& t : b.t_schedule) ts.push_back(q_to_json(t));
    out["t_schedule"] = ts;
  }
  if (!b.algebraic_nodes.empty()) {
    json ns = json::array();
    for (const auto& [chart_pos, alg] : b.algebraic_nodes)
      ns.push_back(json{{"chart", pt_to_json(chart_pos)}, {"point", pt_to_json(alg)}});
    out["algebraic_nodes"] = ns;
  }
  return out.dump(1) + "\n";
}

Bundle bundle_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw BundleFormatError(std::string("JSON parse error: ") + e.what());
  }
  try {
    Bundle b;
    if (j.value("format", "") != "patchwork-bundle")
      throw BundleFormatError("not a patchwork-bundle file");
    b.version = j.value("version", 1);
    b.kind = j.value("kind", "patchwork");
    b.name = j.value("name", "");
    if (b.kind == "patchwork") {
      b.ambient = polygon_from_json(j.at("ambient"));
      b.lift.domain = b.ambient;
      for (const auto& e : j.at("lift")) {
        if (!e.is_array() || e.size() != 3) throw BundleFormatError("lift entry must be [i,j,v]");
        b.lift.values[{e[0].get<long long>(), e[1].get<long long>()}] = q_from_json(e[2]);
      }
      for (const auto& jc : j.at("cells")) {
        BundleCell cell;
        cell.chart = chart_from_json(jc.at("chart"));
        cell.polygon = cell.chart.cell;
        if (jc.contains("polynomial")) cell.polynomial = poly_from_json(jc["polynomial"]);
        b.cells.push_back(std::move(cell));
      }
    } else if (b.kind == "family" || b.kind == "c442") {
      b.k = j.value("k", 0);
      b.l = j.value("l", 0);
      for (const auto& [name, jc] : j.at("blocks").items()) b.blocks[name] = chart_from_json(jc);
      if (j.contains("L")) b.L = poly_from_json(j["L"]);
      if (j.contains("M")) b.M = poly_from_json(j["M"]);
      if (j.contains("level_nodes"))
        for (const auto& p : j["level_nodes"]) b.level_nodes.push_back(pt_from_json(p));
    } else {
      throw BundleFormatError("unknown bundle kind '" + b.kind + "'");
    }
    if (j.contains("seed")) {
      b.seed = pt_from_json(j["seed"].at("at"));
      std::string s = j["seed"].at("sign").get<std::string>();
      if (s != "+" && s != "-") throw BundleFormatError("seed sign must be '+' or '-'");
      b.seed_sign = s == "+" ? 1 : -1;
    }
    if (j.contains("tridegree")) {
      const auto& td = j["tridegree"];
      if (!td.is_array() || td.size() != 3) throw BundleFormatError("tridegree must be [d1,d2,d3]");
      b.tridegree = std::array<long long, 3>{td[0].get<long long>(), td[1].get<long long>(),
                                             td[2].get<long long>()};
    }
    if (j.contains("t_schedule"))
      for (const auto& t : j["t_schedule"]) b.t_schedule.push_back(q_from_json(t));
    if (j.contains("algebraic_nodes"))
      for (const auto& n : j["algebraic_nodes"])
        b.algebraic_nodes.push_back({pt_from_json(n.at("chart")), pt_from_json(n.at("point"))});
    return b;
  } catch (const json::exception& e) {
    throw BundleFormatError(std::string("bundle schema error: ") + e.what());
  }
}

Bundle load_bundle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BundleFormatError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return bundle_from_json(ss.str());
}

void save_bundle(const Bundle& b, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << bundle_to_json(b);
}

Subdivision make_subdivision(const LatticePolygon& domain,
                             const std::vector<LatticePolygon>& cells) {
  Subdivision sub;
  sub.domain = domain;
  sub.cells = cells;
  long long total = 0;
  for (const auto& cell : cells) {
    if (!is_valid_polygon(cell) || cell.dim() != 2)
      throw std::invalid_argument("make_subdivision: invalid cell " + cell.to_string());
    for (const auto& v : cell.vertices)
      if (!domain.contains(v))
        throw std::invalid_argument("make_subdivision: cell outside domain");
    total += area2(cell);
  }
  if (total != area2(domain))
    throw std::invalid_argument("make_subdivision: cells do not tile the domain");
  std::map<std::pair<LatticePoint, LatticePoint>, std::vector<size_t>> edge_cells;
  for (size_t i = 0; i < cells.size(); ++i)
    for (const auto& e : cells[i].edges()) {
      auto k = std::minmax(e.a, e.b);
      edge_cells[{k.first, k.second}].push_back(i);
    }
  for (const auto& [k, cs] : edge_cells) {
    if (cs.size() == 2)
      sub.shared_edges.push_back({cs[0], cs[1], LatticeSegment{k.first, k.second}});
    else if (cs.size() > 2)
      throw std::invalid_argument("make_subdivision: edge shared by more than two cells");
  }
  return sub;
}

ExpandedFixture expand_bundle(const Bundle& b) {
  ExpandedFixture out;
  if (b.kind == "patchwork") {
    std::vector<LatticePolygon> polys;
    for (const auto& cell : b.cells) polys.push_back(cell.polygon);
    out.sub = make_subdivision(b.ambient, polys);
    for (const auto& cell : b.cells) out.charts.push_back(cell.chart);
    out.lift = b.lift;
    bool all_polys = !b.cells.empty();
    for (const auto& cell : b.cells)
      if (!cell.polynomial) all_polys = false;
    if (all_polys) {
      ViroFamily fam;
      fam.lift = b.lift;
      for (const auto& cell : b.cells) fam.cells.push_back({cell.polygon, *cell.polynomial});
      out.family = std::move(fam);
    }
    return out;
  }
  if (b.kind == "family") {
    FamilyFixtures fx;
    fx.k = b.k;
    fx.l = b.l;
    fx.base = b.blocks.at("base");
    fx.bottom = b.blocks.at("bottom");
    fx.strip1 = b.blocks.at("strip1");
    fx.strip_top = b.blocks.at("strip_top");
    if (b.L) fx.L = *b.L;
    if (b.M) fx.M = *b.M;
    fx.level_nodes = b.level_nodes;
    if (b.seed) fx.seed = *b.seed;
    fx.seed_sign = b.seed_sign;
    ExpandedBundle ex = expand_family_blocks(fx);
    return {ex.sub, ex.charts, ex.lift, std::nullopt};
  }
  if (b.kind == "c442") {
    C442Fixtures fx;
    fx.base = b.blocks.at("base");
    fx.harnack = b.blocks.at("harnack");
    if (b.L) fx.L = *b.L;
    if (b.M) fx.M = *b.M;
    fx.base_nodes = b.level_nodes;
    if (b.seed) fx.seed = *b.seed;
    fx.seed_sign = b.seed_sign;
    ExpandedBundle ex = expand_442_blocks(fx);
    return {ex.sub, ex.charts, ex.lift, std::nullopt};
  }
  throw BundleFormatError("unknown bundle kind '" + b.kind + "'");
}

VerifyReport verify_bundle(const Bundle& b) {
  VerifyReport rep;
  ExpandedFixture ex = expand_bundle(b);

  // Subdivision convexity against the lift.
  bool convex = false;
  try {
    convex = is_convex_subdivision(ex.sub, ex.lift);
  } catch (const std::exception&) {
    convex = false;
  }
  rep.check(convex, "subdivision is convex for the lift (not convex otherwise)");

  // Acyclic sweep orientation with the default direction.
  bool sweep_ok = true;
  std::vector<std::vector<LatticeSegment>> incoming(ex.sub.cells.size());
  try {
    OrientedAdjacency oa = sweep_orientation(ex.sub, QQ(0), QQ(1));
    incoming = oa.incoming_facets;
  } catch (const std::exception&) {
    sweep_ok = false;
  }
  rep.check(sweep_ok, "sweep orientation (0,1) is acyclic");

  // Per-cell chart validation and PNS / S-transversality.
  for (size_t i = 0; i < ex.charts.size(); ++i) {
    const SparsePolynomial* f = nullptr;
    const Bundle* pb = &b;
    if (pb->kind == "patchwork" && pb->cells[i].polynomial) f = &*pb->cells[i].polynomial;
    ValidationReport v = validate_cell_chart(ex.charts[i], f);
    rep.check(v.ok, "cell " + std::to_string(i) + " chart valid" +
                        (v.ok ? "" : (": " + v.errors.front())));
    if (f) {
      bool pns = false;
      try {
        pns = is_pns(*f);
      } catch (const std::exception&) {
        pns = false;
      }
      rep.check(pns, "cell " + std::to_string(i) + " polynomial is PNS");
    }
    std::vector<SingKind> sings;
    for (int qi = 0; qi < 4; ++qi)
      for (const auto& nd : ex.charts[i].quadrants[qi].nodes) sings.push_back(nd.kind);
    TransversalitySetup setup{ex.sub.cells[i], incoming[i], sings};
    auto tc = is_s_transversal_nodal(setup);
    rep.check(tc.ok, "cell " + std::to_string(i) + " S-transversal (margin " +
                         std::to_string(tc.free_length - tc.weight_sum) + ")");
  }

  // Truncation compatibility across shared edges (polynomial cells only).
  if (b.kind == "patchwork") {
    for (const auto& se : ex.sub.shared_edges) {
      const auto& ca = b.cells[se.cell_a];
      const auto& cb = b.cells[se.cell_b];
      if (!ca.polynomial || !cb.polynomial) continue;
      bool eq = truncation(*ca.polynomial, se.seg) == truncation(*cb.polynomial, se.seg);
      rep.check(eq, "truncations agree on shared edge of cells " + std::to_string(se.cell_a) +
                        "," + std::to_string(se.cell_b));
    }
  }

  // Block-level certificates.
  if (b.kind == "family" || b.kind == "c442") {
    long long kk = b.kind == "family" ? b.k : 2;
    GeneralPositionCheck gp;
    if (b.L && b.M) {
      gp = check_general_position(kk, b.level_nodes, *b.L, *b.M);
      rep.check(gp.ok(), "nodes lie on a 2-dimensional irreducible (k,1)-system");
      bool pns = false;
      try {
        pns = is_pns(*b.L) && is_pns(*b.M);
      } catch (const std::exception&) {
      }
      rep.check(pns, "L and M blocks are PNS");
    } else {
      rep.check(false, "family bundle carries L and M blocks");
    }
  }
  if (b.kind == "c442")
    rep.check(harnack_block_check(b.blocks.at("harnack")), "Harnack block is maximal");

  // The glue must succeed (crossing lists compatible).
  try {
    glue_charts(ex.sub, ex.charts);
    rep.check(true, "charts glue across the subdivision");
  } catch (const std::exception& e) {
    rep.check(false, std::string("charts glue across the subdivision: ") + e.what());
  }
  return rep;
}

}  // namespace patchwork
