#include <CLI11.hpp>
#include <iostream>

#include "patchwork/bundle.hpp"
#include "patchwork/svg.hpp"

using namespace patchwork;

namespace {

int cmd_verify(const std::string& path) {
  Bundle b = load_bundle(path);
  VerifyReport rep = verify_bundle(b);
  for (const auto& line : rep.passes) std::cout << "ok: " << line << "\n";
  for (const auto& line : rep.failures) std::cout << "FAIL: " << line << "\n";
  std::cout << (rep.ok ? "verify: all checks passed" : "verify: validation failed") << "\n";
  return rep.ok ? 0 : 1;
}

int cmd_glue(const std::string& path, const std::string& svg_path) {
  Bundle b = load_bundle(path);
  ExpandedFixture ex = expand_bundle(b);
  GluedCurve g = glue_charts(ex.sub, ex.charts);
  CurveSummary s = curve_summary(g);
  std::cout << "components: " << s.components << "\n";
  std::cout << "ovals: " << s.ovals << "\n";
  std::cout << "nodes: " << s.node_count << "\n";
  std::cout << "declared node sum: " << g.declared_node_sum << "\n";
  for (int qi = 0; qi < 4; ++qi)
    std::cout << "quadrant " << kQuadrantNames[qi] << ": " << s.per_quadrant[qi]
              << " components\n";
  for (size_t i = 0; i < s.component_classes.size(); ++i)
    std::cout << "component " << i << " class: (" << s.component_classes[i][0] << ","
              << s.component_classes[i][1] << ")\n";
  if (!svg_path.empty()) {
    write_svg(svg_path, ex.sub, g);
    std::cout << "svg: " << svg_path << "\n";
  }
  return 0;
}

int cmd_surface(const std::string& path, const std::string& seed_sign_flag) {
  Bundle b = load_bundle(path);
  ExpandedFixture ex = expand_bundle(b);
  if (!b.seed && seed_sign_flag.empty()) {
    std::cout << "sign seed required (bundle has none; pass --seed-sign with a seeded bundle)\n";
    return 1;
  }
  if (!b.seed) {
    std::cout << "sign seed required (bundle provides no seed point)\n";
    return 1;
  }
  int sign = b.seed_sign;
  if (!seed_sign_flag.empty()) sign = seed_sign_flag == "+" ? 1 : -1;

  long long d1 = 0, d2 = 0;
  if (b.tridegree) {
    d1 = (*b.tridegree)[0];
    d2 = (*b.tridegree)[1];
  } else {
    // Effective degrees of the double cover: half the curve bidegree.
    for (const auto& v : ex.sub.domain.vertices) {
      d1 = std::max(d1, v.x);
      d2 = std::max(d2, v.y);
    }
    d1 /= 2;
    d2 /= 2;
  }

  SurfacePipelineResult pipe =
      run_surface_pipeline(ex.sub, ex.charts, *b.seed, sign, d1, d2);
  const auto& st = pipe.topology;
  std::cout << "curve: " << pipe.summary.components << " components, " << pipe.summary.node_count
            << " nodes\n";
  std::cout << "chi(Y+) = " << pipe.chi_Yplus << ", chi(Y-) = " << pipe.chi_Yminus
            << ", b0(Y-) = " << pipe.b0_Yminus << "\n";
  std::cout << "b0 = " << st.b0 << "\n";
  std::cout << "chi = " << st.chi << "\n";
  std::cout << "b1 = " << st.b1 << "\n";
  std::cout << "components:";
  for (const auto& c : st.components) {
    if (c.orientable)
      std::cout << " S" << (c.genus_or_crosscaps == 0 ? std::string("") :
                                                        std::to_string(c.genus_or_crosscaps));
    else
      std::cout << " N" << c.genus_or_crosscaps;
  }
  std::cout << "\n";
  if (!euler_parity_guard(st)) {
    std::cout << "euler parity guard FAILED (odd chi component)\n";
    return 1;
  }
  auto [h20, h11] = hodge_numbers(d1, d2);
  BettiBounds bb = betti_bounds(d1, d2);
  std::cout << "hodge: h20 = " << h20 << ", h11 = " << h11 << "\n";
  std::cout << "bounds: b0 <= " << bb.b0_bound << ", b1 <= " << bb.b1_bound
            << " (raw max " << bb.b1_max << ", parity-refined " << bb.b1_max_even << ")\n";
  if (st.b1 > h11)
    std::cout << "b1=" << st.b1 << ", h11=" << h11 << ", VIRO CONJECTURE VIOLATED BY "
              << (st.b1 - h11) << "\n";
  else
    std::cout << "b1=" << st.b1 << " <= h11=" << h11 << " (conjecture bound satisfied)\n";
  long long sum_b_X = 2 + 2 * h20 + h11;
  long long sum_b_RX = 2 * st.b0 + st.b1;
  std::cout << "sum b_i(X) = " << sum_b_X << ", sum b_i(RX) = " << sum_b_RX << " => (M-"
            << (sum_b_X - sum_b_RX) / 2 << ")-surface\n";
  return 0;
}

int cmd_bounds(long long d1, long long d2, long long d3) {
  Tridegree td{d1, d2, d3};
  Tridegree n = td.normalized();
  if (n.d3 != 2) {
    std::cout << "unsupported tridegree (" << d1 << "," << d2 << "," << d3
              << "): Hodge formulas implemented for (d1,d2,2); degree-(d1,d2,1) surfaces are "
                 "birationally trivial and out of scope\n";
    return 1;
  }
  auto [h20, h11] = hodge_numbers(n.d1, n.d2);
  BettiBounds bb = betti_bounds(n.d1, n.d2);
  std::cout << "tridegree (" << n.d1 << "," << n.d2 << "," << n.d3 << ")\n";
  std::cout << "h20 = " << h20 << "\n";
  std::cout << "h11 = " << h11 << "\n";
  std::cout << "b0 <= " << bb.b0_bound << "\n";
  std::cout << "b1 <= " << bb.b1_bound << "\n";
  std::cout << "b1 raw max = " << bb.b1_max << ", parity-refined = " << bb.b1_max_even << "\n";
  HomologyClass cls = surface_class(n);
  std::cout << "class = (" << cls.bits[0] << "," << cls.bits[1] << "," << cls.bits[2] << ")\n";
  return 0;
}

int cmd_ledger(long long kmax, long long lmax) {
  for (long long k = 1; k <= kmax; ++k) {
    for (long long l = 1; l <= lmax; ++l) {
      GeneralPositionLedger g = generalposition_ledger(k, l);
      std::cout << "(k,l)=(" << k << "," << l << "): codim A = " << g.codim_A
                << ", dim E = " << g.dim_E << ", h0(D') = " << g.h0_Dprime
                << ", image = " << g.dim_restriction_image
                << (g.surjective ? " (surjective)" : " (NOT SURJECTIVE)") << "\n";
    }
  }
  std::cout << "transversality margins for the stacking blocks:\n";
  for (long long k = 2; k <= kmax; ++k) {
    LatticePolygon delta_h = make_rect(0, 3, 4 * k, 7);
    LatticePolygon lambda_h = make_rect(0, 1, k, 2);
    std::vector<LatticeSegment> inc_d = {{{0, 3}, {4 * k, 3}}};
    std::vector<LatticeSegment> inc_l = {{{0, 1}, {k, 1}}};
    auto tf = theoremfinal_check(delta_h, lambda_h, lambda_h, 2 * k, inc_d, inc_l, inc_l);
    std::cout << "k=" << k << ": 2N+m=" << 2 * tf.N + tf.m << " < b=" << tf.b << " is "
              << (tf.main_ok ? "true" : "FALSE") << "; m'=" << tf.m1 << " < b'=" << tf.b1
              << " is " << (tf.aux1_ok ? "true" : "FALSE") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact patchworking engine for nodal real curves and double-cover surfaces"};
  app.require_subcommand(1);

  std::string path, svg_path, seed_sign, t_value;
  int resolution = 64;

  auto* verify = app.add_subcommand("verify", "validate a fixture bundle");
  verify->add_option("bundle", path)->required();

  auto* glue = app.add_subcommand("glue", "glue cell charts and summarize the curve");
  glue->add_option("bundle", path)->required();
  glue->add_option("--svg", svg_path, "write an SVG rendering");

  auto* surface = app.add_subcommand("surface", "full double-cover topology report");
  surface->add_option("bundle", path)->required();
  surface->add_option("--seed-sign", seed_sign)->check(CLI::IsMember({"+", "-"}));

  auto* bounds = app.add_subcommand("bounds", "Hodge numbers and Betti bounds");
  std::vector<long long> td;
  bounds->add_option("--tridegree", td, "d1 d2 d3")->expected(3)->required();

  auto* ledger = app.add_subcommand("ledger", "dimension ledger and transversality margins");
  long long kmax = 4, lmax = 4;
  ledger->add_option("--kmax", kmax);
  ledger->add_option("--lmax", lmax);

  // Oracle knobs, reserved for scripted use.
  surface->add_option("--t", t_value, "Viro parameter p/q (oracle)");
  surface->add_option("--resolution", resolution, "tracer grid resolution");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return cmd_verify(path);
    if (*glue) return cmd_glue(path, svg_path);
    if (*surface) return cmd_surface(path, seed_sign);
    if (*bounds) return cmd_bounds(td[0], td[1], td[2]);
    if (*ledger) return cmd_ledger(kmax, lmax);
  } catch (const BundleFormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
