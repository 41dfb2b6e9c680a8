#include "patchwork/transversality.hpp"

#include <stdexcept>

namespace patchwork {

long long singularity_weight(SingKind kind) {
  switch (kind) {
    case SingKind::Node:
      return 0;
    case SingKind::Cusp:
      return 1;
  }
  throw std::invalid_argument("singularity_weight: unknown kind");
}

SingKind parse_singularity(const std::string& name) {
  if (name == "node") return SingKind::Node;
  if (name == "cusp") return SingKind::Cusp;
  throw std::invalid_argument("singularity weight undefined for kind '" + name + "'");
}

TransversalityCheck is_s_transversal_nodal(const TransversalitySetup& setup) {
  TransversalityCheck out;
  for (SingKind s : setup.singularities) out.weight_sum += singularity_weight(s);
  for (const auto& e : setup.cell.edges()) {
    bool is_incoming = false;
    for (const auto& inc : setup.incoming)
      if (same_segment(e, inc)) is_incoming = true;
    if (!is_incoming) out.free_length += integer_length(e);
  }
  out.ok = out.weight_sum < out.free_length;
  return out;
}

long long incoming_lattice_count(const std::vector<LatticeSegment>& incoming) {
  long long m = 0;
  for (const auto& e : incoming) m += integer_length(e);
  return m;
}

CodimResult codim_prescribed(const LatticePolygon& delta, long long k_nodes, long long m_points) {
  CodimResult out;
  out.lhs = 2 * k_nodes + m_points;
  out.rhs = boundary_count(delta);
  out.hypothesis_ok = out.lhs < out.rhs;
  if (out.hypothesis_ok) out.codim = 3 * k_nodes + m_points;
  return out;
}

GeneralPositionLedger generalposition_ledger(long long k, long long l) {
  GeneralPositionLedger g;
  g.k = k;
  g.l = l;
  g.deg_K_minus_Dprime = -2 * k * l - 2 * k - 2 * l;
  g.h0_Dprime = 3 * k * l + k + l;
  g.dim_E = 10 * k * l + 4 * k + 4 * l;
  g.codim_A = 6 * k * l;
  g.dim_restriction_image = 3 * (2 * k + 1) * (2 * l + 1) - 2 * (k + 1) * (l + 1) - 1;
  g.surjective = (g.dim_restriction_image == g.dim_E);
  return g;
}

long long brusotti_codim(long long N) {
  if (N < 0) throw std::invalid_argument("brusotti_codim: negative node count");
  return N;
}

TheoremFinalReport theoremfinal_check(const LatticePolygon& delta, const LatticePolygon& delta1,
                                      const LatticePolygon& delta2, long long N,
                                      const std::vector<LatticeSegment>& incoming,
                                      const std::vector<LatticeSegment>& incoming1,
                                      const std::vector<LatticeSegment>& incoming2) {
  TheoremFinalReport r;
  r.N = N;
  r.m = incoming_lattice_count(incoming);
  r.m1 = incoming_lattice_count(incoming1);
  r.m2 = incoming_lattice_count(incoming2);
  r.b = boundary_count(delta);
  r.b1 = boundary_count(delta1);
  r.b2 = boundary_count(delta2);
  r.main_ok = 2 * N + r.m < r.b;
  r.aux1_ok = r.m1 < r.b1;
  r.aux2_ok = r.m2 < r.b2;
  r.all_ok = r.main_ok && r.aux1_ok && r.aux2_ok;
  return r;
}

}  // namespace patchwork
