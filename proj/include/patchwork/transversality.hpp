#pragma once

#include <string>
#include <vector>

#include "patchwork/chart.hpp"
#include "patchwork/lattice.hpp"

namespace patchwork {

// b(w) of the nodal/cuspidal S-transversality criterion. Only nodes and
// cusps are defined here; parse_singularity rejects anything else.
long long singularity_weight(SingKind kind);
SingKind parse_singularity(const std::string& name);  // throws on unknown kinds

struct TransversalitySetup {
  LatticePolygon cell;
  std::vector<LatticeSegment> incoming;  // subset of the cell's edges
  std::vector<SingKind> singularities;
};

struct TransversalityCheck {
  bool ok = false;
  long long weight_sum = 0;   // sum of b(w)
  long long free_length = 0;  // total integer length of edges not inside incoming
};

// Criterion: sum b(w) < total length of the free edges.
TransversalityCheck is_s_transversal_nodal(const TransversalitySetup& setup);

// Sum over edges of (#lattice points - 1).
long long incoming_lattice_count(const std::vector<LatticeSegment>& incoming);

// Codimension 3k+m of the stratum with k prescribed nodes and m marked
// points, valid under 2k+m < b(Delta); the failure is a value, not an error.
struct CodimResult {
  bool hypothesis_ok = false;
  long long codim = -1;  // meaningful only when hypothesis_ok
  long long lhs = 0;     // 2k+m
  long long rhs = 0;     // b(Delta)
};
CodimResult codim_prescribed(const LatticePolygon& delta, long long k_nodes, long long m_points);

// The dimension chain of the blow-up/double-cover argument.
struct GeneralPositionLedger {
  long long k = 0, l = 0;
  long long deg_K_minus_Dprime = 0;  // -2kl-2k-2l
  long long h0_Dprime = 0;           // 3kl+k+l
  long long dim_E = 0;               // 10kl+4k+4l
  long long codim_A = 0;             // 6kl
  long long dim_restriction_image = 0;  // 3(2k+1)(2l+1)-2(k+1)(l+1)-1
  bool surjective = false;           // image == dim_E
};
GeneralPositionLedger generalposition_ledger(long long k, long long l);

// Each prescribed node independently cuts codimension one.
long long brusotti_codim(long long N);

struct TheoremFinalReport {
  long long N = 0;
  long long m = 0, m1 = 0, m2 = 0;
  long long b = 0, b1 = 0, b2 = 0;
  bool main_ok = false, aux1_ok = false, aux2_ok = false, all_ok = false;
};

// Hypothesis block 2N+m < b(Delta), m' < b(Delta'), m'' < b(Delta'').
TheoremFinalReport theoremfinal_check(const LatticePolygon& delta, const LatticePolygon& delta1,
                                      const LatticePolygon& delta2, long long N,
                                      const std::vector<LatticeSegment>& incoming,
                                      const std::vector<LatticeSegment>& incoming1,
                                      const std::vector<LatticeSegment>& incoming2);

}  // namespace patchwork
