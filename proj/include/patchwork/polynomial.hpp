#pragma once

#include <map>
#include <optional>
#include <vector>

#include "patchwork/lattice.hpp"
#include "patchwork/rational.hpp"
#include "patchwork/subdivision.hpp"

namespace patchwork {

// Univariate exact-root machinery (coefficients index = degree).
namespace upoly {

using Poly = std::vector<QQ>;  // normalized: no trailing zero leading coeffs

Poly trim(Poly p);
int degree(const Poly& p);  // -1 for zero polynomial
Poly derivative(const Poly& p);
Poly gcd(Poly a, Poly b);            // monic gcd
std::vector<Poly> yun_squarefree(const Poly& p);  // p = prod out[i]^(i+1), up to constant

// Distinct real roots in the open interval (0, inf) / (-inf, 0), by Sturm.
long long sturm_positive_roots(const Poly& p);
long long sturm_negative_roots(const Poly& p);

// Real roots counted with multiplicity.
long long positive_roots_with_multiplicity(const Poly& p);
long long negative_roots_with_multiplicity(const Poly& p);

// Multiple root somewhere in C^* (assumes p(0) != 0 after stripping s^k).
bool has_multiple_root_in_torus(const Poly& p);

}  // namespace upoly

// Sparse bivariate polynomial with exact rational coefficients keyed by
// lattice exponents. Zero coefficients are never stored.
class SparsePolynomial {
 public:
  SparsePolynomial() = default;
  explicit SparsePolynomial(std::map<LatticePoint, QQ> coeffs);

  const std::map<LatticePoint, QQ>& coefficients() const { return coeffs_; }
  const LatticePolygon& newton() const { return newton_; }
  bool is_zero() const { return coeffs_.empty(); }
  QQ coefficient(const LatticePoint& p) const;
  void set_coefficient(const LatticePoint& p, const QQ& v);

  QQ evaluate(const QQ& x, const QQ& y) const;  // exact; exponents must be >= 0
  SparsePolynomial scaled_monomial(const LatticePoint& shift, const QQ& factor) const;

  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

 private:
  std::map<LatticePoint, QQ> coeffs_;
  LatticePolygon newton_;  // convex hull of the support
  void rebuild_newton();
};

// Keeps exactly the coefficients whose exponents lie on the face.
SparsePolynomial truncation(const SparsePolynomial& f, const LatticeSegment& face);
SparsePolynomial truncation(const SparsePolynomial& f, const LatticePoint& vertex);
SparsePolynomial truncation(const SparsePolynomial& f, const std::vector<LatticePoint>& subset);

// One-variable restriction of f along an edge of its Newton polygon:
// q(s) = sum over lattice points a + t*v of the edge of coeff * s^t.
upoly::Poly edge_restriction(const SparsePolynomial& f, const LatticeSegment& edge);

// Peripherally nonsingular: every proper-face truncation has nonsingular
// zero set in the torus. Throws std::invalid_argument when the Newton
// polygon is not 2-dimensional.
bool is_pns(const SparsePolynomial& f);

struct EdgeRootData {
  LatticeSegment edge;
  long long positive_roots = 0;  // with multiplicity
  long long negative_roots = 0;  // with multiplicity
  bool has_multiple_root = false;
};

// Exact real-root counts of the reduced edge restriction. Throws on a zero
// truncation.
EdgeRootData edge_root_data(const SparsePolynomial& f, const LatticeSegment& edge);

// Patchworking family: cell polynomials over a convex subdivision.
struct ViroFamily {
  std::vector<std::pair<LatticePolygon, SparsePolynomial>> cells;
  LiftingFunction lift;

  // Union of the cell coefficient maps; throws if two cells disagree on a
  // shared exponent (truncation incompatibility).
  std::map<LatticePoint, QQ> combined_coefficients() const;
};

// f_t = sum a_i t^(nu(i)) z^i with the lift pre-scaled to integer values.
// Throws on t <= 0.
SparsePolynomial viro_polynomial(const ViroFamily& fam, const QQ& t);

struct QPoint {
  QQ x, y;
  friend bool operator==(const QPoint&, const QPoint&) = default;
  friend bool operator<(const QPoint& a, const QPoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

// Moment map of the domain polygon evaluated at a point of (R^*)^2 and
// extended to the signed copies by the sign rule. Throws on a zero
// coordinate.
QPoint moment_map(const LatticePolygon& domain, const QQ& x, const QQ& y);

// Quadrant index: bit 0 set when x < 0, bit 1 set when y < 0.
// Order: 0 = (+,+), 1 = (-,+), 2 = (+,-), 3 = (-,-).
inline int quadrant_index(bool x_neg, bool y_neg) { return (x_neg ? 1 : 0) | (y_neg ? 2 : 0); }
extern const char* const kQuadrantNames[4];

// Numeric chart tracer (the single sanctioned inexact component, used as an
// oracle only). Samples the polynomial on a logarithmic grid per quadrant,
// extracts the zero contour by sign interpolation and maps it through the
// moment map.
struct TracedChart {
  struct Quadrant {
    std::vector<std::vector<std::pair<double, double>>> polylines;  // in Delta_* coordinates
    long long components = 0;
  };
  Quadrant quadrants[4];
};

TracedChart numeric_chart(const SparsePolynomial& f, int resolution);

}  // namespace patchwork
