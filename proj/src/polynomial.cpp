#include "patchwork/polynomial.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>
#include <tuple>

namespace patchwork {

namespace upoly {

Poly trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly derivative(const Poly& p) {
  Poly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * QQ(static_cast<long long>(i)));
  return trim(d);
}

namespace {

Poly remainder(Poly a, const Poly& b) {
  // a mod b over QQ.
  while (degree(a) >= degree(b) && !a.empty()) {
    QQ q = a.back() / b.back();
    int shift = degree(a) - degree(b);
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
    a = trim(std::move(a));
  }
  return a;
}

Poly divide_exact(Poly a, const Poly& b) {
  Poly q(std::max<int>(0, degree(a) - degree(b) + 1));
  while (degree(a) >= degree(b) && !a.empty()) {
    QQ c = a.back() / b.back();
    int shift = degree(a) - degree(b);
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    a = trim(std::move(a));
  }
  if (!a.empty()) throw std::logic_error("divide_exact: nonzero remainder");
  return trim(std::move(q));
}

Poly monic(Poly p) {
  if (p.empty()) return p;
  QQ lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return trim(std::move(a));
}

int sign_at_zero_plus(const Poly& p) {
  for (const auto& c : p)
    if (c != 0) return sign_of(c);
  return 0;
}

int sign_at_zero_minus(const Poly& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) return sign_of(p[i]) * (i % 2 == 0 ? 1 : -1);
  return 0;
}

int sign_at_plus_inf(const Poly& p) { return p.empty() ? 0 : sign_of(p.back()); }

int sign_at_minus_inf(const Poly& p) {
  if (p.empty()) return 0;
  return sign_of(p.back()) * (degree(p) % 2 == 0 ? 1 : -1);
}

long long variations(const std::vector<int>& signs) {
  long long v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(trim(p));
  if (degree(chain[0]) <= 0) return chain;
  chain.push_back(derivative(chain[0]));
  while (degree(chain.back()) > 0) {
    Poly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

// Distinct roots in (a, b) where the endpoint signs are supplied by selectors.
template <typename SignA, typename SignB>
long long sturm_count(const Poly& p, SignA sa, SignB sb) {
  Poly q = trim(p);
  // Strip s^k so the endpoint 0 is never a root.
  size_t low = 0;
  while (low < q.size() && q[low] == 0) ++low;
  q.erase(q.begin(), q.begin() + low);
  if (degree(q) <= 0) return 0;
  auto chain = sturm_chain(q);
  std::vector<int> at_a, at_b;
  for (const auto& c : chain) {
    at_a.push_back(sa(c));
    at_b.push_back(sb(c));
  }
  return variations(at_a) - variations(at_b);
}

}  // namespace

Poly gcd(Poly a, Poly b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    Poly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

std::vector<Poly> yun_squarefree(const Poly& p0) {
  // Returns a[i] with p = const * prod a[i]^(i+1).
  std::vector<Poly> out;
  Poly p = trim(p0);
  if (degree(p) <= 0) return out;
  Poly g = gcd(p, derivative(p));
  if (degree(g) == 0) {
    out.push_back(monic(p));
    return out;
  }
  Poly c = divide_exact(p, g);
  Poly d = sub(divide_exact(derivative(p), g), derivative(c));
  while (true) {
    Poly a = gcd(c, d);
    out.push_back(a);
    c = divide_exact(c, a);
    if (degree(c) <= 0) break;
    d = sub(divide_exact(d, a), derivative(c));
  }
  return out;
}

long long sturm_positive_roots(const Poly& p) {
  return sturm_count(p, sign_at_zero_plus, sign_at_plus_inf);
}

long long sturm_negative_roots(const Poly& p) {
  return sturm_count(p, sign_at_minus_inf, sign_at_zero_minus);
}

long long positive_roots_with_multiplicity(const Poly& p) {
  long long n = 0;
  auto factors = yun_squarefree(p);
  for (size_t i = 0; i < factors.size(); ++i)
    n += static_cast<long long>(i + 1) * sturm_positive_roots(factors[i]);
  return n;
}

long long negative_roots_with_multiplicity(const Poly& p) {
  long long n = 0;
  auto factors = yun_squarefree(p);
  for (size_t i = 0; i < factors.size(); ++i)
    n += static_cast<long long>(i + 1) * sturm_negative_roots(factors[i]);
  return n;
}

bool has_multiple_root_in_torus(const Poly& p0) {
  Poly p = trim(p0);
  size_t low = 0;
  while (low < p.size() && p[low] == 0) ++low;
  p.erase(p.begin(), p.begin() + low);
  if (degree(p) <= 1) return false;
  return degree(gcd(p, derivative(p))) >= 1;
}

}  // namespace upoly

SparsePolynomial::SparsePolynomial(std::map<LatticePoint, QQ> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == 0)
      it = coeffs_.erase(it);
    else
      ++it;
  }
  rebuild_newton();
}

QQ SparsePolynomial::coefficient(const LatticePoint& p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? QQ(0) : it->second;
}

void SparsePolynomial::set_coefficient(const LatticePoint& p, const QQ& v) {
  if (v == 0)
    coeffs_.erase(p);
  else
    coeffs_[p] = v;
  rebuild_newton();
}

void SparsePolynomial::rebuild_newton() {
  if (coeffs_.empty()) {
    newton_ = LatticePolygon{};
    return;
  }
  std::vector<LatticePoint> support;
  for (const auto& [p, c] : coeffs_) support.push_back(p);
  newton_ = convex_hull(support);
}

QQ SparsePolynomial::evaluate(const QQ& x, const QQ& y) const {
  QQ total = 0;
  for (const auto& [p, c] : coeffs_) {
    if (p.x < 0 || p.y < 0) throw std::invalid_argument("evaluate: negative exponent");
    QQ term = c;
    for (long long i = 0; i < p.x; ++i) term *= x;
    for (long long j = 0; j < p.y; ++j) term *= y;
    total += term;
  }
  return total;
}

SparsePolynomial SparsePolynomial::scaled_monomial(const LatticePoint& shift, const QQ& factor) const {
  std::map<LatticePoint, QQ> out;
  for (const auto& [p, c] : coeffs_) out[p + shift] = c * factor;
  return SparsePolynomial(std::move(out));
}

SparsePolynomial truncation(const SparsePolynomial& f, const LatticeSegment& face) {
  std::map<LatticePoint, QQ> out;
  for (const auto& [p, c] : f.coefficients())
    if (cross(face.a, face.b, p) == 0 &&
        std::min(face.a.x, face.b.x) <= p.x && p.x <= std::max(face.a.x, face.b.x) &&
        std::min(face.a.y, face.b.y) <= p.y && p.y <= std::max(face.a.y, face.b.y))
      out[p] = c;
  return SparsePolynomial(std::move(out));
}

SparsePolynomial truncation(const SparsePolynomial& f, const LatticePoint& vertex) {
  std::map<LatticePoint, QQ> out;
  auto it = f.coefficients().find(vertex);
  if (it != f.coefficients().end()) out[vertex] = it->second;
  return SparsePolynomial(std::move(out));
}

SparsePolynomial truncation(const SparsePolynomial& f, const std::vector<LatticePoint>& subset) {
  std::map<LatticePoint, QQ> out;
  for (const auto& p : subset) {
    auto it = f.coefficients().find(p);
    if (it != f.coefficients().end()) out[p] = it->second;
  }
  return SparsePolynomial(std::move(out));
}

upoly::Poly edge_restriction(const SparsePolynomial& f, const LatticeSegment& edge) {
  long long len = integer_length(edge);
  long long sx = (edge.b.x - edge.a.x) / len, sy = (edge.b.y - edge.a.y) / len;
  upoly::Poly q(len + 1, QQ(0));
  SparsePolynomial trunc = truncation(f, edge);
  for (const auto& [p, c] : trunc.coefficients()) {
    long long t;
    if (sx != 0)
      t = (p.x - edge.a.x) / sx;
    else
      t = (p.y - edge.a.y) / sy;
    q[t] = c;
  }
  return upoly::trim(std::move(q));
}

bool is_pns(const SparsePolynomial& f) {
  if (f.newton().dim() != 2) throw std::invalid_argument("is_pns: degenerate Newton polygon");
  for (const auto& e : f.newton().edges()) {
    upoly::Poly q = edge_restriction(f, e);
    if (upoly::has_multiple_root_in_torus(q)) return false;
  }
  return true;
}

EdgeRootData edge_root_data(const SparsePolynomial& f, const LatticeSegment& edge) {
  upoly::Poly q = edge_restriction(f, edge);
  if (q.empty()) throw std::invalid_argument("edge_root_data: zero truncation");
  EdgeRootData out;
  out.edge = edge;
  out.positive_roots = upoly::positive_roots_with_multiplicity(q);
  out.negative_roots = upoly::negative_roots_with_multiplicity(q);
  out.has_multiple_root = upoly::has_multiple_root_in_torus(q);
  return out;
}

std::map<LatticePoint, QQ> ViroFamily::combined_coefficients() const {
  std::map<LatticePoint, QQ> all;
  for (const auto& [cell, f] : cells) {
    for (const auto& [p, c] : f.coefficients()) {
      auto [it, fresh] = all.try_emplace(p, c);
      if (!fresh && it->second != c)
        throw std::invalid_argument("ViroFamily: cells disagree at exponent (" +
                                    std::to_string(p.x) + "," + std::to_string(p.y) + ")");
    }
  }
  return all;
}

namespace {

QQ qq_pow(const QQ& base, const ZZ& e) {
  if (base == 0) throw std::invalid_argument("qq_pow: zero base");
  ZZ n = e < 0 ? ZZ(-e) : e;
  QQ b = e < 0 ? QQ(1) / base : base;
  QQ out = 1;
  for (ZZ i = 0; i < n; ++i) out *= b;
  return out;
}

}  // namespace

SparsePolynomial viro_polynomial(const ViroFamily& fam, const QQ& t) {
  if (t <= 0) throw std::invalid_argument("viro_polynomial: t must be positive");
  LiftingFunction nu = fam.lift.scaled_integral();
  std::map<LatticePoint, QQ> out;
  for (const auto& [p, c] : fam.combined_coefficients()) {
    QQ v = nu.at(p);
    if (qq_den(v) != 1) throw std::invalid_argument("viro_polynomial: non-integral scaled lift");
    out[p] = c * qq_pow(t, qq_num(v));
  }
  return SparsePolynomial(std::move(out));
}

QPoint moment_map(const LatticePolygon& domain, const QQ& x, const QQ& y) {
  if (x == 0 || y == 0) throw std::invalid_argument("moment_map: zero coordinate");
  QQ ax = x < 0 ? QQ(-x) : x;
  QQ ay = y < 0 ? QQ(-y) : y;
  QQ wx = 0, wy = 0, wsum = 0;
  for (const auto& p : domain.lattice_points()) {
    QQ w = qq_pow(ax, ZZ(p.x)) * qq_pow(ay, ZZ(p.y));
    wx += w * p.x;
    wy += w * p.y;
    wsum += w;
  }
  QPoint out{wx / wsum, wy / wsum};
  if (x < 0) out.x = -out.x;
  if (y < 0) out.y = -out.y;
  return out;
}

const char* const kQuadrantNames[4] = {"++", "-+", "+-", "--"};

namespace {

double log_abs(const QQ& q) {
  // log |q| robust against doubles overflowing.
  const ZZ& n = qq_num(q);
  const ZZ& d = qq_den(q);
  auto log_int = [](const ZZ& z) {
    ZZ a = boost::multiprecision::abs(z);
    if (a == 0) return -std::numeric_limits<double>::infinity();
    unsigned bits = boost::multiprecision::msb(a);
    if (bits > 40) {
      ZZ top = a >> (bits - 40);
      return std::log(top.convert_to<double>()) + static_cast<double>(bits - 40) * std::log(2.0);
    }
    return std::log(a.convert_to<double>());
  };
  return log_int(n) - log_int(d);
}

struct Term {
  double logc;
  int sgn;
  double i, j;
};

double eval_log(const std::vector<Term>& terms, double sx, double sy) {
  // Signed log-sum-exp evaluation: returns a value with the sign of f.
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms) m = std::max(m, t.logc + t.i * sx + t.j * sy);
  double sum = 0;
  for (const auto& t : terms) sum += t.sgn * std::exp(t.logc + t.i * sx + t.j * sy - m);
  return sum;
}

}  // namespace

TracedChart numeric_chart(const SparsePolynomial& f, int resolution) {
  if (f.is_zero()) throw std::invalid_argument("numeric_chart: zero polynomial");
  if (resolution < 8) throw std::invalid_argument("numeric_chart: resolution < 8");
  TracedChart out;
  const double S = 9.0;  // grid covers |log coordinate| <= S
  const int n = resolution;

  // Moment map in doubles, stabilized in log space.
  std::vector<LatticePoint> dpts = f.newton().lattice_points();
  auto phi = [&](double sx, double sy, int qi) {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& p : dpts) m = std::max(m, p.x * sx + p.y * sy);
    double wx = 0, wy = 0, ws = 0;
    for (const auto& p : dpts) {
      double w = std::exp(p.x * sx + p.y * sy - m);
      wx += w * p.x;
      wy += w * p.y;
      ws += w;
    }
    double ux = wx / ws, uy = wy / ws;
    if (qi & 1) ux = -ux;
    if (qi & 2) uy = -uy;
    return std::pair<double, double>(ux, uy);
  };

  for (int qi = 0; qi < 4; ++qi) {
    std::vector<Term> terms;
    for (const auto& [p, c] : f.coefficients()) {
      int sgn = sign_of(c);
      if ((qi & 1) && (p.x % 2 != 0)) sgn = -sgn;
      if ((qi & 2) && (p.y % 2 != 0)) sgn = -sgn;
      terms.push_back({log_abs(c), sgn, static_cast<double>(p.x), static_cast<double>(p.y)});
    }
    auto grid_s = [&](int i) { return -S + 2.0 * S * i / (n - 1); };
    std::vector<std::vector<double>> val(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) val[i][j] = eval_log(terms, grid_s(i), grid_s(j));

    // Marching squares on the sign grid; crossing points keyed by grid edge
    // for component counting via union-find.
    std::map<std::tuple<int, int, int>, int> edge_id;  // (i,j,horizontal?) -> id
    std::vector<int> uf;
    std::function<int(int)> find = [&](int a) { return uf[a] == a ? a : uf[a] = find(uf[a]); };
    auto unite = [&](int a, int b) { uf[find(a)] = find(b); };
    auto crossing = [&](int i, int j, bool horizontal) {
      auto key = std::make_tuple(i, j, horizontal ? 1 : 0);
      auto it = edge_id.find(key);
      if (it != edge_id.end()) return it->second;
      int id = static_cast<int>(uf.size());
      uf.push_back(id);
      edge_id.emplace(key, id);
      return id;
    };
    auto frac = [&](double a, double b) { return a / (a - b); };

    std::vector<std::array<int, 2>> segments;  // pairs of crossing ids
    std::vector<std::array<std::pair<double, double>, 2>> seg_pts;
    for (int i = 0; i + 1 < n; ++i) {
      for (int j = 0; j + 1 < n; ++j) {
        double v00 = val[i][j], v10 = val[i + 1][j], v01 = val[i][j + 1], v11 = val[i + 1][j + 1];
        int id_bottom = -1, id_top = -1, id_left = -1, id_right = -1;
        std::pair<double, double> p_bottom, p_top, p_left, p_right;
        if ((v00 < 0) != (v10 < 0)) {
          id_bottom = crossing(i, j, true);
          p_bottom = {grid_s(i) + frac(v00, v10) * (grid_s(i + 1) - grid_s(i)), grid_s(j)};
        }
        if ((v01 < 0) != (v11 < 0)) {
          id_top = crossing(i, j + 1, true);
          p_top = {grid_s(i) + frac(v01, v11) * (grid_s(i + 1) - grid_s(i)), grid_s(j + 1)};
        }
        if ((v00 < 0) != (v01 < 0)) {
          id_left = crossing(i, j, false);
          p_left = {grid_s(i), grid_s(j) + frac(v00, v01) * (grid_s(j + 1) - grid_s(j))};
        }
        if ((v10 < 0) != (v11 < 0)) {
          id_right = crossing(i + 1, j, false);
          p_right = {grid_s(i + 1), grid_s(j) + frac(v10, v11) * (grid_s(j + 1) - grid_s(j))};
        }
        std::vector<std::pair<int, std::pair<double, double>>> ends;
        if (id_bottom >= 0) ends.push_back({id_bottom, p_bottom});
        if (id_right >= 0) ends.push_back({id_right, p_right});
        if (id_top >= 0) ends.push_back({id_top, p_top});
        if (id_left >= 0) ends.push_back({id_left, p_left});
        if (ends.size() == 2) {
          segments.push_back({ends[0].first, ends[1].first});
          seg_pts.push_back({ends[0].second, ends[1].second});
        } else if (ends.size() == 4) {
          // Saddle: resolve by the center sign.
          double center = eval_log(terms, (grid_s(i) + grid_s(i + 1)) / 2,
                                   (grid_s(j) + grid_s(j + 1)) / 2);
          bool pair_bl = (center < 0) == (v00 < 0);
          // ends order: bottom, right, top, left
          if (pair_bl) {
            segments.push_back({id_bottom, id_right});
            seg_pts.push_back({p_bottom, p_right});
            segments.push_back({id_top, id_left});
            seg_pts.push_back({p_top, p_left});
          } else {
            segments.push_back({id_bottom, id_left});
            seg_pts.push_back({p_bottom, p_left});
            segments.push_back({id_top, id_right});
            seg_pts.push_back({p_top, p_right});
          }
        }
      }
    }
    for (const auto& s : segments) unite(s[0], s[1]);
    std::set<int> roots;
    for (int i = 0; i < static_cast<int>(uf.size()); ++i) roots.insert(find(i));
    out.quadrants[qi].components = static_cast<long long>(roots.size());
    for (const auto& sp : seg_pts) {
      auto a = phi(sp[0].first, sp[0].second, qi);
      auto b = phi(sp[1].first, sp[1].second, qi);
      out.quadrants[qi].polylines.push_back({a, b});
    }
  }
  return out;
}

}  // namespace patchwork
