#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace patchwork {

// Exact arithmetic types used throughout. All geometry and algebra in this
// project is exact; the only floating-point component is the chart tracer,
// which is quarantined as an oracle.
using ZZ = boost::multiprecision::cpp_int;
using QQ = boost::multiprecision::cpp_rational;

inline ZZ qq_num(const QQ& q) { return boost::multiprecision::numerator(q); }
inline ZZ qq_den(const QQ& q) { return boost::multiprecision::denominator(q); }

inline int sign_of(const QQ& q) { return q.sign(); }
inline int sign_of(const ZZ& z) { return z.sign(); }

// Parses "p/q" or "p" (decimal integers, optional leading '-').
inline QQ parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return QQ(ZZ(s));
    ZZ num(s.substr(0, slash));
    ZZ den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return QQ(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

inline std::string to_string(const QQ& q) {
  if (qq_den(q) == 1) return qq_num(q).str();
  return qq_num(q).str() + "/" + qq_den(q).str();
}

inline QQ qq_floor(const QQ& q) {
  ZZ n = qq_num(q), d = qq_den(q);
  ZZ f = n / d;
  if (n < 0 && f * d != n) f -= 1;
  return QQ(f);
}

inline double to_double(const QQ& q) { return q.convert_to<double>(); }

}  // namespace patchwork
