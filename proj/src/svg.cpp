#include "patchwork/svg.hpp"

#include <fstream>
#include <sstream>

namespace patchwork {

namespace {

constexpr double kScale = 32.0;

struct Mapper {
  double minx, maxy;
  double x(const QQ& v) const { return (to_double(v) - minx) * kScale; }
  double y(const QQ& v) const { return (maxy - to_double(v)) * kScale; }
};

}  // namespace

std::string render_svg(const Subdivision& sub, const GluedCurve& curve) {
  long long dx = 0, dy = 0;
  for (const auto& v : sub.domain.vertices) {
    dx = std::max(dx, std::llabs(v.x));
    dy = std::max(dy, std::llabs(v.y));
  }
  Mapper m{-static_cast<double>(dx), static_cast<double>(dy)};
  double w = 2.0 * dx * kScale, h = 2.0 * dy * kScale;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w + 16 << "\" height=\""
      << h + 16 << "\" viewBox=\"-8 -8 " << w + 16 << " " << h + 16 << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h
      << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  // Axes of Delta_*.
  svg << "<line x1=\"" << m.x(QQ(-dx)) << "\" y1=\"" << m.y(QQ(0)) << "\" x2=\"" << m.x(QQ(dx))
      << "\" y2=\"" << m.y(QQ(0)) << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  svg << "<line x1=\"" << m.x(QQ(0)) << "\" y1=\"" << m.y(QQ(-dy)) << "\" x2=\"" << m.x(QQ(0))
      << "\" y2=\"" << m.y(QQ(dy)) << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";

  // Cell boundaries in all four signed copies.
  for (const auto& cell : sub.cells) {
    for (int qi = 0; qi < 4; ++qi) {
      svg << "<polygon points=\"";
      for (const auto& v : cell.vertices) {
        QQ px = QQ((qi & 1) ? -v.x : v.x), py = QQ((qi & 2) ? -v.y : v.y);
        svg << m.x(px) << "," << m.y(py) << " ";
      }
      svg << "\" fill=\"none\" stroke=\"#88aadd\" stroke-width=\"0.8\"/>\n";
    }
  }

  // Curve segments.
  for (const auto& [a, b] : curve.segments) {
    svg << "<line x1=\"" << m.x(a.x) << "\" y1=\"" << m.y(a.y) << "\" x2=\"" << m.x(b.x)
        << "\" y2=\"" << m.y(b.y) << "\" stroke=\"black\" stroke-width=\"1.6\"/>\n";
  }

  // Nodes.
  for (const auto& n : curve.nodes) {
    svg << "<circle cx=\"" << m.x(n.at.x) << "\" cy=\"" << m.y(n.at.y)
        << "\" r=\"3.2\" fill=\"" << (n.kind == SingKind::Node ? "#cc2222" : "#22aa22")
        << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void write_svg(const std::string& path, const Subdivision& sub, const GluedCurve& curve) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << render_svg(sub, curve);
}

}  // namespace patchwork
