#include "blockerlab/svg.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

namespace blockerlab {

namespace {

struct Point {
  double x;
  double y;
};

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  return s == "-0.00" ? "0.00" : s;
}

Point vertex_point(int v, int n, double cx, double cy, double r) {
  const double theta = 2.0 * std::numbers::pi * v / n;
  return {cx + r * std::sin(theta), cy - r * std::cos(theta)};
}

}  // namespace

std::string render_svg(const EdgeSet& s, const SvgStyle& style) {
  const int n = s.order();
  const double c = style.size / 2.0;
  const double r = c - style.margin;
  const std::string size = fixed(style.size);

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + size + "\" height=\"" + size +
         "\" viewBox=\"0 0 " + size + " " + size + "\">\n";
  out += "<polygon class=\"boundary\" fill=\"none\" stroke=\"#c8c8c8\" stroke-width=\"1\" points=\"";
  for (int v = 0; v < n; ++v) {
    const Point p = vertex_point(v, n, c, c, r);
    if (v) out += ' ';
    out += fixed(p.x) + "," + fixed(p.y);
  }
  out += "\"/>\n";

  for (const Edge& e : s) {
    const Point p = vertex_point(e.a, n, c, c, r);
    const Point q = vertex_point(e.b, n, c, c, r);
    out += "<line class=\"blocker\" x1=\"" + fixed(p.x) + "\" y1=\"" + fixed(p.y) + "\" x2=\"" + fixed(q.x) +
           "\" y2=\"" + fixed(q.y) + "\" stroke=\"#000000\" stroke-width=\"3\" stroke-linecap=\"round\"/>\n";
  }

  for (int v = 0; v < n; ++v) {
    const Point p = vertex_point(v, n, c, c, r);
    const Point l = vertex_point(v, n, c, c, r + 18.0);
    out += "<circle class=\"vertex\" cx=\"" + fixed(p.x) + "\" cy=\"" + fixed(p.y) + "\" r=\"3.50\" fill=\"#000000\"/>\n";
    out += "<text class=\"label\" x=\"" + fixed(l.x) + "\" y=\"" + fixed(l.y) +
           "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">" +
           std::to_string(v) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

void write_svg(const EdgeSet& s, const std::filesystem::path& path, const SvgStyle& style) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << render_svg(s, style);
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace blockerlab
