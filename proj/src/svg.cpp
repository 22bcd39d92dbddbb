#include "fuchsian/svg.hpp"

#include <cmath>
#include <cstdio>

namespace fuchsian {

namespace {

double approx(const Rational& q) {
  return numerator(q).convert_to<double>() / denominator(q).convert_to<double>();
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

struct Frame {
  double xmin, sx;
  int width, height;

  double px(double u) const { return (u - xmin) * sx; }
  double py(double h) const { return height - h * sx; }
};

std::string arc(const Frame& fr, double u, double w, const char* cls) {
  if (u > w) std::swap(u, w);
  double r = (w - u) / 2 * fr.sx;
  return "  <path class=\"" + std::string(cls) + "\" d=\"M " + fmt(fr.px(u)) + " " +
         fmt(fr.py(0)) + " A " + fmt(r) + " " + fmt(r) + " 0 0 1 " + fmt(fr.px(w)) +
         " " + fmt(fr.py(0)) + "\"/>\n";
}

std::string ray(const Frame& fr, double u, const char* cls) {
  return "  <line class=\"" + std::string(cls) + "\" x1=\"" + fmt(fr.px(u)) +
         "\" y1=\"" + fmt(fr.py(0)) + "\" x2=\"" + fmt(fr.px(u)) + "\" y2=\"" +
         fmt(0.0) + "\"/>\n";
}

}  // namespace

RenderSpec RenderSpec::fit(const GroupBlueprint& b) {
  RenderSpec s;
  Rational lo = *b.input.v0;
  Rational hi = b.input.points.back();
  for (const BoundaryPoint& v : b.polygon)
    if (!v.is_infinity) {
      if (v.value < lo) lo = v.value;
      if (v.value > hi) hi = v.value;
    }
  s.xmin = lo - 1;
  s.xmax = hi + 1;
  s.width = 800;
  s.height = 400;
  return s;
}

std::string render_svg(const GroupBlueprint& b, const RenderSpec& spec) {
  if (!(spec.xmin < spec.xmax) || spec.width <= 0 || spec.height <= 0)
    throw InvalidInput("bad viewport");
  Frame fr{approx(spec.xmin),
           spec.width / (approx(spec.xmax) - approx(spec.xmin)), spec.width,
           spec.height};

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(spec.width) + "\" height=\"" + std::to_string(spec.height) +
         "\" viewBox=\"0 0 " + std::to_string(spec.width) + " " +
         std::to_string(spec.height) + "\">\n";
  out += "  <style>.edge{stroke:#000;fill:none;stroke-width:1.5}"
         ".axis{stroke:#777;fill:none;stroke-width:1;stroke-dasharray:6 4}"
         ".center{fill:#c00}"
         "text{font:11px sans-serif;fill:#333}</style>\n";
  out += "  <line x1=\"0\" y1=\"" + fmt(fr.py(0)) + "\" x2=\"" +
         std::to_string(spec.width) + "\" y2=\"" + fmt(fr.py(0)) +
         "\" stroke=\"#aaa\"/>\n";

  // polygon sides: v_{i-1} to v_i and the closing side back to v_0
  for (int i = 1; i <= b.n + 1; ++i) {
    const BoundaryPoint& u = b.polygon[(i - 1) % (b.n + 1)];
    const BoundaryPoint& w = b.polygon[i % (b.n + 1)];
    if (u.is_infinity)
      out += ray(fr, approx(w.value), "edge");
    else if (w.is_infinity)
      out += ray(fr, approx(u.value), "edge");
    else
      out += arc(fr, approx(u.value), approx(w.value), "edge");
  }

  // axes of the hyperbolic witnesses, through x_i and y_i
  for (int i = 1; i <= b.n - 1; ++i)
    out += arc(fr, approx(b.x_point(i).value), approx(b.y_point(i)), "axis");

  // rotation centers at a + b i
  for (const InvolutionData& g : b.generators) {
    double cx = fr.px(approx(g.a));
    double cy = fr.py(std::sqrt(approx(g.b_sq)));
    out += "  <circle class=\"center\" cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) +
           "\" r=\"3\"/>\n";
    if (spec.labels)
      out += "  <text x=\"" + fmt(cx + 5) + "\" y=\"" + fmt(cy - 5) + "\">f" +
             std::to_string(g.index) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace fuchsian
