#include "cagraph/svg.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace cagraph
{

namespace
{

struct Point
{
  double x, y;
};

Point polar(double cx, double cy, double r, double angle)
{
  return {cx + r * std::sin(angle), cy - r * std::cos(angle)};
}

const char *const palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                               "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

} // namespace

std::string render_svg(const Representation &rep, const std::vector<std::string> &labels)
{
  const int n = rep.model.arc_count();
  const int len = 2 * n;
  const double inner = 60.0, step = 18.0;
  const double outer = inner + step * std::max(n, 1) + 40.0;
  const double size = 2 * outer;
  const double cx = outer, cy = outer;
  const auto angle = [&](int pos) { return 2 * std::numbers::pi * (pos + 0.5) / std::max(len, 1); };

  std::ostringstream svg;
  svg.setf(std::ios::fixed);
  svg.precision(2);
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size
      << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n"
      << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << inner - 10
      << "\" fill=\"none\" stroke=\"#cccccc\" stroke-dasharray=\"4 4\"/>\n";

  const std::vector<Vertex> owner = rep.owners();
  for (int arc = 0; arc < n; ++arc) {
    const Vertex v = owner[arc];
    const double r = inner + step * arc;
    const double a0 = angle(rep.model.left_position(arc));
    double a1 = angle(rep.model.right_position(arc));
    if (a1 <= a0)
      a1 += 2 * std::numbers::pi;
    const Point p0 = polar(cx, cy, r, a0), p1 = polar(cx, cy, r, a1);
    const bool large = a1 - a0 > std::numbers::pi;
    const char *color = palette[arc % 10];
    const std::string label = v < static_cast<int>(labels.size()) ? labels[v] : std::to_string(v + 1);
    const Point mid = polar(cx, cy, r + 7, (a0 + a1) / 2);

    svg << "  <g id=\"arc-" << arc + 1 << "\">\n"
        << "    <path d=\"M " << p0.x << ' ' << p0.y << " A " << r << ' ' << r << " 0 "
        << (large ? 1 : 0) << " 1 " << p1.x << ' ' << p1.y << "\" fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"3\"/>\n"
        << "    <circle cx=\"" << p0.x << "\" cy=\"" << p0.y << "\" r=\"4\" fill=\"" << color << "\"/>\n"
        << "    <circle cx=\"" << p1.x << "\" cy=\"" << p1.y << "\" r=\"4\" fill=\"white\" stroke=\""
        << color << "\"/>\n"
        << "    <text x=\"" << mid.x << "\" y=\"" << mid.y
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" << label
        << "</text>\n"
        << "  </g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

} // namespace cagraph
