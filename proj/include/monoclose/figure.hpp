#pragma once

#include <cmath>
#include <cstddef>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "monoclose/closure.hpp"
#include "monoclose/error.hpp"
#include "monoclose/family.hpp"

namespace monoclose {

/// One minimal generator of the closure of I_{3,t}, placed in the plane.
struct FigurePoint {
  ExponentVector exponent;
  bool vertex = false;
  double x = 0;
  double y = 0;
};

enum class FigureFormat { svg, csv };

/// Generators of the closure of I_{n,t} projected onto the triangle spanned
/// by the three generators of I_{n,t}; only n = 3 is planar.
inline std::vector<FigurePoint> figure_points(const Exponent& t, std::size_t n = 3) {
  if (n != 3)
    throw UsageError("figures are only drawn for n = 3, got n = " + std::to_string(n));
  const FamilyParams params(n, t);
  const MonomialIdeal family = family_ideal(params);
  const MonomialIdeal closure = closure_generators(family);

  // the point a is Σ c_j e_j with c_j = 1 - a_j/t; draw it at Σ c_j V_j
  const double corners[3][2] = {{0.5, std::sqrt(3.0) / 2.0}, {0.0, 0.0}, {1.0, 0.0}};
  const double td = t.convert_to<double>();
  std::vector<FigurePoint> out;
  for (const auto& g : closure.gens()) {
    FigurePoint p;
    p.exponent = g;
    p.vertex = contains(family, g);
    for (std::size_t j = 0; j < 3; ++j) {
      const double c = 1.0 - g[j].convert_to<double>() / td;
      p.x += c * corners[j][0];
      p.y += c * corners[j][1];
    }
    out.push_back(std::move(p));
  }
  return out;
}

inline void write_figure_csv(std::ostream& os, const std::vector<FigurePoint>& points) {
  os << "a1,a2,a3,kind,x,y\n";
  os << std::fixed << std::setprecision(6);
  for (const auto& p : points)
    os << p.exponent[0] << "," << p.exponent[1] << "," << p.exponent[2] << ","
       << (p.vertex ? "vertex" : "interior") << "," << p.x << "," << p.y << "\n";
}

inline void write_figure_svg(std::ostream& os, const std::vector<FigurePoint>& points, const Exponent& t) {
  constexpr double size = 400.0;
  constexpr double margin = 40.0;
  auto sx = [&](double x) { return margin + x * size; };
  auto sy = [&](double y) { return margin + (std::sqrt(3.0) / 2.0 - y) * size; };

  os << std::fixed << std::setprecision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size + 2 * margin << "\" height=\""
     << size * std::sqrt(3.0) / 2.0 + 2 * margin << "\">\n";
  os << "  <title>I_{3," << t << "}: Newton polyhedron slice and closure generators</title>\n";
  os << "  <polygon points=\"";
  bool first = true;
  for (const auto& p : points)
    if (p.vertex) {
      os << (first ? "" : " ") << sx(p.x) << "," << sy(p.y);
      first = false;
    }
  os << "\" fill=\"#eef\" stroke=\"black\"/>\n";
  for (const auto& p : points)
    os << "  <circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"" << (p.vertex ? 6 : 4)
       << "\" fill=\"" << (p.vertex ? "black" : "#c33") << "\" class=\"" << (p.vertex ? "vertex" : "interior")
       << "\"><title>(" << p.exponent[0] << "," << p.exponent[1] << "," << p.exponent[2]
       << ")</title></circle>\n";
  os << "</svg>\n";
}

/// Writes the figure for I_{3,t} to `path`; returns the plotted points.
inline std::vector<FigurePoint> emit_figure(const Exponent& t, const std::string& path, FigureFormat format,
                                            std::size_t n = 3) {
  auto points = figure_points(t, n);
  std::ofstream os(path);
  if (!os)
    throw Error("cannot open " + path + " for writing");
  if (format == FigureFormat::csv)
    write_figure_csv(os, points);
  else
    write_figure_svg(os, points, t);
  if (!os)
    throw Error("failed writing " + path);
  return points;
}

}  // namespace monoclose
