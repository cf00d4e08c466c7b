#include "render_svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "okounkov/errors.hpp"

namespace okounkov::tools {

namespace {

constexpr double kCanvas = 400.0;
constexpr double kMargin = 40.0;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<')
      out += "&lt;";
    else if (c == '>')
      out += "&gt;";
    else if (c == '&')
      out += "&amp;";
    else
      out += c;
  }
  return out;
}

}  // namespace

std::string render_svg(const Polytope& p) {
  if (p.ambient_dim() > 2) throw InvalidInput("render_svg: only polytopes in R^1 or R^2 can be drawn");
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
  os << "<rect width=\"400\" height=\"400\" fill=\"white\"/>\n";
  if (p.empty()) {
    os << "<text x=\"200\" y=\"200\" text-anchor=\"middle\" font-size=\"16\">empty</text>\n</svg>\n";
    return os.str();
  }

  std::vector<std::pair<double, double>> pts;
  for (const auto& v : p.vertices())
    pts.emplace_back(v.empty() ? 0.0 : v[0].get_d(), v.size() > 1 ? v[1].get_d() : 0.0);
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (auto [x, y] : pts) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  double extent = std::max(xmax - xmin, ymax - ymin);
  double scale = extent > 0 ? (kCanvas - 2 * kMargin) / extent : 1.0;
  auto sx = [&](double x) { return kMargin + (x - xmin) * scale; };
  auto sy = [&](double y) { return kCanvas - kMargin - (y - ymin) * scale; };

  os << "<line x1=\"" << fmt(sx(xmin)) << "\" y1=\"" << fmt(sy(0)) << "\" x2=\"" << fmt(sx(xmax)) << "\" y2=\""
     << fmt(sy(0)) << "\" stroke=\"gray\"/>\n";
  os << "<line x1=\"" << fmt(sx(0)) << "\" y1=\"" << fmt(sy(ymin)) << "\" x2=\"" << fmt(sx(0)) << "\" y2=\""
     << fmt(sy(ymax)) << "\" stroke=\"gray\"/>\n";

  if (pts.size() >= 2) {
    // order around the centroid; vertices of a polygon are in convex position
    double cx = 0, cy = 0;
    for (auto [x, y] : pts) {
      cx += x;
      cy += y;
    }
    cx /= pts.size();
    cy /= pts.size();
    auto ordered = pts;
    std::sort(ordered.begin(), ordered.end(), [&](auto a, auto b) {
      return std::atan2(a.second - cy, a.first - cx) < std::atan2(b.second - cy, b.first - cx);
    });
    os << "<polygon points=\"";
    for (std::size_t i = 0; i < ordered.size(); ++i)
      os << (i ? " " : "") << fmt(sx(ordered[i].first)) << "," << fmt(sy(ordered[i].second));
    os << "\" fill=\"#cfe0f5\" stroke=\"#1f4e89\" stroke-width=\"2\"/>\n";
  }

  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto [x, y] = pts[i];
    os << "<circle cx=\"" << fmt(sx(x)) << "\" cy=\"" << fmt(sy(y)) << "\" r=\"4\" fill=\"#1f4e89\"/>\n";
    os << "<text x=\"" << fmt(sx(x) + 6) << "\" y=\"" << fmt(sy(y) - 6) << "\" font-size=\"12\">"
       << escape(to_string(p.vertices()[i])) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void write_svg(const Polytope& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << render_svg(p);
}

}  // namespace okounkov::tools
