#include "latdiss/svg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace latdiss {

namespace {

const char* fill_for(Color c) {
  switch (c) {
    case Color::A: return "black";
    case Color::B: return "red";
    case Color::C: return "blue";
    case Color::D: return "green";
  }
  return "black";
}

const char* parity_label(Color c) {
  switch (c) {
    case Color::A: return "A (even, even)";
    case Color::B: return "B (odd, even)";
    case Color::C: return "C (odd, odd)";
    case Color::D: return "D (even, odd)";
  }
  return "";
}

}  // namespace

std::string render_svg(const ConvexLatticePolygon& polygon, const Dissection* dissection) {
  std::set<LatticePoint> points(polygon.vertices().begin(), polygon.vertices().end());
  if (dissection != nullptr) {
    for (const auto& t : dissection->triangles) points.insert({t.v0, t.v1, t.v2});
  }
  std::int64_t min_x = points.begin()->x, max_x = min_x, min_y = points.begin()->y, max_y = min_y;
  for (const auto& p : points) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const std::int64_t u = kSvgUnit;
  const std::int64_t plot_w = (max_x - min_x + 2) * u;
  const std::int64_t plot_h = (max_y - min_y + 2) * u;
  const std::int64_t legend_h = 30;
  const std::int64_t width = std::max<std::int64_t>(plot_w, 4 * 150);
  const std::int64_t height = plot_h + legend_h;
  auto sx = [&](std::int64_t x) { return (x - min_x + 1) * u; };
  auto sy = [&](std::int64_t y) { return (max_y - y + 1) * u; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  out << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (std::int64_t x = min_x - 1; x <= max_x + 1; ++x) {
    out << "<line x1=\"" << sx(x) << "\" y1=\"0\" x2=\"" << sx(x) << "\" y2=\"" << plot_h << "\"/>\n";
  }
  for (std::int64_t y = min_y - 1; y <= max_y + 1; ++y) {
    out << "<line x1=\"0\" y1=\"" << sy(y) << "\" x2=\"" << plot_w << "\" y2=\"" << sy(y) << "\"/>\n";
  }
  out << "</g>\n";

  out << "<polygon points=\"";
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    if (i) out << ' ';
    out << sx(polygon[i].x) << ',' << sy(polygon[i].y);
  }
  out << "\" fill=\"#f4f0e0\" stroke=\"black\" stroke-width=\"2\"/>\n";

  if (dissection != nullptr) {
    out << "<g fill=\"none\" stroke=\"#555555\" stroke-width=\"1\">\n";
    for (const auto& t : dissection->triangles) {
      out << "<polygon points=\"" << sx(t.v0.x) << ',' << sy(t.v0.y) << ' ' << sx(t.v1.x) << ',' << sy(t.v1.y)
          << ' ' << sx(t.v2.x) << ',' << sy(t.v2.y) << "\"/>\n";
    }
    out << "</g>\n";
  }

  for (const auto& p : points) {
    out << "<circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"5\" fill=\"" << fill_for(color_of(p))
        << "\"/>\n";
  }

  out << "<g font-family=\"sans-serif\" font-size=\"14\">\n";
  for (int i = 0; i < 4; ++i) {
    const Color c = kAllColors[i];
    const std::int64_t x = 10 + i * 150, y = plot_h + 15;
    out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"5\" fill=\"" << fill_for(c) << "\"/>\n";
    out << "<text x=\"" << x + 10 << "\" y=\"" << y + 5 << "\">" << parity_label(c) << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace latdiss
