#include "quasipoly/svg.hpp"

#include "quasipoly/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace quasipoly {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// HSV wheel with fixed saturation/value, one hue per direction.
std::string colour(std::size_t i, std::size_t count) {
  const double h = 360.0 * static_cast<double>(i) / static_cast<double>(std::max<std::size_t>(count, 1));
  const double c = 0.75, x = c * (1.0 - std::abs(std::fmod(h / 60.0, 2.0) - 1.0)), m = 0.15;
  double r = 0, g = 0, b = 0;
  if (h < 60) r = c, g = x;
  else if (h < 120) r = x, g = c;
  else if (h < 180) g = c, b = x;
  else if (h < 240) g = x, b = c;
  else if (h < 300) r = x, b = c;
  else r = c, b = x;
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>((r + m) * 255),
                static_cast<int>((g + m) * 255), static_cast<int>((b + m) * 255));
  return buf;
}

}  // namespace

std::string render_svg(const SvgScene& scene) {
  if (scene.size_px <= 0) throw InvalidArgument("render_svg: size must be positive");
  double extent = 0.0;
  for (const auto& p : scene.polygon) extent = std::max(extent, std::max(std::abs(p.real()), std::abs(p.imag())));
  if (scene.polygon.empty())
    for (const auto& p : scene.patch) extent = std::max(extent, std::max(std::abs(p.real()), std::abs(p.imag())));
  if (extent == 0.0) extent = 1.0;
  extent *= 1.15;

  const double size = scene.size_px;
  const double scale = size / (2.0 * extent);
  auto sx = [&](double x) { return num((x + extent) * scale); };
  auto sy = [&](double y) { return num((extent - y) * scale); };
  auto visible = [&](const PlanarPoint& p) {
    return std::abs(p.real()) <= extent && std::abs(p.imag()) <= extent;
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << scene.size_px << "\" height=\""
      << scene.size_px << "\" viewBox=\"0 0 " << scene.size_px << ' ' << scene.size_px << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!scene.title.empty()) out << "<title>" << escape(scene.title) << "</title>\n";

  out << "<g fill=\"#9a9a9a\" fill-opacity=\"0.5\">\n";
  const double r = std::clamp(0.02 * scale, 0.8, 3.0);
  for (const auto& p : scene.patch)
    if (visible(p))
      out << "<circle cx=\"" << sx(p.real()) << "\" cy=\"" << sy(p.imag()) << "\" r=\"" << num(r) << "\"/>\n";
  out << "</g>\n";

  const std::size_t nd = scene.direction_angles.size();
  if (!scene.polygon.empty() && nd > 0) {
    const auto& a = scene.polygon[scene.anchor_vertex % scene.polygon.size()];
    out << "<g stroke-width=\"1.2\" stroke-dasharray=\"6 4\">\n";
    for (std::size_t i = 0; i < nd; ++i) {
      const PlanarPoint d = std::polar(3.0 * extent, scene.direction_angles[i]);
      out << "<line x1=\"" << sx((a - d).real()) << "\" y1=\"" << sy((a - d).imag()) << "\" x2=\""
          << sx((a + d).real()) << "\" y2=\"" << sy((a + d).imag()) << "\" stroke=\"" << colour(i, nd)
          << "\"/>\n";
    }
    out << "</g>\n";
  }

  if (!scene.polygon.empty()) {
    out << "<polygon fill=\"#3060c0\" fill-opacity=\"0.12\" stroke=\"#102060\" stroke-width=\"3\" points=\"";
    for (std::size_t i = 0; i < scene.polygon.size(); ++i)
      out << (i ? " " : "") << sx(scene.polygon[i].real()) << ',' << sy(scene.polygon[i].imag());
    out << "\"/>\n<g fill=\"#102060\">\n";
    for (const auto& p : scene.polygon)
      out << "<circle cx=\"" << sx(p.real()) << "\" cy=\"" << sy(p.imag()) << "\" r=\"4\"/>\n";
    out << "</g>\n";
  }

  out << "<g font-family=\"sans-serif\" font-size=\"13\">\n";
  double y = 20.0;
  if (!scene.title.empty()) {
    out << "<text x=\"12\" y=\"" << num(y) << "\" font-weight=\"bold\">" << escape(scene.title) << "</text>\n";
    y += 18.0;
  }
  for (std::size_t i = 0; i < nd; ++i) {
    const double deg = scene.direction_angles[i] * 180.0 / std::numbers::pi;
    out << "<line x1=\"12\" y1=\"" << num(y - 4) << "\" x2=\"36\" y2=\"" << num(y - 4) << "\" stroke=\""
        << colour(i, nd) << "\" stroke-width=\"2\"/>";
    out << "<text x=\"42\" y=\"" << num(y) << "\">u" << i + 1 << " " << num(deg) << "&#176;</text>\n";
    y += 16.0;
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace quasipoly
