#pragma once

// Static SVG picture of a problem: one disc per node with area proportional
// to its multiplicity, and optionally the witness curve. Floating point is
// used for drawing only.

#include <hermite/certifier.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hermite {

struct SvgOptions {
  int width = 480;
  int height = 480;
  int margin = 32;
  int samples = 400;  // polyline resolution per axis
  double unit_radius = 5.0;  // radius of a multiplicity-1 node
};

namespace detail {

struct Box {
  double x0, x1, y0, y1;
};

inline Box bounding_box(const Problem& p) {
  if (p.size() == 0) return {-1, 1, -1, 1};
  Box b{1e300, -1e300, 1e300, -1e300};
  for (const auto& q : p.nodes()) {
    const double x = q.x.get_d(), y = q.y.get_d();
    b.x0 = std::min(b.x0, x);
    b.x1 = std::max(b.x1, x);
    b.y0 = std::min(b.y0, y);
    b.y1 = std::max(b.y1, y);
  }
  const double span = std::max({b.x1 - b.x0, b.y1 - b.y0, 1e-12});
  const double pad = span * 0.25 + (span < 1e-9 ? 1.0 : 0.0);
  // Square box so curves are not distorted.
  const double cx = (b.x0 + b.x1) / 2, cy = (b.y0 + b.y1) / 2, half = span / 2 + pad;
  return {cx - half, cx + half, cy - half, cy + half};
}

// Coefficients (a, b, c, d, e, f) of a x^2 + b xy + c y^2 + d x + e y + f.
inline std::array<double, 6> implicit_coefficients(const std::variant<Line, Conic>& curve) {
  if (const auto* l = std::get_if<Line>(&curve)) {
    return {0, 0, 0, l->a().get_d(), l->b().get_d(), l->c().get_d()};
  }
  const auto& c = std::get<Conic>(curve).coefficients();
  return {c[0].get_d(), c[1].get_d(), c[2].get_d(), c[3].get_d(), c[4].get_d(), c[5].get_d()};
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += ch;
    }
  }
  return out;
}

// Real roots of a t^2 + b t + c (a may vanish).
inline std::vector<double> real_roots(double a, double b, double c) {
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), 1e-300});
  if (std::abs(a) <= 1e-12 * scale) {
    if (std::abs(b) <= 1e-12 * scale) return {};
    return {-c / b};
  }
  const double disc = b * b - 4 * a * c;
  if (disc < 0) return {};
  const double r = std::sqrt(disc);
  return {(-b - r) / (2 * a), (-b + r) / (2 * a)};
}

}  // namespace detail

inline std::string render_svg(const Problem& problem, const std::optional<Witness>& witness = {},
                              const SvgOptions& opt = {}) {
  const auto box = detail::bounding_box(problem);
  const double inner_w = opt.width - 2.0 * opt.margin, inner_h = opt.height - 2.0 * opt.margin;
  auto sx = [&](double x) { return opt.margin + (x - box.x0) / (box.x1 - box.x0) * inner_w; };
  auto sy = [&](double y) { return opt.margin + (box.y1 - y) / (box.y1 - box.y0) * inner_h; };

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opt.width
      << "\" height=\"" << opt.height << "\" viewBox=\"0 0 " << opt.width << " " << opt.height
      << "\">\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << opt.width << "\" height=\"" << opt.height
      << "\" fill=\"white\"/>\n"
      << "  <rect x=\"" << opt.margin << "\" y=\"" << opt.margin << "\" width=\"" << inner_w
      << "\" height=\"" << inner_h << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";

  if (witness) {
    const auto c = detail::implicit_coefficients(witness->curve);
    // Column pass solves for y at each x, row pass for x at each y; together
    // they leave no gaps on steep or flat stretches.
    std::vector<std::vector<std::pair<double, double>>> strokes;
    for (int pass = 0; pass < 2; ++pass) {
      std::vector<std::vector<std::pair<double, double>>> branch(2);
      auto flush = [&](std::size_t k) {
        if (branch[k].size() >= 2) strokes.push_back(branch[k]);
        branch[k].clear();
      };
      for (int s = 0; s <= opt.samples; ++s) {
        std::vector<double> roots;
        double u;
        if (pass == 0) {
          u = box.x0 + (box.x1 - box.x0) * s / opt.samples;
          roots = detail::real_roots(c[2], c[1] * u + c[4], c[0] * u * u + c[3] * u + c[5]);
        } else {
          u = box.y0 + (box.y1 - box.y0) * s / opt.samples;
          roots = detail::real_roots(c[0], c[1] * u + c[3], c[2] * u * u + c[4] * u + c[5]);
        }
        for (std::size_t k = 0; k < 2; ++k) {
          const bool inside = k < roots.size() &&
                              (pass == 0 ? roots[k] >= box.y0 && roots[k] <= box.y1
                                         : roots[k] >= box.x0 && roots[k] <= box.x1);
          if (!inside) {
            flush(k);
            continue;
          }
          branch[k].push_back(pass == 0 ? std::make_pair(u, roots[k]) : std::make_pair(roots[k], u));
        }
      }
      flush(0);
      flush(1);
    }
    for (const auto& stroke : strokes) {
      out << "  <polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\" points=\"";
      for (std::size_t k = 0; k < stroke.size(); ++k) {
        out << (k ? " " : "") << sx(stroke[k].first) << "," << sy(stroke[k].second);
      }
      out << "\"/>\n";
    }
    out << "  <text x=\"" << opt.margin << "\" y=\"" << opt.margin - 10
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#c0392b\">"
        << detail::xml_escape(to_string(*witness)) << "</text>\n";
  }

  for (std::size_t k = 0; k < problem.size(); ++k) {
    const auto& q = problem.nodes()[k];
    const int m = problem.scheme()[k];
    const double r = opt.unit_radius * std::sqrt(static_cast<double>(std::max(m, 0)));
    out << "  <circle cx=\"" << sx(q.x.get_d()) << "\" cy=\"" << sy(q.y.get_d()) << "\" r=\""
        << (m > 0 ? r : opt.unit_radius * 0.5) << "\" fill=\"" << (m > 0 ? "#2c3e50" : "none")
        << "\" stroke=\"#2c3e50\"><title>node " << k << " (" << to_string(q.x) << ", "
        << to_string(q.y) << ") multiplicity " << m << "</title></circle>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace hermite
