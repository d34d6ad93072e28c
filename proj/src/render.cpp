#include "projrefl/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace projrefl {

namespace {

constexpr double kScale = 100.0;
const double kSqrt3Half = std::sqrt(3.0) / 2.0;

std::string fmt(double v) {
  if (std::fabs(v) < 5e-5) v = 0.0;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

// Barycentric (b1, b2, 1 − b1 − b2) on the triangle (0,0), (1,0), (1/2, √3/2),
// y pointing down.
Point2 to_canvas(const Point2& b) {
  const double b3 = 1.0 - b.x - b.y;
  return {kScale * (b.y + 0.5 * b3), -kScale * (kSqrt3Half * b3)};
}

}  // namespace

std::optional<Point2> project_chart(const std::array<AlgNumber, 3>& x, const std::array<AlgNumber, 3>& weights,
                                    double cull_epsilon) {
  if (x[0].is_zero() && x[1].is_zero() && x[2].is_zero()) throw PreconditionError("cannot project the zero vector");
  double s = 0.0;
  double norm = 0.0;
  std::array<double, 3> wx{};
  for (std::size_t i = 0; i < 3; ++i) {
    const double xi = x[i].to_double();
    wx[i] = weights[i].to_double() * xi;
    s += wx[i];
    norm += xi * xi;
  }
  if (std::fabs(s) < cull_epsilon * std::sqrt(norm)) return std::nullopt;
  return Point2{wx[0] / s, wx[1] / s};
}

std::array<AlgNumber, 3> chart_weights(const CartanMatrix& c) {
  if (c.size() != 3) throw PreconditionError("chart weights need a 3x3 Cartan matrix");
  for (long top = 1; top <= 24; ++top) {
    for (long a = 1; a <= top; ++a)
      for (long b = 1; b <= top; ++b)
        for (long d = 1; d <= top; ++d) {
          if (std::max({a, b, d}) != top) continue;
          const std::array<AlgNumber, 3> w{AlgNumber(a), AlgNumber(b), AlgNumber(d)};
          bool ok = true;
          for (int j = 0; j < 3 && ok; ++j) {
            AlgNumber s(0L);
            for (int i = 0; i < 3; ++i) s += w[static_cast<std::size_t>(i)] * c(i, j);
            ok = s.sign() == Sign::negative;
          }
          if (ok) return w;
        }
  }
  return {AlgNumber(1L), AlgNumber(1L), AlgNumber(1L)};
}

SvgScene build_scene(const Realization& r, const ChartConfig& cfg) {
  if (r.r != 3) throw PreconditionError("tilings are drawn for 3-dimensional realizations only, got r = " +
                                        std::to_string(r.r));
  if (r.generators() != 3 || !(r.A == AlgMatrix::identity(3)))
    throw PreconditionError("tilings need a triangle group realized with alpha_i = e_i");
  if (cfg.depth < 0) throw PreconditionError("depth must be non-negative");
  if (!(cfg.cull_epsilon > 0)) throw PreconditionError("cull_epsilon must be positive");

  const auto weights = cfg.weights ? *cfg.weights : chart_weights(CartanMatrix(r.V));
  SvgScene scene;
  for (const auto& g : word_ball(r, cfg.depth)) {
    SvgPolygon poly{{}, static_cast<int>(g.word.size() % 2), g.word};
    bool keep = true;
    for (std::size_t i = 0; i < 3 && keep; ++i) {
      std::array<AlgNumber, 3> y{-g.matrix(0, i), -g.matrix(1, i), -g.matrix(2, i)};
      AlgNumber s(0L);
      for (std::size_t k = 0; k < 3; ++k) s += weights[k] * y[k];
      const auto b = s.sign() == Sign::negative ? project_chart(y, weights, cfg.cull_epsilon) : std::nullopt;
      if (!b) keep = false;
      else poly.points[i] = to_canvas(*b);
    }
    if (!keep) {
      ++scene.culled;
      continue;
    }
    scene.polygons.push_back(std::move(poly));
  }

  const double cx = 0.5 * kScale;
  const double cy = -kScale * kSqrt3Half / 3.0;
  const double half = cfg.view_extent * kScale;
  double lo_x = cx, hi_x = cx, lo_y = cy, hi_y = cy;
  for (const auto& poly : scene.polygons)
    for (const auto& p : poly.points) {
      lo_x = std::min(lo_x, p.x);
      hi_x = std::max(hi_x, p.x);
      lo_y = std::min(lo_y, p.y);
      hi_y = std::max(hi_y, p.y);
    }
  lo_x = std::max(lo_x, cx - half);
  hi_x = std::min(hi_x, cx + half);
  lo_y = std::max(lo_y, cy - half);
  hi_y = std::min(hi_y, cy + half);
  const double pad = 0.02 * std::max(hi_x - lo_x, hi_y - lo_y) + 1.0;
  scene.viewbox = {lo_x - pad, lo_y - pad, hi_x - lo_x + 2 * pad, hi_y - lo_y + 2 * pad};
  return scene;
}

std::string render_svg(const SvgScene& scene, const ChartConfig& cfg) {
  const auto& vb = scene.viewbox;
  const double stroke = 0.002 * std::max(vb[2], vb[3]);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(cfg.width) + "\" height=\"" +
         fmt(cfg.height) + "\" viewBox=\"" + fmt(vb[0]) + " " + fmt(vb[1]) + " " + fmt(vb[2]) + " " + fmt(vb[3]) +
         "\">\n";
  out += "<g stroke=\"#1b1b1b\" stroke-width=\"" + fmt(stroke) + "\" stroke-linejoin=\"round\">\n";
  for (const auto& poly : scene.polygons) {
    out += "<polygon points=\"";
    for (std::size_t i = 0; i < 3; ++i) {
      if (i) out += " ";
      out += fmt(poly.points[i].x) + "," + fmt(poly.points[i].y);
    }
    out += "\" fill=\"" + cfg.palette[static_cast<std::size_t>(poly.parity)] + "\" data-word=\"";
    for (std::size_t k = 0; k < poly.word.size(); ++k) {
      if (k) out += " ";
      out += std::to_string(poly.word[k] + 1);
    }
    out += "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::string tile_svg(const Realization& r, const ChartConfig& cfg) { return render_svg(build_scene(r, cfg), cfg); }

}  // namespace projrefl
