#pragma once

// SVG pictures of the tiling of the convex domain divided by a triangle group,
// drawn in an affine chart {w·x = −1}.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "projrefl/realize.hpp"

namespace projrefl {

struct ChartConfig {
  int depth = 4;
  double width = 800;
  double height = 800;
  double cull_epsilon = 1e-9;
  /// Fill colours for even and odd word length.
  std::array<std::string, 2> palette{"#f2c14e", "#2d5d7b"};
  /// Chart functional w; when unset tile_svg picks one with wᵀC < 0.
  std::optional<std::array<AlgNumber, 3>> weights;
  /// Half-width of the visible window, in units of the fundamental triangle.
  double view_extent = 4.0;
};

struct Point2 {
  double x;
  double y;
};

/// Barycentric chart point (w_1 x_1 / s, w_2 x_2 / s) with s = Σ w_i x_i;
/// nullopt when |s| < eps·‖x‖. Throws PreconditionError for x = 0.
std::optional<Point2> project_chart(const std::array<AlgNumber, 3>& x,
                                    const std::array<AlgNumber, 3>& weights = {AlgNumber(1L), AlgNumber(1L),
                                                                               AlgNumber(1L)},
                                    double cull_epsilon = 1e-9);

/// Smallest positive integer weights w (by max entry, then lexicographic) with
/// every entry of wᵀC negative; such a chart contains every tile. Falls back to
/// (1,1,1) if none exists with entries up to 24.
std::array<AlgNumber, 3> chart_weights(const CartanMatrix& c);

struct SvgPolygon {
  std::array<Point2, 3> points;
  int parity;
  std::vector<int> word;
};

struct SvgScene {
  std::vector<SvgPolygon> polygons;
  int culled = 0;
  /// min x, min y, width, height in drawing units.
  std::array<double, 4> viewbox{};
};

/// One triangle per element of word_ball(depth); vertex i of the fundamental
/// triangle is −e_i, so g maps it to −(column i of g).
SvgScene build_scene(const Realization& r, const ChartConfig& cfg);
std::string render_svg(const SvgScene& scene, const ChartConfig& cfg);
std::string tile_svg(const Realization& r, const ChartConfig& cfg);

}  // namespace projrefl
