#pragma once

#include "mmbs/mmi.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mmbs {

/// Contents of a two-ideal wall diagram over [0, box_max]^2.
struct WallPlot {
    Rational box_max = 1;
    std::vector<Wall> walls;
    std::vector<LambdaPoint> jumping_points;
    std::optional<std::vector<std::int64_t>> alpha;
    /// Jumping numbers mu on the ray mu * alpha.
    std::vector<Rational> ray_jumps;
};

/// Jumping points among the arrangement face samples lying on a wall.
std::vector<LambdaPoint> wall_jumping_samples(const ResolutionData& rd, const std::vector<Wall>& walls,
                                              const Rational& box_max);

/// Deterministic SVG text. Throws UnsupportedInput unless the walls have
/// exactly two coefficients.
std::string render_wall_plot(const WallPlot& plot);

/// Writes render_wall_plot(plot) to `path`.
void emit_wall_plot(const WallPlot& plot, const std::string& path);

}  // namespace mmbs
