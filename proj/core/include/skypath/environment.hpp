#pragma once

#include <cstdint>
#include <vector>

#include "skypath/geometry.hpp"

namespace skypath {

struct Gbs {
  int id = 1;          // 1..M
  Point3 position;     // antenna location; z is the shared GBS height
  friend bool operator==(const Gbs&, const Gbs&) = default;
};

/// Axis-aligned cuboid standing on the ground (z in [0, height]).
struct Obstacle {
  double center_x = 0.0;
  double center_y = 0.0;
  double length = 0.0;  // extent along x
  double width = 0.0;   // extent along y
  double height = 0.0;

  double x_min() const { return center_x - 0.5 * length; }
  double x_max() const { return center_x + 0.5 * length; }
  double y_min() const { return center_y - 0.5 * width; }
  double y_max() const { return center_y + 0.5 * width; }

  friend bool operator==(const Obstacle&, const Obstacle&) = default;
};

struct Environment {
  Region region;
  std::vector<Gbs> gbss;
  std::vector<Obstacle> obstacles;
  std::uint64_t seed = 0;

  friend bool operator==(const Environment&, const Environment&) = default;
};

/// Parameters for random scene generation.
struct SceneConfig {
  double edge_length_m = 630.0;
  double granularity_m = 5.0;
  double altitude_m = 90.0;
  int gbs_count = 6;
  double gbs_height_m = 25.0;
  int obstacle_count = 30;
  double side_min_m = 50.0;
  double side_max_m = 70.0;
  double height_mean_m = 40.0;  // Rayleigh mean, truncated at altitude_m
};

/// Draws a scene from `config`. GBS (x, y) are uniform over the region;
/// obstacle centers are uniform over the region with square footprints of
/// side U[side_min, side_max] and Rayleigh heights truncated to <= altitude.
/// The output is a pure function of (config, seed).
Environment generate_environment(const SceneConfig& config, std::uint64_t seed);

/// Checks the Environment invariants (ids 1..M, obstacle heights <= altitude,
/// footprints touching the region, shared GBS height). Throws ConfigError.
void validate_environment(const Environment& env);

/// True iff the open segment (a, b) passes through the interior of an
/// obstacle. Grazing a face, edge or corner does not block.
bool los_blocked(const Point3& a, const Point3& b, const Environment& env);

/// Same test against a single box.
bool segment_hits_box(const Point3& a, const Point3& b, const Obstacle& box);

}  // namespace skypath
