#include "skypath/environment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "skypath/error.hpp"

namespace skypath {

namespace {

constexpr int kMaxRayleighAttempts = 1'000'000;

// std:: distributions are implementation-defined; these transforms keep the
// scene bit-identical across standard libraries.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11U) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

double rayleigh_truncated(std::mt19937_64& rng, double mean, double cap) {
  const double sigma = mean / std::sqrt(std::numbers::pi / 2.0);
  double value = 0.0;
  for (int attempt = 0; attempt < kMaxRayleighAttempts; ++attempt) {
    value = sigma * std::sqrt(-2.0 * std::log1p(-uniform01(rng)));
    if (value <= cap && value > 0.0) return value;
  }
  return std::clamp(value, 0.0, cap);
}

void check_config(const SceneConfig& c) {
  auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
  if (c.gbs_count < 1) throw ConfigError("scene: gbs_count must be >= 1");
  if (c.obstacle_count < 0) throw ConfigError("scene: obstacle_count must be >= 0");
  if (!positive(c.gbs_height_m)) throw ConfigError("scene: gbs height must be positive");
  if (c.obstacle_count > 0) {
    if (!positive(c.side_min_m) || !positive(c.side_max_m) || c.side_min_m > c.side_max_m) {
      throw ConfigError("scene: obstacle side range must satisfy 0 < low <= high");
    }
    if (!positive(c.height_mean_m)) throw ConfigError("scene: height mean must be positive");
  }
}

}  // namespace

Environment generate_environment(const SceneConfig& config, std::uint64_t seed) {
  check_config(config);
  Environment env;
  env.region = Region(config.edge_length_m, config.granularity_m, config.altitude_m);
  env.seed = seed;

  std::mt19937_64 rng(seed);
  const double edge = config.edge_length_m;
  env.gbss.reserve(static_cast<std::size_t>(config.gbs_count));
  for (int m = 1; m <= config.gbs_count; ++m) {
    const double x = uniform(rng, 0.0, edge);
    const double y = uniform(rng, 0.0, edge);
    env.gbss.push_back({m, {x, y, config.gbs_height_m}});
  }
  env.obstacles.reserve(static_cast<std::size_t>(config.obstacle_count));
  for (int k = 0; k < config.obstacle_count; ++k) {
    Obstacle box;
    box.center_x = uniform(rng, 0.0, edge);
    box.center_y = uniform(rng, 0.0, edge);
    box.length = uniform(rng, config.side_min_m, config.side_max_m);
    box.width = box.length;
    box.height = rayleigh_truncated(rng, config.height_mean_m, config.altitude_m);
    env.obstacles.push_back(box);
  }
  validate_environment(env);
  return env;
}

void validate_environment(const Environment& env) {
  const Region& region = env.region;
  if (region.cells_per_side() < 2) throw ConfigError("environment: region is not initialized");
  if (env.gbss.empty()) throw ConfigError("environment: no GBS");
  for (std::size_t k = 0; k < env.gbss.size(); ++k) {
    const Gbs& g = env.gbss[k];
    if (g.id != static_cast<int>(k) + 1) {
      throw ConfigError("environment: GBS ids must be 1..M in order");
    }
    if (g.position.z != env.gbss.front().position.z) {
      throw ConfigError("environment: GBSs must share one height");
    }
    if (!std::isfinite(g.position.x) || !std::isfinite(g.position.y) || !(g.position.z > 0.0)) {
      throw ConfigError("environment: bad GBS position");
    }
  }
  const double edge = region.edge_length();
  for (const Obstacle& box : env.obstacles) {
    if (!(box.length > 0.0) || !(box.width > 0.0) || !(box.height > 0.0)) {
      throw ConfigError("environment: obstacle extents must be positive");
    }
    if (box.height > region.altitude()) {
      throw ConfigError("environment: obstacle taller than the flight altitude");
    }
    if (box.x_max() < 0.0 || box.y_max() < 0.0 || box.x_min() > edge || box.y_min() > edge) {
      throw ConfigError("environment: obstacle footprint outside the region");
    }
  }
}

bool segment_hits_box(const Point3& a, const Point3& b, const Obstacle& box) {
  // Slab method on the open box; the parameter interval is open as well so
  // touching contact never counts.
  const double origin[3] = {a.x, a.y, a.z};
  const double dir[3] = {b.x - a.x, b.y - a.y, b.z - a.z};
  const double lo[3] = {box.x_min(), box.y_min(), 0.0};
  const double hi[3] = {box.x_max(), box.y_max(), box.height};
  double t_enter = 0.0;
  double t_exit = 1.0;
  for (int axis = 0; axis < 3; ++axis) {
    if (dir[axis] == 0.0) {
      if (!(origin[axis] > lo[axis] && origin[axis] < hi[axis])) return false;
      continue;
    }
    double t0 = (lo[axis] - origin[axis]) / dir[axis];
    double t1 = (hi[axis] - origin[axis]) / dir[axis];
    if (t0 > t1) std::swap(t0, t1);
    t_enter = std::max(t_enter, t0);
    t_exit = std::min(t_exit, t1);
    if (!(t_enter < t_exit)) return false;
  }
  return t_enter < t_exit;
}

bool los_blocked(const Point3& a, const Point3& b, const Environment& env) {
  return std::any_of(env.obstacles.begin(), env.obstacles.end(),
                     [&](const Obstacle& box) { return segment_hits_box(a, b, box); });
}

}  // namespace skypath
