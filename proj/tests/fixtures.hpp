#pragma once

#include <random>
#include <vector>

#include "skypath/bitmap.hpp"
#include "skypath/feasibility.hpp"
#include "skypath/radiomap.hpp"

namespace skypath::testing {

/// Single-GBS map set whose gains are high (-40) on set bits and low (-60)
/// elsewhere; any target in (-60, -40] reproduces `mask` as the feasible map.
inline RadioMapSet maps_from_mask(const Bitmap& mask, double delta = 1.0) {
  const int n = mask.rows();
  const Region region(n * delta, delta, 100.0);
  std::vector<float> gains(static_cast<std::size_t>(n * n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) gains[static_cast<std::size_t>(r * n + c)] = mask.get(r, c) ? -40.0F : -60.0F;
  }
  return RadioMapSet({RadioMap(1, region, -100.0, std::move(gains))});
}

inline FeasibleMap feasible_from_mask(const Bitmap& mask, double delta = 1.0) {
  return FeasibleMap{Region(mask.rows() * delta, delta, 100.0), -50.0, mask};
}

/// M random maps with gains uniform in [lo, hi] dB.
inline RadioMapSet random_maps(std::mt19937_64& rng, int n, int m, double delta = 5.0, float lo = -55.0F,
                               float hi = -35.0F) {
  const Region region(n * delta, delta, 90.0);
  std::uniform_real_distribution<float> gain(lo, hi);
  std::vector<RadioMap> maps;
  for (int id = 1; id <= m; ++id) {
    std::vector<float> g(static_cast<std::size_t>(n * n));
    for (float& v : g) v = gain(rng);
    maps.emplace_back(id, region, -100.0, std::move(g));
  }
  return RadioMapSet(std::move(maps));
}

/// Spatially smooth random maps: gain falls off with distance from a random
/// site per GBS, so feasible regions form blobs rather than salt noise.
inline RadioMapSet blob_maps(std::mt19937_64& rng, int n, int m, double delta = 5.0) {
  const Region region(n * delta, delta, 90.0);
  std::uniform_real_distribution<double> site(0.0, n * delta);
  std::uniform_real_distribution<double> jitter(-1.0, 1.0);
  std::vector<RadioMap> maps;
  for (int id = 1; id <= m; ++id) {
    const double sx = site(rng);
    const double sy = site(rng);
    std::vector<float> g(static_cast<std::size_t>(n * n));
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const double dx = (i - 0.5) * delta - sx;
        const double dy = (j - 0.5) * delta - sy;
        const double d = std::sqrt(dx * dx + dy * dy + 65.0 * 65.0);
        g[static_cast<std::size_t>((i - 1) * n + (j - 1))] =
            static_cast<float>(-0.5 * (28.0 + 22.0 * std::log10(d) + 6.02) + jitter(rng));
      }
    }
    maps.emplace_back(id, region, -100.0, std::move(g));
  }
  return RadioMapSet(std::move(maps));
}

}  // namespace skypath::testing
