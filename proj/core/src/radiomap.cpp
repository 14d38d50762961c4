#include "skypath/radiomap.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "skypath/error.hpp"
#include "skypath/parallel.hpp"

namespace skypath {

RadioMap::RadioMap(int gbs_id, Region region, double epsilon_db, std::vector<float> gains)
    : gbs_id_(gbs_id), region_(region), epsilon_db_(epsilon_db), gains_(std::move(gains)) {
  const auto d = static_cast<std::size_t>(region_.cells_per_side());
  if (gbs_id_ < 0 || gbs_id_ > 65535) throw ConfigError("radio map: gbs id out of range");
  if (gains_.size() != d * d) {
    throw ConfigError("radio map: expected " + std::to_string(d * d) + " entries, got " +
                      std::to_string(gains_.size()));
  }
  for (float g : gains_) {
    if (std::isnan(g) || (g != kNegligible && (std::isinf(g) || static_cast<double>(g) < epsilon_db_))) {
      throw ConfigError("radio map: finite entry below epsilon or invalid value");
    }
  }
}

RadioMapSet::RadioMapSet(std::vector<RadioMap> maps) : maps_(std::move(maps)) {
  if (maps_.empty()) throw ConfigError("radio map set: no maps");
  std::sort(maps_.begin(), maps_.end(),
            [](const RadioMap& a, const RadioMap& b) { return a.gbs_id() < b.gbs_id(); });
  for (std::size_t k = 0; k < maps_.size(); ++k) {
    if (maps_[k].gbs_id() != static_cast<int>(k) + 1) {
      throw ConfigError("radio map set: GBS ids must be exactly 1..M");
    }
    if (!(maps_[k].region() == maps_.front().region())) {
      throw ConfigError("radio map set: maps disagree on the region");
    }
  }
}

RadioMap build_radio_map(const Gbs& gbs, const Environment& env, double epsilon_db,
                         const ChannelModel& model) {
  const Region& region = env.region;
  const int d = region.cells_per_side();
  std::vector<float> gains(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), kNegligible);
  parallel_for(d, [&](int row) {
    const int i = row + 1;
    for (int j = 1; j <= d; ++j) {
      const Point2 p = grid_point(i, j, region);
      const double g = channel_gain(gbs, {p.x, p.y, region.altitude()}, env, model);
      const auto stored = static_cast<float>(g);
      if (static_cast<double>(stored) >= epsilon_db) {
        gains[static_cast<std::size_t>(row) * static_cast<std::size_t>(d) +
              static_cast<std::size_t>(j - 1)] = stored;
      }
    }
  });
  return RadioMap(gbs.id, region, epsilon_db, std::move(gains));
}

RadioMapSet build_radio_maps(const Environment& env, double epsilon_db, const ChannelModel& model) {
  std::vector<RadioMap> maps;
  maps.reserve(env.gbss.size());
  for (const Gbs& gbs : env.gbss) maps.push_back(build_radio_map(gbs, env, epsilon_db, model));
  return RadioMapSet(std::move(maps));
}

RadioMap superpose(std::span<const RadioMap> maps) {
  if (maps.empty()) throw ConfigError("superpose: no maps");
  const Region& region = maps.front().region();
  double epsilon = maps.front().epsilon_db();
  std::vector<float> best(maps.front().values().begin(), maps.front().values().end());
  for (const RadioMap& map : maps.subspan(1)) {
    if (!(map.region() == region)) throw ConfigError("superpose: maps disagree on the region");
    epsilon = std::min(epsilon, map.epsilon_db());
    const auto values = map.values();
    for (std::size_t k = 0; k < best.size(); ++k) best[k] = std::max(best[k], values[k]);
  }
  return RadioMap(0, region, epsilon, std::move(best));
}

}  // namespace skypath
