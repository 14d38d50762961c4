#include "skypath/error.hpp"
#include "skypath/philox.hpp"
#include "skypath/radiomap.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace skypath {

double path_loss_los_db(double distance_3d_m, double carrier_ghz) {
  return 28.0 + 22.0 * std::log10(distance_3d_m) + 20.0 * std::log10(carrier_ghz);
}

double path_loss_nlos_db(double distance_3d_m, double uav_height_m, double carrier_ghz) {
  const double nlos = -17.5 + (46.0 - 7.0 * std::log10(uav_height_m)) * std::log10(distance_3d_m) +
                      20.0 * std::log10(40.0 * std::numbers::pi * carrier_ghz / 3.0);
  // Blocked links never beat the clear-path loss (only bites below ~18 m).
  return std::max(nlos, path_loss_los_db(distance_3d_m, carrier_ghz));
}

double shadowing_sigma_db(bool line_of_sight, double uav_height_m) {
  return line_of_sight ? 4.64 * std::exp(-0.0066 * uav_height_m) : 6.0;
}

double shadowing_deviate(std::uint64_t seed, int gbs_id, CellIndex cell) {
  const Philox4x32 gen(seed, static_cast<std::uint32_t>(gbs_id));
  return gen.normal({static_cast<std::uint32_t>(cell.i), static_cast<std::uint32_t>(cell.j), 0U, 0U});
}

double channel_gain(const Gbs& gbs, const Point3& u, const Environment& env, const ChannelModel& model) {
  const double d3 = distance(gbs.position, u);
  if (!(d3 > 0.0)) throw DomainError("channel_gain: UAV coincides with the GBS antenna");
  const CellIndex cell = cell_of({u.x, u.y}, env.region);

  const bool los = !los_blocked(gbs.position, u, env);
  const double height = u.z;
  const double loss = los ? path_loss_los_db(d3, model.carrier_ghz)
                          : path_loss_nlos_db(d3, height, model.carrier_ghz);
  double shadow = 0.0;
  if (model.shadowing) {
    shadow = shadowing_sigma_db(los, height) * shadowing_deviate(env.seed, gbs.id, cell);
  }
  return 0.5 * (-loss + shadow);
}

double LinkBudget::noise_power_dbm() const {
  if (!(bandwidth_hz > 0.0)) throw ConfigError("link budget: bandwidth must be positive");
  return noise_density_dbm_hz + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

double expected_sinr(double gain_db, const LinkBudget& budget) {
  const double noise = budget.noise_power_dbm();
  if (std::isinf(gain_db) && gain_db < 0.0) return -std::numeric_limits<double>::infinity();
  return budget.tx_power_dbm + 2.0 * gain_db - noise;
}

double expected_sinr(float gain_db, const LinkBudget& budget) {
  return expected_sinr(static_cast<double>(gain_db), budget);
}

}  // namespace skypath
