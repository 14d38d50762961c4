#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "skypath/environment.hpp"
#include "skypath/geometry.hpp"

namespace skypath {

// Gains are stored in amplitude dB: 10*log10(h) where h is the amplitude
// gain. The corresponding power gain in dB is twice the stored value.
// Entries below the truncation threshold are NEGLIGIBLE (-inf).
inline constexpr float kNegligible = -std::numeric_limits<float>::infinity();

inline bool is_negligible(float gain_db) { return gain_db == kNegligible; }

/// Propagation settings. Defaults follow the 3GPP UMa aerial-vehicle
/// expressions at 2 GHz.
struct ChannelModel {
  double carrier_ghz = 2.0;
  bool shadowing = true;
};

/// Power path loss in dB for a line-of-sight link, valid for UAV heights
/// above rooftop level.
double path_loss_los_db(double distance_3d_m, double carrier_ghz);
double path_loss_nlos_db(double distance_3d_m, double uav_height_m, double carrier_ghz);
/// Log-normal shadowing standard deviation (power dB).
double shadowing_sigma_db(bool line_of_sight, double uav_height_m);

/// Standard normal shadowing draw for (seed, gbs, cell); pure function.
double shadowing_deviate(std::uint64_t seed, int gbs_id, CellIndex cell);

/// Large-scale gain in amplitude dB between `gbs` and `u`:
///   (-PL + S) / 2
/// PL is the LoS or NLoS loss picked by los_blocked, S the shadowing draw
/// of the grid cell containing (u.x, u.y). Throws DomainError when the
/// points coincide or `u` is outside the region.
double channel_gain(const Gbs& gbs, const Point3& u, const Environment& env,
                    const ChannelModel& model = {});

/// D x D matrix of gains for one GBS (gbs_id 0 marks a superposed map).
/// Row-major with i outer, j inner; both 1-based in the accessors.
class RadioMap {
 public:
  RadioMap() = default;
  /// Throws ConfigError on a size mismatch or a finite entry below epsilon.
  RadioMap(int gbs_id, Region region, double epsilon_db, std::vector<float> gains);

  int gbs_id() const { return gbs_id_; }
  const Region& region() const { return region_; }
  double epsilon_db() const { return epsilon_db_; }
  int size() const { return region_.cells_per_side(); }

  float at(int i, int j) const {
    return gains_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(size()) +
                  static_cast<std::size_t>(j - 1)];
  }
  float at(CellIndex c) const { return at(c.i, c.j); }
  std::span<const float> values() const { return gains_; }

  friend bool operator==(const RadioMap&, const RadioMap&) = default;

 private:
  int gbs_id_ = 0;
  Region region_;
  double epsilon_db_ = 0.0;
  std::vector<float> gains_;
};

/// One map per GBS over a shared region; ids 1..M each exactly once.
class RadioMapSet {
 public:
  RadioMapSet() = default;
  /// Sorts by id and validates. Throws ConfigError when empty, when regions
  /// differ or when ids are not exactly 1..M.
  explicit RadioMapSet(std::vector<RadioMap> maps);

  const std::vector<RadioMap>& maps() const { return maps_; }
  const Region& region() const { return maps_.front().region(); }
  std::size_t size() const { return maps_.size(); }

 private:
  std::vector<RadioMap> maps_;
};

RadioMap build_radio_map(const Gbs& gbs, const Environment& env, double epsilon_db,
                         const ChannelModel& model = {});

/// All maps of an environment, parallel over GBSs and rows.
RadioMapSet build_radio_maps(const Environment& env, double epsilon_db,
                             const ChannelModel& model = {});

/// Per-cell maximum over the maps. Throws ConfigError on an empty input or
/// mismatched regions. The result has gbs_id 0 and the smallest epsilon.
RadioMap superpose(std::span<const RadioMap> maps);
inline RadioMap superpose(const RadioMapSet& set) { return superpose(set.maps()); }

struct LinkBudget {
  double tx_power_dbm = 23.0;
  double noise_density_dbm_hz = -150.0;
  double noise_figure_db = 7.0;
  double bandwidth_hz = 10e6;

  double noise_power_dbm() const;
};

/// Expected SINR in dB: P + 2*gain - sigma^2. NEGLIGIBLE maps to -inf.
/// Throws ConfigError for a non-positive bandwidth.
double expected_sinr(float gain_db, const LinkBudget& budget);
double expected_sinr(double gain_db, const LinkBudget& budget);

}  // namespace skypath
