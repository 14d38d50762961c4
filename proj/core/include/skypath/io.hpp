#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "skypath/environment.hpp"
#include "skypath/feasibility.hpp"
#include "skypath/planner.hpp"
#include "skypath/radiomap.hpp"

namespace skypath::io {

inline constexpr int kEnvironmentSchemaVersion = 1;
inline constexpr std::uint16_t kRadioMapVersion = 1;
inline constexpr std::uint16_t kMaskVersion = 1;

// Environment JSON:
// {schema_version, seed, region{L, delta_d, H}, gbss[{id,x,y,h}],
//  obstacles[{cx,cy,len,wid,h}]}
std::string environment_to_json(const Environment& env);
Environment environment_from_json(const std::string& text);
void write_environment(const std::filesystem::path& file, const Environment& env);
Environment read_environment(const std::filesystem::path& file);

// RMAP binary, all little-endian:
//   "RMAP" | u16 version | u16 gbs_id | u32 D | f64 delta_d | f64 altitude
//   | f64 epsilon | D*D f32 gains (i outer, j inner; -inf = NEGLIGIBLE)
// The edge length is recovered as D * delta_d.
std::vector<std::uint8_t> encode_radio_map(const RadioMap& map);
RadioMap decode_radio_map(const std::vector<std::uint8_t>& bytes);
void write_radio_map(const std::filesystem::path& file, const RadioMap& map);
RadioMap read_radio_map(const std::filesystem::path& file);

/// One row per i, comma separated; NEGLIGIBLE prints as -inf.
std::string radio_map_to_csv(const RadioMap& map);

/// Reads gbs_<m>.rmap files from a directory into a validated set.
RadioMapSet read_radio_map_dir(const std::filesystem::path& dir);
std::filesystem::path radio_map_filename(int gbs_id);

// FMSK sidecar, little-endian:
//   "FMSK" | u16 version | u16 kappa | u32 side | f64 delta_d | f64 altitude
//   | f64 target_db | u32 fine D | u64 run count | u32 runs...
// Runs alternate starting with a run of zeros (possibly empty), row-major.
struct MaskFile {
  Region region;
  int kappa = 1;
  double target_db = 0.0;
  Bitmap mask;
};
std::vector<std::uint8_t> encode_mask(const MaskFile& mask);
MaskFile decode_mask(const std::vector<std::uint8_t>& bytes);
MaskFile to_mask_file(const FeasibleMap& f);
MaskFile to_mask_file(const QuantizedFeasibleMap& f);

/// Plain PBM (P1) with row i on line i, column j left to right; 1 = feasible.
std::string mask_to_pbm(const Bitmap& mask);
Bitmap mask_from_pbm(const std::string& text);

// Path JSON: {level, kappa, target_db, total_length_m,
//             waypoints[{x, y, gain_db, gbs_id}]}
std::string path_to_json(const Path& path);
std::string path_to_csv(const Path& path);
/// Reads waypoints back from path JSON; lengths and metadata are restored,
/// snapping distances default to 0 when absent.
Path path_from_json(const std::string& text, const Region& region);

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& file);
void write_bytes(const std::filesystem::path& file, const std::vector<std::uint8_t>& bytes);
std::string read_text(const std::filesystem::path& file);
void write_text(const std::filesystem::path& file, const std::string& text);

/// Shortest round-trip decimal for a double, locale independent.
std::string format_double(double value);

}  // namespace skypath::io
