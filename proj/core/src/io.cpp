#include "skypath/io.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "skypath/error.hpp"

namespace skypath::io {

using nlohmann::json;

namespace {

class Writer {
 public:
  void bytes(const char* s, std::size_t n) { out_.insert(out_.end(), s, s + n); }
  template <typename T>
  void le(T value) {
    using U = std::conditional_t<sizeof(T) == 8, std::uint64_t,
                                 std::conditional_t<sizeof(T) == 4, std::uint32_t, std::uint16_t>>;
    const U bits = std::bit_cast<U>(value);
    for (std::size_t k = 0; k < sizeof(T); ++k) out_.push_back(static_cast<std::uint8_t>(bits >> (8U * k)));
  }
  std::vector<std::uint8_t> take() { return std::move(out_); }

 private:
  std::vector<std::uint8_t> out_;
};

class Reader {
 public:
  Reader(const std::vector<std::uint8_t>& data, const char* what) : data_(data), what_(what) {}
  void expect_magic(const char* magic) {
    need(4);
    if (std::memcmp(data_.data() + pos_, magic, 4) != 0) {
      throw FormatError(std::string(what_) + ": bad magic, expected " + magic);
    }
    pos_ += 4;
  }
  template <typename T>
  T le() {
    using U = std::conditional_t<sizeof(T) == 8, std::uint64_t,
                                 std::conditional_t<sizeof(T) == 4, std::uint32_t, std::uint16_t>>;
    need(sizeof(T));
    U bits = 0;
    for (std::size_t k = 0; k < sizeof(T); ++k) bits |= static_cast<U>(static_cast<U>(data_[pos_ + k]) << (8U * k));
    pos_ += sizeof(T);
    return std::bit_cast<T>(bits);
  }
  void finish() const {
    if (pos_ != data_.size()) throw FormatError(std::string(what_) + ": trailing bytes");
  }

 private:
  void need(std::size_t n) const {
    if (pos_ + n > data_.size()) throw FormatError(std::string(what_) + ": truncated");
  }
  const std::vector<std::uint8_t>& data_;
  const char* what_;
  std::size_t pos_ = 0;
};

Region region_from(std::uint32_t cells, double delta, double altitude, const char* what) {
  try {
    return Region(cells * delta, delta, altitude);
  } catch (const ConfigError& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

std::string format_double(double value) {
  if (std::isinf(value)) return value < 0 ? "-inf" : "inf";
  if (std::isnan(value)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return {buf, res.ptr};
}

std::string environment_to_json(const Environment& env) {
  json doc;
  doc["schema_version"] = kEnvironmentSchemaVersion;
  doc["seed"] = env.seed;
  doc["region"] = {{"L", env.region.edge_length()},
                   {"delta_d", env.region.granularity()},
                   {"H", env.region.altitude()}};
  doc["gbss"] = json::array();
  for (const Gbs& g : env.gbss) {
    doc["gbss"].push_back({{"id", g.id}, {"x", g.position.x}, {"y", g.position.y}, {"h", g.position.z}});
  }
  doc["obstacles"] = json::array();
  for (const Obstacle& o : env.obstacles) {
    doc["obstacles"].push_back(
        {{"cx", o.center_x}, {"cy", o.center_y}, {"len", o.length}, {"wid", o.width}, {"h", o.height}});
  }
  return doc.dump(2) + "\n";
}

Environment environment_from_json(const std::string& text) {
  Environment env;
  try {
    const json doc = json::parse(text);
    const int version = doc.at("schema_version").get<int>();
    if (version != kEnvironmentSchemaVersion) {
      throw FormatError("environment: unsupported schema_version " + std::to_string(version));
    }
    env.seed = doc.at("seed").get<std::uint64_t>();
    const json& r = doc.at("region");
    env.region = Region(r.at("L").get<double>(), r.at("delta_d").get<double>(), r.at("H").get<double>());
    for (const json& g : doc.at("gbss")) {
      env.gbss.push_back({g.at("id").get<int>(),
                          {g.at("x").get<double>(), g.at("y").get<double>(), g.at("h").get<double>()}});
    }
    for (const json& o : doc.at("obstacles")) {
      env.obstacles.push_back({o.at("cx").get<double>(), o.at("cy").get<double>(), o.at("len").get<double>(),
                               o.at("wid").get<double>(), o.at("h").get<double>()});
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("environment: ") + e.what());
  }
  validate_environment(env);
  return env;
}

void write_environment(const std::filesystem::path& file, const Environment& env) {
  write_text(file, environment_to_json(env));
}

Environment read_environment(const std::filesystem::path& file) {
  return environment_from_json(read_text(file));
}

std::vector<std::uint8_t> encode_radio_map(const RadioMap& map) {
  Writer w;
  w.bytes("RMAP", 4);
  w.le<std::uint16_t>(kRadioMapVersion);
  w.le<std::uint16_t>(static_cast<std::uint16_t>(map.gbs_id()));
  w.le<std::uint32_t>(static_cast<std::uint32_t>(map.size()));
  w.le<double>(map.region().granularity());
  w.le<double>(map.region().altitude());
  w.le<double>(map.epsilon_db());
  for (float g : map.values()) w.le<float>(g);
  return w.take();
}

RadioMap decode_radio_map(const std::vector<std::uint8_t>& bytes) {
  Reader r(bytes, "RMAP");
  r.expect_magic("RMAP");
  const auto version = r.le<std::uint16_t>();
  if (version != kRadioMapVersion) throw FormatError("RMAP: unsupported version " + std::to_string(version));
  const auto gbs_id = r.le<std::uint16_t>();
  const auto cells = r.le<std::uint32_t>();
  const auto delta = r.le<double>();
  const auto altitude = r.le<double>();
  const auto epsilon = r.le<double>();
  const Region region = region_from(cells, delta, altitude, "RMAP");
  std::vector<float> gains(static_cast<std::size_t>(cells) * cells);
  for (float& g : gains) g = r.le<float>();
  r.finish();
  try {
    return RadioMap(gbs_id, region, epsilon, std::move(gains));
  } catch (const ConfigError& e) {
    throw FormatError(std::string("RMAP: ") + e.what());
  }
}

void write_radio_map(const std::filesystem::path& file, const RadioMap& map) {
  write_bytes(file, encode_radio_map(map));
}

RadioMap read_radio_map(const std::filesystem::path& file) { return decode_radio_map(read_bytes(file)); }

std::string radio_map_to_csv(const RadioMap& map) {
  std::string out;
  for (int i = 1; i <= map.size(); ++i) {
    for (int j = 1; j <= map.size(); ++j) {
      if (j > 1) out += ',';
      out += format_double(static_cast<double>(map.at(i, j)));
    }
    out += '\n';
  }
  return out;
}

std::filesystem::path radio_map_filename(int gbs_id) {
  return "gbs_" + std::to_string(gbs_id) + ".rmap";
}

RadioMapSet read_radio_map_dir(const std::filesystem::path& dir) {
  std::vector<RadioMap> maps;
  for (int id = 1;; ++id) {
    const auto file = dir / radio_map_filename(id);
    if (!std::filesystem::exists(file)) break;
    maps.push_back(read_radio_map(file));
  }
  if (maps.empty()) throw FormatError("no gbs_<m>.rmap files in " + dir.string());
  return RadioMapSet(std::move(maps));
}

std::vector<std::uint8_t> encode_mask(const MaskFile& mask) {
  Writer w;
  w.bytes("FMSK", 4);
  w.le<std::uint16_t>(kMaskVersion);
  w.le<std::uint16_t>(static_cast<std::uint16_t>(mask.kappa));
  w.le<std::uint32_t>(static_cast<std::uint32_t>(mask.mask.rows()));
  w.le<double>(mask.region.granularity());
  w.le<double>(mask.region.altitude());
  w.le<double>(mask.target_db);
  w.le<std::uint32_t>(static_cast<std::uint32_t>(mask.region.cells_per_side()));

  std::vector<std::uint32_t> runs;
  bool current = false;
  std::uint32_t run = 0;
  for (int r = 0; r < mask.mask.rows(); ++r) {
    for (int c = 0; c < mask.mask.cols(); ++c) {
      if (mask.mask.get(r, c) != current) {
        runs.push_back(run);
        current = !current;
        run = 0;
      }
      ++run;
    }
  }
  runs.push_back(run);
  w.le<std::uint64_t>(runs.size());
  for (std::uint32_t v : runs) w.le<std::uint32_t>(v);
  return w.take();
}

MaskFile decode_mask(const std::vector<std::uint8_t>& bytes) {
  Reader r(bytes, "FMSK");
  r.expect_magic("FMSK");
  const auto version = r.le<std::uint16_t>();
  if (version != kMaskVersion) throw FormatError("FMSK: unsupported version " + std::to_string(version));
  MaskFile out;
  out.kappa = r.le<std::uint16_t>();
  const auto side = r.le<std::uint32_t>();
  const auto delta = r.le<double>();
  const auto altitude = r.le<double>();
  out.target_db = r.le<double>();
  const auto fine = r.le<std::uint32_t>();
  out.region = region_from(fine, delta, altitude, "FMSK");
  if (out.kappa < 1 || side != fine / static_cast<std::uint32_t>(out.kappa)) {
    throw FormatError("FMSK: side does not match D / kappa");
  }
  out.mask = Bitmap(static_cast<int>(side), static_cast<int>(side));
  const auto count = r.le<std::uint64_t>();
  const std::uint64_t total = static_cast<std::uint64_t>(side) * side;
  std::uint64_t pos = 0;
  bool value = false;
  for (std::uint64_t k = 0; k < count; ++k) {
    const auto run = r.le<std::uint32_t>();
    if (pos + run > total) throw FormatError("FMSK: runs overflow the mask");
    if (value) {
      for (std::uint64_t p = pos; p < pos + run; ++p) {
        out.mask.set(static_cast<int>(p / side), static_cast<int>(p % side), true);
      }
    }
    pos += run;
    value = !value;
  }
  if (pos != total) throw FormatError("FMSK: runs do not cover the mask");
  r.finish();
  return out;
}

MaskFile to_mask_file(const FeasibleMap& f) { return {f.region, 1, f.target_db, f.mask}; }

MaskFile to_mask_file(const QuantizedFeasibleMap& f) { return {f.region, f.kappa, f.target_db, f.mask}; }

std::string mask_to_pbm(const Bitmap& mask) {
  std::string out = "P1\n" + std::to_string(mask.cols()) + " " + std::to_string(mask.rows()) + "\n";
  for (int r = 0; r < mask.rows(); ++r) {
    for (int c = 0; c < mask.cols(); ++c) {
      if (c > 0) out += ' ';
      out += mask.get(r, c) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

Bitmap mask_from_pbm(const std::string& text) {
  std::istringstream in(text);
  std::string token;
  auto next = [&]() -> std::string {
    while (in >> token) {
      if (token[0] == '#') {
        std::getline(in, token);
        continue;
      }
      return token;
    }
    throw FormatError("PBM: truncated");
  };
  if (next() != "P1") throw FormatError("PBM: only plain P1 is supported");
  int cols = 0;
  int rows = 0;
  try {
    cols = std::stoi(next());
    rows = std::stoi(next());
  } catch (const std::logic_error&) {
    throw FormatError("PBM: bad dimensions");
  }
  Bitmap mask(rows, cols);
  int r = 0;
  int c = 0;
  char ch = 0;
  while (r < rows && in.get(ch)) {
    if (ch == '#') {
      std::getline(in, token);
      continue;
    }
    if (ch != '0' && ch != '1') continue;
    mask.set(r, c, ch == '1');
    if (++c == cols) {
      c = 0;
      ++r;
    }
  }
  if (r != rows) throw FormatError("PBM: not enough pixels");
  return mask;
}

std::string path_to_json(const Path& path) {
  json doc;
  doc["level"] = path.level == Level::kFine ? "fine" : "quantized";
  doc["kappa"] = path.kappa;
  doc["target_db"] = path.target_db;
  doc["total_length_m"] = path.total_length_m;
  doc["start_snap_m"] = path.start_snap_m;
  doc["goal_snap_m"] = path.goal_snap_m;
  doc["waypoints"] = json::array();
  for (const Waypoint& w : path.waypoints) {
    json gain = is_negligible(w.gain_db) ? json(nullptr) : json(static_cast<double>(w.gain_db));
    doc["waypoints"].push_back({{"x", w.position.x}, {"y", w.position.y}, {"gain_db", gain}, {"gbs_id", w.gbs_id}});
  }
  return doc.dump(2) + "\n";
}

Path path_from_json(const std::string& text, const Region& region) {
  Path path;
  path.region = region;
  try {
    const json doc = json::parse(text);
    const auto level = doc.at("level").get<std::string>();
    if (level != "fine" && level != "quantized") throw FormatError("path: unknown level " + level);
    path.level = level == "fine" ? Level::kFine : Level::kQuantized;
    path.kappa = doc.at("kappa").get<int>();
    path.target_db = doc.at("target_db").get<double>();
    path.total_length_m = doc.at("total_length_m").get<double>();
    path.start_snap_m = doc.value("start_snap_m", 0.0);
    path.goal_snap_m = doc.value("goal_snap_m", 0.0);
    for (const json& w : doc.at("waypoints")) {
      const json& gain = w.at("gain_db");
      path.waypoints.push_back({{w.at("x").get<double>(), w.at("y").get<double>()},
                                gain.is_null() ? kNegligible : gain.get<float>(), w.at("gbs_id").get<int>()});
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("path: ") + e.what());
  }
  if (path.waypoints.empty()) throw FormatError("path: no waypoints");
  path.start = path.waypoints.front().position;
  path.goal = path.waypoints.back().position;
  return path;
}

std::string path_to_csv(const Path& path) {
  std::string out = "x,y,gain_db,gbs_id\n";
  for (const Waypoint& w : path.waypoints) {
    out += format_double(w.position.x) + "," + format_double(w.position.y) + "," +
           format_double(static_cast<double>(w.gain_db)) + "," + std::to_string(w.gbs_id) + "\n";
  }
  return out;
}

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw FormatError("cannot open " + file.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes(const std::filesystem::path& file, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot write " + file.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw FormatError("write failed for " + file.string());
}

std::string read_text(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw FormatError("cannot open " + file.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot write " + file.string());
  out << text;
  if (!out) throw FormatError("write failed for " + file.string());
}

}  // namespace skypath::io
