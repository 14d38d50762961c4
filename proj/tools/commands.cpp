#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <optional>
#include <sstream>

#include "skypath/environment.hpp"
#include "skypath/error.hpp"
#include "skypath/feasibility.hpp"
#include "skypath/io.hpp"
#include "skypath/planner.hpp"
#include "skypath/radiomap.hpp"
#include "skypath/render.hpp"
#include "skypath/scenario.hpp"

namespace skypath::cli {

namespace fs = std::filesystem;

namespace {

Point2 parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ConfigError("expected x,y but got '" + text + "'");
  try {
    std::size_t used_x = 0;
    std::size_t used_y = 0;
    const double x = std::stod(text.substr(0, comma), &used_x);
    const double y = std::stod(text.substr(comma + 1), &used_y);
    if (used_x != comma || used_y != text.size() - comma - 1) throw std::invalid_argument("junk");
    return {x, y};
  } catch (const std::logic_error&) {
    throw ConfigError("expected x,y but got '" + text + "'");
  }
}

template <typename T>
std::vector<T> parse_list(const std::string& text) {
  std::vector<T> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      if constexpr (std::is_same_v<T, int>) {
        out.push_back(std::stoi(item, &used));
      } else {
        out.push_back(std::stod(item, &used));
      }
      if (used != item.size()) throw std::invalid_argument("junk");
    } catch (const std::logic_error&) {
      throw ConfigError("bad list entry '" + item + "'");
    }
  }
  return out;
}

SceneConfig scene_from_json(const std::string& text) {
  SceneConfig c;
  try {
    const auto doc = nlohmann::json::parse(text);
    c.edge_length_m = doc.value("L", c.edge_length_m);
    c.granularity_m = doc.value("delta_d", c.granularity_m);
    c.altitude_m = doc.value("H", c.altitude_m);
    c.gbs_count = doc.value("gbs_count", c.gbs_count);
    c.gbs_height_m = doc.value("gbs_height", c.gbs_height_m);
    c.obstacle_count = doc.value("obstacle_count", c.obstacle_count);
    c.side_min_m = doc.value("side_min", c.side_min_m);
    c.side_max_m = doc.value("side_max", c.side_max_m);
    c.height_mean_m = doc.value("height_mean", c.height_mean_m);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("scene config: ") + e.what());
  }
  return c;
}

RemainderPolicy parse_policy(const std::string& name) {
  if (name == "crop") return RemainderPolicy::kCrop;
  if (name == "reject") return RemainderPolicy::kReject;
  throw ConfigError("--remainder must be crop or reject");
}

int cmd_env_gen(const std::string& preset_name, const std::string& config_path, std::optional<std::uint64_t> seed,
                const std::string& out_path, std::ostream& out) {
  SceneConfig scene =
      config_path.empty() ? preset(preset_name).scene : scene_from_json(io::read_text(config_path));
  const Environment env = generate_environment(scene, seed.value_or(preset(preset_name).seed));
  io::write_environment(out_path, env);

  double mean_h = 0.0;
  double max_h = 0.0;
  for (const Obstacle& o : env.obstacles) {
    mean_h += o.height;
    max_h = std::max(max_h, o.height);
  }
  if (!env.obstacles.empty()) mean_h /= static_cast<double>(env.obstacles.size());
  out << "D=" << env.region.cells_per_side() << " M=" << env.gbss.size() << " obstacles=" << env.obstacles.size()
      << " mean_height_m=" << io::format_double(mean_h) << " max_height_m=" << io::format_double(max_h) << "\n";
  out << "wrote " << out_path << "\n";
  return kExitOk;
}

int cmd_map_build(const std::string& env_path, const std::string& out_dir, double epsilon_db, bool render,
                  bool csv, bool shadowing, double carrier_ghz, std::ostream& out) {
  const Environment env = io::read_environment(env_path);
  ChannelModel model;
  model.shadowing = shadowing;
  model.carrier_ghz = carrier_ghz;
  if (!(carrier_ghz > 0.0)) throw ConfigError("--carrier-ghz must be positive");
  const RadioMapSet maps = build_radio_maps(env, epsilon_db, model);
  const RadioMap best = superpose(maps);

  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  for (const RadioMap& map : maps.maps()) {
    io::write_radio_map(dir / io::radio_map_filename(map.gbs_id()), map);
    if (render) io::write_text(dir / ("gbs_" + std::to_string(map.gbs_id()) + ".pgm"), render::heatmap_pgm(map));
    if (csv) io::write_text(dir / ("gbs_" + std::to_string(map.gbs_id()) + ".csv"), io::radio_map_to_csv(map));
  }
  io::write_radio_map(dir / "superposed.rmap", best);
  if (render) io::write_text(dir / "superposed.pgm", render::heatmap_pgm(best));
  if (csv) io::write_text(dir / "superposed.csv", io::radio_map_to_csv(best));

  float lo = 0.0F;
  float hi = 0.0F;
  bool any = false;
  for (float g : best.values()) {
    if (is_negligible(g)) continue;
    lo = any ? std::min(lo, g) : g;
    hi = any ? std::max(hi, g) : g;
    any = true;
  }
  out << "maps=" << maps.size() << " D=" << best.size();
  if (any) {
    out << " superposed_min_db=" << io::format_double(lo) << " superposed_max_db=" << io::format_double(hi);
  }
  out << "\nwrote " << out_dir << "\n";
  return kExitOk;
}

int cmd_plan(const std::string& maps_dir, double target_db, int kappa, const std::string& from,
             const std::string& to, std::optional<double> speed, const std::string& out_path,
             const std::string& csv_path, const std::string& svg_path, const std::string& mask_path,
             RemainderPolicy policy, std::ostream& out, std::ostream& err) {
  const RadioMapSet maps = io::read_radio_map_dir(maps_dir);
  const Coverage coverage(maps);
  const Point2 start = parse_point(from);
  const Point2 goal = parse_point(to);
  check_kappa(kappa, coverage.region().cells_per_side(), policy);
  if (speed && !(*speed > 0.0)) throw ConfigError("--speed must be positive");

  const PlanResult result = kappa == 1 ? plan_optimal(coverage, target_db, start, goal)
                                       : plan_quantized(coverage, target_db, kappa, start, goal, policy);
  if (!mask_path.empty()) {
    const FeasibleMap f = build_feasible_map(coverage, target_db);
    const io::MaskFile file = kappa == 1 ? io::to_mask_file(f)
                                         : io::to_mask_file(build_quantized_feasible_map(f, kappa, policy));
    io::write_bytes(mask_path, io::encode_mask(file));
  }
  out << "graph vertices=" << result.graph_vertices << " edges=" << result.graph_edges << "\n";
  if (!result.feasible()) {
    err << "infeasible: " << result.message << "\n";
    return result.status == PlanStatus::kEndpointInfeasible ? kExitEndpointInfeasible : kExitInfeasible;
  }
  const Path& path = *result.path;
  const PathMetrics metrics = path_metrics(path, speed);
  out << "feasible waypoints=" << path.waypoints.size() << " length_m=" << io::format_double(metrics.length_m);
  if (metrics.duration_s) out << " duration_s=" << io::format_double(*metrics.duration_s);
  out << " start_snap_m=" << io::format_double(metrics.start_snap_m)
      << " goal_snap_m=" << io::format_double(metrics.goal_snap_m) << "\n";

  if (!out_path.empty()) io::write_text(out_path, io::path_to_json(path));
  if (!csv_path.empty()) io::write_text(csv_path, io::path_to_csv(path));
  if (!svg_path.empty()) {
    const FeasibleMap f = build_feasible_map(coverage, target_db);
    io::write_text(svg_path, render::overlay_svg(&coverage.superposed(), &f.mask, coverage.region(), {&path}));
  }
  return kExitOk;
}

int cmd_sweep(const std::string& maps_dir, const std::string& targets, const std::string& range,
              const std::string& kappas_text, const std::string& from, const std::string& to,
              const std::string& out_csv, bool no_timing, RemainderPolicy policy, std::ostream& out) {
  std::vector<double> target_list;
  if (!range.empty()) {
    const auto parts = parse_list<double>([&] {
      std::string r = range;
      std::replace(r.begin(), r.end(), ':', ',');
      return r;
    }());
    if (parts.size() != 3) throw ConfigError("--range expects first:last:step");
    target_list = target_range(parts[0], parts[1], parts[2]);
  }
  if (!targets.empty()) {
    const auto listed = parse_list<double>(targets);
    target_list.insert(target_list.end(), listed.begin(), listed.end());
  }
  if (target_list.empty()) throw ConfigError("sweep: empty target list");
  const auto kappas = parse_list<int>(kappas_text);

  const RadioMapSet maps = io::read_radio_map_dir(maps_dir);
  const Coverage coverage(maps);
  SweepOptions options;
  options.policy = policy;
  if (no_timing) options.timing_repeats = 1;
  const auto rows = run_sweep(coverage, target_list, kappas, parse_point(from), parse_point(to), options);
  const std::string csv = sweep_to_csv(rows, !no_timing);
  if (out_csv.empty()) {
    out << csv;
  } else {
    io::write_text(out_csv, csv);
    out << "rows=" << rows.size() << "\nwrote " << out_csv << "\n";
  }
  return kExitOk;
}

int cmd_render(const std::string& map_path, const std::string& mask_path, const std::string& path_path,
               const std::string& maps_dir, std::optional<double> target_db, int kappa, RemainderPolicy policy,
               const std::string& out_path, std::ostream& out) {
  std::optional<RadioMap> map;
  std::optional<io::MaskFile> mask;
  if (!map_path.empty()) map = io::read_radio_map(map_path);
  if (!mask_path.empty()) mask = io::decode_mask(io::read_bytes(mask_path));
  if (!maps_dir.empty()) {
    if (!target_db) throw ConfigError("--maps-dir needs --target-db to derive a mask");
    const Coverage coverage(io::read_radio_map_dir(maps_dir));
    const FeasibleMap f = build_feasible_map(coverage, *target_db);
    mask = kappa == 1 ? io::to_mask_file(f) : io::to_mask_file(build_quantized_feasible_map(f, kappa, policy));
    if (!map) map = coverage.superposed();
  }

  if (!path_path.empty()) {
    const Region* region = map ? &map->region() : mask ? &mask->region : nullptr;
    if (region == nullptr) throw ConfigError("--path needs --map, --mask or --maps-dir for the region");
    const Path path = io::path_from_json(io::read_text(path_path), *region);
    io::write_text(out_path, render::overlay_svg(map ? &*map : nullptr, mask ? &mask->mask : nullptr, *region, {&path}));
    out << "wrote SVG overlay " << out_path << "\n";
    return kExitOk;
  }
  if (mask && (map_path.empty() || !mask_path.empty())) {
    io::write_text(out_path, io::mask_to_pbm(mask->mask));
    out << "wrote PBM " << out_path << "\n";
    return kExitOk;
  }
  if (map) {
    io::write_text(out_path, render::heatmap_pgm(*map));
    out << "wrote PGM " << out_path << "\n";
    return kExitOk;
  }
  throw ConfigError("render: give one of --map, --mask, --maps-dir or --path");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"skypath: radio-map based UAV path planning"};
  app.require_subcommand(1);

  // env-gen
  auto* env_gen = app.add_subcommand("env-gen", "Generate a random scene (GBSs and obstacles)");
  std::string preset_name = "paper-uma";
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string env_out;
  auto* preset_opt = env_gen->add_option("--preset", preset_name, "Scenario preset")->capture_default_str();
  env_gen->add_option("--config", config_path, "Scene config JSON")->excludes(preset_opt);
  env_gen->add_option("--seed", seed, "Random seed (default: the preset's)");
  env_gen->add_option("--out", env_out, "Environment JSON output")->required();

  // map-build
  auto* map_build = app.add_subcommand("map-build", "Build per-GBS radio maps and the superposed map");
  std::string env_path;
  std::string maps_out;
  double epsilon_db = -57.0;
  bool render_maps = false;
  bool csv_maps = false;
  bool no_shadowing = false;
  double carrier_ghz = 2.0;
  map_build->add_option("--env", env_path, "Environment JSON")->required();
  map_build->add_option("--out-dir", maps_out, "Output directory")->required();
  map_build->add_option("--epsilon-db", epsilon_db, "Truncation threshold (amplitude dB)")->capture_default_str();
  map_build->add_flag("--render", render_maps, "Also write PGM heatmaps");
  map_build->add_flag("--csv", csv_maps, "Also write CSV exports");
  map_build->add_flag("--no-shadowing", no_shadowing, "Disable log-normal shadowing");
  map_build->add_option("--carrier-ghz", carrier_ghz, "Carrier frequency")->capture_default_str();

  // plan
  auto* plan = app.add_subcommand("plan", "Plan a minimum-distance path under a gain target");
  std::string maps_dir;
  double target_db = 0.0;
  int kappa = 1;
  std::string from = "2.5,2.5";
  std::string to = "627.5,627.5";
  std::optional<double> speed;
  std::string plan_out;
  std::string plan_csv;
  std::string plan_svg;
  std::string plan_mask;
  std::string remainder = "crop";
  plan->add_option("--maps-dir", maps_dir, "Directory with gbs_<m>.rmap files")->required();
  plan->add_option("--target-db", target_db, "Gain target (amplitude dB)")->required();
  plan->add_option("--kappa", kappa, "Quantization ratio (odd; 1 = optimal)")->capture_default_str();
  plan->add_option("--from", from, "Start x,y in meters")->capture_default_str();
  plan->add_option("--to", to, "Goal x,y in meters")->capture_default_str();
  plan->add_option("--speed", speed, "Flight speed in m/s for a duration estimate");
  plan->add_option("--out", plan_out, "Path JSON output");
  plan->add_option("--csv", plan_csv, "Path CSV output");
  plan->add_option("--render", plan_svg, "SVG overlay output");
  plan->add_option("--mask-out", plan_mask, "FMSK sidecar of the mask used");
  plan->add_option("--remainder", remainder, "kappa not dividing D: crop | reject")->capture_default_str();

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Plan over a grid of targets and quantization ratios");
  std::string sweep_maps;
  std::string targets;
  std::string range;
  std::string kappas = "1,3,5";
  std::string sweep_from = "2.5,2.5";
  std::string sweep_to = "627.5,627.5";
  std::string sweep_csv;
  bool no_timing = false;
  std::string sweep_remainder = "crop";
  sweep->add_option("--maps-dir", sweep_maps, "Directory with gbs_<m>.rmap files")->required();
  sweep->add_option("--targets", targets, "Comma separated targets (dB)");
  sweep->add_option("--range", range, "first:last:step targets (dB)");
  sweep->add_option("--kappas", kappas, "Comma separated kappas")->capture_default_str();
  sweep->add_option("--from", sweep_from, "Start x,y")->capture_default_str();
  sweep->add_option("--to", sweep_to, "Goal x,y")->capture_default_str();
  sweep->add_option("--out-csv", sweep_csv, "CSV output (stdout when omitted)");
  sweep->add_flag("--no-timing", no_timing, "Leave runtime_ms empty for byte-stable output");
  sweep->add_option("--remainder", sweep_remainder, "kappa not dividing D: crop | reject")->capture_default_str();

  // render
  auto* rend = app.add_subcommand("render", "Render maps (PGM), masks (PBM) and path overlays (SVG)");
  std::string render_map;
  std::string render_mask;
  std::string render_path;
  std::string render_maps_dir;
  std::optional<double> render_target;
  int render_kappa = 1;
  std::string render_remainder = "crop";
  std::string render_out;
  rend->add_option("--map", render_map, "RMAP file");
  rend->add_option("--mask", render_mask, "FMSK file");
  rend->add_option("--path", render_path, "Path JSON to overlay");
  rend->add_option("--maps-dir", render_maps_dir, "Derive a mask from these maps");
  rend->add_option("--target-db", render_target, "Gain target for --maps-dir");
  rend->add_option("--kappa", render_kappa, "Quantization ratio for --maps-dir")->capture_default_str();
  rend->add_option("--remainder", render_remainder, "crop | reject")->capture_default_str();
  rend->add_option("--out", render_out, "Output image")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (env_gen->parsed()) return cmd_env_gen(preset_name, config_path, seed, env_out, out);
    if (map_build->parsed()) {
      return cmd_map_build(env_path, maps_out, epsilon_db, render_maps, csv_maps, !no_shadowing, carrier_ghz, out);
    }
    if (plan->parsed()) {
      return cmd_plan(maps_dir, target_db, kappa, from, to, speed, plan_out, plan_csv, plan_svg, plan_mask,
                      parse_policy(remainder), out, err);
    }
    if (sweep->parsed()) {
      return cmd_sweep(sweep_maps, targets, range, kappas, sweep_from, sweep_to, sweep_csv, no_timing,
                       parse_policy(sweep_remainder), out);
    }
    if (rend->parsed()) {
      return cmd_render(render_map, render_mask, render_path, render_maps_dir, render_target, render_kappa,
                        parse_policy(render_remainder), render_out, out);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const IndexError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace skypath::cli
