#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skypath/environment.hpp"
#include "skypath/feasibility.hpp"
#include "skypath/radiomap.hpp"

namespace skypath {

struct ScenarioPreset {
  std::string name;
  SceneConfig scene;
  double epsilon_db = -57.0;
  LinkBudget budget;
  std::vector<double> targets_db;
  std::vector<int> kappas;
  Point2 start;
  Point2 goal;
  std::uint64_t seed = 0;  // default scene realization
};

/// Known presets: "paper-uma". Throws ConfigError for other names.
ScenarioPreset preset(const std::string& name);
std::vector<std::string> preset_names();

struct SweepRow {
  double target_db = 0.0;
  int kappa = 1;
  bool feasible = false;
  std::optional<double> length_m;
  double runtime_ms = 0.0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
};

struct SweepOptions {
  int timing_repeats = 3;  // runtime is the median over repeats
  RemainderPolicy policy = RemainderPolicy::kCrop;
};

/// Plans every (target, kappa) pair. Rows come back sorted by
/// (target_db, kappa). Throws ConfigError for empty lists or a bad kappa.
std::vector<SweepRow> run_sweep(const Coverage& coverage, std::vector<double> targets_db,
                                std::vector<int> kappas, Point2 start, Point2 goal,
                                const SweepOptions& options = {});

/// Header: target_db,kappa,feasible,length_m,runtime_ms,vertices,edges
/// Pass include_runtime=false to blank the runtime column for byte-stable
/// comparisons.
std::string sweep_to_csv(const std::vector<SweepRow>& rows, bool include_runtime = true);

/// Evenly spaced targets from `first` to `last` inclusive.
std::vector<double> target_range(double first, double last, double step);

}  // namespace skypath
