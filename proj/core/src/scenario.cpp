#include "skypath/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <charconv>

#include "skypath/error.hpp"
#include "skypath/io.hpp"
#include "skypath/planner.hpp"

namespace skypath {

std::vector<std::string> preset_names() { return {"paper-uma"}; }

ScenarioPreset preset(const std::string& name) {
  if (name != "paper-uma") throw ConfigError("unknown preset '" + name + "'");
  ScenarioPreset p;
  p.name = name;
  p.scene = SceneConfig{};  // 630 m, 5 m grid, 90 m altitude, 6 GBSs at 25 m, 30 boxes
  p.epsilon_db = -57.0;
  p.budget = LinkBudget{23.0, -150.0, 7.0, 10e6};
  p.targets_db = target_range(-50.0, -42.5, 0.5);
  p.kappas = {1, 3, 5};
  p.start = {2.5, 2.5};
  p.goal = {627.5, 627.5};
  // Realization whose fine-grid infeasibility onset (-42.4 dB) sits next to
  // the -42.5 dB target used for the illustrated paths.
  p.seed = 11;
  return p;
}

std::vector<double> target_range(double first, double last, double step) {
  if (!(step > 0.0) || !(last >= first) || !std::isfinite(first) || !std::isfinite(last)) {
    throw ConfigError("target range: need first <= last and a positive step");
  }
  const auto count = static_cast<long>(std::floor((last - first) / step + 1e-9));
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count) + 1);
  for (long k = 0; k <= count; ++k) out.push_back(first + static_cast<double>(k) * step);
  return out;
}

std::vector<SweepRow> run_sweep(const Coverage& coverage, std::vector<double> targets_db,
                                std::vector<int> kappas, Point2 start, Point2 goal,
                                const SweepOptions& options) {
  if (targets_db.empty()) throw ConfigError("sweep: empty target list");
  if (kappas.empty()) throw ConfigError("sweep: empty kappa list");
  const int d = coverage.region().cells_per_side();
  for (int kappa : kappas) check_kappa(kappa, d, options.policy);
  std::sort(targets_db.begin(), targets_db.end());
  std::sort(kappas.begin(), kappas.end());
  const int repeats = std::max(1, options.timing_repeats);

  std::vector<SweepRow> rows;
  rows.reserve(targets_db.size() * kappas.size());
  for (double target : targets_db) {
    for (int kappa : kappas) {
      std::vector<double> times;
      PlanResult result;
      for (int rep = 0; rep < repeats; ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        result = kappa == 1 ? plan_optimal(coverage, target, start, goal)
                            : plan_quantized(coverage, target, kappa, start, goal, options.policy);
        const auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
      }
      std::nth_element(times.begin(), times.begin() + static_cast<long>(times.size() / 2), times.end());
      SweepRow row;
      row.target_db = target;
      row.kappa = kappa;
      row.feasible = result.feasible();
      if (result.path) row.length_m = result.path->total_length_m;
      row.runtime_ms = times[times.size() / 2];
      row.vertices = result.graph_vertices;
      row.edges = result.graph_edges;
      rows.push_back(row);
    }
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows, bool include_runtime) {
  std::string out = "target_db,kappa,feasible,length_m,runtime_ms,vertices,edges\n";
  for (const SweepRow& r : rows) {
    out += io::format_double(r.target_db) + "," + std::to_string(r.kappa) + "," +
           (r.feasible ? "true" : "false") + ",";
    if (r.length_m) out += io::format_double(*r.length_m);
    out += ",";
    if (include_runtime) {
      char buf[32];
      const auto res = std::to_chars(buf, buf + sizeof(buf), r.runtime_ms, std::chars_format::fixed, 3);
      out.append(buf, res.ptr);
    }
    out += "," + std::to_string(r.vertices) + "," + std::to_string(r.edges) + "\n";
  }
  return out;
}

}  // namespace skypath
