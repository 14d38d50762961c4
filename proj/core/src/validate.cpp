#include <cmath>
#include <numbers>
#include <string>

#include "skypath/error.hpp"
#include "skypath/planner.hpp"

namespace skypath {

namespace {

constexpr int kSamplesPerSegment = 100;
constexpr double kRelTol = 1e-9;

std::string point_text(Point2 p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

ValidationReport fail(std::string message, std::optional<CellIndex> cell = std::nullopt) {
  return {false, std::move(message), cell};
}

bool near(double value, double expected) {
  return std::abs(value - expected) <= kRelTol * std::max(1.0, std::abs(expected));
}

bool meets(float gain, double target) {
  return gain != kNegligible && static_cast<double>(gain) >= target;
}

// Under the closed-cell model a boundary point belongs to every cell that
// touches it, so it is covered when any of them meets the target.
bool point_feasible(Point2 p, const Coverage& coverage, double target) {
  const CellSpan span = cells_touching(p, coverage.region());
  for (int i = span.i_lo; i <= span.i_hi; ++i) {
    for (int j = span.j_lo; j <= span.j_hi; ++j) {
      if (meets(coverage.gain({i, j}), target)) return true;
    }
  }
  return false;
}

}  // namespace

ValidationReport validate_path(const Path& path, const Coverage& coverage) {
  const Region& region = coverage.region();
  if (!(path.region == region)) return fail("path region differs from the map region");
  if (path.waypoints.empty()) return fail("path has no waypoints");
  if (path.kappa < 1) return fail("path kappa must be positive");

  const auto& wps = path.waypoints;
  if (!(wps.front().position == path.start)) return fail("first waypoint is not the start point");
  if (!(wps.back().position == path.goal)) return fail("last waypoint is not the goal point");

  for (const Waypoint& w : wps) {
    if (!region.contains(w.position)) return fail("waypoint " + point_text(w.position) + " outside region");
    const CellIndex cell = cell_of(w.position, region);
    if (!meets(coverage.gain(cell), path.target_db)) {
      return fail("waypoint " + point_text(w.position) + " misses the gain target", cell);
    }
    if (w.gain_db != coverage.gain(cell) || w.gbs_id != coverage.serving_gbs(cell)) {
      return fail("waypoint " + point_text(w.position) + " carries a stale gain or serving GBS", cell);
    }
  }

  const double spacing = path.spacing();
  const int d = region.cells_per_side();
  // Stitch bound: half a quantized cell diagonally, plus the uncovered strip
  // when kappa does not divide D.
  const int remainder = path.level == Level::kQuantized ? d - (d / path.kappa) * path.kappa : 0;
  const double stitch_bound =
      std::numbers::sqrt2 * (0.5 * spacing + remainder * region.granularity()) * (1.0 + kRelTol);

  double total = 0.0;
  const std::size_t segments = wps.size() - 1;
  for (std::size_t k = 0; k < segments; ++k) {
    const Point2 a = wps[k].position;
    const Point2 b = wps[k + 1].position;
    const double len = distance(a, b);
    total += len;
    const bool lattice_step = near(len, spacing) || near(len, std::numbers::sqrt2 * spacing);
    const bool stitch = path.level == Level::kQuantized && (k == 0 || k + 1 == segments) &&
                        len > 0.0 && len <= stitch_bound;
    if (!lattice_step && !stitch) {
      return fail("segment " + std::to_string(k) + " from " + point_text(a) + " has illegal length " +
                  std::to_string(len));
    }
    for (int s = 0; s < kSamplesPerSegment; ++s) {
      const double t = static_cast<double>(s) / (kSamplesPerSegment - 1);
      const Point2 p{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
      if (!point_feasible(p, coverage, path.target_db)) {
        const CellIndex cell = cell_of(p, region);
        return fail("segment " + std::to_string(k) + " passes infeasible cell (" + std::to_string(cell.i) +
                        "," + std::to_string(cell.j) + ") at " + point_text(p),
                    cell);
      }
    }
  }
  if (!near(path.total_length_m, total)) {
    return fail("total length " + std::to_string(path.total_length_m) + " differs from segment sum " +
                std::to_string(total));
  }
  return {};
}

ValidationReport validate_path(const Path& path, const RadioMapSet& maps) {
  return validate_path(path, Coverage(maps));
}

}  // namespace skypath
