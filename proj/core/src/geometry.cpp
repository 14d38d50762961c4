#include "skypath/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "skypath/error.hpp"

namespace skypath {

Region::Region(double edge_length_m, double granularity_m, double altitude_m)
    : edge_length_m_(edge_length_m), granularity_m_(granularity_m), altitude_m_(altitude_m) {
  if (!(edge_length_m > 0.0) || !(granularity_m > 0.0) || !(altitude_m > 0.0) ||
      !std::isfinite(edge_length_m) || !std::isfinite(granularity_m) || !std::isfinite(altitude_m)) {
    throw ConfigError("region: L, delta and H must be positive and finite");
  }
  const double ratio = edge_length_m / granularity_m;
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio) || rounded < 2.0 || rounded > 1e9) {
    throw ConfigError("region: L / delta must be an integer >= 2 (got " + std::to_string(ratio) + ")");
  }
  cells_ = static_cast<int>(rounded);
}

Point2 grid_point(int i, int j, const Region& region) {
  const int d = region.cells_per_side();
  if (i < 1 || j < 1 || i > d || j > d) {
    throw IndexError("grid index (" + std::to_string(i) + "," + std::to_string(j) +
                     ") outside 1.." + std::to_string(d));
  }
  const double delta = region.granularity();
  return {(i - 0.5) * delta, (j - 0.5) * delta};
}

namespace {

// Smallest and largest 1-based index whose closed cell [(k-1)delta, k delta]
// contains x.
std::pair<int, int> axis_span(double x, const Region& region) {
  const double delta = region.granularity();
  const int d = region.cells_per_side();
  int lo = std::clamp(static_cast<int>(std::ceil(x / delta)), 1, d);
  // Correct for rounding in the division: step to a neighbor when the cell
  // bound test disagrees.
  while (lo > 1 && std::abs(x - (lo - 1.5) * delta) <= 0.5 * delta) --lo;
  while (lo < d && std::abs(x - (lo - 0.5) * delta) > 0.5 * delta) ++lo;
  int hi = lo;
  while (hi < d && std::abs(x - (hi + 0.5) * delta) <= 0.5 * delta) ++hi;
  return {lo, hi};
}

void require_inside(const Point2& u, const Region& region) {
  if (!region.contains(u)) {
    throw DomainError("point (" + std::to_string(u.x) + "," + std::to_string(u.y) +
                      ") outside the region");
  }
}

}  // namespace

CellIndex cell_of(const Point2& u, const Region& region) {
  require_inside(u, region);
  return {axis_span(u.x, region).first, axis_span(u.y, region).first};
}

CellSpan cells_touching(const Point2& u, const Region& region) {
  require_inside(u, region);
  const auto [ilo, ihi] = axis_span(u.x, region);
  const auto [jlo, jhi] = axis_span(u.y, region);
  return {ilo, ihi, jlo, jhi};
}

}  // namespace skypath
