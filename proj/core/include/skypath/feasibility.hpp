#pragma once

#include <cstdint>
#include <vector>

#include "skypath/bitmap.hpp"
#include "skypath/geometry.hpp"
#include "skypath/radiomap.hpp"

namespace skypath {

/// Superposed gain plus the serving GBS (argmax, ties to the lowest id) for
/// every grid point. Serving id 0 means every map is NEGLIGIBLE there.
class Coverage {
 public:
  Coverage() = default;
  explicit Coverage(const RadioMapSet& maps);

  const Region& region() const { return superposed_.region(); }
  const RadioMap& superposed() const { return superposed_; }
  float gain(CellIndex c) const { return superposed_.at(c); }
  int serving_gbs(CellIndex c) const;

 private:
  RadioMap superposed_;
  std::vector<std::uint16_t> serving_;
};

/// Mask of grid points whose best gain meets the target.
struct FeasibleMap {
  Region region;
  double target_db = 0.0;
  Bitmap mask;  // D x D, bit (i-1, j-1)

  bool feasible(CellIndex c) const { return mask.get(c.i - 1, c.j - 1); }
};

FeasibleMap build_feasible_map(const RadioMapSet& maps, double target_db);
FeasibleMap build_feasible_map(const Coverage& coverage, double target_db);

/// How a quantization ratio that does not divide D is handled.
enum class RemainderPolicy {
  kReject,  // ConfigError
  kCrop,    // quantize the floor(D/kappa)^2 full blocks; the trailing strip
            // of D mod kappa rows/columns belongs to no quantized cell
};

/// Coarse mask: quantized cell (i, j) is set iff all kappa^2 fine grid
/// points of its block are feasible.
struct QuantizedFeasibleMap {
  Region region;
  double target_db = 0.0;
  int kappa = 1;
  int cells_per_side = 0;  // floor(D / kappa)
  Bitmap mask;

  double spacing() const { return kappa * region.granularity(); }
  bool feasible(CellIndex c) const { return mask.get(c.i - 1, c.j - 1); }
  /// Fine grid extent covered by quantized cells (D when kappa divides D).
  int covered_fine_cells() const { return cells_per_side * kappa; }
};

/// Throws ConfigError for even or non-positive kappa, and for a
/// non-dividing kappa under RemainderPolicy::kReject.
void check_kappa(int kappa, int fine_cells, RemainderPolicy policy = RemainderPolicy::kReject);

/// Fine indices of quantized cell (i, j): the kappa x kappa block starting
/// at ((i-1)kappa + 1, (j-1)kappa + 1). Throws IndexError when (i, j) is
/// outside the quantized grid.
std::vector<CellIndex> neighbor_set(int i, int j, int kappa, int fine_cells);

QuantizedFeasibleMap build_quantized_feasible_map(const FeasibleMap& feasible, int kappa,
                                                  RemainderPolicy policy = RemainderPolicy::kReject);

/// [(i - 1/2), (j - 1/2)] * kappa * delta. Throws IndexError outside the
/// quantized grid.
Point2 quantized_grid_point(int i, int j, int kappa, const Region& region,
                            RemainderPolicy policy = RemainderPolicy::kReject);

/// Fine grid point at the center of quantized cell (i, j) (kappa odd).
inline CellIndex quantized_center(CellIndex q, int kappa) {
  const int half = (kappa + 1) / 2;
  return {(q.i - 1) * kappa + half, (q.j - 1) * kappa + half};
}

}  // namespace skypath
