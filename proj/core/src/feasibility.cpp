#include "skypath/feasibility.hpp"

#include <string>

#include "skypath/error.hpp"
#include "skypath/parallel.hpp"

namespace skypath {

Coverage::Coverage(const RadioMapSet& maps) : superposed_(superpose(maps)) {
  const auto cells = superposed_.values().size();
  serving_.assign(cells, 0);
  std::vector<float> best(cells, kNegligible);
  for (const RadioMap& map : maps.maps()) {
    const auto values = map.values();
    for (std::size_t k = 0; k < cells; ++k) {
      // Strict comparison keeps the lowest id on ties.
      if (values[k] > best[k]) {
        best[k] = values[k];
        serving_[k] = static_cast<std::uint16_t>(map.gbs_id());
      }
    }
  }
}

int Coverage::serving_gbs(CellIndex c) const {
  const auto d = static_cast<std::size_t>(superposed_.size());
  return serving_[static_cast<std::size_t>(c.i - 1) * d + static_cast<std::size_t>(c.j - 1)];
}

namespace {

FeasibleMap threshold(const RadioMap& best, double target_db) {
  const int d = best.size();
  FeasibleMap out{best.region(), target_db, Bitmap(d, d)};
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      // NEGLIGIBLE (-inf) never reaches a finite target.
      const float g = best.at(i, j);
      if (g != kNegligible && static_cast<double>(g) >= target_db) out.mask.set(i - 1, j - 1, true);
    }
  }
  return out;
}

// True iff bits [begin, begin + len) of a packed row are all set.
bool all_set(std::span<const std::uint64_t> words, int begin, int len) {
  int pos = begin;
  const int end = begin + len;
  while (pos < end) {
    const int offset = pos & 63;
    const int take = std::min(64 - offset, end - pos);
    const std::uint64_t mask =
        (take == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1U)) << offset;
    if ((words[static_cast<std::size_t>(pos >> 6)] & mask) != mask) return false;
    pos += take;
  }
  return true;
}

}  // namespace

FeasibleMap build_feasible_map(const RadioMapSet& maps, double target_db) {
  return threshold(superpose(maps), target_db);
}

FeasibleMap build_feasible_map(const Coverage& coverage, double target_db) {
  return threshold(coverage.superposed(), target_db);
}

void check_kappa(int kappa, int fine_cells, RemainderPolicy policy) {
  if (kappa < 1 || kappa % 2 == 0) {
    throw ConfigError("kappa must be an odd positive integer (got " + std::to_string(kappa) + ")");
  }
  if (kappa > fine_cells) {
    throw ConfigError("kappa " + std::to_string(kappa) + " exceeds D=" + std::to_string(fine_cells));
  }
  if (policy == RemainderPolicy::kReject && fine_cells % kappa != 0) {
    throw ConfigError("kappa " + std::to_string(kappa) + " does not divide D=" +
                      std::to_string(fine_cells));
  }
}

std::vector<CellIndex> neighbor_set(int i, int j, int kappa, int fine_cells) {
  if (kappa < 1) throw ConfigError("kappa must be positive");
  const int coarse = fine_cells / kappa;
  if (i < 1 || j < 1 || i > coarse || j > coarse) {
    throw IndexError("quantized index (" + std::to_string(i) + "," + std::to_string(j) +
                     ") outside 1.." + std::to_string(coarse));
  }
  std::vector<CellIndex> members;
  members.reserve(static_cast<std::size_t>(kappa) * static_cast<std::size_t>(kappa));
  for (int p = (i - 1) * kappa + 1; p <= i * kappa; ++p) {
    for (int q = (j - 1) * kappa + 1; q <= j * kappa; ++q) members.push_back({p, q});
  }
  return members;
}

QuantizedFeasibleMap build_quantized_feasible_map(const FeasibleMap& feasible, int kappa,
                                                  RemainderPolicy policy) {
  const int d = feasible.region.cells_per_side();
  check_kappa(kappa, d, policy);
  const int coarse = d / kappa;
  QuantizedFeasibleMap out{feasible.region, feasible.target_db, kappa, coarse, Bitmap(coarse, coarse)};
  parallel_for(coarse, [&](int qi) {
    // AND the kappa fine rows of this block row, then test each column run.
    std::vector<std::uint64_t> acc(feasible.mask.words_per_row(), ~std::uint64_t{0});
    for (int r = qi * kappa; r < (qi + 1) * kappa; ++r) {
      const auto row = feasible.mask.row(r);
      for (std::size_t w = 0; w < acc.size(); ++w) acc[w] &= row[w];
    }
    for (int qj = 0; qj < coarse; ++qj) {
      if (all_set(acc, qj * kappa, kappa)) out.mask.set(qi, qj, true);
    }
  });
  return out;
}

Point2 quantized_grid_point(int i, int j, int kappa, const Region& region, RemainderPolicy policy) {
  check_kappa(kappa, region.cells_per_side(), policy);
  const int coarse = region.cells_per_side() / kappa;
  if (i < 1 || j < 1 || i > coarse || j > coarse) {
    throw IndexError("quantized index (" + std::to_string(i) + "," + std::to_string(j) +
                     ") outside 1.." + std::to_string(coarse));
  }
  const double spacing = kappa * region.granularity();
  return {(i - 0.5) * spacing, (j - 0.5) * spacing};
}

}  // namespace skypath
