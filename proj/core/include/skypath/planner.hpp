#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skypath/bitmap.hpp"
#include "skypath/error.hpp"
#include "skypath/feasibility.hpp"
#include "skypath/geometry.hpp"
#include "skypath/radiomap.hpp"

namespace skypath {

enum class Level { kFine, kQuantized };

/// Path length on a lattice counted as straight and diagonal steps. The
/// metric value is straight + diagonal * sqrt(2) in units of the lattice
/// spacing; comparisons are exact.
struct StepCount {
  std::int64_t straight = 0;
  std::int64_t diagonal = 0;

  double units() const;
  StepCount operator+(const StepCount& o) const {
    return {straight + o.straight, diagonal + o.diagonal};
  }
  friend bool operator==(const StepCount&, const StepCount&) = default;
  friend std::strong_ordering operator<=>(const StepCount& a, const StepCount& b);
};

/// 8-connected grid graph over the set bits of a mask. Adjacency is not
/// materialized: neighbors are read from the mask during search.
class PlanGraph {
 public:
  PlanGraph(Level level, int kappa, double spacing_m, std::shared_ptr<const Bitmap> mask);

  Level level() const { return level_; }
  int kappa() const { return kappa_; }
  double spacing() const { return spacing_m_; }
  int side() const { return mask_->rows(); }

  bool has_vertex(CellIndex v) const {
    return v.i >= 1 && v.j >= 1 && v.i <= side() && v.j <= side() && mask_->get(v.i - 1, v.j - 1);
  }
  std::size_t vertex_count() const { return vertices_; }
  std::size_t edge_count() const { return edges_; }
  const Bitmap& mask() const { return *mask_; }

  /// Edge weight in meters between adjacent vertices.
  double weight(CellIndex a, CellIndex b) const;

 private:
  Level level_;
  int kappa_;
  double spacing_m_;
  std::shared_ptr<const Bitmap> mask_;
  std::size_t vertices_ = 0;
  std::size_t edges_ = 0;
};

PlanGraph build_graph_fine(const FeasibleMap& feasible);
PlanGraph build_graph_quantized(const QuantizedFeasibleMap& quantized);

/// Raised when a search endpoint is not a vertex of the graph.
class EndpointInfeasible : public DomainError {
 public:
  using DomainError::DomainError;
};

struct GraphPath {
  std::vector<CellIndex> vertices;
  StepCount steps;
  double length_m = 0.0;
};

/// Shortest s-t path, or nullopt when t is unreachable. Ties among equal
/// distances pop the lexicographically smallest vertex first; equal-length
/// relaxations keep the smallest predecessor. Throws EndpointInfeasible
/// when s or t is not a vertex.
std::optional<GraphPath> dijkstra(const PlanGraph& graph, CellIndex source, CellIndex target);

struct Waypoint {
  Point2 position;
  float gain_db = kNegligible;
  int gbs_id = 0;
};

struct Path {
  Level level = Level::kFine;
  int kappa = 1;
  double target_db = 0.0;
  Region region;
  std::vector<Waypoint> waypoints;
  double total_length_m = 0.0;
  Point2 start;  // endpoints after snapping to the fine grid
  Point2 goal;
  double start_snap_m = 0.0;
  double goal_snap_m = 0.0;

  /// Lattice spacing of interior steps (delta or kappa * delta).
  double spacing() const { return kappa * region.granularity(); }
};

enum class PlanStatus { kFeasible, kProblemInfeasible, kEndpointInfeasible };

struct PlanResult {
  PlanStatus status = PlanStatus::kProblemInfeasible;
  std::optional<Path> path;
  std::string message;
  std::size_t graph_vertices = 0;
  std::size_t graph_edges = 0;

  bool feasible() const { return status == PlanStatus::kFeasible; }
};

/// Minimum-distance 8-connected path over the fine feasible grid. Endpoints
/// off the grid are snapped with cell_of. Throws DomainError when an
/// endpoint lies outside the region.
PlanResult plan_optimal(const Coverage& coverage, double target_db, Point2 start, Point2 goal);
PlanResult plan_optimal(const RadioMapSet& maps, double target_db, Point2 start, Point2 goal);

/// Shortest path over the quantized grid, stitched to the true endpoints
/// with straight segments inside their quantized cells. Throws ConfigError
/// for an invalid kappa.
PlanResult plan_quantized(const Coverage& coverage, double target_db, int kappa, Point2 start,
                          Point2 goal, RemainderPolicy policy = RemainderPolicy::kReject);
PlanResult plan_quantized(const RadioMapSet& maps, double target_db, int kappa, Point2 start,
                          Point2 goal, RemainderPolicy policy = RemainderPolicy::kReject);

struct ValidationReport {
  bool passed = true;
  std::string message;
  std::optional<CellIndex> cell;  // offending fine cell, when one applies
};

/// Re-checks every path invariant against the maps, including 100 evenly
/// spaced samples per segment.
ValidationReport validate_path(const Path& path, const Coverage& coverage);
ValidationReport validate_path(const Path& path, const RadioMapSet& maps);

struct PathMetrics {
  double length_m = 0.0;
  std::optional<double> duration_s;
  double start_snap_m = 0.0;
  double goal_snap_m = 0.0;
};

/// Throws ConfigError when a non-positive speed is given.
PathMetrics path_metrics(const Path& path, std::optional<double> speed_mps = std::nullopt);

}  // namespace skypath
