#include "skypath/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "skypath/error.hpp"

namespace skypath {

double StepCount::units() const {
  return static_cast<double>(straight) + static_cast<double>(diagonal) * std::numbers::sqrt2;
}

std::strong_ordering operator<=>(const StepCount& a, const StepCount& b) {
  // Sign of (x - y*sqrt2) with x = da.straight, y = db.diagonal - da.diagonal.
  const std::int64_t x = a.straight - b.straight;
  const std::int64_t y = b.diagonal - a.diagonal;
  if (x == 0 && y == 0) return std::strong_ordering::equal;
  if (x >= 0 && y <= 0) return std::strong_ordering::greater;
  if (x <= 0 && y >= 0) return std::strong_ordering::less;
  // Same signs: compare x^2 with 2 y^2 (never equal, sqrt2 is irrational).
  // Step counts stay below 2^31, so both squares fit in 64 bits.
  const auto ax = static_cast<std::uint64_t>(x > 0 ? x : -x);
  const auto ay = static_cast<std::uint64_t>(y > 0 ? y : -y);
  const std::uint64_t xx = ax * ax;
  const std::uint64_t yy = 2U * ay * ay;
  if (x > 0) return xx < yy ? std::strong_ordering::less : std::strong_ordering::greater;
  return xx > yy ? std::strong_ordering::less : std::strong_ordering::greater;
}

PlanGraph::PlanGraph(Level level, int kappa, double spacing_m, std::shared_ptr<const Bitmap> mask)
    : level_(level), kappa_(kappa), spacing_m_(spacing_m), mask_(std::move(mask)) {
  if (!mask_ || mask_->rows() != mask_->cols()) throw ConfigError("plan graph: mask must be square");
  const int n = mask_->rows();
  vertices_ = mask_->count();
  // Count each undirected edge once via the E, S, SE and SW neighbors.
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (!mask_->get(r, c)) continue;
      if (c + 1 < n && mask_->get(r, c + 1)) ++edges_;
      if (r + 1 < n) {
        if (mask_->get(r + 1, c)) ++edges_;
        if (c + 1 < n && mask_->get(r + 1, c + 1)) ++edges_;
        if (c > 0 && mask_->get(r + 1, c - 1)) ++edges_;
      }
    }
  }
}

double PlanGraph::weight(CellIndex a, CellIndex b) const {
  const int di = std::abs(a.i - b.i);
  const int dj = std::abs(a.j - b.j);
  if (std::max(di, dj) != 1) throw DomainError("plan graph: vertices are not adjacent");
  return (di + dj == 2 ? std::numbers::sqrt2 : 1.0) * spacing_m_;
}

PlanGraph build_graph_fine(const FeasibleMap& feasible) {
  return PlanGraph(Level::kFine, 1, feasible.region.granularity(),
                   std::make_shared<const Bitmap>(feasible.mask));
}

PlanGraph build_graph_quantized(const QuantizedFeasibleMap& quantized) {
  return PlanGraph(Level::kQuantized, quantized.kappa, quantized.spacing(),
                   std::make_shared<const Bitmap>(quantized.mask));
}

namespace {

constexpr std::int32_t kNone = -1;

// Binary min-heap over vertex ids with decrease-key; ties on distance go to
// the smaller id, i.e. the lexicographically smaller (i, j).
class VertexHeap {
 public:
  VertexHeap(const std::vector<StepCount>& dist, std::size_t n) : dist_(dist), pos_(n, kNone) {}

  bool empty() const { return heap_.empty(); }

  void push_or_decrease(std::int32_t v) {
    if (pos_[static_cast<std::size_t>(v)] == kNone) {
      heap_.push_back(v);
      pos_[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(heap_.size() - 1);
    }
    sift_up(static_cast<std::size_t>(pos_[static_cast<std::size_t>(v)]));
  }

  std::int32_t pop() {
    const std::int32_t top = heap_.front();
    pos_[static_cast<std::size_t>(top)] = kNone;
    heap_.front() = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
      pos_[static_cast<std::size_t>(heap_.front())] = 0;
      sift_down(0);
    }
    return top;
  }

 private:
  bool before(std::int32_t a, std::int32_t b) const {
    const auto c = dist_[static_cast<std::size_t>(a)] <=> dist_[static_cast<std::size_t>(b)];
    return c < 0 || (c == 0 && a < b);
  }

  void place(std::size_t k, std::int32_t v) {
    heap_[k] = v;
    pos_[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(k);
  }

  void sift_up(std::size_t k) {
    const std::int32_t v = heap_[k];
    while (k > 0) {
      const std::size_t parent = (k - 1) / 2;
      if (!before(v, heap_[parent])) break;
      place(k, heap_[parent]);
      k = parent;
    }
    place(k, v);
  }

  void sift_down(std::size_t k) {
    const std::int32_t v = heap_[k];
    const std::size_t n = heap_.size();
    while (true) {
      std::size_t child = 2 * k + 1;
      if (child >= n) break;
      if (child + 1 < n && before(heap_[child + 1], heap_[child])) ++child;
      if (!before(heap_[child], v)) break;
      place(k, heap_[child]);
      k = child;
    }
    place(k, v);
  }

  const std::vector<StepCount>& dist_;
  std::vector<std::int32_t> pos_;
  std::vector<std::int32_t> heap_;
};

}  // namespace

std::optional<GraphPath> dijkstra(const PlanGraph& graph, CellIndex source, CellIndex target) {
  if (!graph.has_vertex(source)) {
    throw EndpointInfeasible("dijkstra: source (" + std::to_string(source.i) + "," +
                             std::to_string(source.j) + ") is not a feasible vertex");
  }
  if (!graph.has_vertex(target)) {
    throw EndpointInfeasible("dijkstra: target (" + std::to_string(target.i) + "," +
                             std::to_string(target.j) + ") is not a feasible vertex");
  }
  const int n = graph.side();
  const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  auto id_of = [n](CellIndex c) { return static_cast<std::int32_t>((c.i - 1) * n + (c.j - 1)); };

  const StepCount unreached{std::numeric_limits<std::int32_t>::max(), 0};
  std::vector<StepCount> dist(cells, unreached);
  std::vector<std::int32_t> pred(cells, kNone);
  std::vector<bool> done(cells, false);
  VertexHeap heap(dist, cells);

  const std::int32_t s = id_of(source);
  const std::int32_t t = id_of(target);
  dist[static_cast<std::size_t>(s)] = {};
  heap.push_or_decrease(s);

  const Bitmap& mask = graph.mask();
  while (!heap.empty()) {
    const std::int32_t u = heap.pop();
    const auto uu = static_cast<std::size_t>(u);
    done[uu] = true;
    if (u == t) break;
    const int r = u / n;
    const int c = u % n;
    for (int dr = -1; dr <= 1; ++dr) {
      for (int dc = -1; dc <= 1; ++dc) {
        if (dr == 0 && dc == 0) continue;
        const int rr = r + dr;
        const int cc = c + dc;
        if (rr < 0 || cc < 0 || rr >= n || cc >= n || !mask.get(rr, cc)) continue;
        const auto v = static_cast<std::size_t>(rr * n + cc);
        if (done[v]) continue;
        const StepCount step = (dr != 0 && dc != 0) ? StepCount{0, 1} : StepCount{1, 0};
        const StepCount candidate = dist[uu] + step;
        const auto order = candidate <=> dist[v];
        if (dist[v] == unreached || order < 0) {
          dist[v] = candidate;
          pred[v] = u;
          heap.push_or_decrease(static_cast<std::int32_t>(v));
        } else if (order == 0 && u < pred[v]) {
          pred[v] = u;
        }
      }
    }
  }
  if (!done[static_cast<std::size_t>(t)]) return std::nullopt;

  GraphPath out;
  for (std::int32_t v = t; v != kNone; v = pred[static_cast<std::size_t>(v)]) {
    out.vertices.push_back({v / n + 1, v % n + 1});
  }
  std::reverse(out.vertices.begin(), out.vertices.end());
  out.steps = dist[static_cast<std::size_t>(t)];
  out.length_m = out.steps.units() * graph.spacing();
  return out;
}

namespace {

Waypoint make_waypoint(CellIndex fine, const Coverage& coverage) {
  return {grid_point(fine, coverage.region()), coverage.gain(fine), coverage.serving_gbs(fine)};
}

std::string cell_text(CellIndex c) {
  return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
}

Path empty_path(Level level, int kappa, double target_db, const Region& region, Point2 start,
                Point2 goal, CellIndex s, CellIndex g) {
  Path path;
  path.level = level;
  path.kappa = kappa;
  path.target_db = target_db;
  path.region = region;
  path.start = grid_point(s, region);
  path.goal = grid_point(g, region);
  path.start_snap_m = distance(start, path.start);
  path.goal_snap_m = distance(goal, path.goal);
  return path;
}

// Closed segment vs closed axis-aligned rectangle (touching counts).
bool segment_touches_rect(Point2 a, Point2 b, double x0, double x1, double y0, double y1) {
  double t_enter = 0.0;
  double t_exit = 1.0;
  const double origin[2] = {a.x, a.y};
  const double dir[2] = {b.x - a.x, b.y - a.y};
  const double lo[2] = {x0, y0};
  const double hi[2] = {x1, y1};
  for (int axis = 0; axis < 2; ++axis) {
    if (dir[axis] == 0.0) {
      if (origin[axis] < lo[axis] || origin[axis] > hi[axis]) return false;
      continue;
    }
    double t0 = (lo[axis] - origin[axis]) / dir[axis];
    double t1 = (hi[axis] - origin[axis]) / dir[axis];
    if (t0 > t1) std::swap(t0, t1);
    t_enter = std::max(t_enter, t0);
    t_exit = std::min(t_exit, t1);
    if (t_enter > t_exit) return false;
  }
  return true;
}

// Every closed fine cell the segment touches must be feasible. Stricter
// than the dense-sampling check in validate_path.
bool segment_cells_feasible(Point2 a, Point2 b, const FeasibleMap& feasible) {
  const Region& region = feasible.region;
  const double delta = region.granularity();
  const CellSpan lo = cells_touching({std::min(a.x, b.x), std::min(a.y, b.y)}, region);
  const CellSpan hi = cells_touching({std::max(a.x, b.x), std::max(a.y, b.y)}, region);
  for (int i = lo.i_lo; i <= hi.i_hi; ++i) {
    for (int j = lo.j_lo; j <= hi.j_hi; ++j) {
      if (feasible.feasible({i, j})) continue;
      if (segment_touches_rect(a, b, (i - 1) * delta, i * delta, (j - 1) * delta, j * delta)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

PlanResult plan_optimal(const Coverage& coverage, double target_db, Point2 start, Point2 goal) {
  const Region& region = coverage.region();
  const CellIndex s = cell_of(start, region);
  const CellIndex g = cell_of(goal, region);
  const FeasibleMap feasible = build_feasible_map(coverage, target_db);
  const PlanGraph graph = build_graph_fine(feasible);

  PlanResult result;
  result.graph_vertices = graph.vertex_count();
  result.graph_edges = graph.edge_count();
  if (graph.vertex_count() == 0) {
    result.status = PlanStatus::kProblemInfeasible;
    result.message = "no grid point meets the gain target";
    return result;
  }
  if (!graph.has_vertex(s) || !graph.has_vertex(g)) {
    result.status = PlanStatus::kEndpointInfeasible;
    result.message = "endpoint cell " + cell_text(graph.has_vertex(s) ? g : s) +
                     " does not meet the gain target";
    return result;
  }
  const auto found = dijkstra(graph, s, g);
  if (!found) {
    result.status = PlanStatus::kProblemInfeasible;
    result.message = "no feasible path connects the endpoints";
    return result;
  }
  Path path = empty_path(Level::kFine, 1, target_db, region, start, goal, s, g);
  path.waypoints.reserve(found->vertices.size());
  for (const CellIndex v : found->vertices) path.waypoints.push_back(make_waypoint(v, coverage));
  path.total_length_m = found->length_m;
  result.status = PlanStatus::kFeasible;
  result.path = std::move(path);
  return result;
}

PlanResult plan_optimal(const RadioMapSet& maps, double target_db, Point2 start, Point2 goal) {
  return plan_optimal(Coverage(maps), target_db, start, goal);
}

PlanResult plan_quantized(const Coverage& coverage, double target_db, int kappa, Point2 start,
                          Point2 goal, RemainderPolicy policy) {
  const Region& region = coverage.region();
  check_kappa(kappa, region.cells_per_side(), policy);
  const CellIndex s = cell_of(start, region);
  const CellIndex g = cell_of(goal, region);

  const FeasibleMap feasible = build_feasible_map(coverage, target_db);
  const QuantizedFeasibleMap quantized = build_quantized_feasible_map(feasible, kappa, policy);
  const PlanGraph graph = build_graph_quantized(quantized);

  PlanResult result;
  result.graph_vertices = graph.vertex_count();
  result.graph_edges = graph.edge_count();

  if (graph.vertex_count() == 0) {
    result.status = PlanStatus::kProblemInfeasible;
    result.message = "no quantized cell meets the gain target";
    return result;
  }

  const int coarse = quantized.cells_per_side;
  // Fine cells in an uncovered trailing strip attach to the last block.
  auto block_of = [&](CellIndex fine) {
    return CellIndex{std::min((fine.i - 1) / kappa + 1, coarse), std::min((fine.j - 1) / kappa + 1, coarse)};
  };
  const CellIndex qs = block_of(s);
  const CellIndex qg = block_of(g);
  const CellIndex cs = quantized_center(qs, kappa);
  const CellIndex cg = quantized_center(qg, kappa);

  for (const auto& [fine, block, center] : {std::tuple{s, qs, cs}, std::tuple{g, qg, cg}}) {
    if (!graph.has_vertex(block)) {
      result.status = PlanStatus::kEndpointInfeasible;
      result.message = "quantized cell " + cell_text(block) + " of endpoint " + cell_text(fine) +
                       " is not entirely feasible";
      return result;
    }
    if (!feasible.feasible(fine) ||
        !segment_cells_feasible(grid_point(fine, region), grid_point(center, region), feasible)) {
      result.status = PlanStatus::kEndpointInfeasible;
      result.message = "stitch from endpoint " + cell_text(fine) + " crosses an infeasible cell";
      return result;
    }
  }

  const auto found = dijkstra(graph, qs, qg);
  if (!found) {
    result.status = PlanStatus::kProblemInfeasible;
    result.message = "no feasible quantized path connects the endpoints";
    return result;
  }

  Path path = empty_path(Level::kQuantized, kappa, target_db, region, start, goal, s, g);
  std::vector<CellIndex> fine_cells;
  fine_cells.reserve(found->vertices.size() + 2);
  if (s != cs) fine_cells.push_back(s);
  for (const CellIndex q : found->vertices) fine_cells.push_back(quantized_center(q, kappa));
  if (g != cg) fine_cells.push_back(g);
  for (const CellIndex c : fine_cells) path.waypoints.push_back(make_waypoint(c, coverage));

  path.total_length_m = found->length_m + distance(path.start, grid_point(cs, region)) +
                        distance(grid_point(cg, region), path.goal);
  result.status = PlanStatus::kFeasible;
  result.path = std::move(path);
  return result;
}

PlanResult plan_quantized(const RadioMapSet& maps, double target_db, int kappa, Point2 start,
                          Point2 goal, RemainderPolicy policy) {
  return plan_quantized(Coverage(maps), target_db, kappa, start, goal, policy);
}

PathMetrics path_metrics(const Path& path, std::optional<double> speed_mps) {
  PathMetrics metrics;
  metrics.length_m = path.total_length_m;
  metrics.start_snap_m = path.start_snap_m;
  metrics.goal_snap_m = path.goal_snap_m;
  if (speed_mps) {
    if (!(*speed_mps > 0.0) || !std::isfinite(*speed_mps)) {
      throw ConfigError("path metrics: speed must be positive");
    }
    metrics.duration_s = metrics.length_m / *speed_mps;
  }
  return metrics;
}

}  // namespace skypath
