#pragma once

#include <cmath>
#include <cstdint>
#include <compare>

namespace skypath {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  friend bool operator==(const Point3&, const Point3&) = default;
};

inline double distance(const Point2& a, const Point2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

inline double distance(const Point3& a, const Point3& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double dz = a.z - b.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

/// 1-based grid index (i along x, j along y). Ordering is lexicographic.
struct CellIndex {
  int i = 1;
  int j = 1;
  friend auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

/// Square flight region [0, L]^2 at a fixed altitude, sampled every
/// `granularity_m` meters. Grid point (i, j) sits at the center of its cell.
class Region {
 public:
  Region() = default;
  /// Throws ConfigError unless all values are positive and L / delta is an
  /// integer >= 2.
  Region(double edge_length_m, double granularity_m, double altitude_m);

  double edge_length() const { return edge_length_m_; }
  double granularity() const { return granularity_m_; }
  double altitude() const { return altitude_m_; }
  int cells_per_side() const { return cells_; }

  bool contains(const Point2& u) const {
    return u.x >= 0.0 && u.y >= 0.0 && u.x <= edge_length_m_ && u.y <= edge_length_m_;
  }

  friend bool operator==(const Region&, const Region&) = default;

 private:
  double edge_length_m_ = 0.0;
  double granularity_m_ = 0.0;
  double altitude_m_ = 0.0;
  int cells_ = 0;
};

/// Location of grid point (i, j): [(i - 1/2) delta, (j - 1/2) delta].
/// Throws IndexError outside 1..D.
Point2 grid_point(int i, int j, const Region& region);
inline Point2 grid_point(CellIndex c, const Region& region) { return grid_point(c.i, c.j, region); }

/// Cell containing `u` under the closed-cell model; points on shared
/// boundaries resolve to the lexicographically smallest cell.
/// Throws DomainError when `u` lies outside [0, L]^2.
CellIndex cell_of(const Point2& u, const Region& region);

/// Index ranges [lo, hi] of every closed cell containing `u` along each axis.
struct CellSpan {
  int i_lo, i_hi, j_lo, j_hi;
};
CellSpan cells_touching(const Point2& u, const Region& region);

}  // namespace skypath
