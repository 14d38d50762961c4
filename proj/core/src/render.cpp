#include "skypath/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

#include "skypath/io.hpp"

namespace skypath::render {

namespace {

struct GainRange {
  float lo = 0.0F;
  float hi = 0.0F;
  bool any = false;
};

GainRange finite_range(const RadioMap& map) {
  GainRange r;
  for (float g : map.values()) {
    if (is_negligible(g)) continue;
    if (!r.any) {
      r = {g, g, true};
    } else {
      r.lo = std::min(r.lo, g);
      r.hi = std::max(r.hi, g);
    }
  }
  return r;
}

std::uint8_t gray(float g, const GainRange& r) {
  if (is_negligible(g) || !r.any) return 0;
  if (r.hi == r.lo) return 255;
  const double t = (static_cast<double>(g) - r.lo) / (static_cast<double>(r.hi) - r.lo);
  return static_cast<std::uint8_t>(1 + std::lround(t * 254.0));
}

}  // namespace

std::string heatmap_pgm(const RadioMap& map) {
  const int d = map.size();
  std::string out = "P5\n" + std::to_string(d) + " " + std::to_string(d) + "\n255\n";
  const GainRange range = finite_range(map);
  out.reserve(out.size() + static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) out.push_back(static_cast<char>(gray(map.at(i, j), range)));
  }
  return out;
}

std::string overlay_svg(const RadioMap* heatmap, const Bitmap* mask, const Region& region,
                        const std::vector<const Path*>& paths) {
  using io::format_double;
  const double edge = region.edge_length();
  const double delta = region.granularity();
  const std::string size = format_double(edge);
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + size + " " + size +
                    "\" width=\"" + size + "\" height=\"" + size + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + size + "\" height=\"" + size + "\" fill=\"#000\"/>\n";

  // x = region x, y flipped so the region's y axis points up.
  auto cell_rect = [&](int i, int j, double cell, const std::string& fill) {
    out += "<rect x=\"" + format_double((i - 1) * cell) + "\" y=\"" + format_double(edge - j * cell) +
           "\" width=\"" + format_double(cell) + "\" height=\"" + format_double(cell) + "\" fill=\"" + fill +
           "\"/>\n";
  };
  if (heatmap != nullptr) {
    const GainRange range = finite_range(*heatmap);
    for (int i = 1; i <= heatmap->size(); ++i) {
      for (int j = 1; j <= heatmap->size(); ++j) {
        const int level = gray(heatmap->at(i, j), range);
        if (level == 0) continue;
        char fill[8];
        std::snprintf(fill, sizeof(fill), "#%02x%02x%02x", level, level, level);
        cell_rect(i, j, delta, fill);
      }
    }
  }
  if (mask != nullptr && mask->rows() > 0) {
    const double cell = edge / mask->rows();
    const std::string fill = heatmap != nullptr ? "#2a7fff" : "#dddddd";
    out += "<g opacity=\"" + std::string(heatmap != nullptr ? "0.35" : "1") + "\">\n";
    for (int r = 0; r < mask->rows(); ++r) {
      for (int c = 0; c < mask->cols(); ++c) {
        if (mask->get(r, c)) cell_rect(r + 1, c + 1, cell, fill);
      }
    }
    out += "</g>\n";
  }
  static constexpr std::array<const char*, 4> kColors = {"#e41a1c", "#ff7f00", "#4daf4a", "#984ea3"};
  for (std::size_t k = 0; k < paths.size(); ++k) {
    const Path& path = *paths[k];
    if (path.waypoints.empty()) continue;
    out += "<polyline fill=\"none\" stroke=\"" + std::string(kColors[k % kColors.size()]) +
           "\" stroke-width=\"" + format_double(std::max(1.0, 0.4 * delta)) + "\" points=\"";
    for (std::size_t w = 0; w < path.waypoints.size(); ++w) {
      const Point2 p = path.waypoints[w].position;
      if (w > 0) out += ' ';
      out += format_double(p.x) + "," + format_double(edge - p.y);
    }
    out += "\"/>\n";
    const Point2 first = path.waypoints.front().position;
    out += "<circle cx=\"" + format_double(first.x) + "\" cy=\"" + format_double(edge - first.y) + "\" r=\"" +
           format_double(delta) + "\" fill=\"#ffffff\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace skypath::render
