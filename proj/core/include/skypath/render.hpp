#pragma once

#include <string>
#include <vector>

#include "skypath/bitmap.hpp"
#include "skypath/planner.hpp"
#include "skypath/radiomap.hpp"

namespace skypath::render {

/// Binary PGM (P5). The finite gain range maps linearly to 1..255;
/// NEGLIGIBLE cells are 0 (black). Row i of the map is image row i.
std::string heatmap_pgm(const RadioMap& map);

/// SVG with one square per cell (gray levels or mask bits) and the path as
/// a polyline, in region meters with y pointing up.
std::string overlay_svg(const RadioMap* heatmap, const Bitmap* mask, const Region& region,
                        const std::vector<const Path*>& paths);

}  // namespace skypath::render
