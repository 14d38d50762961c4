#include "skypath/bitmap.hpp"

#include <bit>

#include "skypath/error.hpp"

namespace skypath {

Bitmap::Bitmap(int rows, int cols, bool value)
    : rows_(rows), cols_(cols), words_per_row_((static_cast<std::size_t>(cols) + 63U) / 64U) {
  if (rows < 0 || cols < 0) throw ConfigError("bitmap: negative dimensions");
  words_.assign(static_cast<std::size_t>(rows) * words_per_row_, 0U);
  if (value) {
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) set(r, c, true);
    }
  }
}

void Bitmap::set(int r, int c, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (static_cast<unsigned>(c) & 63U);
  std::uint64_t& w = words_[word_index(r, c)];
  w = value ? (w | bit) : (w & ~bit);
}

std::size_t Bitmap::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

}  // namespace skypath
