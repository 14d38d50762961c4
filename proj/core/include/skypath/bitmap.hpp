#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace skypath {

/// Packed row-major bit matrix, 64 cells per word, each row word-aligned.
/// Indices are 0-based.
class Bitmap {
 public:
  Bitmap() = default;
  Bitmap(int rows, int cols, bool value = false);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t words_per_row() const { return words_per_row_; }

  bool get(int r, int c) const {
    const std::uint64_t w = words_[word_index(r, c)];
    return (w >> (static_cast<unsigned>(c) & 63U)) & 1U;
  }
  void set(int r, int c, bool value);

  std::span<const std::uint64_t> row(int r) const {
    return {words_.data() + static_cast<std::size_t>(r) * words_per_row_, words_per_row_};
  }
  std::span<std::uint64_t> row(int r) {
    return {words_.data() + static_cast<std::size_t>(r) * words_per_row_, words_per_row_};
  }

  std::size_t count() const;

  friend bool operator==(const Bitmap&, const Bitmap&) = default;

 private:
  std::size_t word_index(int r, int c) const {
    return static_cast<std::size_t>(r) * words_per_row_ + (static_cast<std::size_t>(c) >> 6U);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace skypath
