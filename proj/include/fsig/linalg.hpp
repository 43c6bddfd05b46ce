#pragma once
#include <cstdint>
#include <vector>

#include "fsig/errors.hpp"
#include "fsig/fp.hpp"

namespace fsig {

// Dense matrix over F_p, row-major.  Sized for the Artinian fast paths; the
// entry cap keeps accidental huge quotients from silently allocating gigabytes.
class DenseMatrix {
 public:
  DenseMatrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (rows && cols && rows > kMaxEntries / cols)
      throw resource_error("dense matrix too large",
                           static_cast<long long>(rows),
                           static_cast<long long>(kMaxEntries / (cols ? cols : 1)));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::uint32_t v) {
    data_[i * cols_ + j] = field_.reduce(static_cast<long long>(v));
  }

  // In-place reduced row echelon form; returns the pivot column indices in
  // increasing order.  First-nonzero pivoting keeps the result deterministic.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t sel = r;
      while (sel < rows_ && at(sel, c) == 0) ++sel;
      if (sel == rows_) continue;
      swap_rows(sel, r);
      std::uint32_t inv = field_.inv(at(r, c));
      scale_row(r, inv);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r) continue;
        std::uint32_t v = at(i, c);
        if (v) axpy_row(i, r, field_.neg(v), c);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() {
    return rref().size();
  }

  // Basis of the right kernel, one vector per free column, free columns in
  // increasing order with the free coordinate set to 1.
  std::vector<std::vector<std::uint32_t>> kernel_basis() {
    std::vector<std::size_t> pivots = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free_c = 0; free_c < cols_; ++free_c) {
      if (is_pivot[free_c]) continue;
      std::vector<std::uint32_t> v(cols_, 0);
      v[free_c] = 1;
      for (std::size_t k = 0; k < pivots.size(); ++k)
        v[pivots[k]] = field_.neg(at(k, free_c));
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap(data_[a * cols_ + j], data_[b * cols_ + j]);
  }

  void scale_row(std::size_t i, std::uint32_t c) {
    for (std::size_t j = 0; j < cols_; ++j)
      data_[i * cols_ + j] = field_.mul(data_[i * cols_ + j], c);
  }

  // row i += c * row r, starting at column `from` (earlier columns already 0).
  void axpy_row(std::size_t i, std::size_t r, std::uint32_t c, std::size_t from) {
    for (std::size_t j = from; j < cols_; ++j)
      data_[i * cols_ + j] =
          field_.add(data_[i * cols_ + j], field_.mul(c, data_[r * cols_ + j]));
  }

  static constexpr std::size_t kMaxEntries = std::size_t{1} << 25;

  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

}  // namespace fsig
