#pragma once

#include <cstddef>
#include <vector>

#include "charforge/matrix.hpp"
#include "charforge/polynomial.hpp"

namespace charforge {

/// Dense matrix with entries in F[x].
class PolyMatrix {
 public:
  PolyMatrix(FieldSpec spec, std::size_t rows, std::size_t cols);

  /// xI - A.
  static PolyMatrix characteristic(const Matrix& a);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] -= f * row[src]
  void sub_row_multiple(std::size_t dst, std::size_t src, const Polynomial& f);
  /// col[dst] -= f * col[src]
  void sub_col_multiple(std::size_t dst, std::size_t src, const Polynomial& f);

 private:
  FieldSpec spec_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

}  // namespace charforge
