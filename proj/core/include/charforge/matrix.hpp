#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "charforge/field.hpp"

namespace charforge {

/// Dense row-major matrix over a FieldSpec.
class Matrix {
 public:
  /// Zero matrix.
  Matrix(FieldSpec spec, std::size_t rows, std::size_t cols);
  /// Throws DimensionMismatch if entries.size() != rows*cols.
  Matrix(FieldSpec spec, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries);

  static Matrix identity(FieldSpec spec, std::size_t n);
  static Matrix from_ints(FieldSpec spec, const std::vector<std::vector<long>>& rows);
  static Matrix column(FieldSpec spec, std::vector<FieldElement> entries);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_zero() const noexcept;

  FieldElement& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  std::span<const FieldElement> entries() const noexcept { return entries_; }
  std::span<const FieldElement> row(std::size_t r) const {
    return std::span<const FieldElement>(entries_).subspan(r * cols_, cols_);
  }
  std::vector<FieldElement> column_vector(std::size_t c) const;

  Matrix transpose() const;
  /// Copy of the nr x nc block starting at (r0, c0).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  /// Throws NotSquare.
  FieldElement trace() const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const FieldElement& c);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(Matrix a, const FieldElement& c) { return a *= c; }
  friend Matrix operator*(const FieldElement& c, Matrix a) { return a *= c; }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string to_string() const;

 private:
  void require_conforming(const Matrix& rhs) const;

  FieldSpec spec_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> entries_;
};

/// diag(B1, ..., Bt); blocks may be rectangular or empty.
Matrix block_diagonal(std::span<const Matrix> blocks);
Matrix block_diagonal(std::initializer_list<Matrix> blocks);
/// A^e by repeated squaring. Throws NotSquare.
Matrix power(const Matrix& a, std::size_t e);

/// Throws NotSquare with the given context when a is not square.
void require_square(const Matrix& a, std::string_view context);

}  // namespace charforge
