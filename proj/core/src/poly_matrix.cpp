#include "charforge/poly_matrix.hpp"

#include <utility>

namespace charforge {

PolyMatrix::PolyMatrix(FieldSpec spec, std::size_t rows, std::size_t cols)
    : spec_(spec), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(spec)) {}

PolyMatrix PolyMatrix::characteristic(const Matrix& a) {
  require_square(a, "characteristic matrix");
  const FieldSpec spec = a.spec();
  PolyMatrix out(spec, a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      Polynomial e = Polynomial::constant(-a(r, c));
      if (r == c) e += Polynomial::x(spec);
      out(r, c) = std::move(e);
    }
  return out;
}

void PolyMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void PolyMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void PolyMatrix::sub_row_multiple(std::size_t dst, std::size_t src, const Polynomial& f) {
  if (f.is_zero()) return;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!(*this)(src, c).is_zero()) (*this)(dst, c) -= f * (*this)(src, c);
}

void PolyMatrix::sub_col_multiple(std::size_t dst, std::size_t src, const Polynomial& f) {
  if (f.is_zero()) return;
  for (std::size_t r = 0; r < rows_; ++r)
    if (!(*this)(r, src).is_zero()) (*this)(r, dst) -= f * (*this)(r, src);
}

}  // namespace charforge
