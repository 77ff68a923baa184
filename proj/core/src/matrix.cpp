#include "charforge/matrix.hpp"

#include <algorithm>

namespace charforge {

Matrix::Matrix(FieldSpec spec, std::size_t rows, std::size_t cols)
    : spec_(spec), rows_(rows), cols_(cols), entries_(rows * cols, FieldElement::zero(spec)) {}

Matrix::Matrix(FieldSpec spec, std::size_t rows, std::size_t cols,
               std::vector<FieldElement> entries)
    : spec_(spec), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(entries_.size()) + " entries for a " + std::to_string(rows) +
                    "x" + std::to_string(cols) + " matrix");
  for (const auto& e : entries_) require_same_field(spec_, e.spec());
}

Matrix Matrix::identity(FieldSpec spec, std::size_t n) {
  Matrix out(spec, n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = FieldElement::one(spec);
  return out;
}

Matrix Matrix::from_ints(FieldSpec spec, const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<FieldElement> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (long v : row) entries.emplace_back(spec, v);
  }
  return Matrix(spec, r, c, std::move(entries));
}

Matrix Matrix::column(FieldSpec spec, std::vector<FieldElement> entries) {
  const std::size_t n = entries.size();
  return Matrix(spec, n, 1, std::move(entries));
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.is_zero(); });
}

std::vector<FieldElement> Matrix::column_vector(std::size_t c) const {
  std::vector<FieldElement> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(spec_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_)
    throw Error(ErrorCode::DimensionMismatch, "block extends past the matrix");
  Matrix out(spec_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  require_same_field(spec_, b.spec_);
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
    throw Error(ErrorCode::DimensionMismatch, "block extends past the matrix");
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

FieldElement Matrix::trace() const {
  require_square(*this, "trace");
  FieldElement t = FieldElement::zero(spec_);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

void Matrix::require_conforming(const Matrix& rhs) const {
  require_same_field(spec_, rhs.spec_);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(rows_) + "x" + std::to_string(cols_) + " vs " +
                    std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  require_conforming(rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  require_conforming(rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

Matrix& Matrix::operator*=(const FieldElement& c) {
  require_same_field(spec_, c.spec());
  for (auto& e : entries_) e *= c;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a.spec_, b.spec_);
  if (a.cols_ != b.rows_)
    throw Error(ErrorCode::DimensionMismatch,
                "cannot multiply " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                    " by " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  Matrix out(a.spec_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const FieldElement& ail = a(i, l);
      if (ail.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const FieldElement& blj = b(l, j);
        if (!blj.is_zero()) out(i, j) += ail * blj;
      }
    }
  return out;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out += r == 0 ? "[" : ", [";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ", ";
      out += (*this)(r, c).to_string();
    }
    out += "]";
  }
  return out + "]";
}

Matrix block_diagonal(std::span<const Matrix> blocks) {
  if (blocks.empty()) throw Error(ErrorCode::BadDimension, "block_diagonal of nothing");
  const FieldSpec spec = blocks.front().spec();
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    require_same_field(spec, b.spec());
    rows += b.rows();
    cols += b.cols();
  }
  Matrix out(spec, rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

Matrix block_diagonal(std::initializer_list<Matrix> blocks) {
  return block_diagonal(std::span<const Matrix>(blocks.begin(), blocks.size()));
}

Matrix power(const Matrix& a, std::size_t e) {
  require_square(a, "power");
  Matrix result = Matrix::identity(a.spec(), a.rows());
  Matrix base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

void require_square(const Matrix& a, std::string_view context) {
  if (!a.is_square())
    throw Error(ErrorCode::NotSquare, std::string(context) + ": " + std::to_string(a.rows()) +
                                          "x" + std::to_string(a.cols()) + " is not square");
}

}  // namespace charforge
