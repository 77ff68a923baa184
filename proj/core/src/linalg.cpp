#include "charforge/linalg.hpp"

#include <algorithm>
#include <random>

namespace charforge {

SimilarityTransform::SimilarityTransform(Matrix forward, Matrix inverse)
    : forward_(std::move(forward)), inverse_(std::move(inverse)) {
  require_square(forward_, "similarity transform");
  if (!(forward_ * inverse_ == Matrix::identity(forward_.spec(), forward_.rows())))
    throw Error(ErrorCode::SingularMatrix, "T * T_inv is not the identity");
}

SimilarityTransform SimilarityTransform::from(Matrix forward) {
  Matrix inv = charforge::inverse(forward);
  return SimilarityTransform(std::move(forward), std::move(inv));
}

SimilarityTransform SimilarityTransform::identity(FieldSpec spec, std::size_t n) {
  return SimilarityTransform(Matrix::identity(spec, n), Matrix::identity(spec, n));
}

bool SimilarityTransform::is_identity() const {
  return forward_ == Matrix::identity(forward_.spec(), forward_.rows());
}

Matrix SimilarityTransform::conjugate(const Matrix& a) const { return inverse_ * a * forward_; }

Matrix SimilarityTransform::unconjugate(const Matrix& b) const {
  return forward_ * b * inverse_;
}

Matrix companion(const Polynomial& p) {
  if (p.is_zero() || p.degree() == 0)
    throw Error(ErrorCode::ZeroDegree, "companion of a constant " + p.to_string());
  if (!p.is_monic()) throw Error(ErrorCode::NotMonic, p.to_string());
  const std::size_t m = p.degree();
  Matrix c(p.spec(), m, m);
  for (std::size_t i = 1; i < m; ++i) c(i, i - 1) = FieldElement::one(p.spec());
  for (std::size_t i = 0; i < m; ++i) c(i, m - 1) = -p.coeff(i);
  return c;
}

Polynomial charpoly(const Matrix& a) {
  require_square(a, "charpoly");
  const FieldSpec spec = a.spec();
  const std::size_t n = a.rows();
  if (n == 0) return Polynomial::constant(FieldElement::one(spec));

  // Descending coefficients of the characteristic polynomial of the leading
  // r x r principal block, extended one row/column at a time.
  std::vector<FieldElement> poly{FieldElement::one(spec), -a(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<FieldElement> toeplitz{FieldElement::one(spec), -a(r, r)};
    std::vector<FieldElement> v = a.block(0, r, r, 1).column_vector(0);
    for (std::size_t i = 0; i < r; ++i) {
      FieldElement dot = FieldElement::zero(spec);
      for (std::size_t j = 0; j < r; ++j) dot += a(r, j) * v[j];
      toeplitz.push_back(-dot);
      if (i + 1 == r) break;
      std::vector<FieldElement> next(r, FieldElement::zero(spec));
      for (std::size_t row = 0; row < r; ++row)
        for (std::size_t j = 0; j < r; ++j)
          if (!v[j].is_zero()) next[row] += a(row, j) * v[j];
      v = std::move(next);
    }
    std::vector<FieldElement> updated(r + 2, FieldElement::zero(spec));
    for (std::size_t row = 0; row < r + 2; ++row)
      for (std::size_t t = 0; t <= row && t < toeplitz.size(); ++t)
        if (row - t < poly.size()) updated[row] += toeplitz[t] * poly[row - t];
    poly = std::move(updated);
  }
  std::reverse(poly.begin(), poly.end());
  return Polynomial(spec, std::move(poly));
}

FieldElement determinant(const Matrix& a) {
  require_square(a, "determinant");
  Matrix m = a;
  const std::size_t n = m.rows();
  FieldElement det = FieldElement::one(a.spec());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return FieldElement::zero(a.spec());
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    const FieldElement inv = m(col, col).inv();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const FieldElement f = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

Matrix evaluate(const Polynomial& p, const Matrix& a) {
  require_square(a, "evaluate");
  require_same_field(p.spec(), a.spec());
  const Matrix id = Matrix::identity(a.spec(), a.rows());
  Matrix acc(a.spec(), a.rows(), a.cols());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * a + id * *it;
  return acc;
}

bool is_square_zero(const Matrix& n) {
  require_square(n, "is_square_zero");
  return (n * n).is_zero();
}

RowEchelon row_reduce(const Matrix& input) {
  Matrix m = input;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    const FieldElement inv = m(row, col).inv();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const FieldElement f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivot_columns.size(); }

Matrix nullspace(const Matrix& m) {
  const auto [reduced, pivots] = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);

  Matrix basis(m.spec(), m.cols(), free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    basis(free[j], j) = FieldElement::one(m.spec());
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], j) = -reduced(i, free[j]);
  }
  return basis;
}

std::optional<Matrix> solve_any(const Matrix& m, const Matrix& b) {
  require_same_field(m.spec(), b.spec());
  if (b.rows() != m.rows())
    throw Error(ErrorCode::DimensionMismatch, "right-hand side has the wrong row count");
  Matrix augmented(m.spec(), m.rows(), m.cols() + b.cols());
  augmented.set_block(0, 0, m);
  augmented.set_block(0, m.cols(), b);
  const auto [reduced, pivots] = row_reduce(augmented);
  if (!pivots.empty() && pivots.back() >= m.cols()) return std::nullopt;

  Matrix x(m.spec(), m.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t c = 0; c < b.cols(); ++c) x(pivots[i], c) = reduced(i, m.cols() + c);
  return x;
}

Matrix solve_linear(const Matrix& m, const Matrix& b) {
  require_square(m, "solve_linear");
  if (b.rows() != m.rows() || b.cols() != 1)
    throw Error(ErrorCode::DimensionMismatch, "right-hand side must be an n x 1 column");
  if (rank(m) != m.rows()) throw Error(ErrorCode::SingularMatrix, "no unique solution");
  return *solve_any(m, b);
}

Matrix inverse(const Matrix& m) {
  require_square(m, "inverse");
  if (rank(m) != m.rows()) throw Error(ErrorCode::SingularMatrix, "matrix is not invertible");
  return *solve_any(m, Matrix::identity(m.spec(), m.rows()));
}

Matrix krylov_matrix(const Matrix& a, const Matrix& v, std::size_t count) {
  Matrix out(a.spec(), a.rows(), count);
  Matrix current = v;
  for (std::size_t j = 0; j < count; ++j) {
    out.set_block(0, j, current);
    if (j + 1 < count) current = a * current;
  }
  return out;
}

Polynomial local_minpoly(const Matrix& a, const Matrix& v) {
  require_square(a, "local_minpoly");
  require_same_field(a.spec(), v.spec());
  if (v.rows() != a.rows() || v.cols() != 1)
    throw Error(ErrorCode::DimensionMismatch, "vector does not match the matrix");
  const FieldSpec spec = a.spec();
  const std::size_t n = a.rows();

  struct Reduced {
    std::vector<FieldElement> vec;
    std::vector<FieldElement> combination;  // in terms of v, Av, A^2 v, ...
    std::size_t pivot;
  };
  std::vector<Reduced> basis;
  Matrix raw = v;
  for (std::size_t j = 0; j <= n; ++j) {
    std::vector<FieldElement> w = raw.column_vector(0);
    std::vector<FieldElement> comb(j + 1, FieldElement::zero(spec));
    comb[j] = FieldElement::one(spec);
    for (const auto& b : basis) {
      if (w[b.pivot].is_zero()) continue;
      const FieldElement f = w[b.pivot];  // basis vectors are normalised at their pivot
      for (std::size_t i = 0; i < n; ++i) w[i] -= f * b.vec[i];
      for (std::size_t i = 0; i < b.combination.size(); ++i) comb[i] -= f * b.combination[i];
    }
    const auto nz = std::find_if(w.begin(), w.end(), [](const auto& e) { return !e.is_zero(); });
    if (nz == w.end()) return Polynomial(spec, std::move(comb));

    const std::size_t pivot = static_cast<std::size_t>(nz - w.begin());
    const FieldElement inv = w[pivot].inv();
    for (auto& e : w) e *= inv;
    for (auto& e : comb) e *= inv;
    basis.push_back({std::move(w), std::move(comb), pivot});
    raw = a * raw;
  }
  throw Error(ErrorCode::InternalVerificationFailed, "Krylov sequence did not terminate");
}

Polynomial minpoly(const Matrix& a) {
  require_square(a, "minpoly");
  Polynomial m = Polynomial::constant(FieldElement::one(a.spec()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Matrix e(a.spec(), a.rows(), 1);
    e(i, 0) = FieldElement::one(a.spec());
    m = lcm(m, local_minpoly(a, e));
  }
  return m;
}

bool is_nonderogatory(const Matrix& a) {
  require_square(a, "is_nonderogatory");
  if (a.rows() == 0) return true;
  return minpoly(a).degree() == a.rows();
}

namespace {

// Splits lcm(f, g) = a * b with a | f, b | g and gcd(a, b) = 1.
std::pair<Polynomial, Polynomial> coprime_split(const Polynomial& f, const Polynomial& g) {
  Polynomial a = f;
  Polynomial b = exact_div(g, gcd(f, g));
  for (;;) {
    Polynomial common = gcd(a, b);
    if (common.degree() == 0) break;
    a = exact_div(a, common);
    b = b * common;
  }
  return {a.monic(), b.monic()};
}

Matrix unit_vector(FieldSpec spec, std::size_t n, std::size_t i) {
  Matrix e(spec, n, 1);
  e(i, 0) = FieldElement::one(spec);
  return e;
}

}  // namespace

MaximalVector maximal_vector(const Matrix& a) {
  require_square(a, "maximal_vector");
  const FieldSpec spec = a.spec();
  const std::size_t n = a.rows();
  if (n == 0) return {Matrix(spec, 0, 1), Polynomial::constant(FieldElement::one(spec))};

  Matrix w = unit_vector(spec, n, 0);
  Polynomial mw = local_minpoly(a, w);
  for (std::size_t i = 1; i < n; ++i) {
    Matrix e = unit_vector(spec, n, i);
    Polynomial me = local_minpoly(a, e);
    if (divides(me, mw)) continue;
    auto [keep_w, keep_e] = coprime_split(mw, me);
    w = evaluate(exact_div(mw, keep_w), a) * w + evaluate(exact_div(me, keep_e), a) * e;
    mw = keep_w * keep_e;
  }
  return {std::move(w), std::move(mw)};
}

SimilarityTransform cyclic_basis(const Matrix& a, const CyclicSearchOptions& options) {
  require_square(a, "cyclic_basis");
  const FieldSpec spec = a.spec();
  const std::size_t n = a.rows();
  if (!is_nonderogatory(a)) throw Error(ErrorCode::Derogatory, "matrix has no cyclic vector");

  auto try_vector = [&](const Matrix& v) -> std::optional<SimilarityTransform> {
    Matrix k = krylov_matrix(a, v, n);
    if (rank(k) != n) return std::nullopt;
    return SimilarityTransform::from(std::move(k));
  };

  for (std::size_t i = 0; i < n; ++i)
    if (auto t = try_vector(unit_vector(spec, n, i))) return *t;

  // Exhaustive canonical enumeration for tiny prime fields.
  if (spec.is_prime_field()) {
    const std::uint64_t p = spec.characteristic();
    std::uint64_t total = 1;
    bool small = true;
    for (std::size_t i = 0; i < n && small; ++i) {
      total *= p;
      small = total <= options.enumeration_limit;
    }
    if (small) {
      for (std::uint64_t index = 1; index < total; ++index) {
        Matrix v(spec, n, 1);
        std::uint64_t rest = index;
        for (std::size_t i = n; i-- > 0;) {
          v(i, 0) = FieldElement(spec, static_cast<long>(rest % p));
          rest /= p;
        }
        if (auto t = try_vector(v)) return *t;
      }
      throw Error(ErrorCode::CyclicSearchExhausted, "enumerated every vector of " +
                                                        spec.to_string() + "^" +
                                                        std::to_string(n));
    }
  }

  std::mt19937_64 rng(options.seed);
  for (std::size_t attempt = 0; attempt < options.random_attempts; ++attempt) {
    Matrix v(spec, n, 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (spec.is_rationals())
        v(i, 0) = FieldElement(spec, static_cast<long>(rng() % 7) - 3);
      else
        v(i, 0) = FieldElement(spec, static_cast<long>(rng() % spec.characteristic()));
    }
    if (auto t = try_vector(v)) return *t;
  }

  // Random probing missed; the coprime-splitting construction always succeeds
  // for a non-derogatory matrix.
  if (auto t = try_vector(maximal_vector(a).vector)) return *t;
  throw Error(ErrorCode::CyclicSearchExhausted, "no cyclic vector found");
}

}  // namespace charforge
