#include "charforge/canon.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <tuple>

namespace charforge {

namespace {

// Position of the lowest-degree nonzero entry in the trailing submatrix.
std::optional<std::pair<std::size_t, std::size_t>> lowest_degree_entry(const PolyMatrix& m,
                                                                       std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t r = t; r < m.rows(); ++r)
    for (std::size_t c = t; c < m.cols(); ++c) {
      const auto& e = m(r, c);
      if (e.is_zero()) continue;
      if (!best || e.degree() < m(best->first, best->second).degree()) best = {r, c};
    }
  return best;
}

}  // namespace

std::vector<Polynomial> smith_diagonal(PolyMatrix m) {
  const std::size_t size = std::min(m.rows(), m.cols());
  std::size_t t = 0;
  for (; t < size; ++t) {
    const auto found = lowest_degree_entry(m, t);
    if (!found) break;
    auto [pivot_row, pivot_col] = *found;
    for (;;) {
      m.swap_rows(t, pivot_row);
      m.swap_cols(t, pivot_col);
      bool clean = true;
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (m(r, t).is_zero()) continue;
        m.sub_row_multiple(r, t, divmod(m(r, t), m(t, t)).quotient);
        clean = clean && m(r, t).is_zero();
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (m(t, c).is_zero()) continue;
        m.sub_col_multiple(c, t, divmod(m(t, c), m(t, t)).quotient);
        clean = clean && m(t, c).is_zero();
      }
      if (clean) break;
      // A nonzero remainder of lower degree now sits in row/column t.
      std::tie(pivot_row, pivot_col) = lowest_degree_entry(m, t).value();
    }
  }

  std::vector<Polynomial> diag;
  for (std::size_t i = 0; i < t; ++i) diag.push_back(m(i, i).monic());
  // diag(a, b) is equivalent to diag(gcd, lcm); sweeping all pairs yields
  // the divisibility chain.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (divides(diag[i], diag[j])) continue;
      Polynomial g = gcd(diag[i], diag[j]);
      Polynomial l = lcm(diag[i], diag[j]);
      diag[i] = std::move(g);
      diag[j] = std::move(l);
    }
  return diag;
}

InvariantFactors invariant_factors(const Matrix& a) {
  require_square(a, "invariant_factors");
  InvariantFactors out;
  for (auto& f : smith_diagonal(PolyMatrix::characteristic(a)))
    if (f.degree() > 0) out.factors.push_back(std::move(f));
  return out;
}

FrobeniusForm frobenius_blocks(const Matrix& a) {
  require_square(a, "frobenius_blocks");
  const FieldSpec spec = a.spec();
  const std::size_t n = a.rows();

  // Invariant subspace spanned by the columns of `basis`; `restricted` is
  // the action of A in those coordinates (A * basis = basis * restricted).
  Matrix basis = Matrix::identity(spec, n);
  Matrix restricted = a;
  std::vector<Matrix> blocks;
  std::vector<Polynomial> factors;
  std::vector<Matrix> columns;

  while (restricted.rows() > 0) {
    const std::size_t r = restricted.rows();
    auto [v, m] = maximal_vector(restricted);
    const std::size_t d = m.degree();
    Matrix krylov = krylov_matrix(restricted, v, d);
    blocks.push_back(companion(m));
    factors.push_back(m);
    columns.push_back(basis * krylov);
    if (d == r) break;

    // phi(A^i v) = [i == d-1]; the common kernel of phi A^i, i < d, is an
    // invariant complement of the cyclic subspace because m annihilates A.
    Matrix last(spec, d, 1);
    last(d - 1, 0) = FieldElement::one(spec);
    auto phi = solve_any(krylov.transpose(), last);
    if (!phi) throw Error(ErrorCode::InternalVerificationFailed, "Krylov block lost rank");
    Matrix functionals(spec, d, r);
    Matrix row = phi->transpose();
    for (std::size_t i = 0; i < d; ++i) {
      functionals.set_block(i, 0, row);
      row = row * restricted;
    }
    Matrix complement = nullspace(functionals);
    auto next = solve_any(complement, restricted * complement);
    if (!next || complement.cols() != r - d)
      throw Error(ErrorCode::InternalVerificationFailed, "complement is not invariant");
    basis = basis * complement;
    restricted = std::move(*next);
  }

  // Factors were found largest first. A stable sort by degree yields the
  // divisibility order while leaving equal factors (and so scalar matrices)
  // in their original basis order.
  std::vector<std::size_t> order(blocks.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return factors[x].degree() < factors[y].degree();
  });
  std::vector<Matrix> sorted_blocks;
  std::vector<Polynomial> sorted_factors;
  Matrix t(spec, n, n);
  std::size_t offset = 0;
  for (std::size_t j : order) {
    sorted_blocks.push_back(std::move(blocks[j]));
    sorted_factors.push_back(std::move(factors[j]));
    t.set_block(0, offset, columns[j]);
    offset += columns[j].cols();
  }
  blocks = std::move(sorted_blocks);
  factors = std::move(sorted_factors);
  auto transform = SimilarityTransform::from(std::move(t));
  if (!(transform.conjugate(a) == block_diagonal(std::span<const Matrix>(blocks))))
    throw Error(ErrorCode::InternalVerificationFailed, "Frobenius transform does not conjugate");
  return {std::move(blocks), std::move(factors), std::move(transform)};
}

}  // namespace charforge
