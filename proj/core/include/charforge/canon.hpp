#pragma once

#include <vector>

#include "charforge/linalg.hpp"
#include "charforge/poly_matrix.hpp"

namespace charforge {

/// Non-unit invariant factors f_1 | f_2 | ... | f_t of xI - A, all monic.
struct InvariantFactors {
  std::vector<Polynomial> factors;
};

/// Diagonal of the Smith normal form, monic, in divisibility order
/// (units included). Destroys nothing: works on a copy.
std::vector<Polynomial> smith_diagonal(PolyMatrix m);

/// Smith normal form of xI - A over F[x]. Throws NotSquare.
InvariantFactors invariant_factors(const Matrix& a);

struct FrobeniusForm {
  /// C(f_1), ..., C(f_t) in divisibility order.
  std::vector<Matrix> blocks;
  std::vector<Polynomial> factors;
  /// T^-1 A T = block_diagonal(blocks).
  SimilarityTransform transform;
};

/// Rational canonical form by repeated cyclic-subspace splitting over F.
FrobeniusForm frobenius_blocks(const Matrix& a);

}  // namespace charforge
