#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "charforge/matrix.hpp"
#include "charforge/polynomial.hpp"

namespace charforge {

/// Invertible change of basis. The pair is checked (T * T_inv = I) at
/// construction.
class SimilarityTransform {
 public:
  SimilarityTransform(Matrix forward, Matrix inverse);
  /// Computes the inverse; throws SingularMatrix.
  static SimilarityTransform from(Matrix forward);
  static SimilarityTransform identity(FieldSpec spec, std::size_t n);

  const Matrix& forward() const noexcept { return forward_; }
  const Matrix& inverse() const noexcept { return inverse_; }
  bool is_identity() const;

  /// T^-1 * a * T.
  Matrix conjugate(const Matrix& a) const;
  /// T * b * T^-1, undoing conjugate().
  Matrix unconjugate(const Matrix& b) const;

 private:
  Matrix forward_;
  Matrix inverse_;
};

/// Companion matrix: ones on the subdiagonal, last column -u_0..-u_{m-1}.
/// Throws NotMonic, or ZeroDegree for constants.
Matrix companion(const Polynomial& p);

/// det(xI - A) by Berkowitz's division-free recurrence. Throws NotSquare.
Polynomial charpoly(const Matrix& a);
/// Throws NotSquare.
FieldElement determinant(const Matrix& a);
/// p(A) by Horner's rule.
Matrix evaluate(const Polynomial& p, const Matrix& a);

bool is_square_zero(const Matrix& n);

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form with first-nonzero pivoting.
RowEchelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Columns form a basis of {x : m x = 0}; zero columns when trivial.
Matrix nullspace(const Matrix& m);
/// Unique solution of m x = b for square invertible m. Throws SingularMatrix
/// or DimensionMismatch.
Matrix solve_linear(const Matrix& m, const Matrix& b);
/// Some solution of m x = b (free variables zero), or nullopt if none.
std::optional<Matrix> solve_any(const Matrix& m, const Matrix& b);
/// Throws SingularMatrix.
Matrix inverse(const Matrix& m);

/// [v, Av, ..., A^(count-1) v] as columns.
Matrix krylov_matrix(const Matrix& a, const Matrix& v, std::size_t count);
/// Monic generator of {f : f(A) v = 0}.
Polynomial local_minpoly(const Matrix& a, const Matrix& v);
/// lcm of the local minimal polynomials of the standard basis vectors.
Polynomial minpoly(const Matrix& a);
bool is_nonderogatory(const Matrix& a);

struct MaximalVector {
  Matrix vector;
  Polynomial annihilator;
};

/// A vector whose local minimal polynomial equals minpoly(A), built by
/// merging standard basis vectors pairwise through coprime splitting.
MaximalVector maximal_vector(const Matrix& a);

struct CyclicSearchOptions {
  std::uint64_t seed = 0x5EED;
  std::size_t random_attempts = 64;
  /// Enumerate every vector of GF(p)^n when p^n is at most this.
  std::uint64_t enumeration_limit = std::uint64_t{1} << 16;
};

/// Transform T with T^-1 A T = companion(charpoly(A)); T's columns are the
/// Krylov sequence of a cyclic vector. Throws Derogatory.
SimilarityTransform cyclic_basis(const Matrix& a, const CyclicSearchOptions& options = {});

}  // namespace charforge
