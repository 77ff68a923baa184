#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "charforge/linalg.hpp"
#include "charforge/poly_matrix.hpp"

namespace charforge {

/// A = diag(0_k, A22) together with a monic target q of degree n.
struct ForgeProblem {
  Matrix a;
  std::size_t k;
  Polynomial q;

  std::size_t n() const noexcept { return a.rows(); }
  /// Lower-right (n-k) x (n-k) block.
  Matrix a22() const { return a.block(k, k, a.rows() - k, a.cols() - k); }
};

/// Checks block shape, monic degree-n target and trace agreement; does not
/// look at A22's invertibility. Throws NotSquare, BadBlockShape, NotMonic,
/// DegreeMismatch, FieldMismatch or TraceMismatch.
void validate(const ForgeProblem& problem);

/// Free coefficients a_{i,s}, 1-based, on {1..k} x {k+1..n-k+1}.
class ForgeParameters {
 public:
  /// All-zero assignment. Throws BadShape unless 1 <= k < n-k.
  ForgeParameters(FieldSpec spec, std::size_t n, std::size_t k);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  const FieldSpec& spec() const noexcept { return spec_; }

  bool in_domain(std::size_t i, std::size_t s) const noexcept;
  /// Throws IndexDomainMismatch outside the domain.
  const FieldElement& at(std::size_t i, std::size_t s) const;
  void set(std::size_t i, std::size_t s, FieldElement value);

  const std::map<std::pair<std::size_t, std::size_t>, FieldElement>& values() const noexcept {
    return values_;
  }

 private:
  FieldSpec spec_;
  std::size_t n_;
  std::size_t k_;
  std::map<std::pair<std::size_t, std::size_t>, FieldElement> values_;
};

/// The square-zero family N = sum_i (e_i - e_{n-i+1}) r_i^T. Throws
/// BadShape, or IndexDomainMismatch when params were built for another shape.
Matrix build_parametric_N(std::size_t n, std::size_t k, const ForgeParameters& params);

struct SelectedParameter {
  std::size_t i;
  std::size_t s;
  /// Lowest power of x in which a_{i,s} enters charpoly(A + N).
  std::size_t min_degree;

  friend bool operator==(const SelectedParameter&, const SelectedParameter&) = default;
};

/// The n-1 parameters whose coefficient polynomials span degrees 0..n-2,
/// rows i < k first (s = k+1, k+2), then row k. Throws BadShape.
std::vector<SelectedParameter> selected_parameters(std::size_t n, std::size_t k);

/// k = 0: N whose last column carries u_{i-1} - v_{i-1} above the diagonal,
/// so that companion(p) + N = companion(q). Throws NotMonic,
/// DegreeMismatch or TraceMismatch.
Matrix forge_k0(const Polynomial& p, const Polynomial& q);

/// Probe columns of the affine map a -> coeffs(charpoly(A + N(a))), in
/// selected-parameter order sorted by min_degree.
struct ProbeReport {
  std::vector<SelectedParameter> parameters;
  /// (n-1) x (n-1): row d is the x^d coefficient, column j the j-th probe.
  Matrix probe;
  /// probe(d_j, j) for each column; nonzero multiples of u_0.
  std::vector<FieldElement> pivots;
  /// Every column vanishes below its min_degree.
  bool lower_triangular;
};

struct ForgeCertificate {
  Matrix n;
  Polynomial q_achieved;
  /// diag(I_k, T) with T^-1 A22 T = companion(charpoly(A22)).
  SimilarityTransform transform;
  /// Whether A + N happens to be non-derogatory (diagnostic only).
  bool nonderogatory_result;
  /// Present for k >= 1.
  std::optional<ProbeReport> probe;
};

/// Square-zero N with charpoly(A + N) = q. Throws the validate() errors,
/// plus NotInvertible, Derogatory, EqualSplitUnsupported (k >= n-k) and
/// InternalVerificationFailed.
ForgeCertificate forge(const ForgeProblem& problem);

/// Structured determinant instance: a_1..a_n and u_2..u_n.
struct ArrowInstance {
  std::vector<FieldElement> a;
  std::vector<FieldElement> u;

  std::size_t n() const noexcept { return a.size(); }
};

/// Closed form x^n + (u_n + a_1 - a_n) x^(n-1) + (a_1 u_n + sum a_i u_i) x^(n-2).
/// Throws BadDimension.
Polynomial arrow_det(const ArrowInstance& inst);
/// The arrow-shaped matrix over F[x] whose determinant arrow_det gives.
PolyMatrix arrow_matrix(const ArrowInstance& inst);

}  // namespace charforge
