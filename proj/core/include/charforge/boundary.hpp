#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "charforge/linalg.hpp"

namespace charforge {

/// [[X, -X^2], [I_k, -X]]; square-zero for every square X. Throws NotSquare.
Matrix normal_form_N(const Matrix& x);

/// diag(0, 0) + [[0, -1], [1, 0]] over the given field.
Matrix quartic_base_matrix(FieldSpec spec);

/// x^4 + (n12 - n21 + 1) x^2 - (n11 + n22) x + n11 n22 - n12 n21, i.e.
/// charpoly(quartic_base_matrix + normal_form_N(X)). Throws BadDimension
/// unless X is 2x2.
Polynomial quartic_charpoly(const Matrix& x);

/// Symbolic non-existence argument over an ordered field: substituting the
/// coefficient equations for x^4 + 1 into the closed form leaves
/// n11^2 + n12^2 + n12 + 1 = 0, identical to n11^2 + (n12 + 1/2)^2 + 3/4.
struct SumOfSquaresCertificate {
  std::string reduced_equation;
  std::string sum_of_squares;
  /// Both forms expanded and compared as polynomials in n11, n12.
  bool identity_verified = false;
  /// The x^2 and x equations are solved identically by the substitution.
  bool substitution_consistent = false;
};

SumOfSquaresCertificate quartic_sos_certificate();

struct QuarticResult {
  /// Set when a 2x2 X realises x^4 + 1; first in canonical order.
  std::optional<Matrix> witness;
  /// Set for the rationals, where no witness exists.
  std::optional<SumOfSquaresCertificate> certificate;

  bool no_solution() const noexcept { return !witness.has_value(); }
};

/// Decides whether some square-zero N gives charpoly x^4 + 1 for the
/// quartic base matrix.
QuarticResult check_quartic_counterexample(FieldSpec spec);

/// X in M_k(GF(p)) at position `index` of the canonical order: entries are
/// base-p digits, row-major, first entry most significant.
Matrix matrix_from_index(FieldSpec spec, std::size_t k, std::uint64_t index);

struct SearchOptions {
  std::uint64_t budget = std::uint64_t{1} << 20;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct EqualSplitResult {
  /// First X (canonical order) with charpoly(A + normal_form_N(X)) = q.
  std::optional<Matrix> witness;
  /// Candidates examined, p^(k^2) when exhausted.
  std::uint64_t examined = 0;

  bool exhausted() const noexcept { return !witness.has_value(); }
};

/// Exhaustive search at n = 2k for A = diag(0_k, C(p)). Throws
/// UnsupportedInfiniteField, NonInvertibleTarget, BudgetExceeded, BadShape,
/// NotMonic or TraceMismatch.
EqualSplitResult search_equal_split(const Polynomial& p, const Polynomial& q,
                                    const SearchOptions& options = {});
/// Same, reading p off A; A must be exactly diag(0_k, C(p)) with n = 2k.
EqualSplitResult search_equal_split(const Matrix& a, const Polynomial& q,
                                    const SearchOptions& options = {});

}  // namespace charforge
