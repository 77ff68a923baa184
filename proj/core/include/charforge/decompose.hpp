#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "charforge/forge.hpp"

namespace charforge {

enum class DecompositionKind { Diagonalizable, Invertible, Potent, Torsion };

std::string_view to_string(DecompositionKind kind) noexcept;
/// Accepts the lowercase names used on the command line; nullopt otherwise.
std::optional<DecompositionKind> parse_decomposition_kind(std::string_view name) noexcept;

struct DecompositionEvidence {
  /// charpoly(good).
  Polynomial charpoly;
  /// Diagonalizable: the distinct eigenvalues prescribed.
  std::vector<FieldElement> eigenvalues;
  /// Invertible: det(good).
  std::optional<FieldElement> determinant;
  /// Potent/Torsion: the exponent m checked by direct powering.
  std::optional<std::size_t> power_exponent;
  bool power_identity_holds = false;
};

/// A = good + nilpotent with nilpotent^2 = 0.
struct DecompositionCertificate {
  DecompositionKind kind;
  Matrix good;
  Matrix nilpotent;
  DecompositionEvidence evidence;
};

/// Distinct eigenvalues summing to `trace`, chosen deterministically.
/// Throws FieldTooSmall.
std::vector<FieldElement> choose_distinct_eigenvalues(const FieldElement& trace, std::size_t n);

DecompositionCertificate decompose_diagonalizable(const Matrix& a, std::size_t k);
/// A22 need not be non-derogatory. Throws GroupingInfeasible when the zero
/// rows cannot be spread over the Frobenius blocks.
DecompositionCertificate decompose_invertible(const Matrix& a, std::size_t k);
/// Requires trace(A) = 0 and n >= 3.
DecompositionCertificate decompose_potent(const Matrix& a, std::size_t k);
/// Requires trace(A) = 0.
DecompositionCertificate decompose_torsion(const Matrix& a, std::size_t k);

DecompositionCertificate decompose(DecompositionKind kind, const Matrix& a, std::size_t k);

/// Zero-row counts per Frobenius block: largest blocks first, at most
/// deg f_j - 1 each. Throws GroupingInfeasible.
std::vector<std::size_t> distribute_zero_rows(const std::vector<Polynomial>& factors,
                                              std::size_t k);

}  // namespace charforge
