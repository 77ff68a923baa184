#include "charforge/decompose.hpp"

#include <algorithm>
#include <numeric>

#include "charforge/canon.hpp"

namespace charforge {

std::string_view to_string(DecompositionKind kind) noexcept {
  switch (kind) {
    case DecompositionKind::Diagonalizable: return "diagonalizable";
    case DecompositionKind::Invertible: return "invertible";
    case DecompositionKind::Potent: return "potent";
    case DecompositionKind::Torsion: return "torsion";
  }
  return "unknown";
}

std::optional<DecompositionKind> parse_decomposition_kind(std::string_view name) noexcept {
  if (name == "diagonalizable") return DecompositionKind::Diagonalizable;
  if (name == "invertible") return DecompositionKind::Invertible;
  if (name == "potent") return DecompositionKind::Potent;
  if (name == "torsion") return DecompositionKind::Torsion;
  return std::nullopt;
}

namespace {

// Shared tail: forge q, split A = (A + N) + (-N) and re-check.
DecompositionCertificate finish(DecompositionKind kind, const Matrix& a, const Matrix& n,
                                DecompositionEvidence evidence) {
  DecompositionCertificate cert{kind, a + n, -n, std::move(evidence)};
  if (!(cert.good + cert.nilpotent == a) || !is_square_zero(cert.nilpotent))
    throw Error(ErrorCode::InternalVerificationFailed, "decomposition does not sum to A");
  cert.evidence.charpoly = charpoly(cert.good);
  return cert;
}

DecompositionCertificate forge_power(DecompositionKind kind, const Matrix& a, std::size_t k) {
  require_square(a, "decompose");
  const FieldSpec spec = a.spec();
  const std::size_t n = a.rows();
  if (!a.trace().is_zero())
    throw Error(ErrorCode::NonzeroTrace, "trace(A) = " + a.trace().to_string());
  const bool potent = kind == DecompositionKind::Potent;
  if (potent && n < 3)
    throw Error(ErrorCode::DimensionTooSmall, "x^n - x has nonzero trace for n < 3");
  if (n < 2) throw Error(ErrorCode::DimensionTooSmall, "need n >= 2");

  std::vector<FieldElement> coeffs(n + 1, FieldElement::zero(spec));
  coeffs[n] = FieldElement::one(spec);
  coeffs[potent ? 1 : 0] = -FieldElement::one(spec);
  const Polynomial q(spec, std::move(coeffs));
  const ForgeCertificate forged = forge({a, k, q});

  DecompositionEvidence evidence{q, {}, std::nullopt, n, false};
  auto cert = finish(kind, a, forged.n, std::move(evidence));
  const Matrix powered = power(cert.good, n);
  cert.evidence.power_identity_holds =
      potent ? powered == cert.good : powered == Matrix::identity(spec, n);
  if (!cert.evidence.power_identity_holds)
    throw Error(ErrorCode::InternalVerificationFailed, "power identity failed");
  return cert;
}

// Canonical enumeration: 1, 2, ..., p-1, 0 over GF(p); 1, 2, 3, ... over Q.
std::optional<FieldElement> nth_element(FieldSpec spec, std::uint64_t index) {
  if (spec.is_prime_field()) {
    const std::uint64_t p = spec.characteristic();
    if (index >= p) return std::nullopt;
    return FieldElement(spec, static_cast<long>((index + 1) % p));
  }
  return FieldElement(spec, static_cast<long>(index + 1));
}

}  // namespace

std::vector<FieldElement> choose_distinct_eigenvalues(const FieldElement& trace, std::size_t n) {
  const FieldSpec spec = trace.spec();
  if (n == 0) throw Error(ErrorCode::BadDimension, "n must be positive");
  if (auto order = spec.order(); order && *order < n)
    throw Error(ErrorCode::FieldTooSmall,
                spec.to_string() + " has fewer than " + std::to_string(n) + " elements");
  if (n == 1) return {trace};

  std::vector<FieldElement> alpha;
  FieldElement sum = FieldElement::zero(spec);
  for (std::uint64_t i = 0; i + 2 < n; ++i) {
    alpha.push_back(*nth_element(spec, i));
    sum += alpha.back();
  }
  auto used = [&](const FieldElement& x) {
    return std::find(alpha.begin(), alpha.end(), x) != alpha.end();
  };
  for (std::uint64_t index = n - 2;; ++index) {
    auto candidate = nth_element(spec, index);
    if (!candidate) break;
    const FieldElement last = trace - sum - *candidate;
    if (used(last) || last == *candidate) continue;
    alpha.push_back(*candidate);
    alpha.push_back(last);
    return alpha;
  }
  // The rule above can run dry in small fields even when a solution exists.
  // Take the first n elements and move one of them by the missing amount:
  // a proper subset of GF(p) is never closed under a nonzero translation,
  // so this fails only when n = p and the trace is not the full sum.
  std::vector<FieldElement> first;
  FieldElement total = FieldElement::zero(spec);
  for (std::uint64_t i = 0; i < n; ++i) {
    first.push_back(*nth_element(spec, i));
    total += first.back();
  }
  const FieldElement shift = trace - total;
  if (shift.is_zero()) return first;
  for (auto it = first.rbegin(); it != first.rend(); ++it) {
    const FieldElement moved = *it + shift;
    if (std::find(first.begin(), first.end(), moved) == first.end()) {
      *it = moved;
      return first;
    }
  }
  throw Error(ErrorCode::FieldTooSmall, "no distinct eigenvalues with sum " + trace.to_string() +
                                            " in " + spec.to_string());
}

DecompositionCertificate decompose_diagonalizable(const Matrix& a, std::size_t k) {
  require_square(a, "decompose");
  const FieldSpec spec = a.spec();
  const auto alpha = choose_distinct_eigenvalues(a.trace(), a.rows());
  Polynomial q = Polynomial::constant(FieldElement::one(spec));
  for (const auto& e : alpha) q *= Polynomial(spec, {-e, FieldElement::one(spec)});
  const ForgeCertificate forged = forge({a, k, q});
  return finish(DecompositionKind::Diagonalizable, a, forged.n,
                {q, alpha, std::nullopt, std::nullopt, false});
}

std::vector<std::size_t> distribute_zero_rows(const std::vector<Polynomial>& factors,
                                              std::size_t k) {
  std::vector<std::size_t> order(factors.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return factors[x].degree() > factors[y].degree();
  });
  std::vector<std::size_t> counts(factors.size(), 0);
  std::size_t remaining = k;
  for (std::size_t j : order) {
    const std::size_t take = std::min(remaining, factors[j].degree() - 1);
    counts[j] = take;
    remaining -= take;
  }
  if (remaining > 0)
    throw Error(ErrorCode::GroupingInfeasible,
                std::to_string(k) + " zero rows exceed the capacity " + std::to_string(k - remaining) +
                    " of the invariant-factor blocks");
  return counts;
}

DecompositionCertificate decompose_invertible(const Matrix& a, std::size_t k) {
  require_square(a, "decompose");
  const FieldSpec spec = a.spec();
  const std::size_t n = a.rows();
  // Shape and trace checks reuse forge's validation against q = charpoly(A).
  validate({a, k, charpoly(a)});
  if (k >= n - k)
    throw Error(ErrorCode::EqualSplitUnsupported,
                "k=" + std::to_string(k) + " is not below n-k=" + std::to_string(n - k));
  const Matrix a22 = a.block(k, k, n - k, n - k);
  if (determinant(a22).is_zero()) throw Error(ErrorCode::NotInvertible, "A22 is singular");

  DecompositionEvidence evidence{Polynomial(spec), {}, std::nullopt, std::nullopt, false};
  if (k == 0) {
    auto cert = finish(DecompositionKind::Invertible, a, Matrix(spec, n, n), std::move(evidence));
    cert.evidence.determinant = determinant(cert.good);
    return cert;
  }

  const FrobeniusForm frob = frobenius_blocks(a22);
  const auto counts = distribute_zero_rows(frob.factors, k);

  // Basis order of the forge-friendly frame: for each block j its k_j zero
  // rows followed by the block itself. `position` maps that frame to the
  // frame diag(0_k, C(f_1), ..., C(f_t)).
  std::vector<std::size_t> position;
  std::vector<Matrix> local_n;
  std::size_t zero_cursor = 0;
  std::size_t block_cursor = k;
  for (std::size_t j = 0; j < frob.blocks.size(); ++j) {
    const std::size_t kj = counts[j];
    const std::size_t dj = frob.factors[j].degree();
    for (std::size_t z = 0; z < kj; ++z) position.push_back(zero_cursor++);
    for (std::size_t b = 0; b < dj; ++b) position.push_back(block_cursor++);
    if (kj == 0) {
      local_n.emplace_back(spec, dj, dj);
      continue;
    }
    const std::size_t size = kj + dj;
    std::vector<FieldElement> coeffs(size + 1, FieldElement::zero(spec));
    coeffs[size] = FieldElement::one(spec);
    coeffs[size - 1] = frob.factors[j].coeff(dj - 1);
    coeffs[0] += FieldElement::one(spec);
    const Polynomial qj(spec, std::move(coeffs));
    const Matrix local_a = block_diagonal({Matrix(spec, kj, kj), frob.blocks[j]});
    local_n.push_back(forge({local_a, kj, qj}).n);
  }

  const Matrix grouped = block_diagonal(std::span<const Matrix>(local_n));
  Matrix n_frame(spec, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) n_frame(position[r], position[c]) = grouped(r, c);

  const Matrix d = block_diagonal({Matrix::identity(spec, k), frob.transform.forward()});
  const Matrix d_inv = block_diagonal({Matrix::identity(spec, k), frob.transform.inverse()});
  const Matrix n_out = d * n_frame * d_inv;

  auto cert = finish(DecompositionKind::Invertible, a, n_out, std::move(evidence));
  cert.evidence.determinant = determinant(cert.good);
  if (cert.evidence.determinant->is_zero() || cert.evidence.charpoly.coeff(0).is_zero())
    throw Error(ErrorCode::InternalVerificationFailed, "good part is singular");
  return cert;
}

DecompositionCertificate decompose_potent(const Matrix& a, std::size_t k) {
  return forge_power(DecompositionKind::Potent, a, k);
}

DecompositionCertificate decompose_torsion(const Matrix& a, std::size_t k) {
  return forge_power(DecompositionKind::Torsion, a, k);
}

DecompositionCertificate decompose(DecompositionKind kind, const Matrix& a, std::size_t k) {
  switch (kind) {
    case DecompositionKind::Diagonalizable: return decompose_diagonalizable(a, k);
    case DecompositionKind::Invertible: return decompose_invertible(a, k);
    case DecompositionKind::Potent: return decompose_potent(a, k);
    case DecompositionKind::Torsion: return decompose_torsion(a, k);
  }
  throw Error(ErrorCode::BadShape, "unknown decomposition kind");
}

}  // namespace charforge
