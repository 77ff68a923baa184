#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "charforge/error.hpp"

namespace charforge {

/// The scalar domain: the rationals or a prime field GF(p) with p < 2^31.
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;

  static FieldSpec rationals() noexcept { return FieldSpec(Kind::Rationals, 0); }
  /// Throws InvalidField unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
  bool is_prime_field() const noexcept { return kind_ == Kind::PrimeField; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return p_; }
  /// Number of elements, or nullopt for an infinite field.
  std::optional<std::uint64_t> order() const noexcept {
    if (is_rationals()) return std::nullopt;
    return p_;
  }

  /// "Q" or "GF(p)".
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint32_t p) noexcept : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// An exact scalar. Rationals are kept in lowest terms with positive
/// denominator; residues in [0, p). Equality compares canonical forms.
class FieldElement {
 public:
  FieldElement(FieldSpec spec, long value);
  FieldElement(FieldSpec spec, const mpz_class& value);
  /// Rationals only (FieldMismatch otherwise); for GF(p) use the integer forms.
  FieldElement(FieldSpec spec, const mpq_class& value);

  static FieldElement zero(FieldSpec spec) { return FieldElement(spec, 0L); }
  static FieldElement one(FieldSpec spec) { return FieldElement(spec, 1L); }

  /// Canonical literals: "a/b" or "a" over Q, a bare (possibly negative)
  /// integer over GF(p). Throws ParseError.
  static FieldElement parse(FieldSpec spec, std::string_view literal);
  std::string to_string() const;

  const FieldSpec& spec() const noexcept { return spec_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Residue in [0, p); FieldMismatch over Q.
  std::uint32_t residue() const;
  /// FieldMismatch over GF(p).
  const mpq_class& rational() const;

  /// Throws DivisionByZero for zero.
  FieldElement inv() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Canonical total order used for deterministic enumeration: residues
  /// ascending over GF(p), numeric order over Q.
  friend std::strong_ordering canonical_compare(const FieldElement& a, const FieldElement& b);

 private:
  void require_same_field(const FieldElement& other) const;

  FieldSpec spec_;
  std::variant<std::uint32_t, mpq_class> value_;
};

/// Throws FieldMismatch when the two specs differ.
void require_same_field(const FieldSpec& a, const FieldSpec& b);

}  // namespace charforge
