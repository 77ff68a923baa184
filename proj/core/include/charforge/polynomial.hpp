#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "charforge/field.hpp"

namespace charforge {

/// Dense univariate polynomial, coefficients in ascending degree with no
/// trailing zeros. The zero polynomial has no coefficients and no degree.
class Polynomial {
 public:
  explicit Polynomial(FieldSpec spec) : spec_(spec) {}
  Polynomial(FieldSpec spec, std::vector<FieldElement> coeffs);

  static Polynomial from_ints(FieldSpec spec, const std::vector<long>& ascending);
  static Polynomial constant(const FieldElement& c);
  /// c * x^degree.
  static Polynomial monomial(const FieldElement& c, std::size_t degree);
  static Polynomial x(FieldSpec spec) { return monomial(FieldElement::one(spec), 1); }

  const FieldSpec& spec() const noexcept { return spec_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Throws ZeroDegree for the zero polynomial.
  std::size_t degree() const;
  std::span<const FieldElement> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  FieldElement coeff(std::size_t i) const;
  const FieldElement& leading() const;
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back().is_one(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  /// Scales to leading coefficient one; the zero polynomial stays zero.
  Polynomial monic() const;
  FieldElement evaluate(const FieldElement& at) const;
  Polynomial derivative() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const FieldElement& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const FieldElement& c) { return a *= c; }
  friend Polynomial operator*(const FieldElement& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Human-readable form, highest degree first: "x^3 + 2*x^2 + 5".
  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();

  FieldSpec spec_;
  std::vector<FieldElement> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// f = q*g + r with deg r < deg g. Throws DivisionByZero when g = 0.
DivMod divmod(const Polynomial& f, const Polynomial& g);
/// Monic gcd; zero only when both inputs are zero.
Polynomial gcd(const Polynomial& f, const Polynomial& g);
/// Monic lcm; zero if either input is zero.
Polynomial lcm(const Polynomial& f, const Polynomial& g);
/// Exact quotient; throws InternalVerificationFailed if g does not divide f.
Polynomial exact_div(const Polynomial& f, const Polynomial& g);
bool divides(const Polynomial& g, const Polynomial& f);
/// Degree comparison with deg 0 = -infinity.
bool degree_less(const Polynomial& f, const Polynomial& g) noexcept;

/// Trace of a monic polynomial: the negated x^(n-1) coefficient.
/// Throws NotMonic or ZeroDegree (constant input).
FieldElement poly_trace(const Polynomial& q);

}  // namespace charforge
