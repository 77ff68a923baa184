#include "charforge/polynomial.hpp"

#include <algorithm>

namespace charforge {

Polynomial::Polynomial(FieldSpec spec, std::vector<FieldElement> coeffs)
    : spec_(spec), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) require_same_field(spec_, c.spec());
  trim();
}

Polynomial Polynomial::from_ints(FieldSpec spec, const std::vector<long>& ascending) {
  std::vector<FieldElement> coeffs;
  coeffs.reserve(ascending.size());
  for (long c : ascending) coeffs.emplace_back(spec, c);
  return Polynomial(spec, std::move(coeffs));
}

Polynomial Polynomial::constant(const FieldElement& c) {
  return Polynomial(c.spec(), {c});
}

Polynomial Polynomial::monomial(const FieldElement& c, std::size_t degree) {
  std::vector<FieldElement> coeffs(degree + 1, FieldElement::zero(c.spec()));
  coeffs[degree] = c;
  return Polynomial(c.spec(), std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::size_t Polynomial::degree() const {
  if (coeffs_.empty()) throw Error(ErrorCode::ZeroDegree, "degree of the zero polynomial");
  return coeffs_.size() - 1;
}

FieldElement Polynomial::coeff(std::size_t i) const {
  if (i < coeffs_.size()) return coeffs_[i];
  return FieldElement::zero(spec_);
}

const FieldElement& Polynomial::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::ZeroDegree, "leading coefficient of zero");
  return coeffs_.back();
}

Polynomial Polynomial::monic() const {
  if (is_zero() || is_monic()) return *this;
  return *this * leading().inv();
}

FieldElement Polynomial::evaluate(const FieldElement& at) const {
  require_same_field(spec_, at.spec());
  FieldElement acc = FieldElement::zero(spec_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial(spec_);
  std::vector<FieldElement> out;
  out.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out.push_back(coeffs_[i] * FieldElement(spec_, static_cast<long>(i)));
  return Polynomial(spec_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_field(spec_, rhs.spec_);
  if (coeffs_.size() < rhs.coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size(), FieldElement::zero(spec_));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_field(spec_, rhs.spec_);
  if (coeffs_.size() < rhs.coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size(), FieldElement::zero(spec_));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.spec_, b.spec_);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.spec_);
  std::vector<FieldElement> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                                FieldElement::zero(a.spec_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(a.spec_, std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const FieldElement& c) {
  require_same_field(spec_, c.spec());
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

std::string Polynomial::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const auto& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string lit = c.to_string();
    const bool neg = spec_.is_rationals() && lit.front() == '-';
    if (neg) lit.erase(0, 1);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    const bool unit = lit == "1";
    if (i == 0) {
      out += lit;
      continue;
    }
    if (!unit) out += lit + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

DivMod divmod(const Polynomial& f, const Polynomial& g) {
  require_same_field(f.spec(), g.spec());
  if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const FieldSpec spec = f.spec();
  if (f.is_zero() || f.degree() < g.degree()) return {Polynomial(spec), f};

  std::vector<FieldElement> rem(f.coeffs().begin(), f.coeffs().end());
  const std::size_t dg = g.degree();
  const FieldElement lead_inv = g.leading().inv();
  std::vector<FieldElement> quot(rem.size() - dg, FieldElement::zero(spec));
  for (std::size_t i = rem.size(); i-- > dg;) {
    if (rem[i].is_zero()) continue;
    const FieldElement factor = rem[i] * lead_inv;
    quot[i - dg] = factor;
    for (std::size_t j = 0; j <= dg; ++j) rem[i - dg + j] -= factor * g.coeffs()[j];
  }
  rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(dg), rem.end());
  return {Polynomial(spec, std::move(quot)), Polynomial(spec, std::move(rem))};
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  require_same_field(f.spec(), g.spec());
  Polynomial a = f, b = g;
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial lcm(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return Polynomial(f.spec());
  return exact_div(f * g, gcd(f, g)).monic();
}

Polynomial exact_div(const Polynomial& f, const Polynomial& g) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero())
    throw Error(ErrorCode::InternalVerificationFailed,
                g.to_string() + " does not divide " + f.to_string());
  return q;
}

bool divides(const Polynomial& g, const Polynomial& f) {
  if (g.is_zero()) return f.is_zero();
  return divmod(f, g).remainder.is_zero();
}

bool degree_less(const Polynomial& f, const Polynomial& g) noexcept {
  if (g.is_zero()) return false;
  if (f.is_zero()) return true;
  return f.coeffs().size() < g.coeffs().size();
}

FieldElement poly_trace(const Polynomial& q) {
  if (q.is_zero() || q.degree() == 0)
    throw Error(ErrorCode::ZeroDegree, "trace needs degree >= 1, got " + q.to_string());
  if (!q.is_monic()) throw Error(ErrorCode::NotMonic, q.to_string());
  return -q.coeff(q.degree() - 1);
}

}  // namespace charforge
