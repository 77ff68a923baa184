#include "charforge/field.hpp"

#include <cctype>

namespace charforge {

namespace {

std::uint32_t reduce(long value, std::uint32_t p) {
  long r = value % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce(const mpz_class& value, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > kMaxPrime || !is_prime(p))
    throw Error(ErrorCode::InvalidField, std::to_string(p) + " is not a prime below 2^31");
  return FieldSpec(Kind::PrimeField, static_cast<std::uint32_t>(p));
}

std::string FieldSpec::to_string() const {
  if (is_rationals()) return "Q";
  return "GF(" + std::to_string(p_) + ")";
}

void require_same_field(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b))
    throw Error(ErrorCode::FieldMismatch, a.to_string() + " vs " + b.to_string());
}

FieldElement::FieldElement(FieldSpec spec, long value) : spec_(spec) {
  if (spec.is_rationals())
    value_ = mpq_class(value);
  else
    value_ = reduce(value, spec.characteristic());
}

FieldElement::FieldElement(FieldSpec spec, const mpz_class& value) : spec_(spec) {
  if (spec.is_rationals())
    value_ = mpq_class(value);
  else
    value_ = reduce(value, spec.characteristic());
}

FieldElement::FieldElement(FieldSpec spec, const mpq_class& value) : spec_(spec) {
  if (!spec.is_rationals())
    throw Error(ErrorCode::FieldMismatch, "rational value supplied for " + spec.to_string());
  mpq_class v = value;
  v.canonicalize();
  value_ = std::move(v);
}

FieldElement FieldElement::parse(FieldSpec spec, std::string_view literal) {
  auto fail = [&] {
    return Error(ErrorCode::ParseError,
                 "malformed " + spec.to_string() + " literal '" + std::string(literal) + "'");
  };
  std::string_view body = literal;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  if (!is_digits(num)) throw fail();
  mpz_class numerator{std::string(num)};
  if (negative) numerator = -numerator;
  if (slash == std::string_view::npos) return FieldElement(spec, numerator);

  if (!spec.is_rationals()) throw fail();
  const std::string_view den = body.substr(slash + 1);
  if (!is_digits(den)) throw fail();
  mpz_class denominator{std::string(den)};
  if (denominator == 0) throw fail();
  return FieldElement(spec, mpq_class(numerator, denominator));
}

std::string FieldElement::to_string() const {
  if (spec_.is_rationals()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint32_t>(value_));
}

bool FieldElement::is_zero() const noexcept {
  if (spec_.is_rationals()) return std::get<mpq_class>(value_) == 0;
  return std::get<std::uint32_t>(value_) == 0;
}

bool FieldElement::is_one() const noexcept {
  if (spec_.is_rationals()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint32_t>(value_) == 1;
}

std::uint32_t FieldElement::residue() const {
  if (spec_.is_rationals()) throw Error(ErrorCode::FieldMismatch, "residue() on a rational");
  return std::get<std::uint32_t>(value_);
}

const mpq_class& FieldElement::rational() const {
  if (!spec_.is_rationals())
    throw Error(ErrorCode::FieldMismatch, "rational() on " + spec_.to_string());
  return std::get<mpq_class>(value_);
}

void FieldElement::require_same_field(const FieldElement& other) const {
  charforge::require_same_field(spec_, other.spec_);
}

FieldElement FieldElement::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  FieldElement out = *this;
  if (spec_.is_rationals()) {
    auto& q = std::get<mpq_class>(out.value_);
    q = 1 / q;
  } else {
    out.value_ = inverse_mod(std::get<std::uint32_t>(value_), spec_.characteristic());
  }
  return out;
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  if (spec_.is_rationals()) {
    auto& q = std::get<mpq_class>(out.value_);
    q = -q;
  } else {
    auto r = std::get<std::uint32_t>(value_);
    out.value_ = r == 0 ? 0u : spec_.characteristic() - r;
  }
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  require_same_field(rhs);
  if (spec_.is_rationals()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  } else {
    const std::uint64_t p = spec_.characteristic();
    auto& r = std::get<std::uint32_t>(value_);
    r = static_cast<std::uint32_t>((std::uint64_t{r} + std::get<std::uint32_t>(rhs.value_)) % p);
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  require_same_field(rhs);
  if (spec_.is_rationals()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  } else {
    const std::uint64_t p = spec_.characteristic();
    auto& r = std::get<std::uint32_t>(value_);
    r = static_cast<std::uint32_t>((std::uint64_t{r} + p - std::get<std::uint32_t>(rhs.value_)) % p);
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  require_same_field(rhs);
  if (spec_.is_rationals()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  } else {
    const std::uint64_t p = spec_.characteristic();
    auto& r = std::get<std::uint32_t>(value_);
    r = static_cast<std::uint32_t>((std::uint64_t{r} * std::get<std::uint32_t>(rhs.value_)) % p);
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inv();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.spec_ == b.spec_ && a.value_ == b.value_;
}

std::strong_ordering canonical_compare(const FieldElement& a, const FieldElement& b) {
  a.require_same_field(b);
  if (a.spec_.is_rationals()) {
    const int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
    return c <=> 0;
  }
  return std::get<std::uint32_t>(a.value_) <=> std::get<std::uint32_t>(b.value_);
}

}  // namespace charforge
