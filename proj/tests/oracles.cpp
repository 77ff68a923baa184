#include "oracles.hpp"

#include <functional>

namespace charforge::testing {

std::vector<FieldSpec> standard_fields() {
  return {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3),
          FieldSpec::prime(5),    FieldSpec::prime(7), FieldSpec::prime(101)};
}

FieldElement random_element(FieldSpec spec, Rng& rng) {
  if (spec.is_rationals()) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    return FieldElement(spec, mpq_class(mpz_class(num(rng)), mpz_class(den(rng))));
  }
  std::uniform_int_distribution<long> r(0, static_cast<long>(spec.characteristic()) - 1);
  return FieldElement(spec, r(rng));
}

FieldElement random_nonzero(FieldSpec spec, Rng& rng) {
  for (;;) {
    auto e = random_element(spec, rng);
    if (!e.is_zero()) return e;
  }
}

Matrix random_matrix(FieldSpec spec, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(spec, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_element(spec, rng);
  return m;
}

Matrix random_invertible(FieldSpec spec, std::size_t n, Rng& rng) {
  for (;;) {
    auto m = random_matrix(spec, n, n, rng);
    if (!determinant(m).is_zero()) return m;
  }
}

Polynomial random_monic(FieldSpec spec, std::size_t degree, Rng& rng, bool nonzero_constant) {
  std::vector<FieldElement> c;
  for (std::size_t i = 0; i < degree; ++i) c.push_back(random_element(spec, rng));
  c.push_back(FieldElement::one(spec));
  if (nonzero_constant && degree > 0) c[0] = random_nonzero(spec, rng);
  return Polynomial(spec, std::move(c));
}

Polynomial random_monic_with_trace(const FieldElement& trace, std::size_t n, Rng& rng) {
  const FieldSpec spec = trace.spec();
  std::vector<FieldElement> c;
  for (std::size_t i = 0; i + 1 < n; ++i) c.push_back(random_element(spec, rng));
  c.push_back(-trace);
  c.push_back(FieldElement::one(spec));
  return Polynomial(spec, std::move(c));
}

Polynomial cofactor_det(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  std::function<Polynomial(std::vector<std::size_t>&, std::size_t)> expand =
      [&](std::vector<std::size_t>& cols, std::size_t row) -> Polynomial {
    if (row == n) return Polynomial::constant(FieldElement::one(m.spec()));
    Polynomial total(m.spec());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const std::size_t c = cols[j];
      if (m(row, c).is_zero()) continue;
      std::vector<std::size_t> rest = cols;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
      Polynomial term = m(row, c) * expand(rest, row + 1);
      if (j % 2 == 0)
        total += term;
      else
        total -= term;
    }
    return total;
  };
  std::vector<std::size_t> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i] = i;
  return expand(cols, 0);
}

Polynomial cofactor_charpoly(const Matrix& a) {
  return cofactor_det(PolyMatrix::characteristic(a));
}

std::vector<Polynomial> all_monic(FieldSpec spec, std::size_t degree) {
  const long p = spec.characteristic();
  std::vector<Polynomial> out;
  std::vector<long> digits(degree, 0);
  for (;;) {
    std::vector<long> c = digits;
    c.push_back(1);
    out.push_back(Polynomial::from_ints(spec, c));
    std::size_t i = 0;
    while (i < degree && ++digits[i] == p) digits[i++] = 0;
    if (i == degree) break;
  }
  return out;
}

std::optional<std::uint64_t> brute_force_quartic(FieldSpec spec) {
  const long p = spec.characteristic();
  const Matrix base = Matrix::from_ints(spec, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
  const Polynomial target = Polynomial::from_ints(spec, {1, 0, 0, 0, 1});
  std::uint64_t index = 0;
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b)
      for (long c = 0; c < p; ++c)
        for (long d = 0; d < p; ++d, ++index) {
          // X = [[a, b], [c, d]]; X^2 written out.
          const long x11 = a * a + b * c, x12 = a * b + b * d, x21 = c * a + d * c,
                     x22 = c * b + d * d;
          const Matrix n = Matrix::from_ints(
              spec, {{a, b, -x11, -x12}, {c, d, -x21, -x22}, {1, 0, -a, -b}, {0, 1, -c, -d}});
          if (cofactor_charpoly(base + n) == target) return index;
        }
  return std::nullopt;
}

}  // namespace charforge::testing
