#include "charforge/boundary.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <map>
#include <thread>

namespace charforge {

Matrix normal_form_N(const Matrix& x) {
  require_square(x, "normal_form_N");
  const FieldSpec spec = x.spec();
  const std::size_t k = x.rows();
  Matrix out(spec, 2 * k, 2 * k);
  out.set_block(0, 0, x);
  out.set_block(0, k, -(x * x));
  out.set_block(k, 0, Matrix::identity(spec, k));
  out.set_block(k, k, -x);
  return out;
}

Matrix quartic_base_matrix(FieldSpec spec) {
  return Matrix::from_ints(spec, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
}

Polynomial quartic_charpoly(const Matrix& x) {
  if (x.rows() != 2 || x.cols() != 2)
    throw Error(ErrorCode::BadDimension, "quartic closed form needs a 2x2 X");
  const FieldSpec spec = x.spec();
  const auto &n11 = x(0, 0), &n12 = x(0, 1), &n21 = x(1, 0), &n22 = x(1, 1);
  return Polynomial(spec, {n11 * n22 - n12 * n21, -(n11 + n22), n12 - n21 + FieldElement::one(spec),
                           FieldElement::zero(spec), FieldElement::one(spec)});
}

namespace {

// Polynomials over Q in n11, n12, n21, n22, just enough for the certificate.
class QuarticSymbolic {
 public:
  using Exponents = std::array<unsigned, 4>;
  enum Var { N11, N12, N21, N22 };

  static QuarticSymbolic constant(const mpq_class& c) {
    QuarticSymbolic out;
    out.add_term({0, 0, 0, 0}, c);
    return out;
  }
  static QuarticSymbolic var(Var v) {
    QuarticSymbolic out;
    Exponents e{0, 0, 0, 0};
    e[v] = 1;
    out.add_term(e, 1);
    return out;
  }

  friend QuarticSymbolic operator+(QuarticSymbolic a, const QuarticSymbolic& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }
  friend QuarticSymbolic operator-(QuarticSymbolic a, const QuarticSymbolic& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
    return a;
  }
  friend QuarticSymbolic operator*(const QuarticSymbolic& a, const QuarticSymbolic& b) {
    QuarticSymbolic out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e;
        for (std::size_t i = 0; i < 4; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  friend bool operator==(const QuarticSymbolic& a, const QuarticSymbolic& b) {
    return a.terms_ == b.terms_;
  }

  /// Replaces variable v by the polynomial r.
  QuarticSymbolic substitute(Var v, const QuarticSymbolic& r) const {
    QuarticSymbolic out;
    for (const auto& [e, c] : terms_) {
      Exponents rest = e;
      rest[v] = 0;
      QuarticSymbolic term;
      term.add_term(rest, c);
      for (unsigned i = 0; i < e[v]; ++i) term = term * r;
      out = out + term;
    }
    return out;
  }

  bool is_zero() const { return terms_.empty(); }

  std::string to_string() const {
    static constexpr std::array<const char*, 4> names{"n11", "n12", "n21", "n22"};
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      mpq_class mag = abs(c);
      out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      std::string mono;
      for (std::size_t i = 0; i < 4; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty())
        out += mag.get_str();
      else
        out += (mag == 1 ? "" : mag.get_str() + "*") + mono;
    }
    return out;
  }

 private:
  void add_term(const Exponents& e, const mpq_class& c) {
    auto [it, inserted] = terms_.try_emplace(e, 0);
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  std::map<Exponents, mpq_class> terms_;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return r;
}

// Square root of a modulo prime p, if a is a quadratic residue.
std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0 || p == 2) return a;
  if (pow_mod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
  // Tonelli-Shanks.
  std::uint64_t q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s, c = pow_mod(z, q, p), t = pow_mod(a, q, p), r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, t2 = t;
    while (t2 != 1) {
      t2 = mul_mod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  return r;
}

}  // namespace

SumOfSquaresCertificate quartic_sos_certificate() {
  using S = QuarticSymbolic;
  const S n11 = S::var(S::N11), n12 = S::var(S::N12), n21 = S::var(S::N21),
          n22 = S::var(S::N22);
  const S one = S::constant(1);
  // Coefficients of x^2, x and 1 in the closed form.
  const S c2 = n12 - n21 + one;
  const S c1 = S::constant(0) - (n11 + n22);
  const S c0 = n11 * n22 - n12 * n21;

  // x^2 and x equations for x^4 + 1 give n21 = n12 + 1 and n22 = -n11.
  auto substitute = [&](const S& e) {
    return e.substitute(S::N21, n12 + one).substitute(S::N22, S::constant(0) - n11);
  };
  SumOfSquaresCertificate cert;
  cert.substitution_consistent = substitute(c2).is_zero() && substitute(c1).is_zero();

  // Constant equation c0 = 1, negated: n11^2 + n12^2 + n12 + 1 = 0.
  const S reduced = one - substitute(c0);
  const S shifted = n12 + S::constant(mpq_class(1, 2));
  const S sos = n11 * n11 + shifted * shifted + S::constant(mpq_class(3, 4));
  cert.identity_verified = reduced == sos;
  cert.reduced_equation = reduced.to_string() + " = 0";
  cert.sum_of_squares = "n11^2 + (n12 + 1/2)^2 = -3/4";
  return cert;
}

QuarticResult check_quartic_counterexample(FieldSpec spec) {
  QuarticResult result;
  if (spec.is_rationals()) {
    result.certificate = quartic_sos_certificate();
    if (!result.certificate->identity_verified || !result.certificate->substitution_consistent)
      throw Error(ErrorCode::InternalVerificationFailed, "sum-of-squares identity failed");
    return result;
  }

  // n11^2 = -(n12^2 + n12 + 1); keep the lexicographically first (n11, n12).
  const std::uint64_t p = spec.characteristic();
  std::optional<std::pair<std::uint64_t, std::uint64_t>> best;
  for (std::uint64_t n12 = 0; n12 < p; ++n12) {
    const std::uint64_t rhs = (p - (mul_mod(n12, n12, p) + n12 + 1) % p) % p;
    auto root = sqrt_mod(rhs, p);
    if (!root) continue;
    const std::uint64_t n11 = std::min(*root, (p - *root) % p);
    if (!best || n11 < best->first) best = {n11, n12};
    if (n11 == 0) break;
  }
  if (best) {
    const long n11 = static_cast<long>(best->first), n12 = static_cast<long>(best->second);
    result.witness = Matrix::from_ints(spec, {{n11, n12}, {n12 + 1, -n11}});
  }
  return result;
}

Matrix matrix_from_index(FieldSpec spec, std::size_t k, std::uint64_t index) {
  if (!spec.is_prime_field())
    throw Error(ErrorCode::UnsupportedInfiniteField, "enumeration needs a finite field");
  const std::uint64_t p = spec.characteristic();
  Matrix x(spec, k, k);
  for (std::size_t e = k * k; e-- > 0;) {
    x(e / k, e % k) = FieldElement(spec, static_cast<long>(index % p));
    index /= p;
  }
  return x;
}

EqualSplitResult search_equal_split(const Polynomial& p, const Polynomial& q,
                                    const SearchOptions& options) {
  const FieldSpec spec = p.spec();
  require_same_field(spec, q.spec());
  if (!spec.is_prime_field())
    throw Error(ErrorCode::UnsupportedInfiniteField,
                "exhaustive search needs GF(p); over Q use the quartic certificate");
  if (!p.is_monic() || p.degree() == 0) throw Error(ErrorCode::NotMonic, p.to_string());
  if (p.coeff(0).is_zero()) throw Error(ErrorCode::BadShape, "C(p) must be invertible");
  const std::size_t k = p.degree();
  const std::size_t n = 2 * k;
  if (!q.is_monic()) throw Error(ErrorCode::NotMonic, q.to_string());
  if (q.degree() != n)
    throw Error(ErrorCode::BadShape, "target degree " + std::to_string(q.degree()) +
                                         " is not n = 2k = " + std::to_string(n));
  if (q.coeff(0).is_zero())
    throw Error(ErrorCode::NonInvertibleTarget, "q(0) = 0: A+N would be singular");
  if (!(poly_trace(q) == poly_trace(p)))
    throw Error(ErrorCode::TraceMismatch, "trace(q) differs from trace(A)");

  const std::uint64_t base = spec.characteristic();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k * k; ++i) {
    if (total > options.budget / base)
      throw Error(ErrorCode::BudgetExceeded, std::to_string(base) + "^" +
                                                 std::to_string(k * k) + " candidates exceed " +
                                                 std::to_string(options.budget));
    total *= base;
  }

  const Matrix a = block_diagonal({Matrix(spec, k, k), companion(p)});
  auto scan = [&](std::uint64_t begin, std::uint64_t end) -> std::optional<std::uint64_t> {
    for (std::uint64_t i = begin; i < end; ++i)
      if (charpoly(a + normal_form_N(matrix_from_index(spec, k, i))) == q) return i;
    return std::nullopt;
  };

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, total));
  std::vector<std::future<std::optional<std::uint64_t>>> chunks;
  const std::uint64_t step = (total + threads - 1) / threads;
  for (std::uint64_t begin = 0; begin < total; begin += step)
    chunks.push_back(std::async(threads == 1 ? std::launch::deferred : std::launch::async, scan,
                                begin, std::min(total, begin + step)));

  // Chunks are contiguous and ordered, so the first hit is the minimum index.
  std::optional<std::uint64_t> hit;
  for (auto& chunk : chunks) {
    auto found = chunk.get();
    if (!hit && found) hit = found;
  }
  EqualSplitResult result;
  if (hit) {
    result.witness = matrix_from_index(spec, k, *hit);
    result.examined = *hit + 1;
  } else {
    result.examined = total;
  }
  return result;
}

EqualSplitResult search_equal_split(const Matrix& a, const Polynomial& q,
                                    const SearchOptions& options) {
  require_square(a, "search_equal_split");
  const std::size_t n = a.rows();
  if (n == 0 || n % 2 != 0) throw Error(ErrorCode::BadShape, "n must be even and positive");
  const std::size_t k = n / 2;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if ((r < k || c < k) && !a(r, c).is_zero())
        throw Error(ErrorCode::BadShape, "A is not diag(0_k, A22)");
  const Matrix a22 = a.block(k, k, k, k);
  const Polynomial p = charpoly(a22);
  if (!(companion(p) == a22)) throw Error(ErrorCode::BadShape, "A22 is not a companion matrix");
  return search_equal_split(p, q, options);
}

}  // namespace charforge
