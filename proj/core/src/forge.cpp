#include "charforge/forge.hpp"

#include <algorithm>

namespace charforge {

namespace {

void require_parametric_shape(std::size_t n, std::size_t k) {
  if (k == 0 || 2 * k >= n)
    throw Error(ErrorCode::BadShape, "parametric family needs 1 <= k < n-k, got n=" +
                                         std::to_string(n) + ", k=" + std::to_string(k));
}

std::vector<FieldElement> coefficient_vector(const Polynomial& p, std::size_t length) {
  std::vector<FieldElement> out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) out.push_back(p.coeff(i));
  return out;
}

Matrix embed_transform(const Matrix& t, std::size_t k) {
  return block_diagonal({Matrix::identity(t.spec(), k), t});
}

}  // namespace

void validate(const ForgeProblem& problem) {
  const Matrix& a = problem.a;
  require_square(a, "forge");
  require_same_field(a.spec(), problem.q.spec());
  const std::size_t n = a.rows();
  const std::size_t k = problem.k;
  if (n == 0 || k >= n)
    throw Error(ErrorCode::BadBlockShape,
                "k=" + std::to_string(k) + " leaves no A22 block in a " + std::to_string(n) +
                    "x" + std::to_string(n) + " matrix");
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if ((r < k || c < k) && !a(r, c).is_zero())
        throw Error(ErrorCode::BadBlockShape, "entry (" + std::to_string(r + 1) + "," +
                                                  std::to_string(c + 1) +
                                                  ") outside A22 is nonzero");
  if (!problem.q.is_monic()) throw Error(ErrorCode::NotMonic, problem.q.to_string());
  if (problem.q.degree() != n)
    throw Error(ErrorCode::DegreeMismatch, "target has degree " +
                                               std::to_string(problem.q.degree()) +
                                               ", matrix is " + std::to_string(n) + "x" +
                                               std::to_string(n));
  const FieldElement target_trace = poly_trace(problem.q);
  const FieldElement matrix_trace = a.trace();
  if (!(target_trace == matrix_trace))
    throw Error(ErrorCode::TraceMismatch, "trace(A)=" + matrix_trace.to_string() +
                                              " but trace(q)=" + target_trace.to_string());
}

ForgeParameters::ForgeParameters(FieldSpec spec, std::size_t n, std::size_t k)
    : spec_(spec), n_(n), k_(k) {
  require_parametric_shape(n, k);
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t s = k + 1; s <= n - k + 1; ++s)
      values_.emplace(std::pair{i, s}, FieldElement::zero(spec));
}

bool ForgeParameters::in_domain(std::size_t i, std::size_t s) const noexcept {
  return i >= 1 && i <= k_ && s >= k_ + 1 && s <= n_ - k_ + 1;
}

const FieldElement& ForgeParameters::at(std::size_t i, std::size_t s) const {
  auto it = values_.find({i, s});
  if (it == values_.end())
    throw Error(ErrorCode::IndexDomainMismatch,
                "a_{" + std::to_string(i) + "," + std::to_string(s) + "} is not a parameter");
  return it->second;
}

void ForgeParameters::set(std::size_t i, std::size_t s, FieldElement value) {
  require_same_field(spec_, value.spec());
  auto it = values_.find({i, s});
  if (it == values_.end())
    throw Error(ErrorCode::IndexDomainMismatch,
                "a_{" + std::to_string(i) + "," + std::to_string(s) + "} is not a parameter");
  it->second = std::move(value);
}

Matrix build_parametric_N(std::size_t n, std::size_t k, const ForgeParameters& params) {
  require_parametric_shape(n, k);
  if (params.n() != n || params.k() != k)
    throw Error(ErrorCode::IndexDomainMismatch, "parameters were built for n=" +
                                                    std::to_string(params.n()) +
                                                    ", k=" + std::to_string(params.k()));
  const FieldSpec spec = params.spec();
  const FieldElement one = FieldElement::one(spec);
  Matrix out(spec, n, n);
  // Row i (1-based) holds r_i; row n-i+1 holds -r_i.
  for (std::size_t i = 1; i <= k; ++i) {
    std::vector<FieldElement> r(n, FieldElement::zero(spec));
    r[k - 1] = -params.at(i, n - k + 1);
    for (std::size_t s = k + 1; s <= n - k + 1; ++s) r[s - 1] = -params.at(i, s);
    if (i <= k - 1) {
      r[i - 1] -= one;
      r[n - i] -= one;
    }
    for (std::size_t c = 0; c < n; ++c) {
      out(i - 1, c) = r[c];
      out(n - i, c) = -r[c];
    }
  }
  return out;
}

std::vector<SelectedParameter> selected_parameters(std::size_t n, std::size_t k) {
  require_parametric_shape(n, k);
  std::vector<SelectedParameter> out;
  auto degree = [&](std::size_t i, std::size_t s) { return n + k + 1 - 2 * i - s; };
  for (std::size_t i = 1; i + 1 <= k; ++i)
    for (std::size_t s : {k + 1, k + 2}) out.push_back({i, s, degree(i, s)});
  for (std::size_t s = k + 1; s <= n - k + 1; ++s) out.push_back({k, s, degree(k, s)});
  return out;
}

Matrix forge_k0(const Polynomial& p, const Polynomial& q) {
  require_same_field(p.spec(), q.spec());
  if (!p.is_monic()) throw Error(ErrorCode::NotMonic, p.to_string());
  if (!q.is_monic()) throw Error(ErrorCode::NotMonic, q.to_string());
  if (p.degree() != q.degree())
    throw Error(ErrorCode::DegreeMismatch, p.to_string() + " vs " + q.to_string());
  const std::size_t n = p.degree();
  if (n == 0) throw Error(ErrorCode::ZeroDegree, "constant polynomials");
  if (!(poly_trace(p) == poly_trace(q)))
    throw Error(ErrorCode::TraceMismatch, p.to_string() + " vs " + q.to_string());
  Matrix out(p.spec(), n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) out(i, n - 1) = p.coeff(i) - q.coeff(i);
  return out;
}

namespace {

ProbeReport probe_and_solve(const Matrix& a_hat, std::size_t k, const Polynomial& target,
                            const FieldElement& u0, ForgeParameters& params) {
  const FieldSpec spec = a_hat.spec();
  const std::size_t n = a_hat.rows();
  auto selected = selected_parameters(n, k);
  std::stable_sort(selected.begin(), selected.end(),
                   [](const auto& x, const auto& y) { return x.min_degree < y.min_degree; });

  const ForgeParameters zero(spec, n, k);
  const auto base = coefficient_vector(charpoly(a_hat + build_parametric_N(n, k, zero)), n + 1);
  const auto goal = coefficient_vector(target, n + 1);
  if (!(base[n - 1] == goal[n - 1]))
    throw Error(ErrorCode::InternalVerificationFailed, "trace drifted under N(0)");

  const std::size_t m = n - 1;
  ProbeReport report{selected, Matrix(spec, m, m), {}, true};
  for (std::size_t j = 0; j < m; ++j) {
    ForgeParameters unit = zero;
    unit.set(selected[j].i, selected[j].s, FieldElement::one(spec));
    const auto probed =
        coefficient_vector(charpoly(a_hat + build_parametric_N(n, k, unit)), n + 1);
    if (!(probed[n - 1] == base[n - 1]) || !(probed[n] == base[n]))
      throw Error(ErrorCode::InternalVerificationFailed, "probe changed the trace");
    for (std::size_t d = 0; d < m; ++d) {
      report.probe(d, j) = probed[d] - base[d];
      if (d < selected[j].min_degree && !report.probe(d, j).is_zero())
        report.lower_triangular = false;
    }
    report.pivots.push_back(report.probe(selected[j].min_degree, j));
  }

  for (const auto& pivot : report.pivots)
    if (pivot.is_zero())
      throw Error(ErrorCode::InternalVerificationFailed, "probe pivot vanished (u0 = " +
                                                             u0.to_string() + ")");
  if (!report.lower_triangular)
    throw Error(ErrorCode::InternalVerificationFailed, "probe matrix is not triangular");

  Matrix rhs(spec, m, 1);
  for (std::size_t d = 0; d < m; ++d) rhs(d, 0) = goal[d] - base[d];
  const Matrix solution = solve_linear(report.probe, rhs);
  for (std::size_t j = 0; j < m; ++j) params.set(selected[j].i, selected[j].s, solution(j, 0));
  return report;
}

}  // namespace

ForgeCertificate forge(const ForgeProblem& problem) {
  validate(problem);
  const std::size_t n = problem.n();
  const std::size_t k = problem.k;
  const FieldSpec spec = problem.a.spec();
  if (k >= n - k) {
    std::string detail = "k=" + std::to_string(k) + " is not below n-k=" + std::to_string(n - k);
    if (2 * k == n) detail += "; use the equal-split boundary search instead";
    throw Error(ErrorCode::EqualSplitUnsupported, detail);
  }

  const Matrix a22 = problem.a22();
  const Polynomial p = charpoly(a22);
  if (k > 0 && p.coeff(0).is_zero())
    throw Error(ErrorCode::NotInvertible, "A22 is singular");
  const SimilarityTransform t22 = cyclic_basis(a22);

  Matrix n_hat(spec, n, n);
  std::optional<ProbeReport> report;
  if (k == 0) {
    n_hat = forge_k0(p, problem.q);
  } else {
    const Matrix a_hat = block_diagonal({Matrix(spec, k, k), companion(p)});
    ForgeParameters params(spec, n, k);
    report = probe_and_solve(a_hat, k, problem.q, p.coeff(0), params);
    n_hat = build_parametric_N(n, k, params);
  }

  SimilarityTransform transform =
      k == 0 ? t22
             : SimilarityTransform(embed_transform(t22.forward(), k),
                                   embed_transform(t22.inverse(), k));
  Matrix n_out = transform.unconjugate(n_hat);

  const Matrix sum = problem.a + n_out;
  Polynomial achieved = charpoly(sum);
  if (!is_square_zero(n_out))
    throw Error(ErrorCode::InternalVerificationFailed, "N is not square-zero");
  if (!(achieved == problem.q))
    throw Error(ErrorCode::InternalVerificationFailed,
                "charpoly(A+N) = " + achieved.to_string() + ", wanted " + problem.q.to_string());
  const bool nonderogatory = is_nonderogatory(sum);
  return {std::move(n_out), std::move(achieved), std::move(transform), nonderogatory,
          std::move(report)};
}

Polynomial arrow_det(const ArrowInstance& inst) {
  const std::size_t n = inst.n();
  if (n < 2 || inst.u.size() != n - 1)
    throw Error(ErrorCode::BadDimension, "need n >= 2 values a_i and n-1 values u_2..u_n");
  const FieldSpec spec = inst.a.front().spec();
  // u[j] holds u_{j+2}.
  auto a = [&](std::size_t i) { return inst.a[i - 1]; };
  auto u = [&](std::size_t i) { return inst.u[i - 2]; };
  FieldElement middle = a(1) * u(n);
  for (std::size_t i = 2; i <= n - 1; ++i) middle += a(i) * u(i);
  std::vector<FieldElement> coeffs(n + 1, FieldElement::zero(spec));
  coeffs[n] = FieldElement::one(spec);
  coeffs[n - 1] = u(n) + a(1) - a(n);
  coeffs[n - 2] += middle;
  return Polynomial(spec, std::move(coeffs));
}

PolyMatrix arrow_matrix(const ArrowInstance& inst) {
  const std::size_t n = inst.n();
  if (n < 2 || inst.u.size() != n - 1)
    throw Error(ErrorCode::BadDimension, "need n >= 2 values a_i and n-1 values u_2..u_n");
  const FieldSpec spec = inst.a.front().spec();
  const Polynomial x = Polynomial::x(spec);
  PolyMatrix m(spec, n, n);
  m(0, 0) = x + Polynomial::constant(inst.a[0]);
  for (std::size_t c = 1; c < n; ++c) m(0, c) = Polynomial::constant(inst.a[c]);
  for (std::size_t r = 1; r + 1 < n; ++r) {
    m(r, r) = x;
    m(r, n - 1) = Polynomial::constant(inst.u[r - 1]);
  }
  m(n - 1, 0) = x;
  m(n - 1, n - 1) = x + Polynomial::constant(inst.u[n - 2]);
  return m;
}

}  // namespace charforge
