#include <gtest/gtest.h>

#include "charforge/boundary.hpp"
#include "oracles.hpp"

namespace charforge {
namespace {

const FieldSpec Q = FieldSpec::rationals();

Polynomial P(FieldSpec spec, std::vector<long> c) { return Polynomial::from_ints(spec, c); }

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InternalVerificationFailed;
}

TEST(NormalForm, Examples) {
  EXPECT_EQ(normal_form_N(Matrix(Q, 2, 2)),
            Matrix::from_ints(Q, {{0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}}));
  const auto gf2 = FieldSpec::prime(2);
  // X^2 = I over GF(2), so -X^2 = I.
  EXPECT_EQ(normal_form_N(Matrix::from_ints(gf2, {{1, 0}, {1, 1}})),
            Matrix::from_ints(gf2, {{1, 0, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 1, 1}}));
  EXPECT_EQ(code_of([] { normal_form_N(Matrix(Q, 1, 2)); }), ErrorCode::NotSquare);
}

TEST(NormalForm, AlwaysSquareZero) {
  testing::Rng rng(61);
  const auto fields = testing::standard_fields();
  for (int i = 0; i < 500; ++i) {
    const auto& spec = fields[i % fields.size()];
    const std::size_t k = 1 + i % 4;
    ASSERT_TRUE(is_square_zero(normal_form_N(testing::random_matrix(spec, k, k, rng))));
  }
}

TEST(QuarticCharpoly, Examples) {
  EXPECT_EQ(quartic_charpoly(Matrix(Q, 2, 2)), P(Q, {0, 0, 1, 0, 1}));
  const auto gf2 = FieldSpec::prime(2);
  EXPECT_EQ(quartic_charpoly(Matrix::from_ints(gf2, {{1, 0}, {1, 1}})), P(gf2, {1, 0, 0, 0, 1}));
  EXPECT_EQ(code_of([] { quartic_charpoly(Matrix(Q, 3, 3)); }), ErrorCode::BadDimension);
}

TEST(QuarticCharpoly, MatchesGenericCharpoly) {
  for (long p : {2, 3}) {
    const auto spec = FieldSpec::prime(p);
    const auto base = quartic_base_matrix(spec);
    for (std::uint64_t idx = 0; idx < std::uint64_t(p * p * p * p); ++idx) {
      const auto x = matrix_from_index(spec, 2, idx);
      ASSERT_EQ(quartic_charpoly(x), charpoly(base + normal_form_N(x)));
    }
  }
  testing::Rng rng(62);
  for (const auto& spec : {FieldSpec::prime(7), Q})
    for (int i = 0; i < 200; ++i) {
      const auto x = testing::random_matrix(spec, 2, 2, rng);
      ASSERT_EQ(quartic_charpoly(x), charpoly(quartic_base_matrix(spec) + normal_form_N(x)));
    }
}

TEST(Quartic, RationalsHaveNoSolution) {
  const auto r = check_quartic_counterexample(Q);
  EXPECT_TRUE(r.no_solution());
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_TRUE(r.certificate->identity_verified);
  EXPECT_TRUE(r.certificate->substitution_consistent);
}

TEST(Quartic, FiniteFieldWitnesses) {
  const auto gf2 = FieldSpec::prime(2), gf3 = FieldSpec::prime(3);
  EXPECT_EQ(check_quartic_counterexample(gf2).witness, Matrix::from_ints(gf2, {{1, 0}, {1, 1}}));
  EXPECT_EQ(check_quartic_counterexample(gf3).witness, Matrix::from_ints(gf3, {{0, 1}, {2, 0}}));
}

TEST(Quartic, AgreesWithBruteForce) {
  for (long p : {2, 3, 5, 7}) {
    const auto spec = FieldSpec::prime(p);
    const auto brute = testing::brute_force_quartic(spec);
    const auto r = check_quartic_counterexample(spec);
    ASSERT_EQ(brute.has_value(), r.witness.has_value()) << p;
    if (!brute) continue;
    EXPECT_EQ(*r.witness, matrix_from_index(spec, 2, *brute)) << p;
    EXPECT_EQ(charpoly(quartic_base_matrix(spec) + normal_form_N(*r.witness)), P(spec, {1, 0, 0, 0, 1}));
  }
}

TEST(MatrixFromIndex, CanonicalOrder) {
  const auto gf3 = FieldSpec::prime(3);
  EXPECT_EQ(matrix_from_index(gf3, 2, 0), Matrix(gf3, 2, 2));
  EXPECT_EQ(matrix_from_index(gf3, 2, 1), Matrix::from_ints(gf3, {{0, 0}, {0, 1}}));
  EXPECT_EQ(matrix_from_index(gf3, 2, 27), Matrix::from_ints(gf3, {{1, 0}, {0, 0}}));
  EXPECT_EQ(matrix_from_index(gf3, 2, 80), Matrix::from_ints(gf3, {{2, 2}, {2, 2}}));
}

TEST(EqualSplit, QuarticOverGF2) {
  const auto gf2 = FieldSpec::prime(2);
  const auto r = search_equal_split(P(gf2, {1, 0, 1}), P(gf2, {1, 0, 0, 0, 1}));
  EXPECT_EQ(r.witness, Matrix::from_ints(gf2, {{1, 0}, {1, 1}}));

  const auto a = block_diagonal({Matrix(gf2, 2, 2), companion(P(gf2, {1, 0, 1}))});
  EXPECT_EQ(search_equal_split(a, P(gf2, {1, 0, 0, 0, 1})).witness, r.witness);
}

TEST(EqualSplit, Errors) {
  EXPECT_EQ(code_of([] { search_equal_split(P(Q, {1, 0, 1}), P(Q, {1, 0, 0, 0, 1})); }),
            ErrorCode::UnsupportedInfiniteField);
  const auto gf3 = FieldSpec::prime(3);
  EXPECT_EQ(code_of([&] { search_equal_split(P(gf3, {1, 0, 1}), P(gf3, {0, 1, 0, 0, 1})); }),
            ErrorCode::NonInvertibleTarget);
  EXPECT_EQ(code_of([&] { search_equal_split(P(gf3, {0, 1, 1}), P(gf3, {1, 0, 2, 1, 1})); }),
            ErrorCode::BadShape);
  EXPECT_EQ(code_of([&] { search_equal_split(P(gf3, {1, 0, 1}), P(gf3, {1, 0, 0, 1})); }),
            ErrorCode::BadShape);
  EXPECT_EQ(code_of([&] { search_equal_split(P(gf3, {1, 0, 1}), P(gf3, {1, 0, 0, 1, 1})); }),
            ErrorCode::TraceMismatch);
  EXPECT_EQ(code_of([&] {
              search_equal_split(P(gf3, {1, 0, 1}), P(gf3, {1, 0, 0, 0, 1}), SearchOptions{80, 1});
            }),
            ErrorCode::BudgetExceeded);
  const auto gf2 = FieldSpec::prime(2);
  EXPECT_EQ(code_of([&] { search_equal_split(Matrix::identity(gf2, 4), P(gf2, {1, 0, 0, 0, 1})); }),
            ErrorCode::BadShape);
}

// With k = 1 the achieved charpoly is x^2 - c x + c X, so every invertible
// target of the right trace is reached.
TEST(EqualSplit, KOneReachesEveryInvertibleTarget) {
  const auto gf3 = FieldSpec::prime(3);
  for (long c : {1, 2})
    for (long d : {1, 2}) {
      const auto r = search_equal_split(P(gf3, {-c, 1}), P(gf3, {d, -c, 1}));
      ASSERT_TRUE(r.witness.has_value());
      ASSERT_EQ(FieldElement(gf3, c) * (*r.witness)(0, 0), FieldElement(gf3, d));
    }
}

// Found by enumerating every (p, q) over GF(2) with k = 2; the oracle below
// rebuilds each candidate by hand and expands the determinant by cofactors.
TEST(EqualSplit, ExhaustedOverGF2) {
  const auto gf2 = FieldSpec::prime(2);
  const auto p = P(gf2, {1, 0, 1}), q = P(gf2, {1, 1, 0, 0, 1});
  const auto r = search_equal_split(p, q);
  EXPECT_TRUE(r.exhausted());
  EXPECT_EQ(r.examined, 16u);

  const auto a = block_diagonal({Matrix(gf2, 2, 2), companion(p)});
  for (std::uint64_t idx = 0; idx < 16; ++idx) {
    Matrix x(gf2, 2, 2);
    for (int e = 0; e < 4; ++e) x(e / 2, e % 2) = FieldElement(gf2, long((idx >> (3 - e)) & 1));
    Matrix n(gf2, 4, 4);
    n.set_block(0, 0, x);
    n.set_block(0, 2, -(x * x));
    n.set_block(2, 0, Matrix::identity(gf2, 2));
    n.set_block(2, 2, -x);
    ASSERT_NE(testing::cofactor_charpoly(a + n), q) << idx;
  }
}

// Thread count must not change which witness is reported. The second
// target is unreachable, so every chunk runs to completion.
TEST(EqualSplit, ThreadIndependent) {
  const auto gf3 = FieldSpec::prime(3);
  const auto p = P(gf3, {1, 1, 1});
  for (const auto& q : {P(gf3, {2, 1, 0, 1, 1}), P(gf3, {1, 0, 1, 1, 1})}) {
    const auto one = search_equal_split(p, q, SearchOptions{1u << 20, 1});
    for (unsigned threads : {2u, 3u, 7u}) {
      const auto many = search_equal_split(p, q, SearchOptions{1u << 20, threads});
      EXPECT_EQ(one.witness, many.witness);
      EXPECT_EQ(one.examined, many.examined);
    }
  }
}

}  // namespace
}  // namespace charforge
