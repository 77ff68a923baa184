#include <gtest/gtest.h>

#include "charforge/field.hpp"
#include "oracles.hpp"

namespace charforge {
namespace {

TEST(FieldSpec, RejectsComposites) {
  EXPECT_NO_THROW(FieldSpec::prime(2));
  EXPECT_NO_THROW(FieldSpec::prime(2147483647));
  for (std::uint64_t bad : {0ull, 1ull, 4ull, 91ull, 2147483649ull, 4294967311ull}) {
    try {
      FieldSpec::prime(bad);
      FAIL() << bad << " accepted";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidField);
    }
  }
}

TEST(FieldElement, SmallExamples) {
  const auto gf7 = FieldSpec::prime(7);
  EXPECT_EQ(FieldElement(gf7, 3) * FieldElement(gf7, 5), FieldElement::one(gf7));

  const auto q = FieldSpec::rationals();
  EXPECT_EQ(FieldElement::parse(q, "3/4") + FieldElement::parse(q, "1/4"), FieldElement::one(q));

  const auto gf5 = FieldSpec::prime(5);
  EXPECT_EQ(FieldElement(gf5, 2).inv(), FieldElement(gf5, 3));
}

TEST(FieldElement, ParseAndRender) {
  const auto q = FieldSpec::rationals();
  EXPECT_EQ(FieldElement::parse(q, "6/4").to_string(), "3/2");
  EXPECT_EQ(FieldElement::parse(q, "-6/4").to_string(), "-3/2");
  EXPECT_EQ(FieldElement::parse(q, "4/2").to_string(), "2");
  EXPECT_EQ(FieldElement::parse(q, "0/5").to_string(), "0");
  const auto gf7 = FieldSpec::prime(7);
  EXPECT_EQ(FieldElement::parse(gf7, "-1").to_string(), "6");
  EXPECT_EQ(FieldElement::parse(gf7, "15").to_string(), "1");

  for (const char* bad : {"", "-", "1/0", "1/", "/2", "a", "1.5", "1/-2", "2 "}) {
    try {
      FieldElement::parse(q, bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
  EXPECT_THROW(FieldElement::parse(gf7, "1/2"), Error);
}

TEST(FieldElement, Errors) {
  const auto gf5 = FieldSpec::prime(5);
  const auto gf7 = FieldSpec::prime(7);
  try {
    (void)FieldElement::zero(gf5).inv();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
  try {
    (void)(FieldElement::one(gf5) + FieldElement::one(gf7));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
  }
  EXPECT_THROW((void)(FieldElement::one(gf5) / FieldElement::zero(gf5)), Error);
}

TEST(FieldElement, AxiomsHoldOnRandomTriples) {
  testing::Rng rng(17);
  for (const auto& spec : testing::standard_fields()) {
    const auto zero = FieldElement::zero(spec);
    const auto one = FieldElement::one(spec);
    for (int i = 0; i < 1000; ++i) {
      const auto a = testing::random_element(spec, rng);
      const auto b = testing::random_element(spec, rng);
      const auto c = testing::random_element(spec, rng);
      ASSERT_EQ((a + b) + c, a + (b + c));
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a + b, b + a);
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ(a + zero, a);
      ASSERT_EQ(a * one, a);
      ASSERT_EQ(a + (-a), zero);
      ASSERT_EQ(a - b, a + (-b));
      if (!a.is_zero()) {
        ASSERT_EQ(a * a.inv(), one);
        ASSERT_EQ(b / a * a, b);
      }
      ASSERT_EQ(FieldElement::parse(spec, a.to_string()), a);
    }
  }
}

}  // namespace
}  // namespace charforge
