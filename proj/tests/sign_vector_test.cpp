#include "ccells/sign_vector.hpp"

#include <gtest/gtest.h>

#include "ccells/errors.hpp"

namespace ccells {
namespace {

SignVector sv(const char* text) { return SignVector::parse(text); }

TEST(SignVector, ParseAndPrint) {
  const SignVector x = sv("+-0+");
  EXPECT_EQ(x.size(), 4);
  EXPECT_EQ(x.sign(1), 1);
  EXPECT_EQ(x.sign(2), -1);
  EXPECT_EQ(x.sign(3), 0);
  EXPECT_EQ(x.positive(), ElementSet::of({1, 4}));
  EXPECT_EQ(x.support(), ElementSet::of({1, 2, 4}));
  EXPECT_FALSE(x.full_support());
  EXPECT_EQ(x.to_string(), "+-0+");
  EXPECT_EQ(SignVector::parse("+\xE2\x88\x92+"), sv("+-+"));
}

TEST(SignVector, RejectsBadInput) {
  EXPECT_THROW(sv("+x"), FormatError);
  EXPECT_THROW(SignVector(3, 0b001, 0b001), InvalidElementError);
  EXPECT_THROW(SignVector(2, 0b100, 0), InvalidElementError);
  EXPECT_THROW(SignVector(65, 0, 0), DimensionError);
  EXPECT_THROW(sv("+-").sign(3), InvalidElementError);
  EXPECT_THROW(ElementSet::of({0}), InvalidElementError);
}

TEST(SignVector, SixtyFourElements) {
  const SignVector x = SignVector::all_positive(64);
  EXPECT_TRUE(x.full_support());
  EXPECT_EQ((-x).negative().size(), 64);
}

TEST(Separation, Examples) {
  EXPECT_EQ(separation(sv("+++"), sv("+-+")), ElementSet::of({2}));
  EXPECT_TRUE(separation(sv("+-+"), sv("+-+")).empty());
  EXPECT_EQ(separation(sv("+-+"), -sv("+-+")), ElementSet::of({1, 2, 3}));
  EXPECT_THROW(separation(sv("++"), sv("+++")), DimensionError);
}

TEST(Orthogonal, Examples) {
  EXPECT_TRUE(orthogonal(sv("+++"), sv("+-+")));
  EXPECT_FALSE(orthogonal(sv("+-+0"), sv("00++")));
  EXPECT_TRUE(orthogonal(sv("+00"), sv("0+0")));
  EXPECT_THROW(orthogonal(sv("+"), sv("++")), DimensionError);
}

TEST(Flip, Examples) {
  EXPECT_EQ(flip(sv("+++"), 2), sv("+-+"));
  EXPECT_EQ(flip(sv("+-"), 1), sv("--"));
  EXPECT_THROW(flip(sv("+0+"), 2), InvalidElementError);
  EXPECT_THROW(flip(sv("+++"), 4), InvalidElementError);
}

// Every vector in {+,-,0}^n for n <= 4.
std::vector<SignVector> all_vectors(int n) {
  std::vector<SignVector> out;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t pos = 0, neg = 0, c = code;
    for (int i = 0; i < n; ++i, c /= 3) {
      if (c % 3 == 1) pos |= std::uint64_t{1} << i;
      if (c % 3 == 2) neg |= std::uint64_t{1} << i;
    }
    out.emplace_back(n, pos, neg);
  }
  return out;
}

TEST(SignVectorProperties, ExhaustiveSymmetries) {
  for (int n = 0; n <= 4; ++n) {
    const auto vectors = all_vectors(n);
    for (const SignVector& x : vectors) {
      EXPECT_EQ(-(-x), x);
      for (int e : x.support().elements()) EXPECT_EQ(flip(flip(x, e), e), x);
      for (const SignVector& y : vectors) {
        EXPECT_EQ(separation(x, y), separation(y, x));
        EXPECT_EQ(separation(x, -y), separation(-x, y));
        const bool o = orthogonal(x, y);
        EXPECT_EQ(o, orthogonal(y, x));
        EXPECT_EQ(o, orthogonal(-x, y));
      }
    }
  }
}

}  // namespace
}  // namespace ccells
