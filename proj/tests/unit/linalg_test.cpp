#include <gtest/gtest.h>

#include "../support/generators.hpp"
#include "qvl/qvl.hpp"

namespace qvl {
namespace {

using MF = Matrix<PrimeField>;
using MQ = Matrix<RationalField>;

TEST(PrimeField, ArithmeticWrapsModP) {
  const PrimeField k(7);
  EXPECT_EQ(k.add(5, 4), 2u);
  EXPECT_EQ(k.sub(2, 5), 4u);
  EXPECT_EQ(k.mul(3, 5), 1u);
  EXPECT_EQ(k.inv(3), 5u);
  EXPECT_EQ(k.neg(0), 0u);
  EXPECT_EQ(k.from_integer(-1), 6u);
  EXPECT_EQ(k.from_rational(Rational(1, 2)), 4u);
}

TEST(PrimeField, RejectsCompositeAndZeroDivision) {
  EXPECT_THROW(PrimeField(4), SemanticError);
  EXPECT_THROW(PrimeField(1), SemanticError);
  EXPECT_THROW(PrimeField(5).inv(0), ValidationError);
  EXPECT_THROW(PrimeField(5).from_rational(Rational(1, 5)), ValidationError);
}

TEST(RationalField, ParsesAndFormats) {
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(to_string(parse_rational("4/2")), "2");
  EXPECT_EQ(to_string(Rational(-1, 3)), "-1/3");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), SemanticError);
  EXPECT_THROW(RationalField{}.inv(Rational(0)), ValidationError);
}

TEST(Rank, ZeroIdentityAndNilpotent) {
  const PrimeField f2(2);
  EXPECT_EQ(rank(MF(f2, 2, 2)), 0u);
  EXPECT_EQ(rank(MF::identity(f2, 3)), 3u);
  EXPECT_EQ(rank(MF::from_integers(f2, {{0, 1}, {0, 0}})), 1u);
  EXPECT_EQ(rank(MQ::from_integers(RationalField{}, {{1, 2}, {2, 4}})), 1u);
  EXPECT_EQ(rank(MF::from_integers(PrimeField(3), {{1, 2}, {2, 1}})), 1u);
}

TEST(KernelBasis, SmallExamples) {
  const PrimeField f2(2);
  EXPECT_TRUE(kernel_basis(MF::identity(f2, 3)).empty());
  EXPECT_EQ(kernel_basis(MF(f2, 2, 3)).size(), 3u);
  const auto basis = kernel_basis(MF::from_integers(f2, {{1, 1}}));
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0], (Vector<PrimeField>{1, 1}));
}

TEST(KernelBasis, ExhaustiveOverF2) {
  // Every vector in the kernel of [[1,1,0],[0,1,1]] over F_2.
  const PrimeField f2(2);
  const auto m = MF::from_integers(f2, {{1, 1, 0}, {0, 1, 1}});
  std::size_t in_kernel = 0;
  for (unsigned bits = 0; bits < 8; ++bits) {
    const Vector<PrimeField> v{bits & 1u, (bits >> 1) & 1u, (bits >> 2) & 1u};
    const auto image = m.apply(v);
    if (image[0] == 0 && image[1] == 0) ++in_kernel;
  }
  EXPECT_EQ(std::size_t{1} << kernel_basis(m).size(), in_kernel);
}

TEST(Solve, ConsistentAndInconsistent) {
  const RationalField q;
  const auto a = MQ::from_integers(q, {{1, 2}, {3, 4}});
  const auto x = solve(a, Vector<RationalField>{Rational(5), Rational(6)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(a.apply(*x), (Vector<RationalField>{Rational(5), Rational(6)}));
  const auto singular = MQ::from_integers(q, {{1, 1}, {1, 1}});
  EXPECT_FALSE(solve(singular, Vector<RationalField>{Rational(0), Rational(1)}).has_value());
}

TEST(Inverse, RationalAndSingular) {
  const RationalField q;
  const auto a = MQ::from_integers(q, {{2, 1}, {1, 1}});
  const auto inv = inverse(a);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(a * *inv, MQ::identity(q, 2));
  EXPECT_FALSE(inverse(MQ::from_integers(q, {{1, 2}, {2, 4}})).has_value());
  EXPECT_FALSE(is_invertible(MQ(q, 2, 3)));
}

TEST(Matrix, ShapeErrors) {
  const PrimeField k(3);
  EXPECT_THROW(MF(k, 2, 2) * MF(k, 3, 1), SemanticError);
  EXPECT_THROW(MF(k, 2, 2) + MF(k, 2, 3), SemanticError);
  EXPECT_THROW(MF(k, 2, 2, {1, 2, 3}), SemanticError);
  EXPECT_THROW(MF(k, 2, 3).power(2), SemanticError);
}

TEST(Matrix, BlocksAndStacks) {
  const PrimeField k(5);
  const auto a = MF::from_integers(k, {{1, 2}, {3, 4}});
  const auto b = MF::from_integers(k, {{0}, {1}});
  const auto h = a.hstack(b);
  EXPECT_EQ(h.block(0, 2, 2, 1), b);
  EXPECT_EQ(h.block(0, 0, 2, 2), a);
  const auto v = a.vstack(b.transpose().hstack(b.transpose()).block(0, 0, 1, 2));
  EXPECT_EQ(v.rows(), 3u);
}

class RandomLinalg : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(RandomLinalg, RankNullityAndKernel) {
  const PrimeField k(GetParam());
  testing::Rng rng(1000 + GetParam());
  for (int t = 0; t < 50; ++t) {
    const std::size_t r = std::uniform_int_distribution<std::size_t>(0, 5)(rng);
    const std::size_t c = std::uniform_int_distribution<std::size_t>(0, 5)(rng);
    const auto m = testing::random_matrix(k, r, c, rng);
    const auto ker = kernel_basis(m);
    EXPECT_EQ(rank(m) + ker.size(), c);
    for (const auto& v : ker) {
      for (const auto x : m.apply(v)) EXPECT_EQ(x, 0u);
    }
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST_P(RandomLinalg, InverseRoundTrip) {
  const PrimeField k(GetParam());
  testing::Rng rng(2000 + GetParam());
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const auto g = testing::random_invertible(k, n, rng);
    EXPECT_EQ(g * *inverse(g), MF::identity(k, n));
    EXPECT_EQ(*inverse(g) * g, MF::identity(k, n));
  }
}

INSTANTIATE_TEST_SUITE_P(Primes, RandomLinalg, ::testing::Values(2u, 3u, 5u, 7u, 101u));

TEST(RandomLinalgQ, SolveAgreesWithProduct) {
  const RationalField q;
  testing::Rng rng(77);
  for (int t = 0; t < 30; ++t) {
    const auto a = testing::random_matrix(q, 3, 4, rng);
    const auto x0 = testing::random_matrix(q, 4, 1, rng);
    const auto b = a * x0;
    const auto x = solve(a, b.data());
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(a.apply(*x), b.data());
  }
}

}  // namespace
}  // namespace qvl
