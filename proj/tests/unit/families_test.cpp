#include <gtest/gtest.h>

#include "../support/generators.hpp"
#include "qvl/qvl.hpp"

namespace qvl {
namespace {

using MF = Matrix<PrimeField>;
using RF = Representation<PrimeField>;

std::vector<std::string> relation_texts(const PresentationPtr& p) {
  std::vector<std::string> out;
  for (const auto& r : p->relations()) out.push_back(format_relation(p->quiver(), r));
  return out;
}

TEST(BuildFamily, Examples) {
  const auto a = build_family(FamilyDescriptor::a(1, 2, 1));
  EXPECT_EQ(relation_texts(a), (std::vector<std::string>{"e0^2", "e1^2", "e0*a1 + a1*e1"}));
  EXPECT_EQ(a->name(), "A(1,2,1)");

  const auto lambda = build_family(FamilyDescriptor::lambda(3));
  EXPECT_EQ(lambda->quiver().vertex_count(), 1u);
  EXPECT_EQ(lambda->quiver().arrow(0).name, "e");
  EXPECT_EQ(relation_texts(lambda), std::vector<std::string>{"e^3"});
  EXPECT_EQ(build_family(FamilyDescriptor::lambda(1))->quiver().arrow_count(), 0u);

  const auto comm = build_family(FamilyDescriptor::aprime_commuting(2));
  EXPECT_EQ(relation_texts(comm), (std::vector<std::string>{"e0^2", "e1^2", "e0*a1 - a1*e1"}));

  const auto ap = build_family(FamilyDescriptor::aprime(2, 1, 3));
  EXPECT_FALSE(ap->quiver().find_arrow("e0").has_value());
  EXPECT_EQ(relation_texts(ap), std::vector<std::string>{"e1^3"});

  const auto b = build_family(FamilyDescriptor::b(2, 3));
  EXPECT_EQ(b->quiver().arrow_count(), 4u);
  EXPECT_EQ(b->relations().size(), 3u);
}

TEST(BuildFamily, RejectsBadParameters) {
  EXPECT_THROW(build_family(FamilyDescriptor::a(0, 2, 1)), SemanticError);
  EXPECT_THROW(build_family(FamilyDescriptor::a(1, 1, 1)), SemanticError);
  EXPECT_THROW(build_family(FamilyDescriptor::aprime(1, 0, 1)), SemanticError);
  EXPECT_THROW(build_family(FamilyDescriptor::lambda(0)), SemanticError);
  EXPECT_THROW(build_family(FamilyDescriptor::aprime_commuting(1)), SemanticError);
  EXPECT_THROW(build_family(FamilyDescriptor::b(1, 1)), SemanticError);
}

TEST(FamilyKind, Parsing) {
  EXPECT_EQ(parse_family_kind("aprime"), FamilyKind::kAprime);
  EXPECT_EQ(parse_family_kind("LAMBDA"), FamilyKind::kLambda);
  EXPECT_FALSE(parse_family_kind("C").has_value());
  EXPECT_EQ(to_string(FamilyKind::kAprimeCommuting), "AprimeCommuting");
}

TEST(Classification, Table) {
  EXPECT_TRUE(is_geometrically_irreducible_family(FamilyDescriptor::a(1, 3, 1)));
  EXPECT_TRUE(is_geometrically_irreducible_family(FamilyDescriptor::a(1, 3, 2)));
  EXPECT_FALSE(is_geometrically_irreducible_family(FamilyDescriptor::a(1, 4, 2)));
  EXPECT_TRUE(is_geometrically_irreducible_family(FamilyDescriptor::a(1, 3, 5)));
  EXPECT_TRUE(is_geometrically_irreducible_family(FamilyDescriptor::aprime(3, 2, 5)));
  EXPECT_TRUE(is_geometrically_irreducible_family(FamilyDescriptor::b(2, 4)));
  EXPECT_THROW(is_geometrically_irreducible_family(FamilyDescriptor::a(1, 3, 3)), SemanticError);
  EXPECT_THROW(is_geometrically_irreducible_family(FamilyDescriptor::lambda(2)), SemanticError);
}

TEST(Classification, LongRhoCoincidesWithAprime) {
  // For l >= 2m - 1 the mixed relation lies in the ideal of the loop powers.
  for (std::size_t m = 2; m <= 3; ++m) {
    const auto a = build_family(FamilyDescriptor::a(1, m, 2 * m - 1));
    const auto ap = build_family(FamilyDescriptor::aprime(1, m, m));
    EXPECT_TRUE(ideal_subspace(*a).contains(ideal_subspace(*ap)));
    EXPECT_TRUE(ideal_subspace(*ap).contains(ideal_subspace(*a)));
  }
}

TEST(CommutingTwist, Examples) {
  const CommutingTwist twist(2);
  const PrimeField k(3);
  const auto zero = RF::zero(twist.source(), k, {2, 2});
  EXPECT_EQ(twist.forward(zero), RF::zero(twist.target(), k, {2, 2}));
  RF one(twist.source(), k, {1, 1}, {MF(k, 1, 1), MF(k, 1, 1), MF::from_integers(k, {{2}})});
  EXPECT_EQ(twist.forward(one).arrow(2), one.arrow(2));

  testing::Rng rng(12);
  for (int t = 0; t < 20; ++t) {
    const auto m = testing::random_valid_representation(twist.source(), k, {2, 2}, rng);
    const auto tw = twist.forward(m);
    EXPECT_TRUE(is_valid(tw));
    EXPECT_EQ(twist.backward(tw), m);
  }
  const auto e0 = MF::from_integers(k, {{0, 1}, {0, 0}});
  RF bad(twist.source(), k, {2, 2}, {e0, MF(k, 2, 2), MF::identity(k, 2)});
  EXPECT_THROW(twist.forward(bad), ValidationError);
}

TEST(HomCorrespondence, SmallCounts) {
  const HomCorrespondence corr(2);
  const PrimeField f2(2);
  EXPECT_EQ(RepresentationEnumerator(corr.algebra(), f2, {1, 1}).count(), 2u);
  EXPECT_EQ(count_points({VarietyKind::kHom, corr.lambda(), {1}, {1}, 2, {}, {}}), 2u);
  const auto zero = RF::zero(corr.algebra(), f2, {1, 2});
  const auto t = corr.forward(zero);
  EXPECT_EQ(t.source.dims(), DimensionVector{2});
  EXPECT_EQ(t.target.dims(), DimensionVector{1});
  EXPECT_TRUE(t.map.at(0).is_zero());
  EXPECT_EQ(corr.backward(t), zero);
}

TEST(ExtCorrespondence, SmallCountsAndZeroBlock) {
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const ExtCorrespondence corr(2);
    const PrimeField k(q);
    EXPECT_EQ(RepresentationEnumerator(corr.algebra(), k, {1, 1}).count(), q);
    EXPECT_EQ(count_points({VarietyKind::kExt, corr.lambda(), {1}, {1}, q, {}, {}}), q);
  }
  const ExtCorrespondence corr(3);
  const PrimeField k(3);
  testing::Rng rng(13);
  for (int t = 0; t < 20; ++t) {
    const auto m = testing::random_valid_representation(corr.algebra(), k, {2, 2}, rng);
    const auto e = corr.forward(m);
    EXPECT_EQ(e.z.at(0).is_zero(), m.arrow(2).is_zero());
    EXPECT_TRUE(is_cocycle(e.u, e.v, e.z));
    EXPECT_EQ(corr.backward(e), m);
  }
}

TEST(ProductSplit, Examples) {
  const PrimeField k(3);
  const ProductSplit one(1, 2);
  const auto zero = RF::zero(one.algebra(), k, {1, 1});
  const auto [base, free] = one.forward(zero);
  EXPECT_TRUE(free.empty());
  EXPECT_EQ(base, zero);

  const ProductSplit three(3, 2);
  testing::Rng rng(14);
  for (int t = 0; t < 20; ++t) {
    const auto m = testing::random_valid_representation(three.algebra(), k, {2, 1}, rng);
    const auto [b, f] = three.forward(m);
    ASSERT_EQ(f.size(), 2u);
    EXPECT_TRUE(is_valid(b));
    EXPECT_EQ(three.backward(b, f), m);
  }
  const auto z3 = RF::zero(three.algebra(), k, {1, 1});
  EXPECT_TRUE(three.forward(z3).first.arrow(2).is_zero());
}

}  // namespace
}  // namespace qvl
