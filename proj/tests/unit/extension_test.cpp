#include <gtest/gtest.h>

#include "../support/generators.hpp"
#include "qvl/qvl.hpp"

namespace qvl {
namespace {

using MF = Matrix<PrimeField>;
using RF = Representation<PrimeField>;

const PrimeField kF3(3);

RF lambda_module(std::size_t m, std::initializer_list<std::initializer_list<std::int64_t>> e) {
  const auto mat = MF::from_integers(kF3, e);
  return RF(build_family(FamilyDescriptor::lambda(m)), kF3, {mat.rows()}, {mat});
}

ArrowBlock<PrimeField> block(std::initializer_list<std::initializer_list<std::int64_t>> z) {
  return {{MF::from_integers(kF3, z)}};
}

TEST(CocycleValue, ZeroBlockGivesZero) {
  testing::Rng rng(1);
  const auto pres = build_family(FamilyDescriptor::a(2, 3, 2));
  const auto u = testing::random_valid_representation(pres, kF3, {2, 2}, rng);
  const auto v = testing::random_valid_representation(pres, kF3, {1, 2}, rng);
  for (const auto& rel : pres->relations()) {
    EXPECT_TRUE(cocycle_value(u, v, zero_block(u, v), rel).is_zero());
  }
}

TEST(CocycleValue, LoopPowerClosedForm) {
  testing::Rng rng(2);
  for (std::size_t m = 2; m <= 4; ++m) {
    const auto pres = build_family(FamilyDescriptor::lambda(m));
    const auto& q = pres->quiver();
    for (std::size_t l = 1; l <= 5; ++l) {
      const RF v(pres, kF3, {3}, {testing::random_matrix(kF3, 3, 3, rng)});
      const RF u(pres, kF3, {2}, {testing::random_matrix(kF3, 2, 2, rng)});
      const ArrowBlock<PrimeField> z{{testing::random_matrix(kF3, 3, 2, rng)}};
      MF expected(kF3, 3, 2);
      for (std::size_t i = 0; i < l; ++i) expected += v.arrow(0).power(l - 1 - i) * z.at(0) * u.arrow(0).power(i);
      if (l < 2) continue;
      EXPECT_EQ(cocycle_value(u, v, z, Relation::monomial(q, Path::power(q, 0, l))), expected);
    }
  }
}

TEST(CocycleValue, Lambda2ZeroModules) {
  const auto v = lambda_module(2, {{0}});
  const auto& rel = v.presentation().relations()[0];
  EXPECT_TRUE(cocycle_value(v, v, block({{2}}), rel).is_zero());
}

TEST(CocycleSpace, Dimensions) {
  EXPECT_EQ(cocycle_space_basis(lambda_module(2, {{0}}), lambda_module(2, {{0}})).size(), 1u);
  const auto n = lambda_module(2, {{0, 1}, {0, 0}});
  EXPECT_EQ(cocycle_space_basis(n, n).size(), 2u);

  const auto hereditary =
      make_presentation("kronecker", Quiver({"x", "y"}, {{"a", 0, 1}, {"b", 0, 1}}), {});
  testing::Rng rng(3);
  const RF u(hereditary, kF3, {2, 1},
             {testing::random_matrix(kF3, 1, 2, rng), testing::random_matrix(kF3, 1, 2, rng)});
  const RF v(hereditary, kF3, {1, 3},
             {testing::random_matrix(kF3, 3, 1, rng), testing::random_matrix(kF3, 3, 1, rng)});
  EXPECT_EQ(cocycle_ambient_dimension(u, v), 2u * (3 * 2));
  EXPECT_EQ(cocycle_space_basis(u, v).size(), cocycle_ambient_dimension(u, v));
}

TEST(CocycleSpace, BasisElementsAreCocyclesAndCountMatchesBruteForce) {
  testing::Rng rng(4);
  const PrimeField f2(2);
  const auto pres = build_family(FamilyDescriptor::a(1, 2, 1));
  for (int t = 0; t < 10; ++t) {
    const auto u = testing::random_valid_representation(pres, f2, {1, 1}, rng);
    const auto v = testing::random_valid_representation(pres, f2, {1, 1}, rng);
    const auto basis = cocycle_space_basis(u, v);
    for (const auto& z : basis) EXPECT_TRUE(is_cocycle(u, v, z));
    std::size_t brute = 0;
    for (unsigned bits = 0; bits < 8; ++bits) {
      const ArrowBlock<PrimeField> z{{MF(f2, 1, 1, {bits & 1u}), MF(f2, 1, 1, {(bits >> 1) & 1u}),
                                      MF(f2, 1, 1, {(bits >> 2) & 1u})}};
      if (is_cocycle(u, v, z)) ++brute;
    }
    EXPECT_EQ(std::size_t{1} << basis.size(), brute);
  }
}

TEST(BuildExtension, Examples) {
  const auto zero1 = lambda_module(2, {{0}});
  const auto split = build_extension(zero1, zero1, zero_block(zero1, zero1));
  EXPECT_EQ(split.w, direct_sum(zero1, zero1));

  const auto ext = build_extension(zero1, zero1, block({{1}}));
  EXPECT_EQ(ext.w.arrow(0), MF::from_integers(kF3, {{0, 1}, {0, 0}}));
  EXPECT_TRUE(is_valid(ext.w));
  EXPECT_EQ(ext.mu.at(0), MF::from_integers(kF3, {{1}, {0}}));
  EXPECT_TRUE(is_monomorphism(zero1, ext.w, ext.mu));

  const auto z3 = lambda_module(3, {{0}});
  EXPECT_TRUE(is_valid(build_extension(z3, z3, block({{1}})).w));

  const auto one = lambda_module(2, {{0, 1}, {0, 0}});
  EXPECT_THROW(build_extension(one, zero1, block({{1, 0}})), ValidationError);
  EXPECT_THROW(build_extension(zero1, zero1, block({{1, 1}})), SemanticError);
}

TEST(Splitting, NormalFormIsFixed) {
  testing::Rng rng(5);
  const auto pres = build_family(FamilyDescriptor::a(1, 3, 2));
  const auto u = testing::random_valid_representation(pres, kF3, {1, 2}, rng);
  const auto v = testing::random_valid_representation(pres, kF3, {2, 1}, rng);
  const auto z = testing::random_cocycle(u, v, rng);
  const auto ext = build_extension(u, v, z);
  const auto s = splitting_from_mono(v, ext.w, ext.mu);
  for (VertexIndex x = 0; x < 2; ++x) EXPECT_EQ(s.g.at(x), MF::identity(kF3, ext.w.dim(x)));
  EXPECT_EQ(s.z, z);
  EXPECT_EQ(s.u, u);
  EXPECT_EQ(psi_map(v, ext.w, ext.mu), (ExtensionTriple<PrimeField>{u, v, z}));
}

TEST(Splitting, Errors) {
  const auto zero1 = lambda_module(2, {{0}});
  const auto ext = build_extension(zero1, zero1, block({{1}}));
  const HomMorphism<PrimeField> not_mono{{MF(kF3, 2, 1)}};
  EXPECT_THROW(splitting_from_mono(zero1, ext.w, not_mono), ValidationError);
  const std::vector<MF> singular{MF::from_integers(kF3, {{2}, {0}})};
  EXPECT_THROW(splitting_from_mono(zero1, ext.w, ext.mu, std::make_optional(singular)), ValidationError);
}

TEST(PhiMap, Examples) {
  const auto zero1 = lambda_module(2, {{0}});
  const ExtensionTriple<PrimeField> triple{zero1, zero1, block({{1}})};
  const auto ext = build_extension(zero1, zero1, triple.z);
  const auto id = phi_map(identity_morphism(ext.w), triple);
  EXPECT_EQ(id.source, zero1);
  EXPECT_EQ(id.target.arrow(0), MF::from_integers(kF3, {{0, 1}, {0, 0}}));
  EXPECT_EQ(id.map.at(0), MF::from_integers(kF3, {{1}, {0}}));

  const auto trivial = phi_map(identity_morphism(ext.w), ExtensionTriple<PrimeField>{zero1, zero1, block({{0}})});
  EXPECT_EQ(trivial.target, direct_sum(zero1, zero1));
}

TEST(RoundTrip, RandomFamiliesOverF3AndQ) {
  testing::Rng rng(6);
  for (int t = 0; t < 40; ++t) {
    const auto desc = testing::random_family(rng);
    const auto pres = build_family(desc);
    const std::size_t nv = pres->quiver().vertex_count();
    const auto u = testing::random_valid_representation(pres, kF3, testing::random_dims(nv, 2, rng), rng);
    const auto v = testing::random_valid_representation(pres, kF3, testing::random_dims(nv, 2, rng), rng);
    const ExtensionTriple<PrimeField> triple{u, v, testing::random_cocycle(u, v, rng)};
    const auto ext = build_extension(u, v, triple.z);
    const auto g = testing::random_base_change(kF3, ext.w.dims(), rng);
    const auto image = phi_map(g, triple);
    EXPECT_TRUE(is_monomorphism(image.source, image.target, image.map)) << describe(desc);
    const auto s = splitting_from_mono(image.source, image.target, image.map);
    EXPECT_EQ(gl_action(s.g, build_extension(s.u, v, s.z).w), image.target) << describe(desc);
  }
  const RationalField q;
  const auto pres = build_family(FamilyDescriptor::a(1, 3, 1));
  for (int t = 0; t < 10; ++t) {
    const auto u = testing::random_valid_representation(pres, q, {2, 1}, rng);
    const auto v = testing::random_valid_representation(pres, q, {1, 2}, rng);
    const ExtensionTriple<RationalField> triple{u, v, testing::random_cocycle(u, v, rng)};
    const auto ext = build_extension(u, v, triple.z);
    const auto g = testing::random_base_change(q, ext.w.dims(), rng);
    const auto image = phi_map(g, triple);
    std::vector<Matrix<RationalField>> h;
    for (VertexIndex x = 0; x < 2; ++x) h.push_back(g.at(x).block(0, v.dim(x), ext.w.dim(x), u.dim(x)));
    EXPECT_EQ(psi_map(image.source, image.target, image.map, std::make_optional(h)), triple);
  }
}

}  // namespace
}  // namespace qvl
