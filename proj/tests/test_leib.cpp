#include <gtest/gtest.h>

#include "birkhoff/algebra_catalog.hpp"
#include "birkhoff/engine.hpp"
#include "birkhoff/leib_variety.hpp"
#include "support/generators.hpp"

using namespace birkhoff;
using namespace birkhoff::catalog;

namespace {

Subspace span_of(std::size_t n, std::initializer_list<std::size_t> axes) {
  std::vector<Vector> vs;
  for (auto i : axes) vs.push_back(unit_vector(n, i));
  return Subspace::span(n, vs);
}

// [x,[y,z]] - [[x,y],z] + [[x,z],y] on basis vectors, evaluated from scratch.
Vector leibniz_defect(const LeibnizAlgebra& g, std::size_t i, std::size_t j, std::size_t k) {
  const auto n = g.dim();
  auto x = unit_vector(n, i), y = unit_vector(n, j), z = unit_vector(n, k);
  return g.bracket(x, g.bracket(y, z)) - g.bracket(g.bracket(x, y), z) + g.bracket(g.bracket(x, z), y);
}

}  // namespace

TEST(ValidateAlgebra, Sl2IsLie) {
  auto v = validate_algebra(sl2());
  EXPECT_TRUE(v.is_leibniz);
  EXPECT_TRUE(v.is_lie);
  EXPECT_FALSE(v.witness.has_value());
}

TEST(ValidateAlgebra, L2IsLeibnizButNotLie) {
  auto v = validate_algebra(l2());
  EXPECT_TRUE(v.is_leibniz);
  EXPECT_FALSE(v.is_lie);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->kind, AlgebraWitness::Kind::Square);
}

TEST(ValidateAlgebra, LeftActingRankOneAlgebraSatisfiesTheIdentity) {
  // [e1,e2] = e1 with everything else zero: every nested bracket cancels.
  auto g = LeibnizAlgebra::from_brackets(2, {{{0, 1}, vec({1, 0})}});
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) EXPECT_TRUE(is_zero(leibniz_defect(g, i, j, k)));
  EXPECT_TRUE(validate_algebra(g).is_leibniz);
  EXPECT_FALSE(validate_algebra(g).is_lie);
}

TEST(ValidateAlgebra, MirroredAlgebraFailsWithWitness) {
  // [e2,e1] = e1 fails at (e2, e2, e1).
  auto g = LeibnizAlgebra::from_brackets(2, {{{1, 0}, vec({1, 0})}});
  EXPECT_FALSE(is_zero(leibniz_defect(g, 1, 1, 0)));
  auto v = validate_algebra(g);
  EXPECT_FALSE(v.is_leibniz);
  EXPECT_FALSE(v.is_lie);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->kind, AlgebraWitness::Kind::Leibniz);
  EXPECT_FALSE(is_zero(leibniz_defect(g, v.witness->i, v.witness->j, v.witness->k)));
}

TEST(ValidateAlgebra, RejectsWrongConstantCount) {
  EXPECT_THROW(LeibnizAlgebra(2, std::vector<Rational>(7, Rational(0))), Error);
}

TEST(IdealGenerated, Examples) {
  auto g = l2();
  EXPECT_TRUE(ideal_generated(g, Subspace::zero(2)).is_zero());
  EXPECT_TRUE(ideal_generated(g, Subspace::whole(2)).is_whole());
  EXPECT_EQ(ideal_generated(g, span_of(2, {1})), span_of(2, {1}));
  // In sl2 any non-zero seed generates everything.
  EXPECT_TRUE(ideal_generated(sl2(), span_of(3, {1})).is_whole());
}

TEST(ReflectorLie, Examples) {
  auto s = reflector_lie(sl2());
  EXPECT_TRUE(s.ann.is_zero());
  EXPECT_TRUE(s.unit.is_bijective());

  auto l = reflector_lie(l2());
  EXPECT_EQ(l.ann, span_of(2, {1}));
  EXPECT_EQ(l.lie.dim(), 1u);
  EXPECT_TRUE(l.lie.is_abelian());
  EXPECT_TRUE(l.lie.is_lie());

  EXPECT_TRUE(reflector_lie(abelian(3)).ann.is_zero());
}

TEST(ReflectorLie, RejectsNonLeibnizInput) {
  auto bad = LeibnizAlgebra::from_brackets(2, {{{1, 0}, vec({1, 0})}});
  try {
    reflector_lie(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InputNotLeibniz);
  }
}

TEST(ReflectorVect, Examples) {
  auto a = reflector_vect(abelian(3));
  EXPECT_TRUE(a.derived.is_zero());
  EXPECT_EQ(a.dim_ab, 3u);
  auto s = reflector_vect(sl2());
  EXPECT_TRUE(s.derived.is_whole());
  EXPECT_EQ(s.dim_ab, 0u);
  auto l = reflector_vect(l2());
  EXPECT_EQ(l.derived, span_of(2, {1}));
  EXPECT_EQ(l.dim_ab, 1u);
}

TEST(ZLie, Examples) {
  EXPECT_TRUE(z_lie(abelian(2)).is_whole());
  EXPECT_EQ(z_lie(l2()), span_of(2, {1}));
  // Every element of a Lie algebra anticommutes with everything.
  EXPECT_TRUE(z_lie(sl2()).is_whole());
  EXPECT_TRUE(z_lie(heisenberg()).is_whole());
  // Hemisemidirect sl2 + V with a faithful action: [g,z] + [z,g] = -rho(x)w - rho(y)v
  // vanishes for all y, w only when z = 0.
  EXPECT_TRUE(z_lie(module_extension(sl2(), sl2_standard_rep(), false)).is_zero());
}

TEST(Centre, Examples) {
  EXPECT_TRUE(centre(abelian(2)).is_whole());
  EXPECT_TRUE(centre(sl2()).is_zero());
  EXPECT_EQ(centre(heisenberg()), span_of(3, {2}));
  EXPECT_EQ(centre(l2()), span_of(2, {1}));
}

TEST(IsPerfect, Examples) {
  EXPECT_TRUE(is_perfect(sl2(), AlgebraReflector::Vect));
  EXPECT_FALSE(is_perfect(l2(), AlgebraReflector::Lie));
  EXPECT_FALSE(is_perfect(abelian(1), AlgebraReflector::Vect));
  EXPECT_FALSE(is_perfect(heisenberg(), AlgebraReflector::Vect));
  EXPECT_TRUE(is_perfect(truncated_current(sl2(), 2), AlgebraReflector::Vect));
}

TEST(AlgebraHom, RejectsMapThatBreaksTheBracket) {
  RatMatrix m(3, 3);
  m(0, 0) = 1;  // h -> h, e -> 0, f -> 0 kills [e,f] = h but not its image
  try {
    AlgebraHom(sl2(), sl2(), m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotHomomorphism);
  }
}

TEST(QuotientAlgebra, RejectsNonIdeal) {
  EXPECT_THROW(quotient_algebra(sl2(), span_of(3, {1})), Error);
}

// ---- properties

TEST(LeibProperty, ReflectionsLandInTheirSubvarieties) {
  gen::Rng rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    auto g = gen::random_leibniz(rng);
    ASSERT_TRUE(g.is_leibniz());
    auto l = reflector_lie(g);
    EXPECT_TRUE(l.lie.is_lie());
    EXPECT_TRUE(l.unit.is_surjective());
    EXPECT_EQ(l.unit.kernel(), l.ann);
    auto v = reflector_vect(g);
    EXPECT_EQ(v.dim_ab + v.derived.dim(), g.dim());
    EXPECT_TRUE(quotient_algebra(g, v.derived).algebra.is_abelian());
  }
}

TEST(LeibProperty, ReflectorTriangleCommutes) {
  gen::Rng rng(32);
  for (int trial = 0; trial < 80; ++trial) {
    auto g = gen::random_leibniz(rng);
    auto through_lie = reflector_vect(reflector_lie(g).lie).dim_ab;
    EXPECT_EQ(through_lie, reflector_vect_lie(g).dim_ab);
    // For Leibniz algebras the ann ideal lies in the derived ideal.
    EXPECT_EQ(reflector_vect_lie(g).dim_ab, reflector_vect(g).dim_ab);
  }
}

TEST(LeibProperty, ReflectionIsIdempotent) {
  gen::Rng rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = gen::random_leibniz(rng);
    auto once = reflector_lie(g).lie;
    EXPECT_TRUE(reflector_lie(once).unit.is_bijective());
    auto ab = quotient_algebra(g, reflector_vect(g).derived).algebra;
    EXPECT_TRUE(reflector_vect(ab).unit.is_bijective());
  }
}

TEST(LeibProperty, GeneratedIdealIsAnIdealContainingTheSeed) {
  gen::Rng rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = gen::random_leibniz(rng);
    auto seed = Subspace::span(g.dim(), {gen::random_vector(rng, g.dim())});
    auto i = ideal_generated(g, seed);
    EXPECT_TRUE(i.contains(seed));
    EXPECT_TRUE(is_ideal(g, i));
    EXPECT_TRUE(is_ideal(g, z_lie(g)));
    EXPECT_TRUE(z_lie(g).contains(centre(g)));
  }
}

TEST(LeibProperty, KernelInZLieIffLieCommutatorVanishes) {
  gen::Rng rng(35);
  int central = 0, not_central = 0;
  for (int trial = 0; trial < 120; ++trial) {
    auto b = gen::random_leibniz(rng);
    auto f = trial % 2 == 0 ? gen::random_quotient_inside(rng, b, z_lie(b)) : gen::random_algebra_surjection(rng, b);
    auto ext = make_extension(LeibVariety::leib_lie(), f);
    auto c = lie_centrality(ext);
    EXPECT_TRUE(c.agree()) << "trial " << trial;
    EXPECT_EQ(c.kernel_in_z_lie, is_central(LeibVariety::leib_lie(), ext));
    (c.central ? central : not_central)++;
  }
  EXPECT_GT(central, 10);
  EXPECT_GT(not_central, 10);
}
