#include <gtest/gtest.h>

#include "birkhoff/algebra_catalog.hpp"
#include "birkhoff/engine.hpp"
#include "birkhoff/group_catalog.hpp"
#include "birkhoff/group_variety.hpp"
#include "birkhoff/homology.hpp"
#include "birkhoff/leib_variety.hpp"
#include "support/generators.hpp"

using namespace birkhoff;
using namespace birkhoff::catalog;

namespace {

const GroupVariety kGroups;

GroupHom sign_map() {
  auto s3 = symmetric(3);
  return quotient_group(s3, normal_closure(s3, {3})).projection;
}

/// Quotient of B by a random subgroup of its centre.
GroupHom random_central_group_surjection(gen::Rng& rng) {
  auto b = gen::pick(rng, gen::small_groups());
  auto z = centre(b);
  auto n = generated_subgroup(b, {z.elements()[gen::pick(rng, z.order())]});
  return quotient_group(b, n).projection;
}

void expect_no_failures(const std::vector<Check>& checks) {
  for (const auto& c : checks) EXPECT_NE(c.status, Status::Fail) << c.name << " " << c.witness.dump();
}

}  // namespace

TEST(RelativeCommutator, QuaternionModCentreIsCentral) {
  auto q8 = quaternion();
  auto f = make_extension(kGroups, quotient_group(q8, centre(q8)).projection);
  EXPECT_TRUE(relative_commutator(kGroups, f).is_trivial());
}

TEST(RelativeCommutator, SignMapGivesA3) {
  auto f = make_extension(kGroups, sign_map());
  auto rc = relative_commutator(kGroups, f);
  EXPECT_EQ(rc.order(), 3u);
  EXPECT_EQ(rc, classical_commutator(f.map.source(), f.kernel));
}

TEST(RelativeCommutator, L2OverItsAnnIsLieCentral) {
  auto v = LeibVariety::leib_lie();
  auto q = quotient_algebra(l2(), Subspace::span(2, {unit_vector(2, 1)}));
  EXPECT_TRUE(relative_commutator(v, make_extension(v, q.projection)).is_zero());
}

TEST(ClassifyExtension, IdentityIsTrivialCentralNormal) {
  auto r = classify_extension(kGroups, make_extension(kGroups, GroupHom::identity(symmetric(3))));
  EXPECT_TRUE(r.trivial);
  EXPECT_TRUE(r.central);
  EXPECT_TRUE(r.normal);
  ASSERT_TRUE(r.split.has_value());
  EXPECT_TRUE(*r.split);
  expect_no_failures(r.checks);
}

TEST(ClassifyExtension, SignMapIsSplitButNotCentral) {
  auto r = classify_extension(kGroups, make_extension(kGroups, sign_map()));
  EXPECT_FALSE(r.central);
  EXPECT_FALSE(r.trivial);
  EXPECT_FALSE(r.normal);
  ASSERT_TRUE(r.split.has_value());
  EXPECT_TRUE(*r.split);
  expect_no_failures(r.checks);
}

TEST(ClassifyExtension, ProductWithAbelianFactorIsTrivial) {
  auto r = classify_extension(kGroups, make_extension(kGroups, gen::first_projection(symmetric(3), cyclic(3))));
  EXPECT_TRUE(r.trivial);
  EXPECT_TRUE(r.central);
  expect_no_failures(r.checks);
}

TEST(ClassifyExtension, QuaternionIsCentralButNotSplit) {
  auto q8 = quaternion();
  auto r = classify_extension(kGroups, make_extension(kGroups, quotient_group(q8, centre(q8)).projection));
  EXPECT_TRUE(r.central);
  EXPECT_TRUE(r.normal);
  EXPECT_FALSE(r.trivial);
  ASSERT_TRUE(r.split.has_value());
  EXPECT_FALSE(*r.split);
}

TEST(ClassifyExtension, AlgebraSplitUsesSuppliedSection) {
  auto v = LeibVariety::lie_vect();
  auto [proj, incl] = gen::product_algebra_projection(sl2(), abelian(2));
  auto r = classify_extension(v, make_extension(v, proj), incl);
  ASSERT_TRUE(r.split.has_value());
  EXPECT_TRUE(*r.split);
  EXPECT_TRUE(r.trivial);
  EXPECT_TRUE(r.central);
  expect_no_failures(r.checks);

  auto semi = module_extension(sl2(), sl2_standard_rep(), true);
  auto [mp, ms] = gen::module_projection(sl2(), semi);
  auto s = classify_extension(v, make_extension(v, mp), ms);
  EXPECT_TRUE(*s.split);
  EXPECT_FALSE(s.central);
  EXPECT_FALSE(s.trivial);
  // No section given and no enumeration: split stays unknown.
  EXPECT_FALSE(classify_extension(v, make_extension(v, mp)).split.has_value());
}

TEST(Centralise, Examples) {
  auto c = centralise(kGroups, make_extension(kGroups, sign_map()));
  expect_no_failures(c.checks);
  EXPECT_EQ(c.central.map.source().order(), 2u);
  EXPECT_TRUE(c.central.map.is_bijective());

  auto q8 = quaternion();
  auto z = centralise(kGroups, make_extension(kGroups, quotient_group(q8, centre(q8)).projection));
  EXPECT_TRUE(z.unit.is_bijective());

  auto v = LeibVariety::leib_lie();
  auto hs = module_extension(sl2(), sl2_standard_rep(), false);
  auto [mp, ms] = gen::module_projection(sl2(), hs);
  auto a = centralise(v, make_extension(v, mp));
  expect_no_failures(a.checks);
  EXPECT_LT(a.central.map.source().dim(), hs.dim());
}

TEST(ComposeCentralCheck, Examples) {
  auto a5 = alternating(5);
  auto id = make_extension(kGroups, GroupHom::identity(a5));
  EXPECT_EQ(compose_central_check(kGroups, id, id).status, Status::Pass);

  auto v = LeibVariety::lie_vect();
  auto g = truncated_current(sl2(), 2);
  auto u = uce_construct(g, UceKind::LieVsVect);
  auto ue = make_extension(v, u.projection);
  EXPECT_EQ(compose_central_check(v, make_extension(v, AlgebraHom::identity(g)), ue).status, Status::Pass);

  // Non-perfect inner domain: skipped.
  auto h = make_extension(v, AlgebraHom::identity(heisenberg()));
  EXPECT_EQ(compose_central_check(v, h, h).status, Status::Skip);
  // Non-central outer extension: skipped.
  auto sign = make_extension(kGroups, sign_map());
  EXPECT_EQ(compose_central_check(kGroups, sign, make_extension(kGroups, GroupHom::identity(symmetric(3)))).status,
            Status::Skip);
}

TEST(UniversalityCertificate, PerfectGroupFactorsUniquely) {
  auto a5 = alternating(5);
  auto u = make_extension(kGroups, GroupHom::identity(a5));
  auto trivial = make_extension(kGroups, gen::first_projection(a5, cyclic(2)));
  auto cert = universality_certificate(kGroups, u, {u, trivial});
  EXPECT_TRUE(cert.perfect);
  ASSERT_EQ(cert.factorizations.size(), 2u);
  EXPECT_TRUE(cert.factorizations[0].unique());
  EXPECT_TRUE(cert.factorizations[1].unique());
  expect_no_failures(cert.checks);
}

TEST(UniversalityCertificate, NonPerfectDomainAllowsSeveralFactorizations) {
  auto c2 = cyclic(2);
  auto u = make_extension(kGroups, GroupHom::identity(c2));
  auto p = make_extension(kGroups, gen::first_projection(c2, cyclic(2)));
  auto cert = universality_certificate(kGroups, u, {p});
  EXPECT_FALSE(cert.perfect);
  EXPECT_EQ(cert.factorizations[0].count, 2u);
}

TEST(UniversalityCertificate, GuardIsEnforced) {
  auto a5 = alternating(5);
  auto u = make_extension(kGroups, GroupHom::identity(a5));
  EXPECT_THROW(universality_certificate(kGroups, u, {u}, 10), Error);
}

TEST(ThreeTermTail, SignMap) {
  auto t = three_term_tail(kGroups, make_extension(kGroups, sign_map()));
  expect_no_failures(t.checks);
  EXPECT_EQ(t.relative_commutator, t.kernel);  // A3 / [A3, S3] is trivial
}

TEST(MakeExtension, RejectsNonSurjective) {
  auto inc = gen::first_inclusion(cyclic(2), cyclic(2));
  EXPECT_THROW(make_extension(kGroups, inc), Error);
}

// ---- properties

TEST(EngineProperty, GroupCommutatorIsClassical) {
  gen::Rng rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    auto f = make_extension(kGroups, gen::random_group_surjection(rng));
    EXPECT_EQ(relative_commutator(kGroups, f), classical_commutator(f.map.source(), f.kernel));
  }
}

TEST(EngineProperty, LieCommutatorIsClassical) {
  gen::Rng rng(52);
  auto v = LeibVariety::lie_vect();
  for (int trial = 0; trial < 60; ++trial) {
    auto b = gen::random_lie(rng, 5);
    auto f = make_extension(v, gen::random_algebra_surjection(rng, b));
    EXPECT_EQ(relative_commutator(v, f), classical_commutator(b, f.kernel));
  }
}

TEST(EngineProperty, CentralIffNormal) {
  gen::Rng rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = make_extension(kGroups, trial % 2 ? gen::random_group_surjection(rng)
                                               : random_central_group_surjection(rng));
    auto r = classify_extension(kGroups, f);
    EXPECT_EQ(r.central, r.normal);
    expect_no_failures(r.checks);
  }
  auto v = LeibVariety::leib_lie();
  for (int trial = 0; trial < 40; ++trial) {
    auto b = gen::random_leibniz(rng, 4);
    auto r = classify_extension(v, make_extension(v, gen::random_algebra_surjection(rng, b)));
    EXPECT_EQ(r.central, r.normal);
  }
}

TEST(EngineProperty, SplitExtensionsAreCentralIffTrivial) {
  gen::Rng rng(54);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = gen::pick(rng, gen::tiny_groups());
    auto m = gen::pick(rng, gen::tiny_groups());
    if (a.order() * m.order() > 48) continue;
    auto r = classify_extension(kGroups, make_extension(kGroups, gen::first_projection(a, m)));
    ASSERT_TRUE(r.split.has_value());
    EXPECT_TRUE(*r.split);
    EXPECT_EQ(r.central, r.trivial);
    EXPECT_EQ(r.central, m.is_abelian());
  }
  auto v = LeibVariety::leib_lie();
  for (int trial = 0; trial < 20; ++trial) {
    auto a = gen::random_leibniz(rng, 3);
    auto m = gen::random_leibniz(rng, 2);
    auto [p, s] = gen::product_algebra_projection(a, m);
    auto r = classify_extension(v, make_extension(v, p), s);
    EXPECT_TRUE(*r.split);
    EXPECT_EQ(r.central, r.trivial);
    EXPECT_EQ(r.central, m.is_lie());
  }
}

TEST(EngineProperty, CentralExtensionsArePullbackStable) {
  gen::Rng rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = make_extension(kGroups, random_central_group_surjection(rng));
    ASSERT_TRUE(is_central(kGroups, f));
    auto m = gen::pick(rng, std::vector<FiniteGroup>{cyclic(2), symmetric(3)});
    auto g = gen::first_projection(f.map.target(), m);
    EXPECT_TRUE(is_central(kGroups, pullback(kGroups, f, g)));
  }
}

TEST(EngineProperty, CentralisingTwiceChangesNothing) {
  gen::Rng rng(56);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = make_extension(kGroups, gen::random_group_surjection(rng));
    auto once = centralise(kGroups, f);
    expect_no_failures(once.checks);
    auto twice = centralise(kGroups, once.central);
    EXPECT_TRUE(twice.unit.is_bijective());
  }
  auto v = LeibVariety::leib_lie();
  for (int trial = 0; trial < 40; ++trial) {
    auto b = gen::random_leibniz(rng, 4);
    auto once = centralise(v, make_extension(v, gen::random_algebra_surjection(rng, b)));
    expect_no_failures(once.checks);
    EXPECT_TRUE(centralise(v, once.central).unit.is_bijective());
  }
}

TEST(EngineProperty, CompositeOfCentralWithPerfectDomainIsCentral) {
  // Only C = 1 gives a perfect inner domain; the other cases must skip, never fail.
  gen::Rng rng(57);
  auto a5 = alternating(5);
  for (int trial = 0; trial < 5; ++trial) {
    auto c = gen::pick(rng, std::vector<FiniteGroup>{cyclic(1), cyclic(2), cyclic(3)});
    auto f = make_extension(kGroups, gen::first_projection(a5, c));
    auto g = make_extension(kGroups, GroupHom::identity(direct_product(a5, c)));
    auto check = compose_central_check(kGroups, f, g);
    EXPECT_NE(check.status, Status::Fail);
  }
}
