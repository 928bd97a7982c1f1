#include <gtest/gtest.h>

#include "birkhoff/algebra_catalog.hpp"
#include "birkhoff/homology.hpp"
#include "support/generators.hpp"

using namespace birkhoff;
using namespace birkhoff::catalog;

namespace {

// Frozen values from tests/oracle/homology_oracle.py (independent Fraction arithmetic).
constexpr std::size_t kCeH2Sl2 = 0;
constexpr std::size_t kHl2Sl2 = 0;
constexpr std::size_t kHl2L2 = 1;
constexpr std::size_t kCeH2Current2 = 0;      // sl2 x Q[t]/t^2
constexpr std::size_t kHl2Current2 = 1;
constexpr std::size_t kUceDimCurrent2 = 6;    // CE universal central extension
constexpr std::size_t kHl2UceCurrent2 = 1;
constexpr std::size_t kLodayUceDimCurrent2 = 7;
constexpr std::size_t kCeH2Current3 = 0;      // sl2 x Q[t]/t^3
constexpr std::size_t kHl2Current3 = 2;
constexpr std::size_t kCeH2SquareZero2 = 1;   // sl2 x Q[x,y]/(x,y)^2
constexpr std::size_t kHl2SquareZero2 = 3;
constexpr std::size_t kUceDimSquareZero2 = 10;
constexpr std::size_t kHl2UceSquareZero2 = 2;

void expect_all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks) EXPECT_EQ(c.status, Status::Pass) << c.name << " " << c.witness.dump();
}

}  // namespace

TEST(CeH2, AbelianHasAllWedges) {
  for (std::size_t n = 0; n <= 4; ++n) EXPECT_EQ(ce_h2(abelian(n)).dim, n * (n - 1) / 2);
}

TEST(CeH2, GoldenValues) {
  auto s = ce_h2(sl2());
  EXPECT_EQ(s.dim, kCeH2Sl2);
  EXPECT_EQ(s.chain.degree2_dim, 3u);
  EXPECT_EQ(s.chain.degree3_dim, 1u);
  EXPECT_EQ(ce_h2(truncated_current(sl2(), 2)).dim, kCeH2Current2);
  EXPECT_EQ(ce_h2(truncated_current(sl2(), 3)).dim, kCeH2Current3);
  EXPECT_EQ(ce_h2(gen::square_zero_current(sl2(), 2)).dim, kCeH2SquareZero2);
  // Heisenberg: ker d2 = span{e^z, f^z}, im d3 = 0.
  EXPECT_EQ(ce_h2(heisenberg()).dim, 2u);
}

TEST(CeH2, RejectsNonLie) {
  try {
    ce_h2(l2());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InputNotLie);
  }
}

TEST(LodayHl2, AbelianHasAllTensors) {
  for (std::size_t n = 0; n <= 3; ++n) EXPECT_EQ(loday_hl2(abelian(n)).dim, n * n);
}

TEST(LodayHl2, GoldenValues) {
  auto l = loday_hl2(l2());
  EXPECT_EQ(l.dim, kHl2L2);
  EXPECT_EQ(l.rank_d2, 1u);
  auto s = loday_hl2(sl2());
  EXPECT_EQ(s.dim, kHl2Sl2);
  EXPECT_EQ(s.chain.degree2_dim, 9u);
  EXPECT_EQ(s.chain.degree3_dim, 27u);
  EXPECT_EQ(loday_hl2(truncated_current(sl2(), 2)).dim, kHl2Current2);
  EXPECT_EQ(loday_hl2(truncated_current(sl2(), 3)).dim, kHl2Current3);
  EXPECT_EQ(loday_hl2(gen::square_zero_current(sl2(), 2)).dim, kHl2SquareZero2);
}

TEST(LodayHl2, RejectsNonLeibniz) {
  auto bad = LeibnizAlgebra::from_brackets(2, {{{1, 0}, vec({1, 0})}});
  EXPECT_THROW(loday_hl2(bad), Error);
}

TEST(H1, Examples) {
  EXPECT_EQ(h1(sl2(), AlgebraReflector::Vect), 0u);
  EXPECT_EQ(h1(sl2(), AlgebraReflector::VectLie), 0u);
  EXPECT_EQ(h1(l2(), AlgebraReflector::VectLie), 1u);
  EXPECT_EQ(h1(abelian(3), AlgebraReflector::Vect), 3u);
}

TEST(Uce, Sl2IsItsOwnUce) {
  auto u = uce_construct(sl2(), UceKind::LieVsVect);
  expect_all_pass(u.checks);
  EXPECT_EQ(u.kernel.dim(), 0u);
  EXPECT_TRUE(u.projection.is_bijective());
  auto v = uce_construct(sl2(), UceKind::LeibVsVectLie);
  expect_all_pass(v.checks);
  EXPECT_TRUE(v.projection.is_bijective());
}

TEST(Uce, HeisenbergIsNotPerfect) {
  try {
    uce_construct(heisenberg(), UceKind::LieVsVect);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPerfect);
  }
}

TEST(Uce, TruncatedCurrentKernelMatchesH2) {
  auto g = truncated_current(sl2(), 2);
  auto u = uce_construct(g, UceKind::LieVsVect);
  expect_all_pass(u.checks);
  EXPECT_EQ(u.kernel.dim(), kCeH2Current2);
  EXPECT_EQ(u.total.dim(), kUceDimCurrent2);
  EXPECT_EQ(loday_hl2(u.total).dim, kHl2UceCurrent2);
  auto l = uce_construct(g, UceKind::LeibVsVectLie);
  expect_all_pass(l.checks);
  EXPECT_EQ(l.total.dim(), kLodayUceDimCurrent2);
  EXPECT_EQ(l.kernel.dim(), kHl2Current2);
}

TEST(Uce, SquareZeroCurrentHasNonTrivialKernel) {
  auto g = gen::square_zero_current(sl2(), 2);
  auto u = uce_construct(g, UceKind::LieVsVect);
  expect_all_pass(u.checks);
  EXPECT_EQ(u.kernel.dim(), kCeH2SquareZero2);
  EXPECT_EQ(u.total.dim(), kUceDimSquareZero2);
  EXPECT_TRUE(u.total.is_lie());
  EXPECT_EQ(loday_hl2(u.total).dim, kHl2UceSquareZero2);
  auto cert = homological_certificate(UceKind::LieVsVect, make_extension(LeibVariety::lie_vect(), u.projection));
  EXPECT_TRUE(cert.universal());
}

TEST(Comparison, AdditivityOnGoldenAlgebras) {
  for (const auto& g : {sl2(), truncated_current(sl2(), 2), gen::square_zero_current(sl2(), 2)}) {
    auto r = comparison_report(g);
    expect_all_pass(r.checks);
    EXPECT_EQ(r.hl2, r.h2 + r.hl2_uce);
  }
  auto r = comparison_report(gen::square_zero_current(sl2(), 2));
  EXPECT_EQ(r.hl2, kHl2SquareZero2);
  EXPECT_EQ(r.h2, kCeH2SquareZero2);
  EXPECT_EQ(r.hl2_uce, kHl2UceSquareZero2);
}

TEST(FiveTerm, HeisenbergOntoPlane) {
  auto h = heisenberg();
  auto q = quotient_algebra(h, Subspace::span(3, {unit_vector(3, 2)}));
  auto v = LeibVariety::lie_vect();
  auto r = five_term_report(v, make_extension(v, q.projection));
  expect_all_pass(r.checks);
  EXPECT_EQ(r.h2_b, 2u);
  EXPECT_EQ(r.h2_a, 1u);
  EXPECT_EQ(r.k_mod, 1u);
  EXPECT_EQ(r.h1_b, 2u);
  EXPECT_EQ(r.h1_a, 2u);
}

TEST(FiveTerm, RelativeToLieIsUnsupported) {
  auto v = LeibVariety::leib_lie();
  auto f = make_extension(v, AlgebraHom::identity(l2()));
  try {
    five_term_report(v, f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedHomology);
  }
}

// ---- properties

TEST(HomologyProperty, BoundaryOfBoundaryIsZero) {
  gen::Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    auto lie = gen::random_lie(rng, 5);
    auto ce = chain_complex(lie, ChainFlavor::CE);
    EXPECT_TRUE(rref(ce.d2 * ce.d3).pivots.empty());
    auto leib = gen::random_leibniz(rng, 4);
    auto lo = chain_complex(leib, ChainFlavor::Loday);
    EXPECT_TRUE(rref(lo.d2 * lo.d3).pivots.empty());
  }
}

TEST(HomologyProperty, RankNullityConsistency) {
  gen::Rng rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = gen::random_leibniz(rng, 4);
    auto r = loday_hl2(g);
    EXPECT_EQ(r.dim, r.chain.degree2_dim - r.rank_d2 - r.rank_d3);
    EXPECT_EQ(r.representatives.size(), r.dim);
    EXPECT_EQ(r.chain.degree2_dim, g.dim() * g.dim());
  }
}

TEST(HomologyProperty, DimensionsInvariantUnderBasisChange) {
  gen::Rng rng(43);
  for (const auto& g : {sl2(), heisenberg(), r2(), truncated_current(r2(), 2)}) {
    auto moved = change_basis(g, gen::random_invertible(rng, g.dim()));
    EXPECT_EQ(ce_h2(moved).dim, ce_h2(g).dim);
    EXPECT_EQ(loday_hl2(moved).dim, loday_hl2(g).dim);
  }
}

TEST(HomologyProperty, FiveTermSequenceExactOnRandomLieExtensions) {
  gen::Rng rng(44);
  auto v = LeibVariety::lie_vect();
  for (int trial = 0; trial < 25; ++trial) {
    auto b = gen::random_lie(rng, 5);
    auto r = five_term_report(v, make_extension(v, gen::random_algebra_surjection(rng, b)));
    expect_all_pass(r.checks);
  }
}

TEST(HomologyProperty, FiveTermSequenceExactOnRandomLeibnizExtensions) {
  gen::Rng rng(45);
  auto v = LeibVariety::leib_vect();
  for (int trial = 0; trial < 25; ++trial) {
    auto b = gen::random_leibniz(rng, 4);
    auto r = five_term_report(v, make_extension(v, gen::random_algebra_surjection(rng, b)));
    expect_all_pass(r.checks);
  }
}

TEST(HomologyProperty, UceOfLiesationMatchesUnderBasisChange) {
  gen::Rng rng(46);
  for (int trial = 0; trial < 4; ++trial) {
    auto g = change_basis(truncated_current(sl2(), 2), gen::random_invertible(rng, 6));
    auto u = uce_construct(g, UceKind::LieVsVect);
    expect_all_pass(u.checks);
    EXPECT_EQ(u.total.dim(), kUceDimCurrent2);
  }
}
