#include <gtest/gtest.h>

#include <cmath>

#include "weylnoise/fock.hpp"
#include "weylnoise/induced.hpp"
#include "weylnoise/sampling.hpp"

using namespace weylnoise;

namespace {

SpinorSection gaussian(int hel) {
  SectionBasisFunction f;
  f.center = {0.2, -0.1, 0.4};
  f.width = 0.9;
  SectionBasisFunction g;
  g.center = {-0.5, 0.3, 0.0};
  g.amplitude = {0.0, 0.7};
  g.monomial = {1, 0, 0};
  return SpinorSection::from_basis({f, g}, hel);
}

}  // namespace

TEST(Induced, PointwiseAgainstTransport) {
  Sampler rng(41);
  for (int hel : {1, -1}) {
    SpinorSection phi = gaussian(hel);
    for (int k = 0; k < 10; ++k) {
      PoincareElement g = rng.poincare(0.8, 1.5);
      SpinorSection out = apply_induced(g, phi);
      for (int j = 0; j < 10; ++j) {
        FourVector p = rng.cone_point(0.1, 4.0);
        FourVector q = covering_map(g.h).inverse().apply(p);
        SpinorVector moved = spin_rep(g.h.adjoint_inverse()) * phi.value(q);
        SpinorVector expected = character_eval(p, g.x) * moved;
        EXPECT_LT((out.value(p) - expected).norm(), 1e-10 * (1 + expected.norm()));
      }
    }
  }
}

TEST(Induced, IdentityAndTranslation) {
  SpinorSection phi = gaussian(1);
  FourVector x(0.3, -1.0, 0.2, 0.5);
  SpinorSection same = apply_induced(PoincareElement::identity(), phi);
  SpinorSection shifted = apply_induced(PoincareElement::translation(x), phi);
  for (FourVector p : {FourVector(1, 0, 0, 1), FourVector(2, 0, 2, 0), FourVector(0.5, 0.3, 0.4, 0)}) {
    EXPECT_NEAR(std::abs(same.coefficient(p) - phi.coefficient(p)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(shifted.coefficient(p) - std::polar(1.0, minkowski_form(p, x)) * phi.coefficient(p)), 0.0,
                1e-13);
  }
}

TEST(Induced, SectionGaugeEquivalence) {
  Sampler rng(42);
  SpinorSection phi = gaussian(1);
  for (SectionChoice choice : {SectionChoice::BoostThenRotation, SectionChoice::RotationThenBoost}) {
    auto theta = [choice](const FourVector& p) { return fiber_vector(p, 1).dot(section_fiber_vector(p, 1, choice)); };
    SpinorSection gauged_in([phi, theta](const FourVector& p) { return phi.coefficient(p) * std::conj(theta(p)); }, 1);
    PoincareElement g = rng.poincare(0.8, 1.0);
    SpinorSection a = apply_induced(g, phi), b = apply_induced_section_gauge(g, gauged_in, choice);
    for (int k = 0; k < 30; ++k) {
      FourVector p = rng.cone_point(0.1, 4.0);
      EXPECT_NEAR(std::abs(theta(p)), 1.0, 1e-12);
      EXPECT_NEAR(std::abs(b.coefficient(p) - a.coefficient(p) * std::conj(theta(p))), 0.0, 1e-10);
    }
  }
}

TEST(Regions, SetOperationsAndTransforms) {
  using Box = RegionIndicator::Box;
  EXPECT_THROW(RegionIndicator(std::vector<Box>{{{1, 0, 0}, {0, 1, 1}}}), std::invalid_argument);
  RegionIndicator a(std::vector<Box>{{{0, 0, 0}, {2, 2, 2}}}), b(std::vector<Box>{{{1, 1, 1}, {3, 3, 3}}});
  FourVector in_both(std::sqrt(2.25 * 3), 1.5, 1.5, 1.5), only_a(std::sqrt(0.75), 0.5, 0.5, 0.5);
  EXPECT_TRUE(a.intersect(b).contains(in_both));
  EXPECT_FALSE(a.intersect(b).contains(only_a));
  EXPECT_TRUE(a.unite(b).contains(only_a));
  EXPECT_TRUE(RegionIndicator::everything().contains(only_a));
  EXPECT_FALSE(RegionIndicator::empty().contains(only_a));

  // a quarter turn about the third axis maps (x, y, z) to (-y, x, z)
  LorentzMatrix quarter = covering_map(rotation({0, 0, 1}, M_PI / 2));
  RegionIndicator ra = a.transformed(quarter);
  EXPECT_FALSE(ra.has_pullback());
  EXPECT_TRUE(ra.contains(FourVector(std::sqrt(0.75), -0.5, 0.5, 0.5)));
  EXPECT_FALSE(ra.contains(only_a));
  RegionIndicator rb = a.transformed(covering_map(rotation({0, 0, 1}, 0.3)));
  EXPECT_TRUE(rb.has_pullback());
  EXPECT_TRUE(rb.contains(quarter.apply(FourVector())) == a.contains(FourVector()));
  FourVector p = covering_map(rotation({0, 0, 1}, 0.3)).apply(only_a);
  EXPECT_TRUE(rb.contains(p));
}

TEST(Regions, ProjectionIsIdempotent) {
  using Box = RegionIndicator::Box;
  RegionIndicator a(std::vector<Box>{{{-1, 0, -1}, {1, 2, 1}}});
  SpinorSection phi = gaussian(-1);
  SpinorSection once = position_pvm_apply(a, phi), twice = position_pvm_apply(a, once);
  Sampler rng(43);
  for (int k = 0; k < 100; ++k) {
    FourVector p = rng.cone_point(0.05, 3.0);
    EXPECT_EQ(once.coefficient(p), twice.coefficient(p));
    EXPECT_EQ(once.coefficient(p), a.contains(p) ? phi.coefficient(p) : cplx(0.0));
  }
}

TEST(Borel, SectionMapsBasePoint) {
  Sampler rng(44);
  for (SectionChoice choice : {SectionChoice::BoostThenRotation, SectionChoice::RotationThenBoost}) {
    EXPECT_TRUE(borel_section_c(base_momentum(), choice).h.matrix().isIdentity(1e-14));
    for (int k = 0; k < 50; ++k) {
      FourVector x = rng.cone_point(0.01, 50.0);
      FourVector y = covering_map(borel_section_c(x, choice).h).apply(base_momentum());
      for (int r = 0; r < 4; ++r) EXPECT_NEAR(y[r], x[r], 1e-11 * x[0]);
    }
    EXPECT_THROW(borel_section_c({1.0, 0.0, 0.0, 0.5}, choice), std::invalid_argument);
  }
}

TEST(Cocycle, CharacterPayload) {
  Sampler rng(45);
  std::vector<LittleGroupElement> samples;
  for (int k = 0; k < 20; ++k) samples.push_back(rng.little_group(1.0));
  LittleGroupElement e{std::polar(1.0, 0.7), cplx(0.3, 0.1)};
  EXPECT_NEAR(std::abs(fiber_character(1)(e)(0, 0) - std::polar(1.0, -0.7)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(fiber_character(-1)(e)(0, 0) - std::polar(1.0, 0.7)), 0.0, 1e-15);
  EXPECT_LT(homomorphism_defect(fiber_character(1), samples), 1e-13);

  CocyclePair pair = build_cocycle_pair(fiber_character(1), samples);
  EXPECT_NEAR(std::abs(pair.b(PoincareElement::identity())(0, 0) - 1.0), 0.0, 1e-13);
  for (int k = 0; k < 20; ++k) {
    PoincareElement g1 = rng.poincare(0.5, 1.0), g2 = rng.poincare(0.5, 1.0), g3 = rng.poincare(0.5, 1.0);
    cplx lhs = pair.f(poincare_multiply(g1, g2), g3)(0, 0);
    cplx rhs = pair.f(g1, poincare_multiply(g2, g3))(0, 0) * pair.f(g2, g3)(0, 0);
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-10);
  }
}

TEST(Cocycle, NonHomomorphismRejected) {
  Sampler rng(46);
  std::vector<LittleGroupElement> samples;
  for (int k = 0; k < 10; ++k) samples.push_back(rng.little_group(1.0));
  LittleGroupPayload bad = [](const LittleGroupElement& e) {
    return Eigen::MatrixXcd::Constant(1, 1, std::exp(cplx(0.0, 1.0) * e.a.real()) * e.z);
  };
  EXPECT_THROW(build_cocycle_pair(bad, samples), std::invalid_argument);
}

TEST(Cocycle, FirstOrderExamples) {
  Sampler rng(47);
  CocycleBlocks blocks{rng.complex_vector(1, 0.4), {rng.complex_vector(2, 0.3), rng.complex_vector(1, 0.5)}, {0.7, 2.1}};
  EXPECT_EQ(blocks.dimension(), 4);
  EXPECT_LT(example_first_order_cocycle(0.0, blocks).norm(), 1e-15);
  FirstOrderCocycle<double> tc = time_cocycle(blocks);
  for (int k = 0; k < 20; ++k) {
    double s = rng.uniform(-3, 3), t = rng.uniform(-3, 3);
    EXPECT_LT((tc.v(s + t) - tc.v(s) - tc.U(s) * tc.v(t)).norm(), 1e-13);
    EXPECT_LT((tc.U(s).adjoint() * tc.U(s) - Eigen::MatrixXcd::Identity(4, 4)).norm(), 1e-13);
  }
  // the u0 block grows linearly
  EXPECT_NEAR(example_first_order_cocycle(2.5, blocks).head(1).norm(), 2.5 * blocks.u0.norm(), 1e-14);

  FirstOrderCocycle<LittleGroupElement> lc = little_group_cocycle(rng.complex_vector(2, 0.5));
  for (int k = 0; k < 20; ++k) {
    LittleGroupElement e1 = rng.little_group(1.0), e2 = rng.little_group(1.0);
    EXPECT_LT((lc.v(little_group_compose(e1, e2)) - lc.v(e1) - lc.U(e1) * lc.v(e2)).norm(), 1e-13);
  }
}
