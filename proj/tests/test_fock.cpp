#include <gtest/gtest.h>

#include <cmath>

#include <gsl/gsl_sf_gamma.h>
#include <gsl/gsl_sf_laguerre.h>

#include "weylnoise/fock.hpp"
#include "weylnoise/sampling.hpp"

using namespace weylnoise;

namespace {

// <m| exp(alpha a^dagger - conj(alpha) a) |n> for a single mode
cplx displacement_element(int m, int n, cplx alpha) {
  double x = std::norm(alpha);
  double pref = std::exp(-x / 2);
  if (m >= n)
    return std::sqrt(gsl_sf_fact(n) / gsl_sf_fact(m)) * std::pow(alpha, m - n) * pref *
           gsl_sf_laguerre_n(n, m - n, x);
  return std::sqrt(gsl_sf_fact(m) / gsl_sf_fact(n)) * std::pow(-std::conj(alpha), n - m) * pref *
         gsl_sf_laguerre_n(m, n - m, x);
}

Eigen::VectorXcd vec2(cplx a, cplx b) {
  Eigen::VectorXcd v(2);
  v << a, b;
  return v;
}

}  // namespace

TEST(FockSpace, DimensionAndOrdering) {
  for (int n = 1; n <= 3; ++n)
    for (int N = 0; N <= 6; ++N)
      EXPECT_EQ(FockSpace(n, N).dimension(), Eigen::Index(std::lround(gsl_sf_choose(n + N, N))));
  FockSpace s(2, 3);
  EXPECT_EQ(s.occupation(0), (Occupation{0, 0}));
  EXPECT_EQ(s.occupation(1), (Occupation{1, 0}));
  EXPECT_EQ(s.occupation(2), (Occupation{0, 1}));
  EXPECT_EQ(*s.index_of({1, 1}), 4);
  EXPECT_FALSE(s.index_of({4, 0}).has_value());
  EXPECT_EQ(s.interior(1).size(), 3u);
  EXPECT_THROW(FockSpace(0, 2), std::invalid_argument);
}

TEST(Ladder, MatrixElementsAndCcr) {
  FockSpace s(2, 6);
  Eigen::VectorXcd e1 = vec2(1.0, 0.0);
  FockOperator a = annihilate(e1, s), ad = create(e1, s);
  for (int k = 1; k <= 6; ++k) {
    Eigen::Index from = *s.index_of({k, 0}), to = *s.index_of({k - 1, 0});
    EXPECT_NEAR(std::abs(a(to, from) - std::sqrt(double(k))), 0.0, 1e-15);
  }
  EXPECT_LT((ad - a.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
  Sampler rng(51);
  Eigen::VectorXcd f = rng.complex_vector(2, 1.0), g = rng.complex_vector(2, 1.0);
  FockOperator comm = annihilate(f, s) * create(g, s) - create(g, s) * annihilate(f, s);
  auto in = s.interior(5);
  FockOperator expected = one_particle_inner(f, g) * FockOperator::Identity(s.dimension(), s.dimension());
  EXPECT_LT(block_max_abs(comm, expected, in, in), 1e-13);
  EXPECT_LT((number_operator(s) - create(e1, s) * annihilate(e1, s) - create(vec2(0, 1), s) * annihilate(vec2(0, 1), s))
                .cwiseAbs()
                .maxCoeff(),
            1e-13);
}

TEST(ExponentialVector, OverlapAndTail) {
  FockSpace s(2, 20);
  Sampler rng(52);
  Eigen::VectorXcd f = rng.complex_vector(2, 0.6), g = rng.complex_vector(2, 0.6);
  cplx overlap = exponential_vector(f, s).dot(exponential_vector(g, s));
  EXPECT_NEAR(std::abs(overlap - std::exp(one_particle_inner(f, g))), 0.0, 1e-12);
  EXPECT_THROW(exponential_vector(vec2(3.0, 0.0), FockSpace(2, 4)), std::invalid_argument);
}

TEST(Weyl, DisplacementAgainstLaguerreClosedForm) {
  FockSpace s(2, 8);
  cplx alpha(0.4, -0.3);
  for (WeylRoute route : {WeylRoute::Factorized, WeylRoute::DenseGenerator}) {
    WeylOperator w = weyl_operator(WeylData::displacement(vec2(alpha, 0.0)), s, route);
    for (int m = 0; m <= 8; ++m)
      for (int n = 0; n <= 8; ++n) {
        cplx got = w.matrix(*s.index_of({m, 0}), *s.index_of({n, 0}));
        EXPECT_NEAR(std::abs(got - displacement_element(m, n, alpha)), 0.0, 1e-12) << m << " " << n;
      }
  }
  // coherent state coefficients e^{-|a|^2/2} a^m / sqrt(m!)
  WeylOperator w = weyl_operator(WeylData::displacement(vec2(alpha, 0.0)), s);
  for (int m = 0; m <= 8; ++m)
    EXPECT_NEAR(std::abs(w.matrix(*s.index_of({m, 0}), 0) -
                         std::exp(-std::norm(alpha) / 2) * std::pow(alpha, m) / std::sqrt(gsl_sf_fact(m))),
                0.0, 1e-13);
}

TEST(Weyl, SecondQuantizationAndValidation) {
  FockSpace s(2, 5);
  Sampler rng(53);
  Eigen::MatrixXcd u = rng.unitary(2), v = rng.unitary(2);
  FockOperator gu = second_quantize(u, s), gv = second_quantize(v, s);
  EXPECT_LT((second_quantize(u * v, s) - gu * gv).cwiseAbs().maxCoeff(), 1e-12);
  Eigen::VectorXcd f = rng.complex_vector(2, 0.5);
  FockSpace big(2, 24);
  EXPECT_LT((second_quantize(u, big) * exponential_vector(f, big) - exponential_vector(u * f, big)).norm(), 1e-12);
  EXPECT_THROW(second_quantize(2.0 * u, s), std::invalid_argument);
  EXPECT_THROW(WeylData(f, 2.0 * u), std::invalid_argument);
  EXPECT_THROW(weyl_operator(WeylData::displacement(f), s, WeylRoute::Factorized, -1), std::invalid_argument);
}

TEST(Weyl, PhaseRelations) {
  FockSpace s(2, 16);
  Eigen::VectorXcd f = vec2(cplx(0.3, 0.1), cplx(-0.2, 0.2)), g = vec2(cplx(0.1, -0.3), cplx(0.25, 0.05));
  WeylData a = WeylData::displacement(f), b = WeylData::displacement(g);
  EXPECT_LT(phase_relation_defect(a, b, s, 2, PhaseRelation::Multiplier), 1e-9);
  EXPECT_LT(phase_relation_defect(a, b, s, 2, PhaseRelation::SwapDisplacement), 1e-9);
  // the swap form with exp(+i Im<v_g, U_g v_h>) holds only when Im<f, g> = 0
  EXPECT_GT(phase_relation_defect(a, b, s, 2, PhaseRelation::SwapImagInner), 1e-3);
  Sampler rng(54);
  WeylData rot(f, rng.unitary(2));
  EXPECT_THROW(phase_relation_defect(rot, b, s, 2, PhaseRelation::SwapDisplacement), std::invalid_argument);
  EXPECT_LT(phase_relation_defect(rot, WeylData(g, rng.unitary(2)), s, 2, PhaseRelation::Multiplier), 1e-9);
}

TEST(Fields, StoneGeneratorAndOrientation) {
  FockSpace s(2, 8);
  Eigen::VectorXcd g = vec2(cplx(0.6, 0.2), cplx(-0.3, 0.4));
  auto in = s.interior(6);
  FockOperator p = stone_generator(g, s);
  FockOperator expected = cplx(0.0, -1.0) * (create(g, s) - annihilate(g, s));
  EXPECT_LT(block_max_abs(p, expected, in, in), 1e-8);

  FieldPair fp = field_operators(g, s);
  Proportionality k = fit_proportionality(annihilate(g, s), 0.5 * (fp.q + cplx(0.0, 1.0) * fp.p));
  EXPECT_NEAR(std::abs(k.kappa + 1.0), 0.0, 1e-8);
  EXPECT_LT(k.residual, 1e-8);

  // q = p(i g) taken literally: (q + i p) / 2 is the creation operator
  FockOperator q_literal = -fp.q;
  Proportionality lit = fit_proportionality(create(g, s), 0.5 * (q_literal + cplx(0.0, 1.0) * fp.p));
  EXPECT_NEAR(std::abs(lit.kappa - 1.0), 0.0, 1e-8);
  EXPECT_LT(lit.residual, 1e-8);
}
