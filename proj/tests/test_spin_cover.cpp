#include <gtest/gtest.h>

#include <cmath>

#include "weylnoise/poincare.hpp"
#include "weylnoise/sampling.hpp"
#include "weylnoise/spin_cover.hpp"

using namespace weylnoise;

namespace {

// L_rs from the action p -> m eta(p) m^* on basis vectors, computed entrywise
Eigen::Matrix4d lorentz_oracle(const Matrix2c& m) {
  Eigen::Matrix4d l;
  for (int s = 0; s < 4; ++s) {
    Matrix2c h = m * pauli(s) * m.adjoint();
    l(0, s) = 0.5 * (h(0, 0) + h(1, 1)).real();
    l(1, s) = 0.5 * (h(0, 1) + h(1, 0)).real();
    l(2, s) = 0.5 * (h(1, 0) - h(0, 1)).imag();
    l(3, s) = 0.5 * (h(0, 0) - h(1, 1)).real();
  }
  return l;
}

Matrix2c expm_series(const Matrix2c& x) {
  Matrix2c term = Matrix2c::Identity(), sum = Matrix2c::Identity();
  for (int k = 1; k < 40; ++k) {
    term = term * x / double(k);
    sum += term;
  }
  return sum;
}

}  // namespace

TEST(Hermitian, BaseAndRoundTrip) {
  Matrix2c h = hermitian_of(base_momentum());
  EXPECT_NEAR(std::abs(h(0, 0) - 2.0), 0.0, 1e-15);
  EXPECT_NEAR(h.cwiseAbs().sum() - 2.0, 0.0, 1e-15);
  FourVector p(1.3, -0.2, 0.7, 0.4);
  FourVector q = four_vector_of(hermitian_of(p));
  for (int r = 0; r < 4; ++r) EXPECT_NEAR(q[r], p[r], 1e-15);
  EXPECT_NEAR(hermitian_of(p).determinant().real(), minkowski_form(p, p), 1e-14);
}

TEST(SL2C, RejectsWrongDeterminant) {
  EXPECT_THROW(SL2CElement(Matrix2c::Identity() * 2.0), std::invalid_argument);
  Matrix2c traced;
  traced << 1, 0, 0, 1;
  EXPECT_THROW(SL2CLieElement{traced}, std::invalid_argument);
  EXPECT_THROW(LittleGroupElement(cplx(2.0, 0.0), cplx(0.0, 0.0)), std::invalid_argument);
}

TEST(Covering, MatchesEntrywiseOracle) {
  Sampler rng(11);
  for (int k = 0; k < 50; ++k) {
    SL2CElement m = rng.sl2c(1.5);
    EXPECT_LT((covering_map(m).matrix() - lorentz_oracle(m.matrix())).cwiseAbs().maxCoeff(), 1e-11);
    EXPECT_LT((covering_map(-m).matrix() - covering_map(m).matrix()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Covering, BoostAndRotationClosedForms) {
  double eta = 0.6, th = 0.9;
  Eigen::Matrix4d b = covering_map(boost({0, 0, 1}, eta)).matrix();
  EXPECT_NEAR(b(0, 0), std::cosh(eta), 1e-14);
  EXPECT_NEAR(b(0, 3), std::sinh(eta), 1e-14);
  EXPECT_NEAR(b(1, 1), 1.0, 1e-14);
  Eigen::Matrix4d r = covering_map(rotation({0, 0, 1}, th)).matrix();
  EXPECT_NEAR(r(1, 1), std::cos(th), 1e-14);
  EXPECT_NEAR(r(2, 1), std::sin(th), 1e-14);
  EXPECT_NEAR(r(1, 2), -std::sin(th), 1e-14);
  // a 2 pi rotation is -I upstairs and the identity downstairs
  SL2CElement full = rotation({0.6, 0.0, 0.8}, 2.0 * M_PI);
  EXPECT_LT((full.matrix() + Matrix2c::Identity()).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_TRUE(covering_map(full).matrix().isIdentity(1e-13));
}

TEST(Lie, ExponentialAndDerivatives) {
  Sampler rng(12);
  for (int k = 0; k < 20; ++k) {
    SL2CLieElement x = rng.lie(0.7);
    EXPECT_LT((exp_lie(x).matrix() - expm_series(x.matrix())).cwiseAbs().maxCoeff(), 1e-12);
    const double h = 1e-5;
    SL2CLieElement xp(h * x.matrix()), xm(-h * x.matrix());
    Eigen::Matrix4d fd = (covering_map(exp_lie(xp)).matrix() - covering_map(exp_lie(xm)).matrix()) / (2 * h);
    EXPECT_LT((fd - covering_map_lie(x)).cwiseAbs().maxCoeff(), 1e-8);
    Matrix4c sfd = (spin_rep(exp_lie(xp)) - spin_rep(exp_lie(xm))) / (2 * h);
    EXPECT_LT((sfd - spin_rep_lie(x)).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(LittleGroup, LawAndStabilizer) {
  Sampler rng(13);
  for (int k = 0; k < 30; ++k) {
    LittleGroupElement e1 = rng.little_group(2.0), e2 = rng.little_group(2.0);
    Matrix2c prod = little_group_embed(e1).matrix() * little_group_embed(e2).matrix();
    EXPECT_LT((little_group_embed(little_group_compose(e1, e2)).matrix() - prod).cwiseAbs().maxCoeff(), 1e-13);
    FourVector moved = covering_map(little_group_embed(e1)).apply(base_momentum());
    for (int r = 0; r < 4; ++r) EXPECT_NEAR(moved[r], base_momentum()[r], 1e-12);
  }
  EXPECT_THROW(little_group_from(boost({0, 0, 1}, 0.4)), std::invalid_argument);
  LittleGroupElement back = little_group_from(little_group_embed({cplx(0.0, 1.0), cplx(0.3, -0.2)}));
  EXPECT_NEAR(std::abs(back.z - cplx(0.0, 1.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(back.a - cplx(0.3, -0.2)), 0.0, 1e-15);
  auto gens = little_group_generators();
  SL2CElement r = exp_lie(SL2CLieElement(0.8 * gens.rotation.matrix()));
  EXPECT_NEAR(std::abs(r.matrix()(0, 0) - std::polar(1.0, 0.4)), 0.0, 1e-14);
}

TEST(Poincare, ProductAndInverse) {
  Sampler rng(14);
  for (int k = 0; k < 30; ++k) {
    PoincareElement g1 = rng.poincare(1.0, 2.0), g2 = rng.poincare(1.0, 2.0);
    PoincareElement g = poincare_multiply(g1, g2);
    FourVector x = g1.x + covering_map(g1.h).apply(g2.x);
    for (int r = 0; r < 4; ++r) EXPECT_NEAR(g.x[r], x[r], 1e-12);
    EXPECT_LT(poincare_distance(poincare_multiply(g, poincare_inverse(g)), PoincareElement::identity()), 1e-11);
  }
}
