#include <gtest/gtest.h>

#include <cmath>

#include <Eigen/SVD>

#include "weylnoise/clifford.hpp"
#include "weylnoise/sampling.hpp"

using namespace weylnoise;

namespace {

int svd_nullity(const Matrix4c& m) {
  Eigen::JacobiSVD<Matrix4c> svd(m);
  int n = 0;
  for (int i = 0; i < 4; ++i) n += svd.singularValues()[i] < 1e-10 * std::max(1.0, svd.singularValues()[0]);
  return n;
}

}  // namespace

TEST(Gamma, CliffordRelationsDense) {
  const GammaRep& g = build_gamma();
  const Matrix4c id = Matrix4c::Identity();
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s) {
      Matrix4c anti = g.gamma[r] * g.gamma[s] + g.gamma[s] * g.gamma[r];
      Matrix4c expected = r == s ? Matrix4c(2.0 * g.epsilon[r] * id) : Matrix4c(Matrix4c::Zero());
      EXPECT_EQ((anti - expected).cwiseAbs().maxCoeff(), 0.0) << r << s;
    }
  Matrix4c five = cplx(0.0, 1.0) * g.gamma[0] * g.gamma[1] * g.gamma[2] * g.gamma[3];
  EXPECT_EQ((five - g.chirality).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ((g.chirality * g.chirality - id).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Slash, DeterminantAndNullity) {
  Sampler rng(21);
  for (int k = 0; k < 20; ++k) {
    FourVector p = rng.four_vector(2.0);
    double q = minkowski_form(p, p);
    EXPECT_NEAR(std::abs(slash(p).determinant() - cplx(q * q, 0.0)), 0.0, 1e-10 * (1 + q * q));
    FourVector c = rng.cone_point(0.1, 5.0);
    EXPECT_EQ(svd_nullity(slash(c)), 2);
  }
}

TEST(Fiber, KernelBasisAndHelicity) {
  Sampler rng(22);
  for (int k = 0; k < 20; ++k) {
    FourVector p = rng.cone_point(0.1, 5.0);
    FiberBasis b = fiber_kernel(p);
    ASSERT_EQ(b.basis.size(), 2u);
    for (const auto& v : b.basis) EXPECT_LT((slash(p) * v).norm(), 1e-10 * p[0]);
    EXPECT_NEAR(std::abs(b.basis[0].dot(b.basis[1])), 0.0, 1e-12);
    for (int h : {1, -1}) {
      FiberBasis f = fiber_kernel(p, h);
      ASSERT_EQ(f.basis.size(), 1u);
      EXPECT_LT((build_gamma().chirality * f.basis[0] - double(h) * f.basis[0]).norm(), 1e-12);
      EXPECT_LT((f.basis[0] - fiber_vector(p, h)).norm(), 1e-10);
    }
  }
  EXPECT_THROW(fiber_kernel({1.0, 0.0, 0.0, 0.5}), std::invalid_argument);
  EXPECT_THROW(fiber_kernel(base_momentum(), 0), std::invalid_argument);
}

TEST(Fiber, BundleActionAndInvariantForm) {
  Sampler rng(23);
  for (int k = 0; k < 20; ++k) {
    FourVector p = rng.cone_point(0.1, 5.0);
    SpinorVector v = fiber_vector(p, 1) * cplx(0.3, 1.1);
    SL2CElement h = rng.sl2c(1.0);
    BundlePoint out = bundle_action(h, p, v);
    EXPECT_LT((slash(out.p) * out.v).norm(), 1e-9 * out.p[0] * out.v.norm());
    EXPECT_NEAR(invariant_form(out.p, out.v), invariant_form(p, v), 1e-8);
  }
  SpinorVector wrong = SpinorVector::Zero();
  wrong[0] = wrong[2] = 1.0;
  EXPECT_THROW(bundle_action(SL2CElement(), base_momentum(), wrong), std::invalid_argument);
  EXPECT_THROW(invariant_form({0.0, 0.0, 0.0, 0.0}, wrong), std::invalid_argument);
}

// The massive pair solves slash(p) v = m v for the momentum aligned with the
// third axis, not for the returned p^(m).
TEST(Fiber, MassivePairAlignment) {
  for (double m : {1.0, 0.1, 0.01}) {
    MassiveFiber f = fiber_basis_massive(m);
    double e = std::sqrt(1 + m * m);
    EXPECT_DOUBLE_EQ(f.p[0], e);
    EXPECT_DOUBLE_EQ(f.p[1], 1.0);
    FourVector z(e, 0.0, 0.0, 1.0);
    EXPECT_LT((slash(z) * f.v1 - m * f.v1).norm(), 1e-14);
    EXPECT_LT((slash(z) * f.v2 - m * f.v2).norm(), 1e-14);
    EXPECT_GT((slash(f.p) * f.v1 - m * f.v1).norm(), 0.1);
    EXPECT_NEAR(std::abs(f.v1[2] - (1 + e) / 2), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(f.v2[3] - m / 2), 0.0, 1e-15);
  }
}

TEST(SpinRep, IntertwinesGammas) {
  Sampler rng(24);
  const GammaRep& g = build_gamma();
  for (int k = 0; k < 20; ++k) {
    SL2CElement m = rng.sl2c(1.0);
    Matrix4c s = spin_rep(m), si = s.inverse();
    Eigen::Matrix4d l = covering_map(m).matrix();
    for (int r = 0; r < 4; ++r) {
      Matrix4c rhs = Matrix4c::Zero();
      for (int t = 0; t < 4; ++t) rhs += l(r, t) * g.gamma[t];
      EXPECT_LT((si * g.gamma[r] * s - rhs).cwiseAbs().maxCoeff(), 1e-10);
    }
  }
}
