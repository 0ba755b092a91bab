#include <gtest/gtest.h>

#include <cmath>

#include "weylnoise/sampling.hpp"
#include "weylnoise/white_noise.hpp"

using namespace weylnoise;

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Hermite, ExplicitPolynomials) {
  for (double x : {-2.0, -0.3, 0.0, 0.7, 1.9}) {
    EXPECT_DOUBLE_EQ(normalized_hermite(0, x), 1.0);
    EXPECT_NEAR(normalized_hermite(1, x), x, 1e-15);
    EXPECT_NEAR(normalized_hermite(2, x), (x * x - 1) / std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(normalized_hermite(3, x), (x * x * x - 3 * x) / std::sqrt(6.0), 1e-14);
  }
}

TEST(GaussianRule, Moments) {
  GaussianRule r = gaussian_rule(1, 10);
  double m0 = 0, m2 = 0, m4 = 0, m6 = 0;
  for (std::size_t i = 0; i < r.weights.size(); ++i) {
    double x = r.nodes[i][0];
    m0 += r.weights[i];
    m2 += r.weights[i] * x * x;
    m4 += r.weights[i] * std::pow(x, 4);
    m6 += r.weights[i] * std::pow(x, 6);
  }
  EXPECT_NEAR(m0, 1.0, 1e-13);
  EXPECT_NEAR(m2, 1.0, 1e-13);
  EXPECT_NEAR(m4, 3.0, 1e-12);
  EXPECT_NEAR(m6, 15.0, 1e-11);
  EXPECT_EQ(gaussian_rule(2, 5).weights.size(), 25u);
  EXPECT_THROW(gaussian_rule(0, 5), std::invalid_argument);
}

TEST(Chaos, GramIsIdentity) {
  for (int n = 1; n <= 2; ++n) {
    FockSpace s(n, 4);
    Eigen::MatrixXcd g = chaos_gram(s, 10);
    EXPECT_LT(max_abs(g - Eigen::MatrixXcd::Identity(g.rows(), g.cols())), 1e-12);
  }
}

TEST(Chaos, ExponentialVectorIsWickExponential) {
  // e(f) maps to exp(<f, x> - |f|^2 / 2) for real f
  FockSpace s(2, 22);
  Eigen::VectorXcd f(2);
  f << 0.4, -0.3;
  HermiteExpansion h = chaos_map(exponential_vector(f, s), s);
  for (auto x : {std::array<double, 2>{0.1, 0.5}, std::array<double, 2>{-1.2, 0.8}}) {
    double expected = std::exp(0.4 * x[0] - 0.3 * x[1] - 0.125);
    EXPECT_NEAR(std::abs(h(x) - expected), 0.0, 1e-12);
  }
  std::array<double, 3> wrong{0, 0, 0};
  EXPECT_THROW(h(wrong), std::invalid_argument);
}

TEST(Fermion, CanonicalAnticommutation) {
  ToyFockSpace space(5);
  FermionIncrements inc = fermionize(space);
  const Eigen::Index d = space.dimension();
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      Eigen::MatrixXcd ll = inc.lowering[i] * inc.lowering[j] + inc.lowering[j] * inc.lowering[i];
      Eigen::MatrixXcd lr = inc.lowering[i] * inc.raising[j] + inc.raising[j] * inc.lowering[i];
      EXPECT_EQ(max_abs(ll), 0.0);
      Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(d, d);
      if (i == j) expected.setIdentity();
      EXPECT_EQ(max_abs(lr - expected), 0.0);
    }
  // Jordan-Wigner sign: lowering slot 2 on |slots 0 and 2 occupied> gives -|slot 0>
  EXPECT_EQ(inc.lowering[2](0b001, 0b101), cplx(-1.0));
  EXPECT_EQ(inc.lowering[2](0b000, 0b100), cplx(1.0));
  EXPECT_THROW(ToyFockSpace(0), std::invalid_argument);
  EXPECT_THROW(fermionize(ToyFockSpace(1)), std::invalid_argument);
}

TEST(Fermion, BosonicReflectionOnlyOnSingleOccupancy) {
  FermionIncrements inc = reflect_bosonic(3, 2);
  auto idx = single_occupancy_indices(3, 2);
  EXPECT_EQ(idx.size(), 8u);
  double full = 0.0, compressed = 0.0;
  for (int i = 0; i < 3; ++i) {
    Eigen::MatrixXcd lr = inc.lowering[i] * inc.raising[i] + inc.raising[i] * inc.lowering[i];
    Eigen::MatrixXcd defect = lr - Eigen::MatrixXcd::Identity(lr.rows(), lr.cols());
    full = std::max(full, max_abs(defect));
    // compress the raising/lowering pair through the single-occupancy projector
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(lr.rows(), lr.cols());
    for (auto k : idx) p(k, k) = 1.0;
    Eigen::MatrixXcd a = p * inc.lowering[i] * p, ad = p * inc.raising[i] * p;
    Eigen::MatrixXcd c = a * ad + ad * a;
    for (auto r : idx)
      for (auto s : idx) compressed = std::max(compressed, std::abs(c(r, s) - (r == s ? 1.0 : 0.0)));
  }
  EXPECT_GT(full, 0.5);
  EXPECT_LT(compressed, 1e-14);
}

TEST(WeightedNorm, MonotoneInK) {
  DiracHamiltonian h{{{0.5, 0.0, 0.0}, {0.0, 2.0, 1.0}, {3.0, -1.0, 0.5}}};
  Eigen::MatrixXcd m = h.matrix();
  EXPECT_LT(max_abs(m - m.adjoint()), 1e-15);
  Sampler rng(61);
  Eigen::VectorXcd f = rng.complex_vector(h.dimension(), 1.0);
  EXPECT_NEAR(weighted_norm(f, 0, h), f.norm(), 1e-14);
  // |H| on the block for p has eigenvalue |p| twice
  Eigen::VectorXcd first = Eigen::VectorXcd::Zero(h.dimension());
  first[0] = 1.0;
  EXPECT_NEAR(weighted_norm(first, 2, h), 2.25, 1e-13);
  for (int k = 0; k < 4; ++k) EXPECT_LE(weighted_norm(f, k, h), weighted_norm(f, k + 1, h));
  EXPECT_THROW(weighted_norm(f, -1, h), std::invalid_argument);
}
