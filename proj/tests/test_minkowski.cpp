#include <gtest/gtest.h>

#include <cmath>

#include "weylnoise/minkowski.hpp"

using namespace weylnoise;

TEST(MinkowskiForm, Examples) {
  EXPECT_DOUBLE_EQ(minkowski_form({1, 0, 0, 0}, {1, 0, 0, 0}), 1.0);
  EXPECT_DOUBLE_EQ(minkowski_form({0, 1, 0, 0}, {0, 1, 0, 0}), -1.0);
  EXPECT_DOUBLE_EQ(minkowski_form(base_momentum(), base_momentum()), 0.0);
  EXPECT_DOUBLE_EQ(minkowski_form({1, 2, 3, 4}, {5, 6, 7, 8}), 5.0 - 12.0 - 21.0 - 32.0);
}

TEST(MinkowskiForm, CharacterIsUnimodularAndAdditive) {
  FourVector p(1.0, 0.2, -0.3, 0.9), x(0.4, 1.0, 2.0, -1.5), y(-2.0, 0.1, 0.3, 0.7);
  EXPECT_NEAR(std::abs(character_eval(p, x)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(character_eval(p, x + y) - character_eval(p, x) * character_eval(p, y)), 0.0, 1e-14);
  EXPECT_NEAR(std::arg(character_eval(p, x)), std::remainder(minkowski_form(p, x), 2.0 * M_PI), 1e-14);
}

TEST(FourVector, LightCone) {
  EXPECT_TRUE(base_momentum().is_forward_lightlike());
  EXPECT_TRUE(FourVector(5.0, 3.0, 4.0, 0.0).is_forward_lightlike());
  EXPECT_FALSE(FourVector(-1.0, 0.0, 0.0, 1.0).is_forward_lightlike());
  EXPECT_FALSE(FourVector(1.0, 0.0, 0.0, 0.5).is_forward_lightlike());
  EXPECT_FALSE(FourVector(NAN, 0.0, 0.0, 1.0).is_finite());
  EXPECT_DOUBLE_EQ(FourVector(0.0, 3.0, 4.0, 0.0).spatial_norm(), 5.0);
}

TEST(LorentzMatrix, RejectsNonLorentz) {
  Eigen::Matrix4d scale = Eigen::Matrix4d::Identity();
  scale(1, 1) = 2.0;
  EXPECT_THROW(LorentzMatrix{scale}, std::invalid_argument);
  Eigen::Matrix4d reversal = Eigen::Matrix4d::Identity();
  reversal(0, 0) = -1.0;
  reversal(1, 1) = -1.0;
  EXPECT_THROW(LorentzMatrix{reversal}, std::invalid_argument);
  Eigen::Matrix4d parity = Eigen::Matrix4d::Identity();
  parity(1, 1) = -1.0;
  EXPECT_THROW(LorentzMatrix{parity}, std::invalid_argument);
}

TEST(LorentzMatrix, BoostInverseAndPairing) {
  double eta = 0.8;
  Eigen::Matrix4d b = Eigen::Matrix4d::Identity();
  b(0, 0) = b(3, 3) = std::cosh(eta);
  b(0, 3) = b(3, 0) = std::sinh(eta);
  LorentzMatrix l(b);
  EXPECT_TRUE((l * l.inverse()).matrix().isIdentity(1e-14));
  FourVector k(1.0, 0.3, 0.2, -0.4), g(0.5, -1.0, 0.7, 0.2);
  EXPECT_NEAR(minkowski_form(l.apply(k), l.apply(g)), minkowski_form(k, g), 1e-14);
  EXPECT_NEAR(LorentzMatrix::metric_defect(b), 0.0, 1e-15);
  FourVector moved = l.apply(base_momentum());
  EXPECT_NEAR(moved[0], std::exp(eta), 1e-14);
  EXPECT_NEAR(moved[3], std::exp(eta), 1e-14);
}
