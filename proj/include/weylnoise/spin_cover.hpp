#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "weylnoise/minkowski.hpp"

namespace weylnoise {

using cplx = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;

/// Pauli matrices; index 0 is the identity so that eta(p) = sum_r p_r pauli(r).
const Matrix2c& pauli(int r);

/// Hermitian matrix p0 I + p1 s1 + p2 s2 + p3 s3. Maps (1,0,0,1) to diag(2,0).
Matrix2c hermitian_of(const FourVector& p);
/// Inverse of hermitian_of on Hermitian input (anti-Hermitian parts are dropped).
FourVector four_vector_of(const Matrix2c& h);

/// Element of SL(2,C), the double cover of the proper orthochronous Lorentz group.
class SL2CElement {
 public:
  SL2CElement() : m_(Matrix2c::Identity()) {}
  /// Throws std::invalid_argument when |det m - 1| exceeds tol.
  explicit SL2CElement(const Matrix2c& m, double tol = 1e-9);

  const Matrix2c& matrix() const { return m_; }
  SL2CElement inverse() const;
  /// (m^*)^{-1}, the element that acts on spinors in the bundle action.
  SL2CElement adjoint_inverse() const;

  friend SL2CElement operator*(const SL2CElement& a, const SL2CElement& b);
  friend SL2CElement operator-(const SL2CElement& a);

 private:
  struct Unchecked {};
  SL2CElement(const Matrix2c& m, Unchecked) : m_(m) {}
  Matrix2c m_;
};

/// Traceless 2x2 complex matrix, element of sl(2,C).
class SL2CLieElement {
 public:
  SL2CLieElement() : x_(Matrix2c::Zero()) {}
  /// Throws std::invalid_argument when |tr X| exceeds tol.
  explicit SL2CLieElement(const Matrix2c& x, double tol = kTolExact);

  const Matrix2c& matrix() const { return x_; }

 private:
  Matrix2c x_;
};

/// Stabilizer of (1,0,0,1): the matrices [[z, a], [0, 1/z]] with |z| = 1.
struct LittleGroupElement {
  cplx z{1.0, 0.0};
  cplx a{0.0, 0.0};

  LittleGroupElement() = default;
  /// Throws std::invalid_argument unless |z| = 1 within tol.
  LittleGroupElement(cplx z_, cplx a_, double tol = kTolExact);
};

/// delta(m): the Lorentz matrix of p -> four_vector_of(m eta(p) m^*).
LorentzMatrix covering_map(const SL2CElement& m);

/// Derivative of covering_map at the identity along X.
Eigen::Matrix4d covering_map_lie(const SL2CLieElement& x);

/// S(m) = diag(m, (m^{-1})^*).
Matrix4c spin_rep(const SL2CElement& m);

/// d/dt S(exp(tX)) at t = 0, which is diag(X, -X^*).
Matrix4c spin_rep_lie(const SL2CLieElement& x);

/// exp(X) on sl(2,C).
SL2CElement exp_lie(const SL2CLieElement& x);

SL2CElement little_group_embed(const LittleGroupElement& e);

/// Group law induced by little_group_embed:
/// (z1,a1)(z2,a2) = (z1 z2, a1/z2 + z1 a2).
LittleGroupElement little_group_compose(const LittleGroupElement& e1, const LittleGroupElement& e2);

/// Reads (z, a) off an upper-triangular element; throws std::invalid_argument when
/// the element is not in the stabilizer within tol.
LittleGroupElement little_group_from(const SL2CElement& m, double tol = 1e-8);

/// Generators of the little group's Lie algebra.
struct LittleGroupGenerators {
  SL2CLieElement rotation;  // i s3 / 2, so exp(theta * rotation) has z = e^{i theta / 2}
  SL2CLieElement n1;        // [[0, 1], [0, 0]]
  SL2CLieElement n2;        // [[0, i], [0, 0]]
};
LittleGroupGenerators little_group_generators();

/// Pure boost with rapidity along a unit spatial direction.
SL2CElement boost(const std::array<double, 3>& direction, double rapidity);
/// Rotation by angle about a unit axis (right-handed on spatial vectors).
SL2CElement rotation(const std::array<double, 3>& axis, double angle);

}  // namespace weylnoise
