#include "weylnoise/spin_cover.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace weylnoise {

namespace {

const std::array<Matrix2c, 4>& pauli_table() {
  static const std::array<Matrix2c, 4> table = [] {
    const cplx i(0.0, 1.0);
    std::array<Matrix2c, 4> s;
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, -i, i, 0;
    s[3] << 1, 0, 0, -1;
    return s;
  }();
  return table;
}

}  // namespace

const Matrix2c& pauli(int r) { return pauli_table().at(static_cast<std::size_t>(r)); }

Matrix2c hermitian_of(const FourVector& p) {
  Matrix2c h = Matrix2c::Zero();
  for (int r = 0; r < 4; ++r) h += p[static_cast<std::size_t>(r)] * pauli(r);
  return h;
}

FourVector four_vector_of(const Matrix2c& h) {
  FourVector p;
  for (int r = 0; r < 4; ++r)
    p[static_cast<std::size_t>(r)] = 0.5 * (pauli(r) * h).trace().real();
  return p;
}

SL2CElement::SL2CElement(const Matrix2c& m, double tol) : m_(m) {
  if (!m.allFinite()) throw std::invalid_argument("SL2CElement: non-finite entries");
  if (std::abs(m.determinant() - 1.0) > tol)
    throw std::invalid_argument("SL2CElement: determinant is not 1");
}

SL2CElement SL2CElement::inverse() const {
  // adjugate; exact for det = 1
  Matrix2c inv;
  inv << m_(1, 1), -m_(0, 1), -m_(1, 0), m_(0, 0);
  return SL2CElement(inv, Unchecked{});
}

SL2CElement SL2CElement::adjoint_inverse() const {
  return SL2CElement(Matrix2c(inverse().m_.adjoint()), Unchecked{});
}

SL2CElement operator*(const SL2CElement& a, const SL2CElement& b) {
  return SL2CElement(Matrix2c(a.m_ * b.m_), SL2CElement::Unchecked{});
}

SL2CElement operator-(const SL2CElement& a) {
  return SL2CElement(Matrix2c(-a.m_), SL2CElement::Unchecked{});
}

SL2CLieElement::SL2CLieElement(const Matrix2c& x, double tol) : x_(x) {
  if (std::abs(x.trace()) > tol) throw std::invalid_argument("SL2CLieElement: trace is not 0");
}

LittleGroupElement::LittleGroupElement(cplx z_, cplx a_, double tol) : z(z_), a(a_) {
  if (std::abs(std::abs(z) - 1.0) > tol)
    throw std::invalid_argument("LittleGroupElement: |z| must be 1");
}

LorentzMatrix covering_map(const SL2CElement& m) {
  const Matrix2c& g = m.matrix();
  if (std::abs(g.determinant() - 1.0) > 1e-9)
    throw std::invalid_argument("covering_map: element is not unimodular");
  Eigen::Matrix4d l;
  for (int s = 0; s < 4; ++s) {
    Matrix2c image = g * pauli(s) * g.adjoint();
    for (int r = 0; r < 4; ++r) l(r, s) = 0.5 * (pauli(r) * image).trace().real();
  }
  // tolerance scaled for large boosts; the entries are exact up to rounding
  return LorentzMatrix(l, 1e-8);
}

Eigen::Matrix4d covering_map_lie(const SL2CLieElement& x) {
  const Matrix2c& g = x.matrix();
  Eigen::Matrix4d l;
  for (int s = 0; s < 4; ++s) {
    Matrix2c image = g * pauli(s) + pauli(s) * g.adjoint();
    for (int r = 0; r < 4; ++r) l(r, s) = 0.5 * (pauli(r) * image).trace().real();
  }
  return l;
}

Matrix4c spin_rep(const SL2CElement& m) {
  if (std::abs(m.matrix().determinant() - 1.0) > 1e-9)
    throw std::invalid_argument("spin_rep: element is not unimodular");
  Matrix4c s = Matrix4c::Zero();
  s.topLeftCorner<2, 2>() = m.matrix();
  s.bottomRightCorner<2, 2>() = m.adjoint_inverse().matrix();
  return s;
}

Matrix4c spin_rep_lie(const SL2CLieElement& x) {
  Matrix4c s = Matrix4c::Zero();
  s.topLeftCorner<2, 2>() = x.matrix();
  s.bottomRightCorner<2, 2>() = -x.matrix().adjoint();
  return s;
}

SL2CElement exp_lie(const SL2CLieElement& x) {
  Matrix2c e = x.matrix().exp();
  // exp of a traceless matrix has det 1 up to rounding; renormalize the drift
  e /= std::sqrt(e.determinant());
  return SL2CElement(e);
}

SL2CElement little_group_embed(const LittleGroupElement& e) {
  if (std::abs(std::abs(e.z) - 1.0) > kTolExact)
    throw std::invalid_argument("little_group_embed: |z| must be 1");
  Matrix2c m;
  m << e.z, e.a, 0.0, 1.0 / e.z;
  return SL2CElement(m);
}

LittleGroupElement little_group_compose(const LittleGroupElement& e1, const LittleGroupElement& e2) {
  return {e1.z * e2.z, e1.a / e2.z + e1.z * e2.a, 1e-8};
}

LittleGroupElement little_group_from(const SL2CElement& m, double tol) {
  const Matrix2c& g = m.matrix();
  double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
  if (std::abs(g(1, 0)) > tol * scale || std::abs(std::abs(g(0, 0)) - 1.0) > tol * scale)
    throw std::invalid_argument("little_group_from: element does not fix (1,0,0,1)");
  cplx z = g(0, 0) / std::abs(g(0, 0));
  return {z, g(0, 1)};
}

LittleGroupGenerators little_group_generators() {
  const cplx i(0.0, 1.0);
  Matrix2c n1, n2;
  n1 << 0, 1, 0, 0;
  n2 << 0, i, 0, 0;
  return {SL2CLieElement(Matrix2c(0.5 * i * pauli(3))), SL2CLieElement(n1), SL2CLieElement(n2)};
}

namespace {

Matrix2c direction_dot_pauli(const std::array<double, 3>& n) {
  double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (!(len > 0.0)) throw std::invalid_argument("direction must be nonzero");
  return (n[0] * pauli(1) + n[1] * pauli(2) + n[2] * pauli(3)) / len;
}

}  // namespace

SL2CElement boost(const std::array<double, 3>& direction, double rapidity) {
  // exp(rapidity/2 n.s) = cosh(r/2) + sinh(r/2) n.s
  Matrix2c ns = direction_dot_pauli(direction);
  return SL2CElement(Matrix2c(std::cosh(0.5 * rapidity) * Matrix2c::Identity() +
                              std::sinh(0.5 * rapidity) * ns));
}

SL2CElement rotation(const std::array<double, 3>& axis, double angle) {
  const cplx i(0.0, 1.0);
  Matrix2c ns = direction_dot_pauli(axis);
  return SL2CElement(Matrix2c(std::cos(0.5 * angle) * Matrix2c::Identity() -
                              i * std::sin(0.5 * angle) * ns));
}

}  // namespace weylnoise
