#include "weylnoise/minkowski.hpp"

#include <cmath>
#include <stdexcept>

namespace weylnoise {

double FourVector::spatial_norm() const {
  return std::sqrt(c[1] * c[1] + c[2] * c[2] + c[3] * c[3]);
}

bool FourVector::is_finite() const {
  for (double x : c)
    if (!std::isfinite(x)) return false;
  return true;
}

bool FourVector::is_forward_lightlike(double tol) const {
  if (!is_finite() || c[0] <= 0.0) return false;
  // scale-aware: the form is quadratic in p
  return std::abs(minkowski_form(*this, *this)) <= tol * std::max(1.0, c[0] * c[0]);
}

FourVector operator+(const FourVector& a, const FourVector& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

FourVector operator-(const FourVector& a, const FourVector& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

FourVector operator-(const FourVector& a) { return {-a[0], -a[1], -a[2], -a[3]}; }

FourVector operator*(double s, const FourVector& a) {
  return {s * a[0], s * a[1], s * a[2], s * a[3]};
}

double minkowski_form(const FourVector& k, const FourVector& g) {
  return k[0] * g[0] - k[1] * g[1] - k[2] * g[2] - k[3] * g[3];
}

std::complex<double> character_eval(const FourVector& p, const FourVector& x) {
  return std::polar(1.0, minkowski_form(p, x));
}

const Eigen::Matrix4d& minkowski_metric() {
  static const Eigen::Matrix4d eta = Eigen::Vector4d(1.0, -1.0, -1.0, -1.0).asDiagonal();
  return eta;
}

double LorentzMatrix::metric_defect(const Eigen::Matrix4d& m) {
  const Eigen::Matrix4d& eta = minkowski_metric();
  double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m.transpose() * eta * m - eta).cwiseAbs().maxCoeff() / (scale * scale);
}

LorentzMatrix::LorentzMatrix(const Eigen::Matrix4d& m, double tol) : m_(m) {
  if (!m.allFinite()) throw std::invalid_argument("LorentzMatrix: non-finite entries");
  if (metric_defect(m) > tol) throw std::invalid_argument("LorentzMatrix: metric not preserved");
  if (m(0, 0) < 1.0 - tol) throw std::invalid_argument("LorentzMatrix: not orthochronous");
  double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (std::abs(m.determinant() - 1.0) > tol * std::pow(scale, 4))
    throw std::invalid_argument("LorentzMatrix: determinant is not +1");
}

FourVector LorentzMatrix::apply(const FourVector& p) const {
  return FourVector(Eigen::Vector4d(m_ * p.to_eigen()));
}

LorentzMatrix LorentzMatrix::inverse() const {
  // L^{-1} = eta L^T eta
  const Eigen::Matrix4d& eta = minkowski_metric();
  return LorentzMatrix(Eigen::Matrix4d(eta * m_.transpose() * eta), Unchecked{});
}

LorentzMatrix operator*(const LorentzMatrix& a, const LorentzMatrix& b) {
  return LorentzMatrix(Eigen::Matrix4d(a.m_ * b.m_), LorentzMatrix::Unchecked{});
}

}  // namespace weylnoise
