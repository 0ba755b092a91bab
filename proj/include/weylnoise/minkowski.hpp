#pragma once

#include <array>
#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace weylnoise {

/// Absolute tolerance for identities that hold in exact arithmetic.
inline constexpr double kTolExact = 1e-10;

/// Point of momentum or configuration space, (+,-,-,-) signature, c = 1.
struct FourVector {
  std::array<double, 4> c{};

  FourVector() = default;
  FourVector(double p0, double p1, double p2, double p3) : c{p0, p1, p2, p3} {}
  explicit FourVector(const Eigen::Vector4d& v) : c{v[0], v[1], v[2], v[3]} {}

  double operator[](std::size_t i) const { return c[i]; }
  double& operator[](std::size_t i) { return c[i]; }

  Eigen::Vector4d to_eigen() const { return {c[0], c[1], c[2], c[3]}; }

  /// Euclidean norm of the spatial part.
  double spatial_norm() const;
  bool is_finite() const;
  bool is_forward_lightlike(double tol = kTolExact) const;

  friend FourVector operator+(const FourVector& a, const FourVector& b);
  friend FourVector operator-(const FourVector& a, const FourVector& b);
  friend FourVector operator-(const FourVector& a);
  friend FourVector operator*(double s, const FourVector& a);
};

/// Light-like base point of the forward cone used by the little group.
inline FourVector base_momentum() { return {1.0, 0.0, 0.0, 1.0}; }

/// The pairing {k, g} = k0 g0 - k1 g1 - k2 g2 - k3 g3.
double minkowski_form(const FourVector& k, const FourVector& g);

/// Character of the translation group, x -> exp(i {p, x}).
std::complex<double> character_eval(const FourVector& p, const FourVector& x);

const Eigen::Matrix4d& minkowski_metric();

/// Proper orthochronous Lorentz transformation.
class LorentzMatrix {
 public:
  LorentzMatrix() : m_(Eigen::Matrix4d::Identity()) {}

  /// Throws std::invalid_argument unless m preserves the metric (relative to
  /// the size of m), has unit determinant and m(0,0) >= 1.
  explicit LorentzMatrix(const Eigen::Matrix4d& m, double tol = kTolExact);

  const Eigen::Matrix4d& matrix() const { return m_; }
  double operator()(int r, int s) const { return m_(r, s); }

  FourVector apply(const FourVector& p) const;
  LorentzMatrix inverse() const;

  friend LorentzMatrix operator*(const LorentzMatrix& a, const LorentzMatrix& b);

  /// Metric-preservation residual max|L^T eta L - eta| scaled by |L|^2.
  static double metric_defect(const Eigen::Matrix4d& m);

 private:
  struct Unchecked {};
  LorentzMatrix(const Eigen::Matrix4d& m, Unchecked) : m_(m) {}

  Eigen::Matrix4d m_;
};

}  // namespace weylnoise
