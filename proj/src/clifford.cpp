#include "weylnoise/clifford.hpp"

#include <cmath>
#include <stdexcept>

namespace weylnoise {

namespace {

Matrix4c off_diagonal(const Matrix2c& upper, const Matrix2c& lower) {
  Matrix4c g = Matrix4c::Zero();
  g.topRightCorner<2, 2>() = upper;
  g.bottomLeftCorner<2, 2>() = lower;
  return g;
}

// Null vector of a rank-one 2x2 matrix, taken from its dominant row.
Eigen::Vector2cd null_vector(const Matrix2c& m) {
  Eigen::Vector2cd r0 = m.row(0).transpose(), r1 = m.row(1).transpose();
  const Eigen::Vector2cd& r = r0.squaredNorm() >= r1.squaredNorm() ? r0 : r1;
  Eigen::Vector2cd v(-r[1], r[0]);
  return v / v.norm();
}

void fix_phase(SpinorVector& v) {
  for (int i = 0; i < 4; ++i) {
    double mag = std::abs(v[i]);
    if (mag > 1e-12) {
      v *= std::conj(v[i]) / mag;
      v[i] = mag;
      return;
    }
  }
}

}  // namespace

const GammaRep& build_gamma() {
  static const GammaRep rep = [] {
    GammaRep g;
    const Matrix2c id = Matrix2c::Identity();
    g.gamma[0] = off_diagonal(id, id);
    for (int k = 1; k < 4; ++k) g.gamma[static_cast<std::size_t>(k)] = off_diagonal(-pauli(k), pauli(k));
    g.chirality = cplx(0.0, 1.0) * g.gamma[0] * g.gamma[1] * g.gamma[2] * g.gamma[3];
    return g;
  }();
  return rep;
}

Matrix4c slash(const FourVector& p) {
  const GammaRep& g = build_gamma();
  Matrix4c s = Matrix4c::Zero();
  for (std::size_t r = 0; r < 4; ++r) s += p[r] * g.gamma[r];
  return s;
}

SpinorVector fiber_vector(const FourVector& p, int helicity_sign) {
  // slash(p) (u, w) = ((p0 - p.s) w, (p0 + p.s) u): the + chirality fiber is
  // (u, 0) with u in ker(p0 + p.s), the - fiber is (0, w) with w in ker(p0 - p.s).
  Matrix2c ps = p[1] * pauli(1) + p[2] * pauli(2) + p[3] * pauli(3);
  Matrix2c m = p[0] * Matrix2c::Identity() + (helicity_sign > 0 ? ps : Matrix2c(-ps));
  Eigen::Vector2cd u = null_vector(m);
  SpinorVector v = SpinorVector::Zero();
  if (helicity_sign > 0)
    v.head<2>() = u;
  else
    v.tail<2>() = u;
  fix_phase(v);
  return v;
}

FiberBasis fiber_kernel(const FourVector& p, std::optional<int> helicity_sign) {
  if (!p.is_forward_lightlike(1e-9)) throw std::invalid_argument("fiber_kernel: p is not forward light-like");
  if (helicity_sign && *helicity_sign != 1 && *helicity_sign != -1)
    throw std::invalid_argument("fiber_kernel: helicity sign must be +1 or -1");
  FiberBasis out{p, {}, helicity_sign};
  if (helicity_sign) {
    out.basis.push_back(fiber_vector(p, *helicity_sign));
  } else {
    out.basis.push_back(fiber_vector(p, +1));
    out.basis.push_back(fiber_vector(p, -1));
  }
  return out;
}

MassiveFiber fiber_basis_massive(double mass) {
  if (!(mass > 0.0) || !std::isfinite(mass)) throw std::invalid_argument("fiber_basis_massive: mass must be positive");
  double root = std::sqrt(1.0 + mass * mass);
  MassiveFiber f;
  f.p = FourVector(root, 1.0, 0.0, 0.0);
  f.v1 = SpinorVector::Zero();
  f.v2 = SpinorVector::Zero();
  f.v1[0] = 0.5 * mass;
  f.v1[2] = 0.5 * (1.0 + root);
  f.v2[3] = 0.5 * mass;
  f.v2[1] = 0.5 * (1.0 + root);
  return f;
}

BundlePoint bundle_action(const SL2CElement& h, const FourVector& p, const SpinorVector& v, double tol) {
  double scale = std::max(1.0, std::abs(p[0])) * std::max(1.0, v.norm());
  if ((slash(p) * v).norm() > tol * scale)
    throw std::invalid_argument("bundle_action: v violates the fiber constraint at p");
  return {covering_map(h).apply(p), spin_rep(h.adjoint_inverse()) * v};
}

double invariant_form(const FourVector& p, const SpinorVector& v) {
  if (!(p[0] > 0.0)) throw std::invalid_argument("invariant_form: p0 must be positive");
  return v.squaredNorm() / p[0];
}

}  // namespace weylnoise
