#pragma once

#include <array>
#include <optional>
#include <vector>

#include "weylnoise/minkowski.hpp"
#include "weylnoise/spin_cover.hpp"

namespace weylnoise {

using SpinorVector = Eigen::Vector4cd;

/// Chiral representation of the Clifford algebra of (+,-,-,-).
///
/// gamma[0] = [[0, I], [I, 0]], gamma[k] = [[0, -s_k], [s_k, 0]]. These are the
/// lower-index gammas, so S(m)^{-1} gamma_r S(m) = sum_s L_rs gamma_s with
/// L = covering_map(m), and i g0 g1 g2 g3 = diag(1, 1, -1, -1).
struct GammaRep {
  std::array<Matrix4c, 4> gamma;
  std::array<int, 4> epsilon{1, -1, -1, -1};
  Matrix4c chirality;
};

const GammaRep& build_gamma();

/// sum_r p_r gamma_r with the components of p as given and the lower-index
/// gammas above. The kernel is two-dimensional on the light cone.
Matrix4c slash(const FourVector& p);

/// Orthonormal basis of ker slash(p), optionally restricted to a chirality
/// eigenspace. Each vector is phase-fixed so its first nonzero component is
/// real and positive.
struct FiberBasis {
  FourVector p;
  std::vector<SpinorVector> basis;
  std::optional<int> helicity_sign;
};

/// Throws std::invalid_argument when p is not forward light-like or the
/// helicity sign is not +1/-1.
FiberBasis fiber_kernel(const FourVector& p, std::optional<int> helicity_sign = std::nullopt);

/// The unit vector spanning the helicity fiber at p. Same gauge as fiber_kernel,
/// without the light-cone validation (callers guarantee p is on the cone).
SpinorVector fiber_vector(const FourVector& p, int helicity_sign);

/// Massive fiber pair at p^(m) = (sqrt(1 + m^2), 1, 0, 0):
///   v1 = m/2 e1 + (1 + sqrt(1 + m^2))/2 e3
///   v2 = m/2 e4 + (1 + sqrt(1 + m^2))/2 e2
/// Both converge to (e3, e2) as m -> 0+.
struct MassiveFiber {
  FourVector p;
  SpinorVector v1;
  SpinorVector v2;
};
MassiveFiber fiber_basis_massive(double mass);

/// (p, v)^h = (delta(h) p, S((h^*)^{-1}) v). Left action:
/// (p, v)^{h1 h2} = ((p, v)^{h2})^{h1}. Throws std::invalid_argument when v
/// is not in the fiber at p.
struct BundlePoint {
  FourVector p;
  SpinorVector v;
};
BundlePoint bundle_action(const SL2CElement& h, const FourVector& p, const SpinorVector& v,
                          double tol = 1e-9);

/// p0^{-1} <v, v>; throws std::invalid_argument when p0 <= 0.
double invariant_form(const FourVector& p, const SpinorVector& v);

}  // namespace weylnoise
