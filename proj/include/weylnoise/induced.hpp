#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "weylnoise/poincare.hpp"
#include "weylnoise/quadrature.hpp"

namespace weylnoise {

/// (U_{h,x} phi)(p) = exp(i{x, p}) [phi(delta(h)^{-1} p)]^h.
///
/// The transported spinor S((h^*)^{-1}) phi(q), q = delta(h)^{-1} p, lies in the
/// fiber at p, so it equals w(h, q) fiber_vector(p) with the Wigner multiplier
/// w = <fiber_vector(p), S((h^*)^{-1}) fiber_vector(q)>. The returned section
/// has coefficient exp(i{x, p}) w(h, q) c(q).
SpinorSection apply_induced(const PoincareElement& g, const SpinorSection& phi);

/// Finite union of axis-aligned boxes in momentum space, optionally pulled back
/// through a Lorentz matrix: p is in the region iff the spatial part of
/// pullback * p lies in one of the boxes.
class RegionIndicator {
 public:
  struct Box {
    std::array<double, 3> lo;
    std::array<double, 3> hi;
  };

  RegionIndicator() = default;
  /// Throws std::invalid_argument when some box has lo > hi.
  explicit RegionIndicator(std::vector<Box> boxes);

  static RegionIndicator everything();
  static RegionIndicator empty() { return RegionIndicator(); }

  bool contains(const FourVector& p) const;
  const std::vector<Box>& boxes() const { return boxes_; }
  bool has_pullback() const { return pullback_.has_value(); }

  /// E n F; both regions must be plain box unions.
  RegionIndicator intersect(const RegionIndicator& other) const;
  /// E u F for plain box unions.
  RegionIndicator unite(const RegionIndicator& other) const;
  /// The image L(E) = {L p : p in E}. Exact box arithmetic when L permutes and
  /// flips the spatial axes (rotations by multiples of pi/2); otherwise the
  /// region is represented through the pullback L^{-1}.
  RegionIndicator transformed(const LorentzMatrix& l) const;

 private:
  std::vector<Box> boxes_;
  std::optional<Eigen::Matrix4d> pullback_;
};

/// Position projection: coefficient multiplied by the indicator of E.
SpinorSection position_pvm_apply(const RegionIndicator& region, const SpinorSection& phi);

enum class SectionChoice {
  BoostThenRotation,  // c(x) = R_axis(theta, phi) B_z(ln r)
  RotationThenBoost,  // c(x) = B_n(ln r) R_z(phi) R_y(theta)
};

/// || U_g P_E U_g^{-1} phi - P_{delta(h)E} phi || on the grid. With a section
/// choice, U acts in that section's gauge (apply_induced_section_gauge).
double imprimitivity_check(const PoincareElement& g, const RegionIndicator& region, const SpinorSection& phi,
                           const OrbitGrid& grid, std::optional<SectionChoice> gauge = std::nullopt);

/// Cross-section of the coset space, carrying (1,0,0,1) to x and the base
/// point to the identity. Throws std::invalid_argument when x is not on the
/// forward cone.
PoincareElement borel_section_c(const FourVector& x, SectionChoice choice = SectionChoice::BoostThenRotation);

/// Little-group part of g relative to the section: c(delta(h) base)^{-1} h.
LittleGroupElement little_group_part(const PoincareElement& g, SectionChoice choice = SectionChoice::BoostThenRotation);

/// Unit vector of the helicity fiber at p transported from the base point by
/// the section: S(c(p)^{*-1}) fiber_vector(base) / sqrt(p0).
SpinorVector section_fiber_vector(const FourVector& p, int helicity_sign, SectionChoice choice);

/// The induced action with coefficients taken against section_fiber_vector:
/// c'(p) = exp(i{x, p}) chi(c(p)^{-1} h c(q)) sqrt(p0 / q0) c(q), q = delta(h)^{-1} p,
/// with chi the fiber character. Unitarily equivalent to apply_induced through
/// the pointwise phase <fiber_vector(p), section_fiber_vector(p)>.
SpinorSection apply_induced_section_gauge(const PoincareElement& g, const SpinorSection& phi, SectionChoice choice);

/// Representation of the little group by matrices (1x1 for characters).
using LittleGroupPayload = std::function<Eigen::MatrixXcd(const LittleGroupElement&)>;

/// Character z^{-helicity} carried by the helicity fiber at (1,0,0,1).
LittleGroupPayload fiber_character(int helicity_sign);

/// max over sampled pairs of |m(e1 e2) - m(e1) m(e2)|.
double homomorphism_defect(const LittleGroupPayload& m, std::span<const LittleGroupElement> samples);

/// b(g) = m(a(g)) with a(g) the little-group part of g, and the strict
/// cocycle f(g, g1) = b(g g1) b(g1)^{-1}. b(g h) = b(g) m(h) for h in the
/// little group.
struct CocyclePair {
  std::function<Eigen::MatrixXcd(const PoincareElement&)> b;
  std::function<Eigen::MatrixXcd(const PoincareElement&, const PoincareElement&)> f;
};

/// Throws std::invalid_argument when m fails the homomorphism check on the samples.
CocyclePair build_cocycle_pair(LittleGroupPayload m, std::span<const LittleGroupElement> samples,
                               SectionChoice choice = SectionChoice::BoostThenRotation, double tol = 1e-10);

/// A first-order cocycle v(gh) = v(g) + U_g v(h) together with its unitary rep.
template <class G>
struct FirstOrderCocycle {
  std::function<Eigen::VectorXcd(const G&)> v;
  std::function<Eigen::MatrixXcd(const G&)> U;
};

/// Data for v(t) = t u0 + sum_j (exp(-i t H_j) u_j - u_j) on a finite direct sum.
struct CocycleBlocks {
  Eigen::VectorXcd u0;
  std::vector<Eigen::VectorXcd> u;
  std::vector<double> energy;

  Eigen::Index dimension() const;
};

Eigen::VectorXcd example_first_order_cocycle(double t, const CocycleBlocks& blocks);
/// U_t = 1 + sum_j exp(-i t H_j), diagonal on the blocks.
Eigen::MatrixXcd example_cocycle_unitary(double t, const CocycleBlocks& blocks);
FirstOrderCocycle<double> time_cocycle(const CocycleBlocks& blocks);

/// Little-group cocycle on C^{1 + dim u}: first mode v = a z with U = z^2, the
/// remaining modes the coboundary (z - 1) u with U = z.
FirstOrderCocycle<LittleGroupElement> little_group_cocycle(const Eigen::VectorXcd& u);

}  // namespace weylnoise
