#pragma once

#include <array>
#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "weylnoise/clifford.hpp"
#include "weylnoise/minkowski.hpp"
#include "weylnoise/spin_cover.hpp"

namespace weylnoise {

/// Measure densities on the forward light cone, as functions of p = (|p|, p).
enum class Density {
  Standard,  // d^3p / (2 |p|), the Lorentz-invariant measure
  Printed,   // d^3p / (2 |p|^2)
};

double density_factor(Density d, const FourVector& p);
const char* to_string(Density d);

struct GridParams {
  double r_min = 1e-3;
  double r_max = 26.0;
  int radial_order = 64;
  int polar_order = 48;      // Gauss-Legendre nodes in cos(theta)
  int azimuthal_order = 48;  // uniform nodes in phi
  Density density = Density::Standard;
};

/// Product quadrature on the forward cone. Nodes are grouped by radial shell
/// (shell k owns nodes [k * shell_size, (k + 1) * shell_size)); reductions sum
/// shells in order so results do not depend on the thread count.
struct OrbitGrid {
  std::vector<FourVector> nodes;
  std::vector<double> weights;         // include the selected density
  std::vector<double> volume_weights;  // plain d^3p weights
  GridParams params;
  std::size_t shell_size = 0;

  std::size_t size() const { return nodes.size(); }
};

/// Throws std::invalid_argument unless 0 < r_min < r_max and all orders are positive.
OrbitGrid build_grid(const GridParams& params);

/// Deterministic sum over grid nodes of weights[i] * f(i).
std::complex<double> grid_sum(const OrbitGrid& grid, const std::vector<double>& weights,
                              const std::function<std::complex<double>(std::size_t)>& f);

/// amplitude * p0^energy_power * p1^a p2^b p3^c * exp(-|p - center|^2 / (2 width^2)).
struct SectionBasisFunction {
  std::complex<double> amplitude{1.0, 0.0};
  std::array<double, 3> center{0.0, 0.0, 0.0};
  double width = 1.0;
  int energy_power = 1;
  std::array<int, 3> monomial{0, 0, 0};

  std::complex<double> operator()(const FourVector& p) const;

  /// A constant C with |f(p)| <= C exp(-alpha |p|) for all p.
  double decay_bound(double alpha) const;
};

/// Wavefunction with values in the helicity fiber: p -> c(p) fiber_vector(p, helicity).
class SpinorSection {
 public:
  using Coefficient = std::function<std::complex<double>(const FourVector&)>;

  SpinorSection(Coefficient c, int helicity_sign);
  /// Finite linear combination of basis functions.
  static SpinorSection from_basis(std::vector<SectionBasisFunction> terms, int helicity_sign);
  static SpinorSection zero(int helicity_sign);

  int helicity() const { return helicity_; }
  std::complex<double> coefficient(const FourVector& p) const { return (*c_)(p); }
  SpinorVector value(const FourVector& p) const;

  SpinorSection operator-(const SpinorSection& other) const;

 private:
  std::shared_ptr<const Coefficient> c_;
  int helicity_;
};

/// Sum over nodes of w * p0^{-1} <f(p), g(p)>. The fiber vectors are unit
/// length, so the pointwise product reduces to conj(c_f) c_g. Throws
/// std::invalid_argument when helicities differ.
std::complex<double> section_inner_product(const SpinorSection& f, const SpinorSection& g,
                                           const OrbitGrid& grid);

double section_norm(const SpinorSection& f, const OrbitGrid& grid);

/// |int f(delta(h)^{-1} p) d beta(p) - int f(p) d beta(p)| under the chosen density.
double pushforward_check(const SL2CElement& h, const SectionBasisFunction& f, const OrbitGrid& grid,
                         Density density);

}  // namespace weylnoise
