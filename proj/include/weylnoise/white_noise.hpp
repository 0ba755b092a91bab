#pragma once

#include <array>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "weylnoise/fock.hpp"

namespace weylnoise {

/// He_n(x) / sqrt(n!), orthonormal for the standard Gaussian measure.
double normalized_hermite(int n, double x);

/// Image of a Fock state under the Fock-Gaussian isomorphism over a real
/// n-dimensional one-particle space: |n_1..n_n> -> prod_i He_{n_i}(x_i)/sqrt(n_i!).
class HermiteExpansion {
 public:
  HermiteExpansion(const FockSpace& space, FockState coefficients);

  std::complex<double> operator()(std::span<const double> x) const;
  int dimension() const { return space_.modes(); }

 private:
  FockSpace space_;
  FockState coeffs_;
};

HermiteExpansion chaos_map(const FockState& state, const FockSpace& space);

/// Tensor Gauss-Hermite nodes and weights for the standard Gaussian on R^n.
struct GaussianRule {
  std::vector<std::vector<double>> nodes;
  std::vector<double> weights;
};
GaussianRule gaussian_rule(int dimension, int order);

/// int conj(F) G dmu over the standard Gaussian measure.
std::complex<double> gaussian_inner_product(const HermiteExpansion& f, const HermiteExpansion& g,
                                            const GaussianRule& rule);

/// Gram matrix of the chaos images of the whole truncated basis.
Eigen::MatrixXcd chaos_gram(const FockSpace& space, int order);

/// H = sigma . p on a finite momentum sample, block diagonal with one 2x2
/// block per sample point.
struct DiracHamiltonian {
  std::vector<std::array<double, 3>> momenta;

  Eigen::Index dimension() const { return 2 * static_cast<Eigen::Index>(momenta.size()); }
  Eigen::MatrixXcd matrix() const;
};

/// || (1 + |H|)^k f ||.
double weighted_norm(const Eigen::VectorXcd& f, int k, const DiracHamiltonian& h);

/// sup over the test set of ||a^dagger(f)|| / ||f||_k on the truncated Fock
/// space: a finite-dimensional stand-in for continuity of a^dagger on the
/// weighted test space.
double white_noise_continuity(std::span<const Eigen::VectorXcd> test_set, int k, const DiracHamiltonian& h,
                              const FockSpace& space);

/// s two-level slots in time order; slot i is bit i of the basis index.
struct ToyFockSpace {
  int slots;

  explicit ToyFockSpace(int s);
  Eigen::Index dimension() const { return Eigen::Index{1} << slots; }
};

struct FermionIncrements {
  std::vector<FockOperator> lowering;  // dB_i
  std::vector<FockOperator> raising;   // dB_i^dagger
};

/// dB_i = (prod_{j<i} (-1)^{N_j}) dA_i with dA_i the lowering on slot i.
FermionIncrements fermionize(const ToyFockSpace& space);

/// The same reflection applied to bosonic slots with `cutoff` quanta per slot.
/// On the full carrier the increments violate the CAR; compressed to the
/// subspace with at most one quantum per slot they satisfy it.
FermionIncrements reflect_bosonic(int slots, int cutoff);

/// Basis indices of reflect_bosonic's space with at most one quantum per slot.
std::vector<Eigen::Index> single_occupancy_indices(int slots, int cutoff);

}  // namespace weylnoise
