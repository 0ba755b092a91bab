#pragma once

#include <array>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "weylnoise/poincare.hpp"
#include "weylnoise/spin_cover.hpp"

namespace weylnoise {

/// Seeded source of random group elements and vectors. Lorentz parts are
/// drawn as rotation * boost with rapidity bounded by the caller.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi);
  double normal();
  cplx unit_complex();
  std::array<double, 3> unit_vector();

  SL2CElement sl2c(double max_rapidity);
  SL2CElement rotation_element();
  SL2CElement boost_element(double max_rapidity);
  SL2CLieElement lie(double scale);
  LittleGroupElement little_group(double max_translation);
  PoincareElement poincare(double max_rapidity, double max_translation);

  FourVector four_vector(double scale);
  /// Forward light-like point with |p| in [r_lo, r_hi].
  FourVector cone_point(double r_lo, double r_hi);

  Eigen::VectorXcd complex_vector(Eigen::Index n, double norm);
  /// Haar-distributed unitary (QR of a complex Gaussian matrix, phases fixed).
  Eigen::MatrixXcd unitary(Eigen::Index n);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace weylnoise
