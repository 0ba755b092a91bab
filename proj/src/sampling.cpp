#include "weylnoise/sampling.hpp"

#include <cmath>
#include <numbers>

namespace weylnoise {

double Sampler::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

double Sampler::normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

cplx Sampler::unit_complex() { return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi)); }

std::array<double, 3> Sampler::unit_vector() {
  while (true) {
    std::array<double, 3> v{normal(), normal(), normal()};
    double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (n > 1e-8) return {v[0] / n, v[1] / n, v[2] / n};
  }
}

SL2CElement Sampler::rotation_element() { return rotation(unit_vector(), uniform(0.0, 2.0 * std::numbers::pi)); }

SL2CElement Sampler::boost_element(double max_rapidity) { return boost(unit_vector(), uniform(0.0, max_rapidity)); }

SL2CElement Sampler::sl2c(double max_rapidity) { return rotation_element() * boost_element(max_rapidity); }

SL2CLieElement Sampler::lie(double scale) {
  Matrix2c x;
  x << cplx(normal(), normal()), cplx(normal(), normal()), cplx(normal(), normal()), 0.0;
  x(1, 1) = -x(0, 0);
  return SL2CLieElement(Matrix2c(scale * x));
}

LittleGroupElement Sampler::little_group(double max_translation) {
  return {unit_complex(), uniform(0.0, max_translation) * unit_complex()};
}

PoincareElement Sampler::poincare(double max_rapidity, double max_translation) {
  return {sl2c(max_rapidity), four_vector(max_translation)};
}

FourVector Sampler::four_vector(double scale) {
  return {scale * uniform(-1.0, 1.0), scale * uniform(-1.0, 1.0), scale * uniform(-1.0, 1.0),
          scale * uniform(-1.0, 1.0)};
}

FourVector Sampler::cone_point(double r_lo, double r_hi) {
  double r = uniform(r_lo, r_hi);
  auto n = unit_vector();
  return {r, r * n[0], r * n[1], r * n[2]};
}

Eigen::VectorXcd Sampler::complex_vector(Eigen::Index n, double norm) {
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = cplx(normal(), normal());
  return norm * v / v.norm();
}

Eigen::MatrixXcd Sampler::unitary(Eigen::Index n) {
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = cplx(normal(), normal());
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < n; ++i) {
    cplx d = r(i, i);
    if (std::abs(d) > 0.0) q.col(i) *= d / std::abs(d);
  }
  return q;
}

}  // namespace weylnoise
