#include "weylnoise/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gsl/gsl_integration.h>

namespace weylnoise {

double density_factor(Density d, const FourVector& p) {
  double r = p.spatial_norm();
  return d == Density::Standard ? 0.5 / r : 0.5 / (r * r);
}

const char* to_string(Density d) { return d == Density::Standard ? "standard" : "printed"; }

namespace {

struct GaussLegendre {
  std::vector<double> x, w;
};

GaussLegendre gauss_legendre(int order, double a, double b) {
  gsl_integration_glfixed_table* table = gsl_integration_glfixed_table_alloc(static_cast<size_t>(order));
  if (table == nullptr) throw std::runtime_error("gauss_legendre: allocation failed");
  GaussLegendre gl;
  gl.x.resize(static_cast<std::size_t>(order));
  gl.w.resize(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i)
    gsl_integration_glfixed_point(a, b, static_cast<size_t>(i), &gl.x[static_cast<std::size_t>(i)],
                                  &gl.w[static_cast<std::size_t>(i)], table);
  gsl_integration_glfixed_table_free(table);
  return gl;
}

}  // namespace

OrbitGrid build_grid(const GridParams& params) {
  if (!(params.r_min > 0.0) || !(params.r_max > params.r_min) || !std::isfinite(params.r_max))
    throw std::invalid_argument("build_grid: need 0 < r_min < r_max");
  if (params.radial_order <= 0 || params.polar_order <= 0 || params.azimuthal_order <= 0)
    throw std::invalid_argument("build_grid: quadrature orders must be positive");

  GaussLegendre radial = gauss_legendre(params.radial_order, params.r_min, params.r_max);
  GaussLegendre polar = gauss_legendre(params.polar_order, -1.0, 1.0);
  const int n_phi = params.azimuthal_order;
  const double dphi = 2.0 * std::numbers::pi / n_phi;

  OrbitGrid grid;
  grid.params = params;
  grid.shell_size = static_cast<std::size_t>(params.polar_order) * static_cast<std::size_t>(n_phi);
  std::size_t total = grid.shell_size * static_cast<std::size_t>(params.radial_order);
  grid.nodes.reserve(total);
  grid.weights.reserve(total);
  grid.volume_weights.reserve(total);

  for (std::size_t i = 0; i < radial.x.size(); ++i) {
    double r = radial.x[i];
    for (std::size_t j = 0; j < polar.x.size(); ++j) {
      double ct = polar.x[j];
      double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
      for (int k = 0; k < n_phi; ++k) {
        double phi = (k + 0.5) * dphi;
        FourVector p(r, r * st * std::cos(phi), r * st * std::sin(phi), r * ct);
        double vol = radial.w[i] * r * r * polar.w[j] * dphi;
        grid.nodes.push_back(p);
        grid.volume_weights.push_back(vol);
        grid.weights.push_back(vol * density_factor(params.density, p));
      }
    }
  }
  return grid;
}

std::complex<double> grid_sum(const OrbitGrid& grid, const std::vector<double>& weights,
                              const std::function<std::complex<double>(std::size_t)>& f) {
  const std::size_t shells = grid.shell_size == 0 ? 0 : grid.size() / grid.shell_size;
  std::vector<std::complex<double>> partial(shells);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t s = 0; s < shells; ++s) {
    std::complex<double> acc = 0.0;
    for (std::size_t i = s * grid.shell_size; i < (s + 1) * grid.shell_size; ++i) acc += weights[i] * f(i);
    partial[s] = acc;
  }
  std::complex<double> total = 0.0;
  for (const auto& v : partial) total += v;
  return total;
}

std::complex<double> SectionBasisFunction::operator()(const FourVector& p) const {
  double d2 = 0.0;
  double poly = std::pow(p[0], energy_power);
  for (std::size_t k = 0; k < 3; ++k) {
    double dk = p[k + 1] - center[k];
    d2 += dk * dk;
    poly *= std::pow(p[k + 1], monomial[k]);
  }
  return amplitude * poly * std::exp(-d2 / (2.0 * width * width));
}

double SectionBasisFunction::decay_bound(double alpha) const {
  // |f| <= |A| r^deg exp(-(r - |c|)_+^2 / 2w^2) with deg the total degree;
  // maximize the right side times exp(alpha r) on a fine radial scan.
  int degree = energy_power + monomial[0] + monomial[1] + monomial[2];
  double c = std::sqrt(center[0] * center[0] + center[1] * center[1] + center[2] * center[2]);
  double r_peak = c + width * width * alpha + 10.0 * width + 10.0;
  double best = 0.0;
  for (int i = 0; i <= 20000; ++i) {
    double r = r_peak * 2.0 * i / 20000.0;
    double excess = std::max(0.0, r - c);
    double log_val = (degree > 0 ? degree * std::log(std::max(r, 1e-300)) : 0.0) -
                     excess * excess / (2.0 * width * width) + alpha * r;
    best = std::max(best, std::exp(log_val));
  }
  // slack for the scan resolution
  return 1.01 * std::abs(amplitude) * best;
}

SpinorSection::SpinorSection(Coefficient c, int helicity_sign)
    : c_(std::make_shared<const Coefficient>(std::move(c))), helicity_(helicity_sign) {
  if (helicity_sign != 1 && helicity_sign != -1)
    throw std::invalid_argument("SpinorSection: helicity sign must be +1 or -1");
}

SpinorSection SpinorSection::from_basis(std::vector<SectionBasisFunction> terms, int helicity_sign) {
  return SpinorSection(
      [terms = std::move(terms)](const FourVector& p) {
        std::complex<double> acc = 0.0;
        for (const auto& t : terms) acc += t(p);
        return acc;
      },
      helicity_sign);
}

SpinorSection SpinorSection::zero(int helicity_sign) {
  return SpinorSection([](const FourVector&) { return std::complex<double>(0.0); }, helicity_sign);
}

SpinorVector SpinorSection::value(const FourVector& p) const {
  return coefficient(p) * fiber_vector(p, helicity_);
}

SpinorSection SpinorSection::operator-(const SpinorSection& other) const {
  if (other.helicity_ != helicity_) throw std::invalid_argument("SpinorSection: helicity mismatch");
  auto a = c_, b = other.c_;
  return SpinorSection([a, b](const FourVector& p) { return (*a)(p) - (*b)(p); }, helicity_);
}

std::complex<double> section_inner_product(const SpinorSection& f, const SpinorSection& g,
                                           const OrbitGrid& grid) {
  if (f.helicity() != g.helicity())
    throw std::invalid_argument("section_inner_product: sections have different helicity");
  return grid_sum(grid, grid.weights, [&](std::size_t i) {
    const FourVector& p = grid.nodes[i];
    return std::conj(f.coefficient(p)) * g.coefficient(p) / p[0];
  });
}

double section_norm(const SpinorSection& f, const OrbitGrid& grid) {
  return std::sqrt(std::max(0.0, section_inner_product(f, f, grid).real()));
}

double pushforward_check(const SL2CElement& h, const SectionBasisFunction& f, const OrbitGrid& grid,
                         Density density) {
  const Eigen::Matrix4d inv = covering_map(h.inverse()).matrix();
  std::vector<double> w(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) w[i] = grid.volume_weights[i] * density_factor(density, grid.nodes[i]);
  std::complex<double> moved = grid_sum(grid, w, [&](std::size_t i) {
    return f(FourVector(Eigen::Vector4d(inv * grid.nodes[i].to_eigen())));
  });
  std::complex<double> fixed = grid_sum(grid, w, [&](std::size_t i) { return f(grid.nodes[i]); });
  return std::abs(moved - fixed);
}

}  // namespace weylnoise
