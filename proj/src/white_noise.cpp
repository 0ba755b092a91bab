#include "weylnoise/white_noise.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gsl/gsl_integration.h>

namespace weylnoise {

double normalized_hermite(int n, double x) {
  // h_{k+1} = (x h_k - sqrt(k) h_{k-1}) / sqrt(k+1)
  double prev = 0.0, cur = 1.0;
  for (int k = 0; k < n; ++k) {
    double next = (x * cur - std::sqrt(static_cast<double>(k)) * prev) / std::sqrt(k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

HermiteExpansion::HermiteExpansion(const FockSpace& space, FockState coefficients)
    : space_(space), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != space_.dimension()) throw std::invalid_argument("HermiteExpansion: dimension mismatch");
}

std::complex<double> HermiteExpansion::operator()(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != space_.modes()) throw std::invalid_argument("HermiteExpansion: wrong point dimension");
  const int top = space_.max_quanta();
  std::vector<std::vector<double>> h(x.size(), std::vector<double>(static_cast<std::size_t>(top) + 1));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (int k = 0; k <= top; ++k) h[i][static_cast<std::size_t>(k)] = normalized_hermite(k, x[i]);
  std::complex<double> acc = 0.0;
  for (Eigen::Index j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0.0) continue;
    double term = 1.0;
    const Occupation& n = space_.occupation(j);
    for (std::size_t i = 0; i < n.size(); ++i) term *= h[i][static_cast<std::size_t>(n[i])];
    acc += coeffs_[j] * term;
  }
  return acc;
}

HermiteExpansion chaos_map(const FockState& state, const FockSpace& space) { return {space, state}; }

GaussianRule gaussian_rule(int dimension, int order) {
  if (dimension < 1 || order < 1) throw std::invalid_argument("gaussian_rule: need positive dimension and order");
  // weight exp(-x^2/2) on R
  gsl_integration_fixed_workspace* ws =
      gsl_integration_fixed_alloc(gsl_integration_fixed_hermite, static_cast<size_t>(order), 0.0, 0.5, 0.0, 0.0);
  if (ws == nullptr) throw std::runtime_error("gaussian_rule: GSL allocation failed");
  std::vector<double> x(gsl_integration_fixed_nodes(ws), gsl_integration_fixed_nodes(ws) + order);
  std::vector<double> w(gsl_integration_fixed_weights(ws), gsl_integration_fixed_weights(ws) + order);
  gsl_integration_fixed_free(ws);
  const double norm = std::sqrt(2.0 * std::numbers::pi);
  for (double& wi : w) wi /= norm;

  GaussianRule rule;
  std::vector<int> idx(static_cast<std::size_t>(dimension), 0);
  while (true) {
    std::vector<double> node(idx.size());
    double weight = 1.0;
    for (std::size_t d = 0; d < idx.size(); ++d) {
      node[d] = x[static_cast<std::size_t>(idx[d])];
      weight *= w[static_cast<std::size_t>(idx[d])];
    }
    rule.nodes.push_back(std::move(node));
    rule.weights.push_back(weight);
    std::size_t d = 0;
    while (d < idx.size() && ++idx[d] == order) idx[d++] = 0;
    if (d == idx.size()) break;
  }
  return rule;
}

std::complex<double> gaussian_inner_product(const HermiteExpansion& f, const HermiteExpansion& g,
                                            const GaussianRule& rule) {
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * std::conj(f(rule.nodes[i])) * g(rule.nodes[i]);
  return acc;
}

Eigen::MatrixXcd chaos_gram(const FockSpace& space, int order) {
  GaussianRule rule = gaussian_rule(space.modes(), order);
  const Eigen::Index dim = space.dimension();
  // rows: basis functions evaluated at the nodes
  Eigen::MatrixXcd values(dim, static_cast<Eigen::Index>(rule.nodes.size()));
  for (Eigen::Index j = 0; j < dim; ++j) {
    FockState e = FockState::Zero(dim);
    e[j] = 1.0;
    HermiteExpansion fj = chaos_map(e, space);
    for (std::size_t q = 0; q < rule.nodes.size(); ++q)
      values(j, static_cast<Eigen::Index>(q)) = fj(rule.nodes[q]) * std::sqrt(rule.weights[q]);
  }
  return values.conjugate() * values.transpose();
}

Eigen::MatrixXcd DiracHamiltonian::matrix() const {
  const std::complex<double> i(0.0, 1.0);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dimension(), dimension());
  for (std::size_t k = 0; k < momenta.size(); ++k) {
    const auto& p = momenta[k];
    Eigen::Matrix2cd block;
    block << p[2], p[0] - i * p[1], p[0] + i * p[1], -p[2];
    h.block<2, 2>(2 * static_cast<Eigen::Index>(k), 2 * static_cast<Eigen::Index>(k)) = block;
  }
  return h;
}

double weighted_norm(const Eigen::VectorXcd& f, int k, const DiracHamiltonian& h) {
  if (k < 0) throw std::invalid_argument("weighted_norm: k must be non-negative");
  if (f.size() != h.dimension()) throw std::invalid_argument("weighted_norm: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h.matrix());
  Eigen::VectorXcd coords = eig.eigenvectors().adjoint() * f;
  double acc = 0.0;
  for (Eigen::Index j = 0; j < coords.size(); ++j)
    acc += std::pow(1.0 + std::abs(eig.eigenvalues()[j]), 2.0 * k) * std::norm(coords[j]);
  return std::sqrt(acc);
}

double white_noise_continuity(std::span<const Eigen::VectorXcd> test_set, int k, const DiracHamiltonian& h,
                              const FockSpace& space) {
  double worst = 0.0;
  for (const auto& f : test_set) {
    double denom = weighted_norm(f, k, h);
    if (denom == 0.0) continue;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(create(f, space));
    worst = std::max(worst, svd.singularValues()[0] / denom);
  }
  return worst;
}

ToyFockSpace::ToyFockSpace(int s) : slots(s) {
  if (s < 1 || s > 20) throw std::invalid_argument("ToyFockSpace: slot count out of range");
}

FermionIncrements fermionize(const ToyFockSpace& space) {
  if (space.slots < 2) throw std::invalid_argument("fermionize: need at least two slots");
  const Eigen::Index dim = space.dimension();
  FermionIncrements out;
  for (int i = 0; i < space.slots; ++i) {
    FockOperator b = FockOperator::Zero(dim, dim);
    const Eigen::Index bit = Eigen::Index{1} << i;
    for (Eigen::Index state = 0; state < dim; ++state) {
      if ((state & bit) == 0) continue;
      int earlier = std::popcount(static_cast<unsigned long long>(state & (bit - 1)));
      b(state ^ bit, state) = (earlier % 2 == 0) ? 1.0 : -1.0;
    }
    out.raising.push_back(b.adjoint());
    out.lowering.push_back(std::move(b));
  }
  return out;
}

namespace {

std::vector<int> digits(Eigen::Index state, int slots, int base) {
  std::vector<int> d(static_cast<std::size_t>(slots));
  for (auto& x : d) {
    x = static_cast<int>(state % base);
    state /= base;
  }
  return d;
}

}  // namespace

FermionIncrements reflect_bosonic(int slots, int cutoff) {
  if (slots < 2 || cutoff < 1) throw std::invalid_argument("reflect_bosonic: need slots >= 2 and cutoff >= 1");
  const int base = cutoff + 1;
  Eigen::Index dim = 1;
  for (int i = 0; i < slots; ++i) dim *= base;
  FermionIncrements out;
  Eigen::Index stride = 1;
  for (int i = 0; i < slots; ++i) {
    FockOperator b = FockOperator::Zero(dim, dim);
    for (Eigen::Index state = 0; state < dim; ++state) {
      auto d = digits(state, slots, base);
      int n = d[static_cast<std::size_t>(i)];
      if (n == 0) continue;
      int earlier = 0;
      for (int j = 0; j < i; ++j) earlier += d[static_cast<std::size_t>(j)];
      b(state - stride, state) = (earlier % 2 == 0 ? 1.0 : -1.0) * std::sqrt(static_cast<double>(n));
    }
    out.raising.push_back(b.adjoint());
    out.lowering.push_back(std::move(b));
    stride *= base;
  }
  return out;
}

std::vector<Eigen::Index> single_occupancy_indices(int slots, int cutoff) {
  const int base = cutoff + 1;
  Eigen::Index dim = 1;
  for (int i = 0; i < slots; ++i) dim *= base;
  std::vector<Eigen::Index> out;
  for (Eigen::Index state = 0; state < dim; ++state) {
    auto d = digits(state, slots, base);
    bool ok = true;
    for (int x : d) ok = ok && x <= 1;
    if (ok) out.push_back(state);
  }
  return out;
}

}  // namespace weylnoise
