#include "weylnoise/fock.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace weylnoise {

namespace {

// All occupations of `modes` modes with exactly `total` quanta, descending lex.
void occupations_with_total(int modes, int total, Occupation& prefix, std::vector<Occupation>& out) {
  if (static_cast<int>(prefix.size()) == modes - 1) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int k = total; k >= 0; --k) {
    prefix.push_back(k);
    occupations_with_total(modes, total - k, prefix, out);
    prefix.pop_back();
  }
}

double factorial(int n) { return std::tgamma(n + 1.0); }

bool is_unitary(const Eigen::MatrixXcd& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return (u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <= tol;
}

void check_dimension(const Eigen::VectorXcd& g, const FockSpace& space) {
  if (g.size() != space.modes()) throw std::invalid_argument("one-particle vector has the wrong dimension");
}

// a^dagger(g) applied to a state without forming the matrix.
FockState apply_create(const Eigen::VectorXcd& g, const FockState& psi, const FockSpace& space) {
  FockState out = FockState::Zero(space.dimension());
  for (Eigen::Index j = 0; j < space.dimension(); ++j) {
    if (psi[j] == 0.0) continue;
    Occupation n = space.occupation(j);
    for (int i = 0; i < space.modes(); ++i) {
      auto ui = static_cast<std::size_t>(i);
      n[ui] += 1;
      if (auto k = space.index_of(n)) out[*k] += g[i] * std::sqrt(static_cast<double>(n[ui])) * psi[j];
      n[ui] -= 1;
    }
  }
  return out;
}

// Single-mode displacement exp(v a^dagger - conj(v) a) on N + padding levels,
// returned on the first N + 1 levels.
Eigen::MatrixXcd single_mode_displacement(std::complex<double> v, int max_quanta, int padding) {
  const int levels = max_quanta + padding + 1;
  Eigen::MatrixXcd gen = Eigen::MatrixXcd::Zero(levels, levels);
  for (int k = 1; k < levels; ++k) {
    double s = std::sqrt(static_cast<double>(k));
    gen(k, k - 1) = v * s;             // a^dagger
    gen(k - 1, k) = -std::conj(v) * s;  // -a
  }
  Eigen::MatrixXcd full = gen.exp();
  return full.topLeftCorner(max_quanta + 1, max_quanta + 1);
}

}  // namespace

FockSpace::FockSpace(int modes, int max_quanta) : modes_(modes), max_quanta_(max_quanta) {
  if (modes < 1 || max_quanta < 0) throw std::invalid_argument("FockSpace: need modes >= 1 and N >= 0");
  for (int total = 0; total <= max_quanta; ++total) {
    Occupation prefix;
    occupations_with_total(modes, total, prefix, basis_);
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = static_cast<Eigen::Index>(i);
}

int FockSpace::total_quanta(Eigen::Index i) const {
  int t = 0;
  for (int n : occupation(i)) t += n;
  return t;
}

std::optional<Eigen::Index> FockSpace::index_of(const Occupation& n) const {
  auto it = index_.find(n);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Eigen::Index> FockSpace::interior(int level) const {
  std::vector<Eigen::Index> out;
  for (Eigen::Index i = 0; i < dimension(); ++i)
    if (total_quanta(i) <= level) out.push_back(i);
  return out;
}

FockState vacuum(const FockSpace& space) {
  FockState v = FockState::Zero(space.dimension());
  v[0] = 1.0;
  return v;
}

FockState exponential_vector(const Eigen::VectorXcd& f, const FockSpace& space, double tail_tol) {
  check_dimension(f, space);
  const int n_cut = space.max_quanta();
  double norm2 = f.squaredNorm();
  double tail = std::exp((n_cut + 1) * std::log(std::max(norm2, 1e-300)) + norm2 - std::lgamma(n_cut + 2.0));
  if (norm2 > 0.0 && tail > tail_tol)
    throw std::invalid_argument("exponential_vector: truncation tail exceeds tolerance");
  FockState out(space.dimension());
  for (Eigen::Index j = 0; j < space.dimension(); ++j) {
    std::complex<double> c = 1.0;
    const Occupation& n = space.occupation(j);
    for (int i = 0; i < space.modes(); ++i) {
      int k = n[static_cast<std::size_t>(i)];
      if (k > 0) c *= std::pow(f[i], k) / std::sqrt(factorial(k));
    }
    out[j] = c;
  }
  return out;
}

FockOperator create(const Eigen::VectorXcd& g, const FockSpace& space) {
  check_dimension(g, space);
  FockOperator m = FockOperator::Zero(space.dimension(), space.dimension());
  for (Eigen::Index j = 0; j < space.dimension(); ++j) {
    Occupation n = space.occupation(j);
    for (int i = 0; i < space.modes(); ++i) {
      auto ui = static_cast<std::size_t>(i);
      n[ui] += 1;
      if (auto k = space.index_of(n)) m(*k, j) += g[i] * std::sqrt(static_cast<double>(n[ui]));
      n[ui] -= 1;
    }
  }
  return m;
}

FockOperator annihilate(const Eigen::VectorXcd& g, const FockSpace& space) {
  return create(g, space).adjoint();
}

FockOperator number_operator(const FockSpace& space) {
  Eigen::VectorXcd d(space.dimension());
  for (Eigen::Index i = 0; i < space.dimension(); ++i) d[i] = space.total_quanta(i);
  return d.asDiagonal();
}

FockOperator second_quantize(const Eigen::MatrixXcd& u, const FockSpace& space, double tol) {
  if (u.rows() != space.modes() || !is_unitary(u, tol))
    throw std::invalid_argument("second_quantize: U must be a unitary on the one-particle space");
  FockOperator out(space.dimension(), space.dimension());
  for (Eigen::Index j = 0; j < space.dimension(); ++j) {
    FockState psi = vacuum(space);
    double norm = 1.0;
    const Occupation& n = space.occupation(j);
    for (int i = 0; i < space.modes(); ++i) {
      int k = n[static_cast<std::size_t>(i)];
      for (int r = 0; r < k; ++r) psi = apply_create(u.col(i), psi, space);
      norm *= factorial(k);
    }
    out.col(j) = psi / std::sqrt(norm);
  }
  return out;
}

WeylData::WeylData(Eigen::VectorXcd v_, Eigen::MatrixXcd u_, double tol) : v(std::move(v_)), U(std::move(u_)) {
  if (U.rows() != v.size() || !is_unitary(U, tol)) throw std::invalid_argument("WeylData: U must be unitary");
}

WeylData WeylData::displacement(Eigen::VectorXcd v_) {
  Eigen::Index n = v_.size();
  return WeylData(std::move(v_), Eigen::MatrixXcd::Identity(n, n));
}

WeylOperator weyl_operator(const WeylData& w, const FockSpace& space, WeylRoute route, int padding) {
  check_dimension(w.v, space);
  if (padding < 0) throw std::invalid_argument("weyl_operator: padding must be non-negative");
  const Eigen::Index dim = space.dimension();
  FockOperator disp(dim, dim);

  if (route == WeylRoute::Factorized) {
    std::vector<Eigen::MatrixXcd> modes;
    for (int i = 0; i < space.modes(); ++i)
      modes.push_back(single_mode_displacement(w.v[i], space.max_quanta(), padding));
    for (Eigen::Index r = 0; r < dim; ++r) {
      const Occupation& m = space.occupation(r);
      for (Eigen::Index c = 0; c < dim; ++c) {
        const Occupation& n = space.occupation(c);
        std::complex<double> e = 1.0;
        for (std::size_t i = 0; i < modes.size(); ++i) e *= modes[i](m[i], n[i]);
        disp(r, c) = e;
      }
    }
  } else {
    FockSpace padded(space.modes(), space.max_quanta() + padding);
    FockOperator gen = create(w.v, padded) - annihilate(w.v, padded);
    FockOperator full = gen.exp();
    // the truncated basis is a prefix of the padded one
    disp = full.topLeftCorner(dim, dim);
  }

  WeylOperator out;
  bool identity_u = w.U.isIdentity(0.0);
  out.matrix = identity_u ? disp : FockOperator(disp * second_quantize(w.U, space));
  out.unitarity_defect =
      (out.matrix.adjoint() * out.matrix - FockOperator::Identity(dim, dim)).cwiseAbs().maxCoeff();
  return out;
}

WeylData compose(const WeylData& g, const WeylData& h) {
  return WeylData(g.v + g.U * h.v, g.U * h.U);
}

double phase_relation_defect(const WeylData& g, const WeylData& h, const FockSpace& space, int level,
                             PhaseRelation relation) {
  FockOperator vg = weyl_operator(g, space).matrix;
  FockOperator vh = weyl_operator(h, space).matrix;
  FockOperator lhs = vg * vh;
  FockOperator rhs;
  switch (relation) {
    case PhaseRelation::SwapImagInner:
      rhs = std::polar(1.0, one_particle_inner(g.v, g.U * h.v).imag()) * (vh * vg);
      break;
    case PhaseRelation::SwapDisplacement:
      if (!g.U.isIdentity(0.0) || !h.U.isIdentity(0.0))
        throw std::invalid_argument("phase_relation_defect: displacement relation needs U = I");
      rhs = std::polar(1.0, -2.0 * one_particle_inner(g.v, h.v).imag()) * (vh * vg);
      break;
    case PhaseRelation::Multiplier:
      rhs = std::polar(1.0, -one_particle_inner(g.v, g.U * h.v).imag()) * weyl_operator(compose(g, h), space).matrix;
      break;
  }
  std::vector<Eigen::Index> rows(static_cast<std::size_t>(space.dimension()));
  for (Eigen::Index i = 0; i < space.dimension(); ++i) rows[static_cast<std::size_t>(i)] = i;
  return block_max_abs(lhs, rhs, rows, space.interior(level));
}

FockOperator stone_generator(const Eigen::VectorXcd& direction, const FockSpace& space, double step, double tol) {
  check_dimension(direction, space);
  auto central = [&](double h) {
    FockOperator plus = weyl_operator(WeylData::displacement(h * direction), space).matrix;
    FockOperator minus = weyl_operator(WeylData::displacement(-h * direction), space).matrix;
    return FockOperator((plus - minus) / (2.0 * h));
  };
  FockOperator coarse = central(step);
  FockOperator fine = central(0.5 * step);
  FockOperator extrapolated = (4.0 * fine - coarse) / 3.0;
  double scale = std::max(1.0, extrapolated.cwiseAbs().maxCoeff());
  if ((extrapolated - fine).cwiseAbs().maxCoeff() > tol * scale)
    throw std::runtime_error("stone_generator: step sizes disagree beyond tolerance");
  return std::complex<double>(0.0, -1.0) * extrapolated;
}

FieldPair field_operators(const Eigen::VectorXcd& g, const FockSpace& space) {
  const std::complex<double> i(0.0, 1.0);
  return {stone_generator(g, space), -stone_generator(Eigen::VectorXcd(i * g), space)};
}

Proportionality fit_proportionality(const FockOperator& a, const FockOperator& target) {
  std::complex<double> denom = target.cwiseAbs2().sum();
  if (std::abs(denom) == 0.0) throw std::invalid_argument("fit_proportionality: zero target");
  std::complex<double> kappa = (target.conjugate().cwiseProduct(a)).sum() / denom;
  return {kappa, (a - kappa * target).cwiseAbs().maxCoeff()};
}

double block_max_abs(const FockOperator& a, const FockOperator& b, const std::vector<Eigen::Index>& rows,
                     const std::vector<Eigen::Index>& cols) {
  double worst = 0.0;
  for (Eigen::Index r : rows)
    for (Eigen::Index c : cols) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  return worst;
}

std::complex<double> one_particle_inner(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g) {
  return f.dot(g);
}

}  // namespace weylnoise
