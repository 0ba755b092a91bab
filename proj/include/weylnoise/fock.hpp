#pragma once

#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace weylnoise {

using FockState = Eigen::VectorXcd;
using FockOperator = Eigen::MatrixXcd;
using Occupation = std::vector<int>;

/// Symmetric Fock space over C^n truncated to at most N quanta in total.
///
/// Basis: occupation multi-indices ordered by total quanta, then
/// lexicographically descending within a level, so (1,0) precedes (0,1).
class FockSpace {
 public:
  FockSpace(int modes, int max_quanta);

  int modes() const { return modes_; }
  int max_quanta() const { return max_quanta_; }
  Eigen::Index dimension() const { return static_cast<Eigen::Index>(basis_.size()); }

  const Occupation& occupation(Eigen::Index i) const { return basis_[static_cast<std::size_t>(i)]; }
  int total_quanta(Eigen::Index i) const;
  std::optional<Eigen::Index> index_of(const Occupation& n) const;

  /// Indices of basis states with at most `level` quanta.
  std::vector<Eigen::Index> interior(int level) const;

 private:
  int modes_;
  int max_quanta_;
  std::vector<Occupation> basis_;
  std::map<Occupation, Eigen::Index> index_;
};

FockState vacuum(const FockSpace& space);

/// Truncated e(f) = sum_k f^{(x)k} / sqrt(k!); in the occupation basis the
/// coefficient of n is prod_i f_i^{n_i} / sqrt(n_i!). Throws
/// std::invalid_argument when the discarded tail bound
/// |f|^{2(N+1)} e^{|f|^2} / (N+1)! exceeds tail_tol.
FockState exponential_vector(const Eigen::VectorXcd& f, const FockSpace& space, double tail_tol = 1e-10);

/// a(g) = sum_i conj(g_i) a_i, antilinear in g.
FockOperator annihilate(const Eigen::VectorXcd& g, const FockSpace& space);
/// a^dagger(g) = sum_i g_i a_i^dagger, linear in g. Quanta above N are dropped.
FockOperator create(const Eigen::VectorXcd& g, const FockSpace& space);

FockOperator number_operator(const FockSpace& space);

/// Gamma(U): U^{(x)k} on the k-particle subspace. Throws std::invalid_argument
/// unless U is unitary within tol.
FockOperator second_quantize(const Eigen::MatrixXcd& u, const FockSpace& space, double tol = 1e-10);

/// Payload (v, U) of a Weyl operator.
struct WeylData {
  Eigen::VectorXcd v;
  Eigen::MatrixXcd U;

  WeylData(Eigen::VectorXcd v_, Eigen::MatrixXcd u_, double tol = 1e-10);
  static WeylData displacement(Eigen::VectorXcd v_);
};

enum class WeylRoute {
  /// Product of single-mode exponentials, each on a padded mode then projected.
  Factorized,
  /// One dense exponential of a^dagger(v) - a(v) on the padded multimode
  /// space, projected onto the first N quanta.
  DenseGenerator,
};

struct WeylOperator {
  FockOperator matrix;
  /// max |W^* W - I| on the truncated space; this is the only truncation effect
  /// since the projected matrix elements are exact up to the padding.
  double unitarity_defect = 0.0;
};

/// W(v, U) = exp(a^dagger(v) - a(v)) Gamma(U) restricted to the truncated space.
WeylOperator weyl_operator(const WeylData& w, const FockSpace& space, WeylRoute route = WeylRoute::Factorized,
                           int padding = 16);

/// (v_g, U_g)(v_h, U_h) = (v_g + U_g v_h, U_g U_h).
WeylData compose(const WeylData& g, const WeylData& h);

enum class PhaseRelation {
  /// V_g V_h = exp(i Im<v_g, U_g v_h>) V_h V_g
  SwapImagInner,
  /// V_g V_h = exp(-2i Im<v_g, v_h>) V_h V_g, for U_g = U_h = I
  SwapDisplacement,
  /// V_g V_h = exp(-i Im<v_g, U_g v_h>) V_{gh}
  Multiplier,
};

/// max |LHS - RHS| of the relation, over all rows and the columns with at
/// most `level` quanta.
double phase_relation_defect(const WeylData& g, const WeylData& h, const FockSpace& space, int level,
                             PhaseRelation relation);

/// p(f) = -i d/dt W(t f, I) at t = 0, by Richardson-extrapolated central
/// differences. Throws std::runtime_error when the two step sizes disagree by
/// more than tol.
FockOperator stone_generator(const Eigen::VectorXcd& direction, const FockSpace& space, double step = 1e-4,
                             double tol = 1e-6);

/// Conjugate field pair. q(f) = -p(i f), under which a(f) = kappa (q + i p) / 2
/// with kappa = -1 for the -i d/dt orientation of p.
struct FieldPair {
  FockOperator p;
  FockOperator q;
};
FieldPair field_operators(const Eigen::VectorXcd& g, const FockSpace& space);

/// Least-squares constant kappa with a ~ kappa * target, plus the residual.
struct Proportionality {
  std::complex<double> kappa;
  double residual;
};
Proportionality fit_proportionality(const FockOperator& a, const FockOperator& target);

/// max |(A - B)_{ij}| over rows and columns in the index list.
double block_max_abs(const FockOperator& a, const FockOperator& b, const std::vector<Eigen::Index>& rows,
                     const std::vector<Eigen::Index>& cols);

/// <f, g> = sum conj(f_i) g_i, antilinear in the first argument.
std::complex<double> one_particle_inner(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g);

}  // namespace weylnoise
