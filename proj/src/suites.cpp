#include "suites.hpp"

#include <algorithm>
#include <numbers>

#include "weylnoise/clifford.hpp"
#include "weylnoise/fock.hpp"
#include "weylnoise/induced.hpp"
#include "weylnoise/poincare.hpp"
#include "weylnoise/quadrature.hpp"
#include "weylnoise/white_noise.hpp"

namespace weylnoise::detail {

namespace {

namespace anchor {
constexpr const char* kForm = "{k,g} = k_0 g_0 - k_1 g_1";
constexpr const char* kCharacter = "p̂: x → e^{i{k,g}}";
constexpr const char* kProduct = "(h_1,a_1)(h_2,a_2) = (h_1h_2, a_1t_{h_1}[a_2])";
constexpr const char* kInverse = "(h,a)^{-1} = (h^{-1},h^{-1}[a^{-1}]";
constexpr const char* kCovering = "δ(m)... η → mηm*, η ∈ ℛ⁴";
constexpr const char* kCover = "H* = SL(2, 𝒞)";
constexpr const char* kLorentz = "L is a matrix representation of Lorentz group";
constexpr const char* kStabilizer = "stability group E* at (1, 0, 0, 1) given by the matrices [[z & a],[0 & z^{-1}]]";
constexpr const char* kGenerators = "generators in terms of Pauli matrices as σ_3, N_1 = [[0 & 1],[0 & 0]], N_1 = [[0 & i],[0 & 0]]";
constexpr const char* kSquare = "γ_r^2 = ε_r 𝕀";
constexpr const char* kAnticommute = "γ_r γ_s + γ_s γ_r = 0";
constexpr const char* kGammaBlock = "Γ = [[1 & 0],[0 & -1]]";
constexpr const char* kChirality = "Γ = iγ_0γ_1γ_2γ_3";
constexpr const char* kSpinRep = "S(m) = [[m & 0],[0 & (m^{-1})*]]";
constexpr const char* kIntertwine = "S(m)^{-1}γ_r S(m) = Σ_{s=0}^3 a_{rs}(δ(m))γ_s";
constexpr const char* kLieCommutator = "[Ś(X), γ_r] = -Σ_{s=0}^3 a_{rs}(δ́(X))γ_s";
constexpr const char* kLieForm = "Ś(X) = [[X & 0],[0 & X]]";
constexpr const char* kDirac = "Σ_{r=0}^3 p_r γ_r v = 0";
constexpr const char* kHelicity = "Γψ = ±ψ";
constexpr const char* kFiberSpace = "v ∈ 𝒞⁴";
constexpr const char* kMassive = "v_1^{(m)} = ½me_1 + ½(1 + (1 + m²)^{1/2})e_3";
constexpr const char* kInvariantForm = "The form v → p_0^{-1}⟨v, v⟩ can be shown to satisfy the condition";
constexpr const char* kBundle = "h,(p,v) → (p,v)^h = (δ(h)p, S(h^{*-1})v)";
constexpr const char* kHelicityBundle = "B̂_0^{+,1/2} = {(p,v) : (p,v) ∈ B_0^+, Γv = ∓v}";
constexpr const char* kStabilizerMatrices = "matrices [[z, a],[0, z^{-1}]], z,a ∈ 𝒞, |z|=1";
constexpr const char* kInvariantMeasure = "Lorentz invariant measure dp/p_0";
constexpr const char* kPrintedMeasure = "dβ^{+,1}_0(p) = dp₁dp₂dp₃ / (2(p₁² + p₂² + p₃²))";
constexpr const char* kSectionNorm = "‖φ‖² = ∫_{X^+_m} p_0^{-1}⟨φp, φp⟩.dβ^{+,1}_0(p)";
constexpr const char* kInduced = "(U_{h,x}φ)(p) = exp i{x, p} φ(δ(h)^{-1}p)^h";
constexpr const char* kPosition = "P_E F = χ_E f Position operator";
constexpr const char* kImprimitivity =
    "Light-like Weyl representation of Poincarè group is a transitive system of imprimitivity";
constexpr const char* kBorel = "c(x → c(x) as Borel section of 𝒫 / 𝒢 ... with c(x₀) = e";
constexpr const char* kCocycleB = "b(gh) = b(g)m(h), ∀(g,h) ∈ G × G_0";
constexpr const char* kCocycleF = "f(g, g^1) = b(gg^1)b(g^1)^{-1}";
constexpr const char* kFirstOrder = "v(gh) = v(g) + U_g v(h), g,h ∈ 𝒢";
constexpr const char* kTimeCocycle = "v(t) = tu_0 ⊕ ⊕_{j=1}^∞ (e^{-itH_j} u_j − u_j)";
constexpr const char* kFock = "Fock space Γ_s(ℋ̂^{+,1/2}_0)";
constexpr const char* kExponential = "the corresponding Weyl operators have exponential functionals as domain";
constexpr const char* kWeyl = "Weyl operator V_g = W_g(v(g), U_g)";
constexpr const char* kSecondQuant = "the U_g payload of \"W_g(v(g), U_g)\"";
constexpr const char* kFields = "a(g) = ½(q(g) + ip(g))";
constexpr const char* kStone = "Let p_g be the stone generator for the family of operators P_{gt,p}";
constexpr const char* kChaos = "L²((E*), μ) ≅ Γ_s(ℋ̂^{+,2}_0)";
constexpr const char* kGelfand = "H = σ • p";
constexpr const char* kFermion = "dB= (-1)^Λ dA, we can construct the fermionic processes";
}  // namespace anchor

template <class D>
double max_abs(const Eigen::MatrixBase<D>& m) {
  return m.cwiseAbs().maxCoeff();
}

double vec_dist(const FourVector& a, const FourVector& b) { return (a.to_eigen() - b.to_eigen()).cwiseAbs().maxCoeff(); }

Eigen::Matrix<double, 5, 5> affine(const PoincareElement& g) {
  Eigen::Matrix<double, 5, 5> m = Eigen::Matrix<double, 5, 5>::Identity();
  m.topLeftCorner<4, 4>() = covering_map(g.h).matrix();
  m.topRightCorner<4, 1>() = g.x.to_eigen();
  return m;
}

// Hermitian matrix of p written out entrywise and read back through the
// diagonal and off-diagonal entries.
FourVector conjugation_oracle(const Matrix2c& m, const FourVector& p) {
  const cplx i(0.0, 1.0);
  Matrix2c e;
  e << p[0] + p[3], p[1] - i * p[2], p[1] + i * p[2], p[0] - p[3];
  Matrix2c r = m * e * m.adjoint();
  return {0.5 * (r(0, 0) + r(1, 1)).real(), r(1, 0).real(), r(1, 0).imag(), 0.5 * (r(0, 0) - r(1, 1)).real()};
}

int nullity(const Eigen::MatrixXcd& a, double rel = 1e-9) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  const auto& s = svd.singularValues();
  double top = std::max(s.maxCoeff(), 1.0);
  int zero = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s[k] <= rel * top) ++zero;
  return zero + static_cast<int>(a.cols() - s.size());
}

}  // namespace

void run_group_suite(SuiteContext& ctx) {
  const int n = ctx.cfg.samples;
  const double tol = ctx.cfg.tol_exact;
  Sampler& rng = ctx.rng;

  ctx.check("group.character", anchor::kCharacter, tol, n, [&] {
    double d = 0.0;
    for (int k = 0; k < n; ++k) {
      FourVector p = rng.four_vector(2.0), x = rng.four_vector(2.0), y = rng.four_vector(2.0);
      LorentzMatrix l = covering_map(rng.sl2c(1.0));
      d = std::max(d, std::abs(character_eval(p, x + y) - character_eval(p, x) * character_eval(p, y)));
      d = std::max(d, std::abs(character_eval(p, l.inverse().apply(x)) - character_eval(l.apply(p), x)));
    }
    return d;
  });

  ctx.check("group.covering_homomorphism", anchor::kCovering, tol, n, [&] {
    double d = 0.0;
    for (int k = 0; k < n; ++k) {
      SL2CElement m1 = rng.sl2c(1.0), m2 = rng.sl2c(1.0);
      d = std::max(d, max_abs(covering_map(m1 * m2).matrix() - (covering_map(m1) * covering_map(m2)).matrix()));
      FourVector p = rng.four_vector(1.0);
      d = std::max(d, vec_dist(covering_map(m1).apply(p), conjugation_oracle(m1.matrix(), p)));
    }
    return d;
  });

  ctx.check("group.covering_lorentz", anchor::kLorentz, tol, n, [&] {
    double d = 0.0;
    for (int k = 0; k < n; ++k) {
      Eigen::Matrix4d l = covering_map(rng.sl2c(1.0)).matrix();
      d = std::max(d, max_abs(Eigen::Matrix4d(l.transpose() * minkowski_metric() * l - minkowski_metric())));
      d = std::max(d, std::abs(l.determinant() - 1.0));
      d = std::max(d, std::max(0.0, 1.0 - l(0, 0)));
    }
    return d;
  });

  ctx.check("group.covering_two_to_one", anchor::kCover, tol, n, [&] {
    double d = max_abs(Eigen::Matrix4d(covering_map(-SL2CElement()).matrix() - Eigen::Matrix4d::Identity()));
    for (int k = 0; k < n; ++k) {
      SL2CElement m = rng.sl2c(1.0);
      d = std::max(d, max_abs(Eigen::Matrix4d(covering_map(-m).matrix() - covering_map(m).matrix())));
    }
    return d;
  });

  ctx.check("group.minkowski_form", anchor::kForm, tol, n, [&] {
    double d = std::abs(minkowski_form({1, 0, 0, 0}, {1, 0, 0, 0}) - 1.0);
    d = std::max(d, std::abs(minkowski_form({0, 1, 0, 0}, {0, 1, 0, 0}) + 1.0));
    d = std::max(d, std::abs(minkowski_form(base_momentum(), base_momentum())));
    for (int k = 0; k < n; ++k) {
      FourVector a = rng.four_vector(1.0), b = rng.four_vector(1.0);
      LorentzMatrix l = covering_map(rng.sl2c(1.0));
      d = std::max(d, std::abs(minkowski_form(l.apply(a), l.apply(b)) - minkowski_form(a, b)));
    }
    return d;
  });

  ctx.check("group.poincare_inverse", anchor::kInverse, tol, n, [&] {
    double d = 0.0;
    for (int k = 0; k < n; ++k) {
      PoincareElement g = rng.poincare(1.0, 1.0);
      PoincareElement gi = poincare_inverse(g);
      d = std::max(d, poincare_distance(poincare_multiply(g, gi), PoincareElement::identity()));
      d = std::max(d, poincare_distance(poincare_multiply(gi, g), PoincareElement::identity()));
      d = std::max(d, max_abs(Eigen::Matrix<double, 5, 5>(affine(gi) - affine(g).inverse())));
    }
    return d;
  });

  ctx.check("group.poincare_product", anchor::kProduct, tol, n, [&] {
    double d = 0.0;
    for (int k = 0; k < n; ++k) {
      PoincareElement a = rng.poincare(1.0, 1.0), b = rng.poincare(1.0, 1.0), c = rng.poincare(1.0, 1.0);
      d = std::max(d, poincare_distance(poincare_multiply(poincare_multiply(a, b), c),
                                        poincare_multiply(a, poincare_multiply(b, c))));
      d = std::max(d, poincare_distance(poincare_multiply(PoincareElement::identity(), a), a));
      d = std::max(d, max_abs(Eigen::Matrix<double, 5, 5>(affine(poincare_multiply(a, b)) - affine(a) * affine(b))));
    }
    return d;
  });

  ctx.check("group.little_group_generators", anchor::kGenerators, tol, n, [&] {
    LittleGroupGenerators gens = little_group_generators();
    const Eigen::Vector4d base = base_momentum().to_eigen();
    double d = 0.0;
    for (const auto* x : {&gens.rotation, &gens.n1, &gens.n2})
      d = std::max(d, max_abs(Eigen::Vector4d(covering_map_lie(*x) * base)));
    for (int k = 0; k < n; ++k) {
      double t = rng.uniform(-2.0, 2.0);
      const cplx i(0.0, 1.0);
      Matrix2c rot{{std::exp(i * t / 2.0), 0.0}, {0.0, std::exp(-i * t / 2.0)}};
      Matrix2c n1{{1.0, t}, {0.0, 1.0}};
      Matrix2c n2{{1.0, i * t}, {0.0, 1.0}};
      d = std::max(d, max_abs(Matrix2c(exp_lie(SL2CLieElement(Matrix2c(t * gens.rotation.matrix()))).matrix() - rot)));
      d = std::max(d, max_abs(Matrix2c(exp_lie(SL2CLieElement(Matrix2c(t * gens.n1.matrix()))).matrix() - n1)));
      d = std::max(d, max_abs(Matrix2c(exp_lie(SL2CLieElement(Matrix2c(t * gens.n2.matrix()))).matrix() - n2)));
    }
    return d;
  });

  ctx.check("group.little_group_law", anchor::kStabilizerMatrices, tol, n, [&] {
    double d = 0.0;
    for (int k = 0; k < n; ++k) {
      LittleGroupElement e1 = rng.little_group(2.0), e2 = rng.little_group(2.0);
      d = std::max(d, max_abs(Matrix2c(little_group_embed(little_group_compose(e1, e2)).matrix() -
                                       little_group_embed(e1).matrix() * little_group_embed(e2).matrix())));
      LittleGroupElement back = little_group_from(little_group_embed(e1));
      d = std::max(d, std::max(std::abs(back.z - e1.z), std::abs(back.a - e1.a)));
    }
    return d;
  });

  ctx.check("group.little_group_stabilizer", anchor::kStabilizer, tol, n, [&] {
    double d = 0.0;
    for (int k = 0; k < n; ++k) {
      SL2CElement m = little_group_embed(rng.little_group(2.0));
      d = std::max(d, vec_dist(covering_map(m).apply(base_momentum()), base_momentum()));
    }
    return d;
  });
}

void run_clifford_suite(SuiteContext& ctx) {
  const int n = std::max(50, ctx.cfg.samples / 2);
  const double tol = ctx.cfg.tol_exact;
  const double tol_fd = 100.0 * tol;
  Sampler& rng = ctx.rng;
  const GammaRep& g = build_gamma();
  const Matrix4c id = Matrix4c::Identity();

  ctx.check("clifford.gamma_square", anchor::kSquare, 0.0, 4, [&] {
    double d = 0.0;
    for (int r = 0; r < 4; ++r) d = std::max(d, max_abs(Matrix4c(g.gamma[r] * g.gamma[r] - double(g.epsilon[r]) * id)));
    return d;
  });

  ctx.check("clifford.gamma_anticommute", anchor::kAnticommute, 0.0, 6, [&] {
    double d = 0.0;
    for (int r = 0; r < 4; ++r)
      for (int s = r + 1; s < 4; ++s)
        d = std::max(d, max_abs(Matrix4c(g.gamma[r] * g.gamma[s] + g.gamma[s] * g.gamma[r])));
    return d;
  });

  ctx.check("clifford.chirality_block", anchor::kGammaBlock, 0.0, 1, [&] {
    Matrix4c block = Matrix4c::Zero();
    block.diagonal() << 1.0, 1.0, -1.0, -1.0;
    const cplx i(0.0, 1.0);
    Matrix4c prod = i * g.gamma[0] * g.gamma[1] * g.gamma[2] * g.gamma[3];
    return std::max({max_abs(Matrix4c(prod - block)), max_abs(Matrix4c(g.chirality - block)),
                     max_abs(Matrix4c(g.chirality * g.chirality - id))});
  });

  ctx.check("clifford.chirality_anticommute", anchor::kChirality, 0.0, 4, [&] {
    double d = 0.0;
    for (int r = 0; r < 4; ++r) d = std::max(d, max_abs(Matrix4c(g.chirality * g.gamma[r] + g.gamma[r] * g.chirality)));
    return d;
  });

  ctx.check("clifford.spin_rep", anchor::kSpinRep, tol, n, [&] {
    double d = 0.0;
    for (int k = 0; k < n; ++k) {
      SL2CElement a = rng.sl2c(1.0), b = rng.sl2c(1.0);
      d = std::max(d, max_abs(Matrix4c(spin_rep(a * b) - spin_rep(a) * spin_rep(b))));
      Matrix4c s = spin_rep(a);
      d = std::max(d, max_abs(Matrix4c(s * g.chirality - g.chirality * s)));
    }
    return d;
  });

  ctx.check("clifford.intertwining", anchor::kIntertwine, tol, n, [&] {
    double d = 0.0;
    for (int k = 0; k < n; ++k) {
      SL2CElement m = rng.sl2c(1.0);
      Matrix4c s = spin_rep(m), si = spin_rep(m.inverse());
      Eigen::Matrix4d l = covering_map(m).matrix();
      for (int r = 0; r < 4; ++r) {
        Matrix4c rhs = Matrix4c::Zero();
        for (int q = 0; q < 4; ++q) rhs += l(r, q) * g.gamma[q];
        d = std::max(d, max_abs(Matrix4c(si * g.gamma[r] * s - rhs)));
      }
    }
    return d;
  });

  // delta'(X) by central differences of the covering map along exp(tX)
  auto fd_cover = [](const SL2CLieElement& x) {
    const double h = 1e-5;
    Eigen::Matrix4d plus = covering_map(exp_lie(SL2CLieElement(Matrix2c(h * x.matrix())))).matrix();
    Eigen::Matrix4d minus = covering_map(exp_lie(SL2CLieElement(Matrix2c(-h * x.matrix())))).matrix();
    return Eigen::Matrix4d((plus - minus) / (2.0 * h));
  };

  ctx.check("clifford.lie_commutator", anchor::kLieCommutator, tol_fd, n, [&] {
    double d = 0.0;
    for (int k = 0; k < n; ++k) {
      SL2CLieElement x = rng.lie(0.5);
      Matrix4c sx = spin_rep_lie(x);
      Eigen::Matrix4d dl = fd_cover(x);
      for (int r = 0; r < 4; ++r) {
        Matrix4c rhs = Matrix4c::Zero();
        for (int q = 0; q < 4; ++q) rhs -= dl(r, q) * g.gamma[q];
        d = std::max(d, max_abs(Matrix4c(sx * g.gamma[r] - g.gamma[r] * sx - rhs)));
      }
    }
    return d;
  });

  ctx.check("clifford.lie_derivative", anchor::kLieForm, tol_fd, n, [&] {
    const double h = 1e-5;
    double d = 0.0;
    for (int k = 0; k < n; ++k) {
      SL2CLieElement x = rng.lie(0.5);
      Matrix4c plus = spin_rep(exp_lie(SL2CLieElement(Matrix2c(h * x.matrix()))));
      Matrix4c minus = spin_rep(exp_lie(SL2CLieElement(Matrix2c(-h * x.matrix()))));
      d = std::max(d, max_abs(Matrix4c((plus - minus) / (2.0 * h) - spin_rep_lie(x))));
      d = std::max(d, max_abs(Eigen::Matrix4d(fd_cover(x) - covering_map_lie(x))));
    }
    return d;
  });

  ctx.constants["spin_lie_form"] = "diag(X, -X^*)";
  ctx.constants["slash_convention"] = "sum_r p_r gamma_r, gamma_0 = [[0,I],[I,0]], gamma_k = [[0,-s_k],[s_k,0]]";
}

void run_fiber_suite(SuiteContext& ctx) {
  const int n = std::max(50, ctx.cfg.samples / 2);
  const double tol = ctx.cfg.tol_exact;
  Sampler& rng = ctx.rng;
  const GammaRep& gam = build_gamma();

  std::vector<FourVector> points{base_momentum(), {2.0, 0.0, 0.0, -2.0}, {1.0, 1.0, 0.0, 0.0}};
  while (static_cast<int>(points.size()) < n) points.push_back(rng.cone_point(0.05, 20.0));

  ctx.check("fiber.nullity_unprojected", anchor::kDirac, 0.0, n, [&] {
    double d = 0.0;
    for (const auto& p : points) d = std::max(d, std::abs(nullity(slash(p) / p[0]) - 2.0));
    return d;
  });

  ctx.check("fiber.nullity_projected", anchor::kHelicity, 0.0, n, [&] {
    Eigen::MatrixXcd plus = Eigen::MatrixXcd::Identity(4, 4).leftCols(2);
    Eigen::MatrixXcd minus = Eigen::MatrixXcd::Identity(4, 4).rightCols(2);
    double d = 0.0;
    for (const auto& p : points) {
      Eigen::MatrixXcd s = slash(p) / p[0];
      d = std::max(d, std::abs(nullity(s * plus) - 1.0));
      d = std::max(d, std::abs(nullity(s * minus) - 1.0));
    }
    return d;
  });

  ctx.check("fiber.kernel_basis", anchor::kFiberSpace, tol, n, [&] {
    double d = 0.0;
    for (const auto& p : points) {
      FiberBasis fb = fiber_kernel(p);
      if (fb.basis.size() != 2) return std::numeric_limits<double>::infinity();
      Matrix4c s = slash(p);
      for (std::size_t a = 0; a < 2; ++a) {
        d = std::max(d, (s * fb.basis[a]).norm() / p[0]);
        for (std::size_t b = 0; b < 2; ++b)
          d = std::max(d, std::abs(fb.basis[a].dot(fb.basis[b]) - (a == b ? 1.0 : 0.0)));
      }
    }
    return d;
  });

  ctx.check("fiber.helicity_fibers", anchor::kHelicityBundle, tol, n, [&] {
    double d = 0.0;
    for (const auto& p : points)
      for (int hel : {1, -1}) {
        SpinorVector v = fiber_vector(p, hel);
        d = std::max(d, (gam.chirality * v - double(hel) * v).norm());
        d = std::max(d, (slash(p) * v).norm() / p[0]);
        d = std::max(d, std::abs(v.norm() - 1.0));
      }
    return d;
  });

  const std::array<double, 4> masses{1.0, 0.1, 0.01, 0.001};

  ctx.check("fiber.massive_formula", anchor::kMassive, tol, 4, [&] {
    double d = 0.0;
    for (double m : masses) {
      MassiveFiber f = fiber_basis_massive(m);
      double s = std::sqrt(1.0 + m * m);
      SpinorVector v1(m / 2.0, 0.0, (1.0 + s) / 2.0, 0.0), v2(0.0, (1.0 + s) / 2.0, 0.0, m / 2.0);
      d = std::max({d, (f.v1 - v1).norm(), (f.v2 - v2).norm(), vec_dist(f.p, FourVector(s, 1.0, 0.0, 0.0))});
    }
    return d;
  });

  // ||v(m) - limit|| <= C m with C = 1
  ctx.check("fiber.massive_limit", anchor::kMassive, 1.0, 4, [&] {
    SpinorVector e2(0.0, 1.0, 0.0, 0.0), e3(0.0, 0.0, 1.0, 0.0);
    double ratio = 0.0;
    for (double m : masses) {
      MassiveFiber f = fiber_basis_massive(m);
      ratio = std::max(ratio, std::max((f.v1 - e3).norm(), (f.v2 - e2).norm()) / m);
    }
    return ratio;
  });

  // The vectors solve slash(p) v = m v at the z-aligned momentum.
  ctx.check("fiber.massive_constraint", anchor::kMassive, tol, 4, [&] {
    double d = 0.0, literal = 0.0;
    for (double m : masses) {
      MassiveFiber f = fiber_basis_massive(m);
      FourVector pz(std::sqrt(1.0 + m * m), 0.0, 0.0, 1.0);
      for (const auto& v : {f.v1, f.v2}) {
        d = std::max(d, (slash(pz) * v - m * v).norm());
        literal = std::max(literal, (slash(f.p) * v - m * v).norm());
      }
    }
    ctx.constants["massive_fiber"] = {{"satisfied_at", "(sqrt(1 + m^2), 0, 0, 1)"},
                                      {"residual_at_returned_momentum", literal}};
    return d;
  });

  ctx.check("fiber.invariant_form", anchor::kInvariantForm, 100.0 * tol, n, [&] {
    double d = 0.0;
    for (int k = 0; k < n; ++k) {
      FourVector p = rng.cone_point(0.1, 5.0);
      int hel = k % 2 == 0 ? 1 : -1;
      SpinorVector v = rng.unit_complex() * rng.uniform(0.5, 2.0) * fiber_vector(p, hel);
      BundlePoint out = bundle_action(rng.sl2c(1.0), p, v);
      d = std::max(d, std::abs(invariant_form(out.p, out.v) - invariant_form(p, v)));
    }
    return d;
  });

  ctx.check("fiber.bundle_action", anchor::kBundle, tol, n, [&] {
    double d = 0.0;
    for (int k = 0; k < n; ++k) {
      FourVector p = rng.cone_point(0.1, 5.0);
      int hel = k % 2 == 0 ? 1 : -1;
      SpinorVector v = fiber_vector(p, hel);
      SL2CElement h1 = rng.sl2c(1.0), h2 = rng.sl2c(1.0);
      BundlePoint once = bundle_action(h1 * h2, p, v);
      BundlePoint twice = bundle_action(h1, bundle_action(h2, p, v).p, bundle_action(h2, p, v).v);
      d = std::max({d, vec_dist(once.p, twice.p), (once.v - twice.v).norm()});
      d = std::max(d, (slash(once.p) * once.v).norm() / once.p[0]);
      d = std::max(d, (gam.chirality * once.v - double(hel) * once.v).norm());
    }
    ctx.constants["composition_order"] = "left action: (p,v)^{h1 h2} = ((p,v)^{h2})^{h1}";
    return d;
  });

  ctx.check("fiber.little_group_character", anchor::kStabilizerMatrices, tol, n, [&] {
    double d = 0.0;
    double minus_power[2] = {0.0, 0.0}, plus_power[2] = {0.0, 0.0};
    for (int k = 0; k < n; ++k) {
      LittleGroupElement e = rng.little_group(2.0);
      for (int idx = 0; idx < 2; ++idx) {
        int hel = idx == 0 ? 1 : -1;
        SpinorVector v = fiber_vector(base_momentum(), hel);
        BundlePoint out = bundle_action(little_group_embed(e), base_momentum(), v);
        cplx chi = fiber_character(hel)(e)(0, 0);
        d = std::max({d, (out.v - chi * v).norm(), vec_dist(out.p, base_momentum())});
        minus_power[idx] = std::max(minus_power[idx], (out.v - v / e.z).norm());
        plus_power[idx] = std::max(plus_power[idx], (out.v - e.z * v).norm());
      }
    }
    auto pick = [&](int idx) { return minus_power[idx] < plus_power[idx] ? "z^-1" : "z^+1"; };
    ctx.constants["helicity_pairing"] = {{"chirality +1", pick(0)}, {"chirality -1", pick(1)}};
    return d;
  });
}

void run_measure_suite(SuiteContext& ctx) {
  const SuiteConfig& cfg = ctx.cfg;
  const double tol_q = cfg.tol_quadrature;
  const double tol_e = cfg.tol_exact;
  Sampler& rng = ctx.rng;

  const Density gate = cfg.density == DensitySelection::Printed ? Density::Printed : Density::Standard;
  GridParams gp = cfg.grid;
  gp.density = gate;
  const OrbitGrid grid = build_grid(gp);

  auto random_term = [&](int hel_seed) {
    SectionBasisFunction f;
    f.amplitude = rng.unit_complex() * rng.uniform(0.5, 1.5);
    auto c = rng.unit_vector();
    double rc = rng.uniform(0.0, 1.0);
    f.center = {rc * c[0], rc * c[1], rc * c[2]};
    f.width = rng.uniform(0.6, 1.0);
    f.monomial = {hel_seed % 2, 0, (hel_seed / 2) % 2};
    return f;
  };

  // pushforward under both densities; the gate uses the selected one
  std::vector<SectionBasisFunction> push_fns;
  for (int k = 0; k < 3; ++k) push_fns.push_back(random_term(k));
  std::vector<SL2CElement> push_group;
  for (int k = 0; k < 8; ++k) push_group.push_back(k % 2 == 0 ? rng.boost_element(1.0) : rng.sl2c(1.0));
  push_group.push_back(boost({0.0, 0.0, 1.0}, 1.0));
  auto worst_push = [&](Density d) {
    double w = 0.0;
    for (const auto& h : push_group)
      for (const auto& f : push_fns) w = std::max(w, pushforward_check(h, f, grid, d));
    return w;
  };
  const int push_samples = static_cast<int>(push_group.size() * push_fns.size());

  double std_disc = 0.0, printed_disc = 0.0;
  ctx.check(gate == Density::Standard ? "measure.pushforward_standard" : "measure.pushforward_printed",
            gate == Density::Standard ? anchor::kInvariantMeasure : anchor::kPrintedMeasure, tol_q, push_samples,
            [&] {
              std_disc = worst_push(Density::Standard);
              printed_disc = worst_push(Density::Printed);
              return gate == Density::Standard ? std_disc : printed_disc;
            });
  ctx.constants["density"] = {{"standard_pushforward", std_disc},
                              {"printed_pushforward", printed_disc},
                              {"winner", std_disc <= printed_disc ? "standard" : "printed"},
                              {"gate", to_string(gate)}};

  // int p0 exp(-|p|^2/2) d^3p / (2|p|) = 2 pi sqrt(pi / 2)
  ctx.check("measure.reference_integral", anchor::kInvariantMeasure, 1e-2 * tol_q, 1, [&] {
    GridParams sp = cfg.grid;
    sp.density = Density::Standard;
    OrbitGrid g = sp.density == gate ? grid : build_grid(sp);
    SectionBasisFunction f;
    std::complex<double> v = grid_sum(g, g.weights, [&](std::size_t i) { return f(g.nodes[i]); });
    return std::abs(v - 2.0 * std::numbers::pi * std::sqrt(std::numbers::pi / 2.0));
  });

  ctx.check("measure.self_convergence", anchor::kInvariantMeasure, 1e-2 * tol_q, 1, [&] {
    GridParams fine = gp;
    fine.radial_order *= 2;
    fine.polar_order *= 2;
    fine.azimuthal_order *= 2;
    OrbitGrid g2 = build_grid(fine);
    const auto& f = push_fns[0];
    SL2CElement h = push_group.back();
    Eigen::Matrix4d inv = covering_map(h.inverse()).matrix();
    auto integral = [&](const OrbitGrid& g) {
      return grid_sum(g, g.weights,
                      [&](std::size_t i) { return f(FourVector(Eigen::Vector4d(inv * g.nodes[i].to_eigen()))); });
    };
    return std::abs(integral(grid) - integral(g2));
  });

  std::vector<SpinorSection> plus, minus;
  for (int k = 0; k < 2; ++k) {
    plus.push_back(SpinorSection::from_basis({random_term(k), random_term(k + 1)}, 1));
    minus.push_back(SpinorSection::from_basis({random_term(k + 2), random_term(k)}, -1));
  }
  auto suite_pair = [&](int k) -> std::pair<const SpinorSection&, const SpinorSection&> {
    const auto& family = k % 2 == 0 ? plus : minus;
    return {family[0], family[1]};
  };

  ctx.check("measure.inner_product", anchor::kSectionNorm, tol_e, 4, [&] {
    double d = 0.0;
    for (int k = 0; k < 2; ++k) {
      auto [f, g] = suite_pair(k);
      d = std::max(d, std::abs(section_inner_product(f, g, grid) - std::conj(section_inner_product(g, f, grid))));
      d = std::max(d, std::max(0.0, -section_inner_product(f, f, grid).real()));
    }
    return d;
  });

  const int n_pairs = 50;
  ctx.check("measure.induced_unitarity", anchor::kInduced, tol_q, n_pairs, [&] {
    double d = 0.0;
    for (int k = 0; k < n_pairs; ++k) {
      auto [f, g] = suite_pair(k);
      PoincareElement e = rng.poincare(1.0, 1.0);
      d = std::max(d, std::abs(section_inner_product(apply_induced(e, f), apply_induced(e, g), grid) -
                               section_inner_product(f, g, grid)));
    }
    return d;
  });

  ctx.check("measure.induced_homomorphism", anchor::kInduced, tol_q, n_pairs, [&] {
    double d = 0.0;
    for (int k = 0; k < n_pairs; ++k) {
      const SpinorSection& f = suite_pair(k).first;
      PoincareElement a = rng.poincare(0.5, 1.0), b = rng.poincare(0.5, 1.0);
      d = std::max(d, section_norm(apply_induced(a, apply_induced(b, f)) - apply_induced(poincare_multiply(a, b), f),
                                   grid));
    }
    return d;
  });

  ctx.check("measure.induced_translation", anchor::kInduced, tol_e, 200, [&] {
    double d = 0.0;
    const SpinorSection& f = plus[0];
    SpinorSection same = apply_induced(PoincareElement::identity(), f);
    SpinorSection moved = apply_induced(PoincareElement::translation(rng.four_vector(3.0)), f);
    for (int k = 0; k < 200; ++k) {
      FourVector p = rng.cone_point(0.05, 5.0);
      d = std::max(d, std::abs(same.coefficient(p) - f.coefficient(p)));
      d = std::max(d, std::abs(std::abs(moved.coefficient(p)) - std::abs(f.coefficient(p))));
    }
    return d;
  });

  ctx.check("measure.section_gauge", anchor::kInduced, tol_e, 200, [&] {
    double d = 0.0;
    const SpinorSection& f = plus[0];
    for (SectionChoice choice : {SectionChoice::BoostThenRotation, SectionChoice::RotationThenBoost}) {
      auto theta = [choice](const FourVector& p) {
        return fiber_vector(p, 1).dot(section_fiber_vector(p, 1, choice));
      };
      SpinorSection f_sec([f, theta](const FourVector& p) { return f.coefficient(p) * std::conj(theta(p)); }, 1);
      PoincareElement g = rng.poincare(1.0, 1.0);
      SpinorSection canon = apply_induced(g, f);
      SpinorSection gauged = apply_induced_section_gauge(g, f_sec, choice);
      for (int k = 0; k < 100; ++k) {
        FourVector p = rng.cone_point(0.05, 5.0);
        d = std::max(d, std::abs(gauged.coefficient(p) - canon.coefficient(p) * std::conj(theta(p))));
        d = std::max(d, std::abs(std::abs(theta(p)) - 1.0));
      }
    }
    return d;
  });

  const double tol_pvm = 1e-2 * tol_e;
  RegionIndicator box_a(std::vector<RegionIndicator::Box>{{{-1.0, 0.0, -0.5}, {1.0, 2.0, 1.5}}});
  RegionIndicator box_b(std::vector<RegionIndicator::Box>{{{0.5, -1.0, -1.0}, {2.5, 1.0, 0.7}}});
  RegionIndicator box_c(std::vector<RegionIndicator::Box>{{{-2.0, -2.0, -3.0}, {-0.5, 0.0, 0.0}}});

  ctx.check("measure.pvm_axioms", anchor::kPosition, tol_pvm, 8, [&] {
    double d = 0.0;
    for (int k = 0; k < 2; ++k) {
      auto [f, g] = suite_pair(k);
      SpinorSection pa = position_pvm_apply(box_a, f);
      d = std::max(d, section_norm(position_pvm_apply(box_a, pa) - pa, grid));
      d = std::max(d, std::abs(section_inner_product(pa, g, grid) -
                               section_inner_product(f, position_pvm_apply(box_a, g), grid)));
      d = std::max(d, section_norm(position_pvm_apply(box_b, pa) - position_pvm_apply(box_a.intersect(box_b), f), grid));
      SpinorSection both = position_pvm_apply(box_a.unite(box_c), f);
      SpinorSection sum([pa, pc = position_pvm_apply(box_c, f)](const FourVector& p) {
        return pa.coefficient(p) + pc.coefficient(p);
      }, f.helicity());
      d = std::max(d, section_norm(both - sum, grid));
      d = std::max(d, section_norm(position_pvm_apply(RegionIndicator::everything(), f) - f, grid));
      d = std::max(d, section_norm(position_pvm_apply(RegionIndicator::empty(), f), grid));
    }
    return d;
  });

  std::vector<PoincareElement> transforms{PoincareElement::identity(),
                                          PoincareElement::translation(rng.four_vector(2.0)),
                                          PoincareElement::lorentz(rotation({0.0, 0.0, 1.0}, std::numbers::pi / 2.0)),
                                          PoincareElement::lorentz(rotation({1.0, 0.0, 0.0}, std::numbers::pi / 2.0)),
                                          PoincareElement{rotation({0.0, 1.0, 0.0}, std::numbers::pi),
                                                          rng.four_vector(1.0)},
                                          PoincareElement::lorentz(boost({0.0, 0.0, 1.0}, 0.7)),
                                          rng.poincare(1.0, 1.0)};
  std::vector<RegionIndicator> regions{box_a, box_b.unite(box_c)};
  auto imprimitivity = [&](std::optional<SectionChoice> gauge) {
    double d = 0.0;
    for (const auto& g : transforms)
      for (const auto& r : regions)
        for (int k = 0; k < 2; ++k) d = std::max(d, imprimitivity_check(g, r, suite_pair(k).first, grid, gauge));
    return d;
  };
  const int si_samples = static_cast<int>(transforms.size() * regions.size() * 2);

  ctx.check("measure.imprimitivity", anchor::kImprimitivity, tol_q, si_samples, [&] { return imprimitivity(std::nullopt); });
  ctx.check("measure.imprimitivity_sections", anchor::kImprimitivity, tol_q, 2 * si_samples, [&] {
    return std::max(imprimitivity(SectionChoice::BoostThenRotation), imprimitivity(SectionChoice::RotationThenBoost));
  });

  ctx.check("measure.borel_section", anchor::kBorel, tol_e, cfg.samples, [&] {
    double d = 0.0;
    for (SectionChoice choice : {SectionChoice::BoostThenRotation, SectionChoice::RotationThenBoost}) {
      d = std::max(d, max_abs(Matrix2c(borel_section_c(base_momentum(), choice).h.matrix() - Matrix2c::Identity())));
      std::vector<FourVector> xs{{2.0, 0.0, 0.0, 2.0}, {1.0, 1.0, 0.0, 0.0}, {3.0, 0.0, 0.0, -3.0}};
      for (int k = 0; k < cfg.samples; ++k) xs.push_back(rng.cone_point(0.05, 20.0));
      for (const auto& x : xs) {
        FourVector y = covering_map(borel_section_c(x, choice).h).apply(base_momentum());
        d = std::max(d, vec_dist(x, y) / std::max(1.0, x[0]));
      }
    }
    return d;
  });

  // payloads: the two fiber characters and Gamma(U) of the little-group cocycle
  FockSpace lg_space(2, cfg.fock_N);
  FirstOrderCocycle<LittleGroupElement> lg_cocycle = little_group_cocycle(rng.complex_vector(1, 0.3));
  std::vector<std::pair<std::string, LittleGroupPayload>> payloads{
      {"character+", fiber_character(1)},
      {"character-", fiber_character(-1)},
      {"second_quantized", [lg_cocycle, lg_space](const LittleGroupElement& e) {
         return Eigen::MatrixXcd(second_quantize(lg_cocycle.U(e), lg_space));
       }}};
  std::vector<LittleGroupElement> lg_samples;
  for (int k = 0; k < 40; ++k) lg_samples.push_back(rng.little_group(1.0));

  const int n_cocycle = 30;
  ctx.check("measure.cocycle_b", anchor::kCocycleB, tol_e, n_cocycle * 3, [&] {
    double d = 0.0;
    for (const auto& [name, m] : payloads) {
      for (SectionChoice choice : {SectionChoice::BoostThenRotation, SectionChoice::RotationThenBoost}) {
        CocyclePair pair = build_cocycle_pair(m, lg_samples, choice, tol_e);
        Eigen::MatrixXcd one = pair.b(PoincareElement::identity());
        d = std::max(d, max_abs(Eigen::MatrixXcd(one - Eigen::MatrixXcd::Identity(one.rows(), one.cols()))));
        for (int k = 0; k < n_cocycle; ++k) {
          PoincareElement g = rng.poincare(1.0, 1.0);
          LittleGroupElement e = rng.little_group(1.0);
          PoincareElement h = PoincareElement::lorentz(little_group_embed(e));
          d = std::max(d, max_abs(Eigen::MatrixXcd(pair.b(poincare_multiply(g, h)) - pair.b(g) * m(e))));
        }
      }
    }
    return d;
  });

  ctx.check("measure.cocycle_f", anchor::kCocycleF, tol_e, n_cocycle * 3, [&] {
    double d = 0.0;
    for (const auto& [name, m] : payloads) {
      CocyclePair pair = build_cocycle_pair(m, lg_samples, SectionChoice::BoostThenRotation, tol_e);
      for (int k = 0; k < n_cocycle; ++k) {
        PoincareElement g1 = rng.poincare(0.5, 1.0), g2 = rng.poincare(0.5, 1.0), g3 = rng.poincare(0.5, 1.0);
        Eigen::MatrixXcd lhs = pair.f(poincare_multiply(g1, g2), g3);
        Eigen::MatrixXcd rhs = pair.f(g1, poincare_multiply(g2, g3)) * pair.f(g2, g3);
        d = std::max(d, max_abs(Eigen::MatrixXcd(lhs - rhs)));
        Eigen::MatrixXcd direct = pair.b(poincare_multiply(g1, g2)) * pair.b(g2).inverse();
        d = std::max(d, max_abs(Eigen::MatrixXcd(pair.f(g1, g2) - direct)));
      }
    }
    return d;
  });

  // the full Weyl payload W(v(e), U_e) is only projective and must be refused
  ctx.check("measure.projective_payload_rejected", anchor::kCocycleB, 0.0, 1, [&] {
    FockSpace space(2, cfg.fock_relation_N);
    LittleGroupPayload weyl = [lg_cocycle, space](const LittleGroupElement& e) {
      return Eigen::MatrixXcd(weyl_operator(WeylData(lg_cocycle.v(e), lg_cocycle.U(e)), space).matrix);
    };
    std::vector<LittleGroupElement> few(lg_samples.begin(), lg_samples.begin() + 6);
    try {
      build_cocycle_pair(weyl, few, SectionChoice::BoostThenRotation, tol_e);
    } catch (const std::invalid_argument&) {
      return 0.0;
    }
    return 1.0;
  });

  ctx.check("measure.first_order_cocycle", anchor::kFirstOrder, 1e-2 * tol_e, 2 * cfg.samples, [&] {
    double d = 0.0;
    for (int k = 0; k < cfg.samples; ++k) {
      LittleGroupElement e1 = rng.little_group(1.0), e2 = rng.little_group(1.0);
      Eigen::VectorXcd lhs = lg_cocycle.v(little_group_compose(e1, e2));
      Eigen::VectorXcd rhs = lg_cocycle.v(e1) + lg_cocycle.U(e1) * lg_cocycle.v(e2);
      d = std::max(d, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    return d;
  });

  ctx.check("measure.time_cocycle", anchor::kTimeCocycle, 1e-2 * tol_e, cfg.samples, [&] {
    CocycleBlocks blocks{rng.complex_vector(1, 0.3), {rng.complex_vector(2, 0.3), rng.complex_vector(1, 0.2)},
                         {rng.uniform(0.5, 2.0), rng.uniform(-2.0, -0.5)}};
    FirstOrderCocycle<double> c = time_cocycle(blocks);
    double d = c.v(0.0).cwiseAbs().maxCoeff();
    for (int k = 0; k < cfg.samples; ++k) {
      double t = rng.uniform(-2.0, 2.0), s = rng.uniform(-2.0, 2.0);
      d = std::max(d, (c.v(t + s) - c.v(t) - c.U(t) * c.v(s)).cwiseAbs().maxCoeff());
    }
    return d;
  });
}

void run_fock_suite(SuiteContext& ctx) {
  const SuiteConfig& cfg = ctx.cfg;
  const double tol = cfg.tol_exact;
  const double tol_rel = 100.0 * tol;
  Sampler& rng = ctx.rng;
  const FockSpace space(cfg.fock_n, cfg.fock_N);
  const FockSpace rel_space(cfg.fock_n, cfg.fock_relation_N);
  const int n = std::max(20, cfg.samples / 5);
  std::vector<Eigen::Index> all_rows(static_cast<std::size_t>(space.dimension()));
  for (Eigen::Index i = 0; i < space.dimension(); ++i) all_rows[static_cast<std::size_t>(i)] = i;

  ctx.check("fock.exponential_overlap", anchor::kExponential, tol, n, [&] {
    double d = 0.0;
    for (int k = 0; k < n; ++k) {
      Eigen::VectorXcd f = rng.complex_vector(cfg.fock_n, rng.uniform(0.0, 0.5));
      Eigen::VectorXcd g = rng.complex_vector(cfg.fock_n, rng.uniform(0.0, 0.5));
      d = std::max(d, std::abs(exponential_vector(f, space).dot(exponential_vector(g, space)) -
                               std::exp(one_particle_inner(f, g))));
    }
    return d;
  });

  ctx.check("fock.ccr", anchor::kFock, tol, n, [&] {
    double d = 0.0;
    std::vector<Eigen::Index> cols = space.interior(cfg.fock_N - 1);
    for (int k = 0; k < n; ++k) {
      Eigen::VectorXcd f = rng.complex_vector(cfg.fock_n, 1.0), g = rng.complex_vector(cfg.fock_n, 1.0);
      FockOperator c = annihilate(f, space) * create(g, space) - create(g, space) * annihilate(f, space);
      FockOperator target = one_particle_inner(f, g) * FockOperator::Identity(space.dimension(), space.dimension());
      d = std::max(d, block_max_abs(c, target, all_rows, cols));
      FockOperator aa = annihilate(f, space) * annihilate(g, space) - annihilate(g, space) * annihilate(f, space);
      d = std::max(d, max_abs(aa));
    }
    return d;
  });

  ctx.check("fock.second_quantization", anchor::kSecondQuant, tol, n, [&] {
    double d = 0.0;
    const Eigen::Index dim = space.dimension();
    for (int k = 0; k < n; ++k) {
      Eigen::MatrixXcd u1 = rng.unitary(cfg.fock_n), u2 = rng.unitary(cfg.fock_n);
      FockOperator g1 = second_quantize(u1, space), g2 = second_quantize(u2, space);
      d = std::max(d, max_abs(FockOperator(second_quantize(u1 * u2, space) - g1 * g2)));
      d = std::max(d, max_abs(FockOperator(g1.adjoint() * g1 - FockOperator::Identity(dim, dim))));
      Eigen::VectorXcd f = rng.complex_vector(cfg.fock_n, 1.0);
      d = std::max(d, max_abs(FockOperator(g1 * create(f, space) * g1.adjoint() - create(u1 * f, space))));
    }
    return d;
  });

  ctx.check("fock.vacuum_characteristic", anchor::kWeyl, tol, n, [&] {
    double d = 0.0;
    for (int k = 0; k < n; ++k) {
      Eigen::VectorXcd v = rng.complex_vector(cfg.fock_n, rng.uniform(0.0, 0.5));
      FockOperator w = weyl_operator(WeylData::displacement(v), space).matrix;
      d = std::max(d, std::abs(w(0, 0) - std::exp(-0.5 * v.squaredNorm())));
    }
    return d;
  });

  ctx.check("fock.weyl_routes", anchor::kWeyl, tol, 4, [&] {
    double d = 0.0;
    for (int k = 0; k < 4; ++k) {
      WeylData w = WeylData::displacement(rng.complex_vector(cfg.fock_n, 0.5));
      d = std::max(d, max_abs(FockOperator(weyl_operator(w, space, WeylRoute::Factorized).matrix -
                                           weyl_operator(w, space, WeylRoute::DenseGenerator).matrix)));
    }
    return d;
  });

  // W^* W - I on the columns with at most two quanta shrinks as N grows
  ctx.check("fock.unitarity_trend", anchor::kWeyl, 0.0, 4, [&] {
    WeylData w = WeylData::displacement(rng.complex_vector(1, 1.0));
    double prev = std::numeric_limits<double>::infinity(), worst = 0.0;
    nlohmann::json trend = nlohmann::json::array();
    for (int level : {4, 6, 8, 10}) {
      FockSpace s(1, level);
      WeylOperator op = weyl_operator(w, s);
      std::vector<Eigen::Index> rows(static_cast<std::size_t>(s.dimension()));
      for (Eigen::Index i = 0; i < s.dimension(); ++i) rows[static_cast<std::size_t>(i)] = i;
      FockOperator gram = op.matrix.adjoint() * op.matrix;
      double defect = block_max_abs(gram, FockOperator::Identity(s.dimension(), s.dimension()), rows, s.interior(2));
      trend.push_back({{"N", level}, {"interior_defect", defect}, {"full_defect", op.unitarity_defect}});
      worst = std::max(worst, std::max(0.0, defect - prev));
      prev = defect;
    }
    ctx.constants["weyl_unitarity_defect"] = trend;
    return worst;
  });

  // payload families: random (v, U) pairs, commuting displacements, the time
  // cocycle and the little-group cocycle
  std::vector<std::pair<WeylData, WeylData>> generic, displacements;
  for (int k = 0; k < 6; ++k) {
    generic.emplace_back(WeylData(rng.complex_vector(cfg.fock_n, rng.uniform(0.1, 0.5)), rng.unitary(cfg.fock_n)),
                         WeylData(rng.complex_vector(cfg.fock_n, rng.uniform(0.1, 0.5)), rng.unitary(cfg.fock_n)));
    displacements.emplace_back(WeylData::displacement(rng.complex_vector(cfg.fock_n, rng.uniform(0.1, 0.5))),
                               WeylData::displacement(rng.complex_vector(cfg.fock_n, rng.uniform(0.1, 0.5))));
  }
  std::vector<std::pair<WeylData, WeylData>> time_pairs;
  if (cfg.fock_n >= 2) {
    CocycleBlocks blocks{rng.complex_vector(1, 0.2), {rng.complex_vector(cfg.fock_n - 1, 0.15)}, {1.3}};
    FirstOrderCocycle<double> tc = time_cocycle(blocks);
    for (int k = 0; k < 4; ++k) {
      double t = rng.uniform(-1.0, 1.0), s = rng.uniform(-1.0, 1.0);
      time_pairs.emplace_back(WeylData(tc.v(t), tc.U(t)), WeylData(tc.v(s), tc.U(s)));
    }
  }
  std::vector<std::pair<WeylData, WeylData>> lg_pairs;
  {
    FirstOrderCocycle<LittleGroupElement> lc = little_group_cocycle(rng.complex_vector(cfg.fock_n - 1 > 0 ? cfg.fock_n - 1 : 1, 0.1));
    if (lc.U(LittleGroupElement()).rows() == cfg.fock_n) {
      for (int k = 0; k < 4; ++k) {
        LittleGroupElement a = rng.little_group(0.3), b = rng.little_group(0.3);
        lg_pairs.emplace_back(WeylData(lc.v(a), lc.U(a)), WeylData(lc.v(b), lc.U(b)));
      }
    }
  }

  auto worst = [](const auto& pairs, const FockSpace& s, PhaseRelation rel) {
    double d = 0.0;
    for (const auto& [g, h] : pairs) d = std::max(d, phase_relation_defect(g, h, s, 2, rel));
    return d;
  };

  ctx.check("fock.weyl_multiplier", anchor::kWeyl, tol_rel,
            static_cast<int>(generic.size() + time_pairs.size() + lg_pairs.size()), [&] {
              return std::max({worst(generic, rel_space, PhaseRelation::Multiplier),
                               worst(time_pairs, rel_space, PhaseRelation::Multiplier),
                               worst(lg_pairs, rel_space, PhaseRelation::Multiplier)});
            });

  ctx.check("fock.weyl_commutator", anchor::kWeyl, tol_rel, static_cast<int>(displacements.size()),
            [&] { return worst(displacements, rel_space, PhaseRelation::SwapDisplacement); });

  nlohmann::json phases;
  for (const FockSpace* s : {&space, &rel_space}) {
    nlohmann::json entry;
    entry["N"] = s->max_quanta();
    entry["swap_imag_inner_displacements"] = worst(displacements, *s, PhaseRelation::SwapImagInner);
    entry["swap_imag_inner_time_cocycle"] = worst(time_pairs, *s, PhaseRelation::SwapImagInner);
    entry["swap_displacement"] = worst(displacements, *s, PhaseRelation::SwapDisplacement);
    entry["multiplier"] = std::max(worst(generic, *s, PhaseRelation::Multiplier), worst(time_pairs, *s, PhaseRelation::Multiplier));
    phases.push_back(entry);
  }
  ctx.constants["commutation"] = {
      {"relation_checked", "V_g V_h = exp(-i Im<v_g, U_g v_h>) V_gh; for U = I, V_g V_h = exp(-2i Im<v_g, v_h>) V_h V_g"},
      {"relation_refuted", "V_g V_h = exp(i Im<v_g, U_g v_h>) V_h V_g"},
      {"defects", phases}};

  const int n_dir = std::max(10, n / 2);
  std::vector<std::complex<double>> kappas;
  ctx.check("fock.field_reconciliation", anchor::kFields, cfg.tol_quadrature, n_dir, [&] {
    const std::complex<double> i(0.0, 1.0);
    double resid = 0.0;
    for (int k = 0; k < n_dir; ++k) {
      Eigen::VectorXcd g = rng.complex_vector(cfg.fock_n, rng.uniform(0.3, 1.0));
      FieldPair fp = field_operators(g, space);
      Proportionality fit = fit_proportionality(annihilate(g, space), FockOperator(0.5 * (fp.q + i * fp.p)));
      kappas.push_back(fit.kappa);
      resid = std::max(resid, fit.residual);
    }
    double spread = 0.0;
    for (const auto& kap : kappas) spread = std::max(spread, std::abs(kap - kappas.front()));
    return std::max(spread, resid);
  });
  if (!kappas.empty()) {
    Eigen::VectorXcd g = rng.complex_vector(cfg.fock_n, 0.7);
    const std::complex<double> i(0.0, 1.0);
    FockOperator p = stone_generator(g, space);
    FockOperator q_literal = stone_generator(Eigen::VectorXcd(i * g), space);
    Proportionality to_create = fit_proportionality(create(g, space), FockOperator(0.5 * (q_literal + i * p)));
    ctx.constants["kappa"] = {{"re", kappas.front().real()},
                              {"im", kappas.front().imag()},
                              {"q_convention", "q(g) = -p(ig)"},
                              {"with_q_equal_p_of_ig", {{"combination_equals", "a^dagger(g)"},
                                                        {"residual", to_create.residual}}}};
  }

  ctx.check("fock.field_ccr", anchor::kStone, cfg.tol_quadrature, n_dir, [&] {
    double d = 0.0;
    std::vector<Eigen::Index> cols = space.interior(cfg.fock_N - 1);
    for (int k = 0; k < n_dir; ++k) {
      Eigen::VectorXcd g = rng.complex_vector(cfg.fock_n, 1.0);
      FieldPair fp = field_operators(g, space);
      FockOperator c = fp.p * fp.q - fp.q * fp.p;
      FockOperator target = c(0, 0) * FockOperator::Identity(space.dimension(), space.dimension());
      d = std::max(d, block_max_abs(c, target, all_rows, cols));
      d = std::max(d, std::abs(c(0, 0) + std::complex<double>(0.0, 2.0) * g.squaredNorm()));
    }
    return d;
  });
}

void run_noise_suite(SuiteContext& ctx) {
  const SuiteConfig& cfg = ctx.cfg;
  const double tol = cfg.tol_exact;
  Sampler& rng = ctx.rng;

  ctx.check("noise.chaos_gram", anchor::kChaos, cfg.tol_quadrature, 3, [&] {
    double d = 0.0;
    for (int modes = 1; modes <= 3; ++modes) {
      FockSpace s(modes, 6);
      Eigen::MatrixXcd gram = chaos_gram(s, 12);
      d = std::max(d, max_abs(Eigen::MatrixXcd(gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols()))));
    }
    return d;
  });

  ctx.check("noise.chaos_exponential", anchor::kChaos, cfg.tol_quadrature, 10, [&] {
    FockSpace s(2, 6);
    GaussianRule rule = gaussian_rule(2, 12);
    double d = 0.0;
    for (int k = 0; k < 10; ++k) {
      Eigen::VectorXcd f = rng.complex_vector(2, rng.uniform(0.0, 0.4));
      Eigen::VectorXcd g = rng.complex_vector(2, rng.uniform(0.0, 0.4));
      auto ef = chaos_map(exponential_vector(f, s, 1e-6), s);
      auto eg = chaos_map(exponential_vector(g, s, 1e-6), s);
      d = std::max(d, std::abs(gaussian_inner_product(ef, eg, rule) - std::exp(one_particle_inner(f, g))));
    }
    return d;
  });

  ctx.check("noise.chaos_first_order", anchor::kChaos, tol, 50, [&] {
    FockSpace s(3, 2);
    double d = 0.0;
    for (int i = 0; i < 3; ++i) {
      Eigen::VectorXcd e = Eigen::VectorXcd::Zero(3);
      e[i] = 1.0;
      auto h = chaos_map(FockState(create(e, s) * vacuum(s)), s);
      for (int k = 0; k < 50; ++k) {
        std::array<double, 3> x{rng.normal(), rng.normal(), rng.normal()};
        d = std::max(d, std::abs(h(x) - x[static_cast<std::size_t>(i)]));
      }
    }
    return d;
  });

  ctx.check("noise.car", anchor::kFermion, 1e-2 * tol, cfg.slots - 1, [&] {
    double d = 0.0;
    for (int s = 2; s <= cfg.slots; ++s) {
      FermionIncrements inc = fermionize(ToyFockSpace(s));
      const Eigen::Index dim = ToyFockSpace(s).dimension();
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
          const auto& bi = inc.lowering[static_cast<std::size_t>(i)];
          const auto& bj = inc.lowering[static_cast<std::size_t>(j)];
          const auto& bjd = inc.raising[static_cast<std::size_t>(j)];
          FockOperator target = (i == j ? 1.0 : 0.0) * FockOperator::Identity(dim, dim);
          d = std::max(d, max_abs(FockOperator(bi * bjd + bjd * bi - target)));
          d = std::max(d, max_abs(FockOperator(bi * bj + bj * bi)));
        }
    }
    return d;
  });

  ctx.check("noise.bosonic_reflection", anchor::kFermion, 1e-2 * tol, 1, [&] {
    const int slots = 3, cutoff = 2;
    FermionIncrements inc = reflect_bosonic(slots, cutoff);
    std::vector<Eigen::Index> keep = single_occupancy_indices(slots, cutoff);
    const auto m = static_cast<Eigen::Index>(keep.size());
    auto compress = [&](const FockOperator& a) {
      FockOperator c(m, m);
      for (Eigen::Index r = 0; r < m; ++r)
        for (Eigen::Index q = 0; q < m; ++q) c(r, q) = a(keep[static_cast<std::size_t>(r)], keep[static_cast<std::size_t>(q)]);
      return c;
    };
    double d = 0.0, full = 0.0;
    const Eigen::Index dim = inc.lowering[0].rows();
    for (int i = 0; i < slots; ++i)
      for (int j = 0; j < slots; ++j) {
        FockOperator bi = compress(inc.lowering[static_cast<std::size_t>(i)]);
        FockOperator bjd = compress(inc.raising[static_cast<std::size_t>(j)]);
        FockOperator bj = compress(inc.lowering[static_cast<std::size_t>(j)]);
        double delta = i == j ? 1.0 : 0.0;
        d = std::max(d, max_abs(FockOperator(bi * bjd + bjd * bi - delta * FockOperator::Identity(m, m))));
        d = std::max(d, max_abs(FockOperator(bi * bj + bj * bi)));
        const auto& fi = inc.lowering[static_cast<std::size_t>(i)];
        const auto& fjd = inc.raising[static_cast<std::size_t>(j)];
        full = std::max(full, max_abs(FockOperator(fi * fjd + fjd * fi - delta * FockOperator::Identity(dim, dim))));
      }
    ctx.constants["bosonic_reflection"] = {{"full_carrier_car_defect", full},
                                           {"car_holds_on", "states with at most one quantum per slot"}};
    return d;
  });

  const int n_mom = 6;
  DiracHamiltonian ham;
  for (int k = 0; k < n_mom; ++k) {
    auto p = rng.unit_vector();
    double r = rng.uniform(0.1, 4.0);
    ham.momenta.push_back({r * p[0], r * p[1], r * p[2]});
  }

  ctx.check("noise.dirac_hamiltonian", anchor::kGelfand, tol, n_mom, [&] {
    Eigen::MatrixXcd h = ham.matrix();
    Eigen::VectorXcd sq(ham.dimension());
    for (int k = 0; k < n_mom; ++k) {
      const auto& p = ham.momenta[static_cast<std::size_t>(k)];
      double r2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
      sq[2 * k] = r2;
      sq[2 * k + 1] = r2;
    }
    return std::max(max_abs(Eigen::MatrixXcd(h * h - Eigen::MatrixXcd(sq.asDiagonal()))),
                    max_abs(Eigen::MatrixXcd(h - h.adjoint())));
  });

  ctx.check("noise.weighted_norm_monotone", anchor::kGelfand, 0.0, 20, [&] {
    double d = 0.0;
    for (int k = 0; k < 20; ++k) {
      Eigen::VectorXcd f = rng.complex_vector(ham.dimension(), rng.uniform(0.1, 3.0));
      double prev = weighted_norm(f, 0, ham);
      d = std::max(d, std::abs(prev - f.norm()) > tol ? std::abs(prev - f.norm()) : 0.0);
      for (int j = 1; j <= 4; ++j) {
        double next = weighted_norm(f, j, ham);
        d = std::max(d, std::max(0.0, prev - next));
        prev = next;
      }
    }
    return d;
  });

  DiracHamiltonian small;
  small.momenta.assign(ham.momenta.begin(), ham.momenta.begin() + 2);
  std::vector<Eigen::VectorXcd> tests;
  for (int k = 0; k < 8; ++k) tests.push_back(rng.complex_vector(small.dimension(), 1.0));
  FockSpace fs(static_cast<int>(small.dimension()), 3);
  ctx.constants["white_noise_continuity_k1"] = white_noise_continuity(tests, 1, small, fs);
}

}  // namespace weylnoise::detail
