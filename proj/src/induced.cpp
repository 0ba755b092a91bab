#include "weylnoise/induced.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace weylnoise {

SpinorSection apply_induced(const PoincareElement& g, const SpinorSection& phi) {
  const Eigen::Matrix4d inv = covering_map(g.h.inverse()).matrix();
  const Matrix4c s = spin_rep(g.h.adjoint_inverse());
  const FourVector x = g.x;
  const int hel = phi.helicity();
  return SpinorSection(
      [phi, inv, s, x, hel](const FourVector& p) {
        FourVector q(Eigen::Vector4d(inv * p.to_eigen()));
        std::complex<double> wigner = fiber_vector(p, hel).dot(s * fiber_vector(q, hel));
        return character_eval(x, p) * wigner * phi.coefficient(q);
      },
      hel);
}

RegionIndicator::RegionIndicator(std::vector<Box> boxes) : boxes_(std::move(boxes)) {
  for (const auto& b : boxes_)
    for (std::size_t k = 0; k < 3; ++k)
      if (!(b.lo[k] <= b.hi[k])) throw std::invalid_argument("RegionIndicator: box with lo > hi");
}

RegionIndicator RegionIndicator::everything() {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return RegionIndicator({Box{{-inf, -inf, -inf}, {inf, inf, inf}}});
}

bool RegionIndicator::contains(const FourVector& p) const {
  std::array<double, 3> s{p[1], p[2], p[3]};
  if (pullback_) {
    Eigen::Vector4d q = *pullback_ * p.to_eigen();
    s = {q[1], q[2], q[3]};
  }
  for (const auto& b : boxes_) {
    bool inside = true;
    for (std::size_t k = 0; k < 3 && inside; ++k) inside = b.lo[k] <= s[k] && s[k] < b.hi[k];
    if (inside) return true;
  }
  return false;
}

RegionIndicator RegionIndicator::intersect(const RegionIndicator& other) const {
  if (pullback_ || other.pullback_) throw std::invalid_argument("RegionIndicator::intersect: box unions only");
  std::vector<Box> out;
  for (const auto& a : boxes_) {
    for (const auto& b : other.boxes_) {
      Box c;
      bool ok = true;
      for (std::size_t k = 0; k < 3; ++k) {
        c.lo[k] = std::max(a.lo[k], b.lo[k]);
        c.hi[k] = std::min(a.hi[k], b.hi[k]);
        ok = ok && c.lo[k] < c.hi[k];
      }
      if (ok) out.push_back(c);
    }
  }
  return RegionIndicator(std::move(out));
}

RegionIndicator RegionIndicator::unite(const RegionIndicator& other) const {
  if (pullback_ || other.pullback_) throw std::invalid_argument("RegionIndicator::unite: box unions only");
  std::vector<Box> out = boxes_;
  out.insert(out.end(), other.boxes_.begin(), other.boxes_.end());
  return RegionIndicator(std::move(out));
}

namespace {

// Spatial block as a signed permutation: perm[i] = j, sign[i] = +-1 with
// (L p)_i = sign[i] p_j. Empty when L is not of that form.
std::optional<std::pair<std::array<int, 3>, std::array<int, 3>>> signed_permutation(const Eigen::Matrix4d& l) {
  constexpr double eps = 1e-12;
  if (std::abs(l(0, 0) - 1.0) > eps) return std::nullopt;
  for (int k = 1; k < 4; ++k)
    if (std::abs(l(0, k)) > eps || std::abs(l(k, 0)) > eps) return std::nullopt;
  std::array<int, 3> perm{}, sign{};
  for (int i = 0; i < 3; ++i) {
    int found = -1;
    for (int j = 0; j < 3; ++j) {
      double v = l(i + 1, j + 1);
      if (std::abs(std::abs(v) - 1.0) <= eps) {
        if (found >= 0) return std::nullopt;
        found = j;
        sign[static_cast<std::size_t>(i)] = v > 0 ? 1 : -1;
      } else if (std::abs(v) > eps) {
        return std::nullopt;
      }
    }
    if (found < 0) return std::nullopt;
    perm[static_cast<std::size_t>(i)] = found;
  }
  return std::make_pair(perm, sign);
}

}  // namespace

RegionIndicator RegionIndicator::transformed(const LorentzMatrix& l) const {
  RegionIndicator out;
  if (!pullback_) {
    if (auto ps = signed_permutation(l.matrix())) {
      const auto& [perm, sign] = *ps;
      for (const auto& b : boxes_) {
        Box c;
        for (std::size_t i = 0; i < 3; ++i) {
          auto j = static_cast<std::size_t>(perm[i]);
          c.lo[i] = sign[i] > 0 ? b.lo[j] : -b.hi[j];
          c.hi[i] = sign[i] > 0 ? b.hi[j] : -b.lo[j];
        }
        out.boxes_.push_back(c);
      }
      return out;
    }
  }
  out.boxes_ = boxes_;
  Eigen::Matrix4d inv = l.inverse().matrix();
  out.pullback_ = pullback_ ? Eigen::Matrix4d(*pullback_ * inv) : inv;
  return out;
}

SpinorSection position_pvm_apply(const RegionIndicator& region, const SpinorSection& phi) {
  return SpinorSection(
      [region, phi](const FourVector& p) {
        return region.contains(p) ? phi.coefficient(p) : std::complex<double>(0.0);
      },
      phi.helicity());
}

double imprimitivity_check(const PoincareElement& g, const RegionIndicator& region, const SpinorSection& phi,
                           const OrbitGrid& grid, std::optional<SectionChoice> gauge) {
  auto act = [&gauge](const PoincareElement& e, const SpinorSection& s) {
    return gauge ? apply_induced_section_gauge(e, s, *gauge) : apply_induced(e, s);
  };
  SpinorSection lhs = act(g, position_pvm_apply(region, act(poincare_inverse(g), phi)));
  SpinorSection rhs = position_pvm_apply(region.transformed(covering_map(g.h)), phi);
  return section_norm(lhs - rhs, grid);
}

PoincareElement borel_section_c(const FourVector& x, SectionChoice choice) {
  if (!x.is_forward_lightlike(1e-9)) throw std::invalid_argument("borel_section_c: x is not on the forward cone");
  double r = x.spatial_norm();
  double theta = std::acos(std::clamp(x[3] / r, -1.0, 1.0));
  double phi = std::atan2(x[2], x[1]);
  SL2CElement bz = boost({0.0, 0.0, 1.0}, std::log(r));
  if (choice == SectionChoice::BoostThenRotation) {
    SL2CElement rot = rotation({-std::sin(phi), std::cos(phi), 0.0}, theta);
    return PoincareElement::lorentz(rot * bz);
  }
  std::array<double, 3> n{x[1] / r, x[2] / r, x[3] / r};
  SL2CElement rot = rotation({0.0, 0.0, 1.0}, phi) * rotation({0.0, 1.0, 0.0}, theta);
  return PoincareElement::lorentz(boost(n, std::log(r)) * rot);
}

LittleGroupElement little_group_part(const PoincareElement& g, SectionChoice choice) {
  FourVector x = covering_map(g.h).apply(base_momentum());
  return little_group_from(borel_section_c(x, choice).h.inverse() * g.h);
}

SpinorVector section_fiber_vector(const FourVector& p, int helicity_sign, SectionChoice choice) {
  SL2CElement c = borel_section_c(p, choice).h;
  return spin_rep(c.adjoint_inverse()) * fiber_vector(base_momentum(), helicity_sign) / std::sqrt(p[0]);
}

SpinorSection apply_induced_section_gauge(const PoincareElement& g, const SpinorSection& phi, SectionChoice choice) {
  const Eigen::Matrix4d inv = covering_map(g.h.inverse()).matrix();
  const SL2CElement h = g.h;
  const FourVector x = g.x;
  const int hel = phi.helicity();
  LittleGroupPayload chi = fiber_character(hel);
  return SpinorSection(
      [phi, inv, h, x, chi, choice](const FourVector& p) {
        FourVector q(Eigen::Vector4d(inv * p.to_eigen()));
        SL2CElement a = borel_section_c(p, choice).h.inverse() * h * borel_section_c(q, choice).h;
        std::complex<double> mult = chi(little_group_from(a))(0, 0) * std::sqrt(p[0] / q[0]);
        return character_eval(x, p) * mult * phi.coefficient(q);
      },
      hel);
}

LittleGroupPayload fiber_character(int helicity_sign) {
  if (helicity_sign != 1 && helicity_sign != -1) throw std::invalid_argument("fiber_character: helicity must be +-1");
  return [helicity_sign](const LittleGroupElement& e) {
    Eigen::MatrixXcd m(1, 1);
    m(0, 0) = helicity_sign > 0 ? 1.0 / e.z : e.z;
    return m;
  };
}

double homomorphism_defect(const LittleGroupPayload& m, std::span<const LittleGroupElement> samples) {
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < samples.size(); i += 2) {
    const auto& e1 = samples[i];
    const auto& e2 = samples[i + 1];
    Eigen::MatrixXcd d = m(little_group_compose(e1, e2)) - m(e1) * m(e2);
    worst = std::max(worst, d.cwiseAbs().maxCoeff());
  }
  return worst;
}

CocyclePair build_cocycle_pair(LittleGroupPayload m, std::span<const LittleGroupElement> samples,
                               SectionChoice choice, double tol) {
  if (homomorphism_defect(m, samples) > tol)
    throw std::invalid_argument("build_cocycle_pair: payload is not a homomorphism on the samples");
  CocyclePair pair;
  pair.b = [m, choice](const PoincareElement& g) { return m(little_group_part(g, choice)); };
  pair.f = [b = pair.b](const PoincareElement& g, const PoincareElement& g1) {
    return Eigen::MatrixXcd(b(poincare_multiply(g, g1)) * b(g1).inverse());
  };
  return pair;
}

Eigen::Index CocycleBlocks::dimension() const {
  Eigen::Index d = u0.size();
  for (const auto& v : u) d += v.size();
  return d;
}

Eigen::VectorXcd example_first_order_cocycle(double t, const CocycleBlocks& blocks) {
  if (blocks.u.size() != blocks.energy.size())
    throw std::invalid_argument("example_first_order_cocycle: one energy per block");
  Eigen::VectorXcd v(blocks.dimension());
  Eigen::Index off = 0;
  v.segment(off, blocks.u0.size()) = t * blocks.u0;
  off += blocks.u0.size();
  for (std::size_t j = 0; j < blocks.u.size(); ++j) {
    std::complex<double> phase = std::polar(1.0, -t * blocks.energy[j]);
    v.segment(off, blocks.u[j].size()) = (phase - 1.0) * blocks.u[j];
    off += blocks.u[j].size();
  }
  return v;
}

Eigen::MatrixXcd example_cocycle_unitary(double t, const CocycleBlocks& blocks) {
  Eigen::VectorXcd diag = Eigen::VectorXcd::Ones(blocks.dimension());
  Eigen::Index off = blocks.u0.size();
  for (std::size_t j = 0; j < blocks.u.size(); ++j) {
    diag.segment(off, blocks.u[j].size()).setConstant(std::polar(1.0, -t * blocks.energy[j]));
    off += blocks.u[j].size();
  }
  return diag.asDiagonal();
}

FirstOrderCocycle<double> time_cocycle(const CocycleBlocks& blocks) {
  return {[blocks](const double& t) { return example_first_order_cocycle(t, blocks); },
          [blocks](const double& t) { return example_cocycle_unitary(t, blocks); }};
}

FirstOrderCocycle<LittleGroupElement> little_group_cocycle(const Eigen::VectorXcd& u) {
  const Eigen::Index n = 1 + u.size();
  FirstOrderCocycle<LittleGroupElement> c;
  c.v = [u, n](const LittleGroupElement& e) {
    Eigen::VectorXcd v(n);
    v[0] = e.a * e.z;
    v.tail(u.size()) = (e.z - 1.0) * u;
    return v;
  };
  c.U = [n](const LittleGroupElement& e) {
    Eigen::VectorXcd d = Eigen::VectorXcd::Constant(n, e.z);
    d[0] = e.z * e.z;
    return Eigen::MatrixXcd(d.asDiagonal());
  };
  return c;
}

}  // namespace weylnoise
