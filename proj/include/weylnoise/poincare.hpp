#pragma once

#include "weylnoise/minkowski.hpp"
#include "weylnoise/spin_cover.hpp"

namespace weylnoise {

/// Element (h, x) of the covering Poincare group SL(2,C) x| R^4.
///
/// The Lorentz part is kept as the covering element h; its image delta(h)
/// is recomputed on demand and never cached.
struct PoincareElement {
  SL2CElement h;
  FourVector x;

  static PoincareElement identity() { return {}; }
  static PoincareElement translation(const FourVector& x) { return {SL2CElement(), x}; }
  static PoincareElement lorentz(const SL2CElement& h) { return {h, FourVector()}; }
};

/// (h1, x1)(h2, x2) = (h1 h2, x1 + delta(h1) x2).
PoincareElement poincare_multiply(const PoincareElement& g1, const PoincareElement& g2);

/// (h, x)^{-1} = (h^{-1}, -delta(h^{-1}) x).
PoincareElement poincare_inverse(const PoincareElement& g);

/// Max-abs distance between the 2x2 parts plus the translation parts.
double poincare_distance(const PoincareElement& a, const PoincareElement& b);

}  // namespace weylnoise
