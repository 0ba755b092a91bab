#include "weylnoise/poincare.hpp"

#include <algorithm>
#include <cmath>

namespace weylnoise {

PoincareElement poincare_multiply(const PoincareElement& g1, const PoincareElement& g2) {
  return {g1.h * g2.h, g1.x + covering_map(g1.h).apply(g2.x)};
}

PoincareElement poincare_inverse(const PoincareElement& g) {
  SL2CElement hinv = g.h.inverse();
  return {hinv, -covering_map(hinv).apply(g.x)};
}

double poincare_distance(const PoincareElement& a, const PoincareElement& b) {
  double d = (a.h.matrix() - b.h.matrix()).cwiseAbs().maxCoeff();
  for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(a.x[i] - b.x[i]));
  return d;
}

}  // namespace weylnoise
