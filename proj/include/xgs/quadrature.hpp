#ifndef XGS_QUADRATURE_HPP
#define XGS_QUADRATURE_HPP

#include <vector>

namespace xgs {

struct QuadRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Gauss-Legendre rule with n nodes, computed by Newton iteration on the
// Legendre recurrence.  Deterministic.
QuadRule gauss_legendre(int n);

// Same rule mapped to [a, b].
QuadRule gauss_legendre(int n, double a, double b);

}  // namespace xgs

#endif
