#include "xgs/polynomial.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace xgs {

using cx = std::complex<double>;

cx poly_eval(const Poly& p, cx x) {
  cx acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly poly_multiply(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, cx(0, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly poly_trim(const Poly& p, double eps) {
  Poly out = p;
  while (out.size() > 1 && std::abs(out.back()) <= eps) out.pop_back();
  return out;
}

std::vector<cx> poly_roots(const Poly& p_in) {
  Poly p = poly_trim(p_in, 0.0);
  const int deg = static_cast<int>(p.size()) - 1;
  if (deg < 1) throw std::domain_error("poly_roots: degree must be >= 1");
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -p[i] / p[deg];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, false);
  std::vector<cx> roots(deg);
  for (int i = 0; i < deg; ++i) roots[i] = es.eigenvalues()(i);
  std::sort(roots.begin(), roots.end(), [](cx a, cx b) {
    double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma < mb;
    return std::arg(a) < std::arg(b);
  });
  return roots;
}

Poly poly_from_gate_factors(const std::vector<cx>& lambdas, cx scale) {
  Poly out{scale};
  for (cx l : lambdas) out = poly_multiply(out, Poly{cx(1, 0), l});
  return out;
}

std::vector<long long> hermite_coefficients(int n) {
  if (n < 0 || n > 24) {
    throw std::domain_error("hermite_coefficients: n out of range");
  }
  // H_0 = 1, H_1 = 2x, H_{n+1} = 2x H_n - 2n H_{n-1}
  std::vector<long long> hm1{1};
  if (n == 0) return hm1;
  std::vector<long long> h{0, 2};
  for (int k = 1; k < n; ++k) {
    std::vector<long long> next(k + 2, 0);
    for (int j = 0; j <= k; ++j) next[j + 1] += 2 * h[j];
    for (int j = 0; j < k; ++j) next[j] -= 2 * static_cast<long long>(k) * hm1[j];
    hm1 = std::move(h);
    h = std::move(next);
  }
  return h;
}

}  // namespace xgs
