#ifndef XGS_POLYNOMIAL_HPP
#define XGS_POLYNOMIAL_HPP

#include <complex>
#include <vector>

namespace xgs {

// Coefficients in increasing degree: p(x) = c[0] + c[1] x + ...
using Poly = std::vector<std::complex<double>>;

std::complex<double> poly_eval(const Poly& p, std::complex<double> x);

Poly poly_multiply(const Poly& a, const Poly& b);

// Drops trailing coefficients below `eps` in magnitude (never the constant).
Poly poly_trim(const Poly& p, double eps = 0.0);

// All roots of p via eigenvalues of the balanced companion matrix.
// Deterministic ordering: ascending (|z|, arg z).
std::vector<std::complex<double>> poly_roots(const Poly& p);

// prod_k (1 + lambda_k x) * scale, expanded to coefficients.
Poly poly_from_gate_factors(const std::vector<std::complex<double>>& lambdas,
                            std::complex<double> scale);

// Monomial coefficients of the physicists' Hermite polynomial H_n, exact
// integer recurrence (valid through n = 24 in int64).
std::vector<long long> hermite_coefficients(int n);

}  // namespace xgs

#endif
