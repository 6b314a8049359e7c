#ifndef XGS_STATEPREP_HPP
#define XGS_STATEPREP_HPP

#include "xgs/fock.hpp"
#include "xgs/polynomial.hpp"
#include "xgs/synthesis.hpp"

namespace xgs {

// Monomial coefficients of G(x) = sum_n c_n H_n(x) / sqrt(2^n n!), so that
// G(X)|0> = sum_n c_n |n>.  Exact integer Hermite recurrence inside.
Poly wavefunction_to_x_polynomial(const std::vector<cx>& c);

// p(X) v by Horner recursion with tridiagonal X applications; stable where
// pointwise evaluation of high-degree monomial coefficients cancels badly.
Vec apply_x_polynomial(const Poly& p, const Vec& v);

// Creation-polynomial coefficients 2 beta^n / n! at even n <= n_max (odd
// coefficients zero), plus the normalization of the generated truncated cat.
struct CatPolynomial {
  Poly coeffs;           // in a^+, increasing degree
  double normalization;  // N_c'(n_max)
};
CatPolynomial cat_polynomial(double beta, int n_max, int dim);

// Fidelity of the truncated-polynomial even cat against the exact
// N_c (|beta> + |-beta>).
double cat_fidelity(double beta, int n_max, int dim);

// Build a creation polynomial on vacuum through the corrected-gate sequence
// (B = 0), scheduling the per-step coefficients so the attenuation collapses
// onto the initial vacuum where it acts trivially.
struct SequenceResult {
  FockVector state;
  double success_estimate;   // product of per-step conditional norms
  double direct_distance;    // distance to the direct polynomial application
};
SequenceResult prepare_via_gate_sequence(const Poly& creation_poly,
                                         const std::vector<double>& per_step_T,
                                         int dim);

}  // namespace xgs

#endif
