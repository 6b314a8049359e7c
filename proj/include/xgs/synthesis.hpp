#ifndef XGS_SYNTHESIS_HPP
#define XGS_SYNTHESIS_HPP

#include <vector>

#include "xgs/fock.hpp"
#include "xgs/polynomial.hpp"

namespace xgs {

// Polynomial potential V(X) = sum_k v_k X^k evolved for time tau (hbar = 1),
// Taylor-expanded around mean_X to the given order.
struct PotentialSpec {
  std::vector<double> coefficients;
  double tau = 1.0;
  double mean_X = 0.0;
  int order = 6;
};

// Ordered gate factorization U ~ scale * prod_k (1 + lambda_k X).
struct DecompositionPlan {
  std::vector<cx> lambdas;       // ordered by (|lambda|, arg lambda)
  std::vector<double> step_T;    // per-step transmissions (default 1)
  double cumulative_T = 1.0;     // T_N = prod T_j
  cx scale{1, 0};
  double residual = 0.0;         // reconstruction residual (max-abs)
};

// Degree-`order` Taylor coefficients of exp[-i V(x) tau] around mean_X,
// re-expanded in x.  Power-series composition; exact to machine precision.
Poly taylor_unitary_coeffs(const PotentialSpec& spec);

// Factor p(x) = scale * prod (1 + lambda_k x) via companion-matrix roots.
// Requires p(0) != 0.
DecompositionPlan factor_poly(const Poly& coeffs);

// Plan for exp[i chi X^3] ~ 1 + i chi X^3 - chi^2 X^6 / 2 (six factors).
DecompositionPlan cubic_plan(double chi);

// Both sides of the attenuation-scheduling identity
//   prod_i T_i^n (1 + lambda_i (TT_i a + TT_i^{-1} a^+)/sqrt2)
//     = [prod_i (1 + lambda_i X)] TT_N^n,   TT_i = prod_{j<=i} T_j,
// as dim x dim matrices (factor i = 1 leftmost).
struct ScheduledForm {
  ModeOp literal;
  ModeOp collapsed;
  double cumulative_T;
};
ScheduledForm schedule_attenuation(const DecompositionPlan& plan,
                                   const std::vector<double>& per_step_T,
                                   int dim);

// Single-shot composite: ancilla f(X_L) S|0>_L with f(x) = F(-x/kappa),
// QND coupling, <x0 = 0| projection.  squeeze_r > 0 widens the ancilla
// position envelope; the exact residual envelope is exp[-e^{-2r} k^2 X^2/2].
// Returns the effective system operator.
ModeOp single_shot_operator(const Poly& F_coeffs, double kappa,
                            double squeeze_r, int dim,
                            bool override_tail_guard = false);

// Success density of the single-shot projection on a given input, and the
// product of the sequential sharp-gate densities for the same plan; reported
// side by side (no equality is implied).
struct SingleShotSuccess {
  double single_shot;
  double sequential;
};
SingleShotSuccess single_shot_success(const Poly& F_coeffs,
                                      const DecompositionPlan& plan,
                                      double kappa, const FockVector& input);

}  // namespace xgs

#endif
