#include "xgs/synthesis.hpp"

#include <cmath>
#include <stdexcept>

#include "xgs/gate.hpp"
#include "xgs/twomode.hpp"

namespace xgs {

namespace {
const double kSqrt2 = std::sqrt(2.0);

// Binomial re-expansion p(u) -> p(x - shift) ... coefficients in x.
Poly shift_argument(const Poly& p, double shift) {
  // q(x) = p(x - shift)
  Poly q(p.size(), cx(0, 0));
  for (std::size_t k = 0; k < p.size(); ++k) {
    // (x - shift)^k
    double binom = 1.0;
    double pw = 1.0;
    for (std::size_t j = 0; j <= k; ++j) {
      // coefficient of x^{k-j}: C(k,j) (-shift)^j
      q[k - j] += p[k] * binom * pw;
      binom = binom * double(k - j) / double(j + 1);
      pw *= -shift;
    }
  }
  return q;
}
}  // namespace

Poly taylor_unitary_coeffs(const PotentialSpec& spec) {
  const int N = spec.order;
  if (N < 1 || N > 24) {
    throw std::domain_error("taylor_unitary_coeffs: order must lie in [1, 24]");
  }
  // W(u) = -i tau V(u + mean_X)
  Poly v(spec.coefficients.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = spec.coefficients[k];
  if (v.empty()) v = Poly{cx(0, 0)};
  Poly w = shift_argument(v, -spec.mean_X);  // V(u + mean_X)
  w.resize(std::max<std::size_t>(w.size(), 1), cx(0, 0));
  for (auto& c : w) c *= cx(0, -spec.tau);
  // exp series: E' = W' E with E(0) = exp(w0)
  const cx w0 = w[0];
  w[0] = 0;
  Poly e(N + 1, cx(0, 0));
  e[0] = 1.0;
  for (int n = 1; n <= N; ++n) {
    cx acc = 0.0;
    for (int k = 1; k <= n && k < static_cast<int>(w.size()); ++k) {
      acc += double(k) * w[k] * e[n - k];
    }
    e[n] = acc / double(n);
  }
  for (auto& c : e) c *= std::exp(w0);
  // back to x: u = x - mean_X
  return shift_argument(e, spec.mean_X);
}

DecompositionPlan factor_poly(const Poly& coeffs_in) {
  Poly p = poly_trim(coeffs_in, 0.0);
  if (p.empty() || std::abs(p[0]) == 0.0) {
    throw std::domain_error(
        "factor_poly: constant term must be nonzero (a pure X factor has no "
        "(1 + lambda X) form)");
  }
  if (p.size() < 2) {
    throw std::domain_error("factor_poly: degree must be >= 1");
  }
  std::vector<cx> roots = poly_roots(p);
  DecompositionPlan plan;
  plan.scale = p[0];
  plan.lambdas.reserve(roots.size());
  for (cx r : roots) {
    if (std::abs(r) < 1e-14) {
      throw std::domain_error("factor_poly: root at zero");
    }
    plan.lambdas.push_back(-1.0 / r);
  }
  std::sort(plan.lambdas.begin(), plan.lambdas.end(), [](cx a, cx b) {
    double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma < mb;
    return std::arg(a) < std::arg(b);
  });
  plan.step_T.assign(plan.lambdas.size(), 1.0);
  plan.cumulative_T = 1.0;
  // reconstruction residual
  Poly rec = poly_from_gate_factors(plan.lambdas, plan.scale);
  double maxc = 0.0, maxdiff = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) maxc = std::max(maxc, std::abs(p[k]));
  for (std::size_t k = 0; k < std::max(rec.size(), p.size()); ++k) {
    cx a = k < rec.size() ? rec[k] : cx(0, 0);
    cx b = k < p.size() ? p[k] : cx(0, 0);
    maxdiff = std::max(maxdiff, std::abs(a - b));
  }
  plan.residual = maxc > 0 ? maxdiff / maxc : maxdiff;
  return plan;
}

DecompositionPlan cubic_plan(double chi) {
  if (std::abs(chi) > 1.0) {
    throw std::domain_error("cubic_plan: |chi| must be <= 1");
  }
  if (chi == 0.0) return DecompositionPlan{};
  Poly p(7, cx(0, 0));
  p[0] = 1.0;
  p[3] = cx(0, chi);
  p[6] = -0.5 * chi * chi;
  return factor_poly(p);
}

ScheduledForm schedule_attenuation(const DecompositionPlan& plan,
                                   const std::vector<double>& per_step_T,
                                   int dim) {
  if (per_step_T.size() != plan.lambdas.size()) {
    throw std::domain_error("schedule_attenuation: length mismatch");
  }
  ModeOp a = annihilation_op(dim);
  ModeOp ad = a.adjoint();
  ModeOp X = quadrature_op(0.0, dim);
  ModeOp id = ModeOp::Identity(dim, dim);

  ModeOp literal = id;
  ModeOp product_x = id;
  double TT = 1.0;
  for (std::size_t i = 0; i < plan.lambdas.size(); ++i) {
    TT *= per_step_T[i];
    ModeOp step = attenuation_op(per_step_T[i], dim) *
                  (id + plan.lambdas[i] * (TT * a + ad / TT) / kSqrt2);
    literal = literal * step;
    product_x = product_x * (id + plan.lambdas[i] * X);
  }
  ScheduledForm out;
  out.literal = literal;
  out.collapsed = product_x * attenuation_op(TT, dim);
  out.cumulative_T = TT;
  return out;
}

namespace {

Vec single_shot_ancilla(const Poly& F_coeffs, double kappa, double squeeze_r,
                        int dl, bool override_tail_guard) {
  // Ancilla f(X_L)|sq>, f(x) = F(-x/kappa); squeeze_r > 0 widens in x.
  FockVector sq = squeezed_vacuum(-squeeze_r, dl);
  ModeOp f = function_of_x(
      [&](double x) { return poly_eval(F_coeffs, -x / kappa); }, dl);
  Vec anc = f * sq.amp;
  FockVector fv(anc / anc.norm());
  tail_guard(fv, kTailGuard, override_tail_guard);
  return fv.amp;
}

}  // namespace

ModeOp single_shot_operator(const Poly& F_coeffs, double kappa,
                            double squeeze_r, int dim,
                            bool override_tail_guard) {
  const int dl = dim;
  Vec anc = single_shot_ancilla(F_coeffs, kappa, squeeze_r, dl,
                                override_tail_guard);
  TwoModeOp U = qnd_unitary(kappa, dim, dl);
  Eigen::RowVectorXcd bra = quadrature_bra(0.0, 0.0, dl);
  return conditional_operator(U, anc, bra, dim, dl);
}

SingleShotSuccess single_shot_success(const Poly& F_coeffs,
                                      const DecompositionPlan& plan,
                                      double kappa, const FockVector& input) {
  const int dim = input.dim();
  SingleShotSuccess out{0.0, 0.0};
  {
    ModeOp op = single_shot_operator(F_coeffs, kappa, 0.0, dim, true);
    out.single_shot = (op * input.amp).squaredNorm();
  }
  {
    // Sequential path: one QND sharp gate per plan factor, each with the
    // ancilla prepared for its own degree-1 factor; the per-step conditional
    // densities multiply.
    Vec state = input.amp;
    double prod = 1.0;
    for (cx lambda : plan.lambdas) {
      Poly f{cx(1, 0), lambda};
      ModeOp g = single_shot_operator(f, kappa, 0.0, dim, true);
      Vec next = g * state;
      double w = next.squaredNorm() / state.squaredNorm();
      prod *= w;
      state = next;
    }
    out.sequential = prod;
  }
  return out;
}

}  // namespace xgs
