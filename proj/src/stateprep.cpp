#include "xgs/stateprep.hpp"

#include <cmath>
#include <stdexcept>

namespace xgs {

Poly wavefunction_to_x_polynomial(const std::vector<cx>& c) {
  const int N = static_cast<int>(c.size()) - 1;
  if (N < 0 || N > 20) {
    throw std::domain_error("wavefunction_to_x_polynomial: need 1..21 coefficients");
  }
  Poly g(N + 1, cx(0, 0));
  for (int n = 0; n <= N; ++n) {
    std::vector<long long> h = hermite_coefficients(n);
    const double norm = std::sqrt(std::pow(2.0, n) * std::tgamma(double(n) + 1.0));
    for (int k = 0; k <= n; ++k) {
      if (h[k] != 0) g[k] += c[n] * (double(h[k]) / norm);
    }
  }
  return g;
}

Vec apply_x_polynomial(const Poly& p, const Vec& v) {
  const int dim = static_cast<int>(v.size());
  auto apply_x = [dim](const Vec& w) {
    Vec out = Vec::Zero(dim);
    const double s = 1.0 / std::sqrt(2.0);
    for (int n = 0; n < dim; ++n) {
      if (n + 1 < dim) out(n) += s * std::sqrt(double(n + 1)) * w(n + 1);
      if (n >= 1) out(n) += s * std::sqrt(double(n)) * w(n - 1);
    }
    return out;
  };
  Vec acc = Vec::Zero(dim);
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = apply_x(acc);
    acc += *it * v;
  }
  return acc;
}

CatPolynomial cat_polynomial(double beta, int n_max, int dim) {
  if (!(beta > 0)) throw std::domain_error("cat_polynomial: beta must be > 0");
  if (n_max < 0 || n_max % 2 != 0 || n_max > 30) {
    throw std::domain_error("cat_polynomial: n_max must be even and <= 30");
  }
  if (n_max >= dim) throw std::domain_error("cat_polynomial: n_max >= dim");
  CatPolynomial out;
  out.coeffs.assign(n_max + 1, cx(0, 0));
  double pw = 2.0;  // 2 beta^n / n!
  double nrm2 = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    if (n % 2 == 0) {
      out.coeffs[n] = pw;
      // amplitude on |n>: 2 beta^n / n! * sqrt(n!) = 2 beta^n / sqrt(n!)
      nrm2 += pw * pw * std::tgamma(double(n) + 1.0);
    }
    pw *= beta / double(n + 1);
  }
  out.normalization = 1.0 / std::sqrt(nrm2);
  return out;
}

double cat_fidelity(double beta, int n_max, int dim) {
  if (dim < n_max + 4.0 * beta * beta + 20.0) {
    throw std::domain_error("cat_fidelity: dim too small for the exact cat");
  }
  CatPolynomial cp = cat_polynomial(beta, n_max, dim);
  Vec gen = Vec::Zero(dim);
  for (int n = 0; n <= n_max; n += 2) {
    gen(n) = cp.coeffs[n] * std::sqrt(std::tgamma(double(n) + 1.0));
  }
  gen /= gen.norm();

  FockVector plus = coherent_state(beta, dim, true);
  FockVector minus = coherent_state(-beta, dim, true);
  Vec cat = plus.amp + minus.amp;
  cat /= cat.norm();
  return std::norm(cat.dot(gen));
}

SequenceResult prepare_via_gate_sequence(const Poly& creation_poly,
                                         const std::vector<double>& per_step_T,
                                         int dim) {
  Poly p = poly_trim(creation_poly, 0.0);
  if (std::abs(p[0]) == 0.0) {
    throw std::domain_error("prepare_via_gate_sequence: zero constant term");
  }
  // Direct application: sum_k p_k a^+k |0> = sum_k p_k sqrt(k!) |k>
  Vec direct = Vec::Zero(dim);
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (static_cast<int>(k) < dim) {
      direct(k) = p[k] * std::sqrt(std::tgamma(double(k) + 1.0));
    }
  }
  direct /= direct.norm();

  SequenceResult out;
  if (p.size() < 2) {
    out.state = number_state(0, dim);
    out.success_estimate = 1.0;
    out.direct_distance = 0.0;
    return out;
  }

  DecompositionPlan plan = factor_poly(p);
  std::vector<double> Ts = per_step_T;
  if (Ts.empty()) Ts.assign(plan.lambdas.size(), 1.0);
  if (Ts.size() != plan.lambdas.size()) {
    throw std::domain_error("prepare_via_gate_sequence: step count mismatch");
  }

  // Pre-compensated per-step coefficients lambda_i / TT_i collapse the
  // attenuation onto the initial vacuum, where it acts trivially.
  std::vector<cx> tilde(plan.lambdas.size());
  double TT = 1.0;
  for (std::size_t i = 0; i < plan.lambdas.size(); ++i) {
    TT *= Ts[i];
    tilde[i] = plan.lambdas[i] / TT;
  }

  Vec state = number_state(0, dim).amp;
  double success = 1.0;
  // Operator product has step 1 leftmost, so step N acts first.
  for (std::size_t idx = plan.lambdas.size(); idx-- > 0;) {
    const double T = Ts[idx];
    Vec next;
    if (T >= 1.0) {
      next = state + tilde[idx] * apply_creation(state);
    } else {
      const double R = std::sqrt(1.0 - T * T);
      const cx As = R / tilde[idx];  // B = 0 corrected gate, scalar As/T
      Vec lin = As * state + R * apply_creation(state);
      next = apply_attenuation(T, lin) / T;
    }
    success *= next.squaredNorm() / state.squaredNorm();
    state = next;
  }
  const double nrm = state.norm();
  Vec seq = state / nrm;
  // Phase-align before measuring the distance.
  cx ov = direct.dot(seq);
  if (std::abs(ov) > 0) seq *= std::conj(ov) / std::abs(ov);
  out.state = FockVector(seq);
  out.success_estimate = success;
  out.direct_distance = (seq - direct).norm();
  return out;
}

}  // namespace xgs
