#include "xgs/gate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "xgs/parallel.hpp"
#include "xgs/quadrature.hpp"

namespace xgs {

namespace {
constexpr double kPi = 3.14159265358979323846;
const double kSqrt2 = std::sqrt(2.0);

double reflectivity(double T) {
  if (!(T > 0.0) || !(T < 1.0)) {
    throw std::domain_error("BS gate: T must lie in (0, 1)");
  }
  return std::sqrt(1.0 - T * T);
}
}  // namespace

ModeOp ideal_gate_operator(cx lm, cx lp, int dim) {
  ModeOp a = annihilation_op(dim);
  return ModeOp::Identity(dim, dim) + lm * a + lp * a.adjoint();
}

ModeOp kraus_bs_homodyne(double T, double x, double theta, int dim) {
  const double R = reflectivity(T);
  const cx em = std::exp(cx(0, -theta));
  ModeOp E = exp_annihilation_poly(-kSqrt2 * x * em * R, -0.5 * R * R * em * em, dim);
  ModeOp a = annihilation_op(dim);
  ModeOp L = (kSqrt2 * x / T) * ModeOp::Identity(dim, dim) +
             (R * em / T) * a + (R * std::conj(em) / T) * a.adjoint();
  return attenuation_op(T, dim) * E * L;
}

ModeOp kraus_bs_gaussian(double T, cx A, cx B, int dim) {
  const double R = reflectivity(T);
  const cx As = std::conj(A);
  const cx Bs = std::conj(B);
  ModeOp E = exp_annihilation_poly(-As * (R / T), Bs * (R * R) / (T * T), dim);
  ModeOp a = annihilation_op(dim);
  ModeOp L = As * ModeOp::Identity(dim, dim) - 2.0 * Bs * R * a + R * a.adjoint();
  return E * (attenuation_op(T, dim) / T) * L;
}

ModeOp kraus_bs_heterodyne(double T, cx A, cx B, int dim) {
  if (std::abs(B) >= 0.5) {
    throw std::domain_error(
        "kraus_bs_heterodyne: |B| >= 1/2 is the homodyne boundary");
  }
  return kraus_bs_gaussian(T, A, B, dim);
}

ModeOp correction_bs(double Tp, cx Ap, cx Bp, int dim) {
  if (std::abs(Bp) >= 0.5) {
    throw std::domain_error("correction_bs: |B'| must be < 1/2");
  }
  const double Rp = reflectivity(Tp);
  ModeOp E = exp_annihilation_poly(-std::conj(Ap) * Rp,
                                   std::conj(Bp) * Rp * Rp, dim);
  return attenuation_op(Tp, dim) * E;
}

ModeOp qnd_gate(double kappa, cx A, cx B, int dim) {
  const cx As = std::conj(A);
  const cx Bs = std::conj(B);
  return function_of_x(
      [&](double x) {
        cx expo = As * kappa * x / kSqrt2 +
                  (0.5 * Bs - 0.25) * kappa * kappa * x * x;
        cx lin = As + (2.0 * Bs - 1.0) * kappa * x / kSqrt2;
        return std::exp(expo) * lin;
      },
      dim);
}

ModeOp qnd_correction(double kappa, cx A, cx B, double squeeze_r, int dim) {
  const cx As = std::conj(A);
  const cx Bs = std::conj(B);
  const double comp = std::tanh(squeeze_r);
  return function_of_x(
      [&](double x) {
        cx expo = -As * kappa * x / kSqrt2 -
                  (0.5 * Bs + 0.25) * kappa * kappa * x * x +
                  0.5 * comp * kappa * kappa * x * x;
        return std::exp(expo);
      },
      dim);
}

ModeOp qnd_photon_counting(double kappa, cx c1, int dim) {
  return function_of_x(
      [&](double x) {
        return std::exp(-0.25 * kappa * kappa * x * x) *
               (1.0 - c1 * kappa * x / kSqrt2);
      },
      dim);
}

GateSpec resolve_gate_settings(cx lm, cx lp, double T) {
  if (lm == cx(0, 0) && lp == cx(0, 0)) {
    throw std::domain_error("resolve_gate_settings: null gate");
  }
  const double alm = std::abs(lm);
  const double alp = std::abs(lp);
  if (alm > alp * (1.0 + 1e-12)) {
    throw unreachable_gate_error(
        "resolve_gate_settings: |lambda_-| > |lambda_+| has no realization");
  }
  const double R = reflectivity(T);
  GateSpec spec;
  spec.lambda_minus = lm;
  spec.lambda_plus = lp;
  spec.T = T;
  // A* = R / lambda_+, B* = -lambda_- / (2 lambda_+); then the corrected
  // composite linear factor A* - 2 B* R a + R a^+ = A*(1 + lm a + lp a^+).
  const cx As = R / lp;
  const cx Bs = -lm / (2.0 * lp);
  spec.A = std::conj(As);
  spec.B = std::conj(Bs);
  if (std::abs(alm - alp) <= 1e-12 * std::max(alm, alp)) {
    spec.variant = GateVariant::bs_homodyne;
    spec.theta = 0.5 * std::arg(lp / lm);
    spec.x0 = R / (kSqrt2 * alp);
  } else {
    spec.variant = GateVariant::bs_heterodyne;
    spec.theta = 0.0;
    spec.x0 = 0.0;
  }
  return spec;
}

CorrectedBranches corrected_branch_operators(const GateSpec& spec, int dim) {
  if (spec.variant != GateVariant::bs_homodyne &&
      spec.variant != GateVariant::bs_heterodyne) {
    throw std::domain_error("corrected_branch_operators: BS variants only");
  }
  const double T = spec.T;
  const double R = reflectivity(T);
  const cx As = std::conj(spec.A);
  const cx Bs = std::conj(spec.B);
  ModeOp a = annihilation_op(dim);
  ModeOp lin = As * ModeOp::Identity(dim, dim) - 2.0 * Bs * R * a +
               R * a.adjoint();
  CorrectedBranches out;
  out.one = attenuation_op(T, dim) * lin / T;
  out.vac = attenuation_op(T, dim);
  return out;
}

GateResult realistic_gate_density(const FockVector& input, const GateSpec& spec,
                                  double eta) {
  if (eta < 0.0 || eta > 1.0) {
    throw std::domain_error("realistic_gate_density: eta must lie in [0, 1]");
  }
  const int dim = input.dim();
  CorrectedBranches br = corrected_branch_operators(spec, dim);
  Vec v1 = br.one * input.amp;
  Vec v0 = br.vac * input.amp;
  DensityMatrix rho = eta * (v1 * v1.adjoint()) +
                      (1.0 - eta) * (v0 * v0.adjoint());
  const double tr = rho.trace().real();
  GateResult res;
  res.rho = rho / tr;
  res.success = tr;
  res.attenuation_T = spec.T;
  double tail = 0.0;
  for (int k = std::max(0, dim - 3); k < dim; ++k) tail += res.rho(k, k).real();
  res.truncation_tail = tail;
  return res;
}

namespace {

struct WindowBranches {
  TwoModeVec phi1;  // U (psi (x) |1>)
  TwoModeVec phi0;  // U (psi (x) |0>)
  int ds = 0, dl = 0;
  double theta = 0.0;
};

WindowBranches evolve_branches(const FockVector& input, const GateSpec& spec) {
  WindowBranches wb;
  wb.ds = input.dim();
  wb.dl = input.dim();
  wb.theta = spec.theta;
  TwoModeOp U;
  if (spec.variant == GateVariant::bs_homodyne ||
      spec.variant == GateVariant::bs_heterodyne) {
    U = bs_unitary(spec.T, wb.ds, wb.dl);
  } else {
    U = qnd_unitary(spec.kappa, wb.ds, wb.dl);
    wb.theta = 0.0;
  }
  Vec anc1 = number_state(1, wb.dl).amp;
  Vec anc0 = number_state(0, wb.dl).amp;
  wb.phi1 = U * joint_state(input.amp, anc1);
  wb.phi0 = U * joint_state(input.amp, anc0);
  return wb;
}

Vec contract_branch(const TwoModeVec& phi, const Eigen::RowVectorXcd& bra,
                    int ds, int dl) {
  Vec out(ds);
  for (int m = 0; m < ds; ++m) {
    cx acc = 0.0;
    for (int j = 0; j < dl; ++j) acc += bra(j) * phi(m * dl + j);
    out(m) = acc;
  }
  return out;
}

}  // namespace

GateResult apply_gate_windowed(const FockVector& input, const GateSpec& spec,
                               const AncillaModel& ancilla,
                               const Window& window) {
  if (window.epsilon <= 0.0) {
    throw std::domain_error("apply_gate_windowed: epsilon must be positive");
  }
  const double eta = ancilla.eta;
  WindowBranches wb = evolve_branches(input, spec);
  const int ds = wb.ds;

  DensityMatrix rho;
  double P = -1.0;
  int n = std::max(4, window.n_points);
  for (; n <= 4096; n *= 2) {
    QuadRule rule = gauss_legendre(n, window.x0 - window.epsilon,
                                   window.x0 + window.epsilon);
    DensityMatrix acc = DensityMatrix::Zero(ds, ds);
    for (int i = 0; i < n; ++i) {
      Eigen::RowVectorXcd bra = quadrature_bra(rule.nodes[i], wb.theta, wb.dl);
      if (eta > 0.0) {
        Vec phi = contract_branch(wb.phi1, bra, ds, wb.dl);
        acc += (eta * rule.weights[i]) * (phi * phi.adjoint());
      }
      if (eta < 1.0) {
        Vec phi = contract_branch(wb.phi0, bra, ds, wb.dl);
        acc += ((1.0 - eta) * rule.weights[i]) * (phi * phi.adjoint());
      }
    }
    double newP = acc.trace().real();
    rho = acc;
    if (P >= 0.0 && std::abs(newP - P) <= 1e-6 * std::max(newP, 1e-30)) {
      P = newP;
      break;
    }
    P = newP;
  }
  if (P < 1e-12) {
    throw degenerate_outcome_error("apply_gate_windowed: window weight ~ 0");
  }
  GateResult res;
  res.rho = rho / P;
  res.success = P;
  res.attenuation_T = spec.T;
  double tail = 0.0;
  for (int k = std::max(0, ds - 3); k < ds; ++k) tail += res.rho(k, k).real();
  res.truncation_tail = tail;
  return res;
}

WindowedFP windowed_fidelity(const FockVector& input, const FockVector& target,
                             const GateSpec& spec, const AncillaModel& ancilla,
                             const Window& window) {
  const double eta = ancilla.eta;
  WindowBranches wb = evolve_branches(input, spec);
  const int ds = wb.ds;

  double P = -1.0, num = 0.0;
  int n = std::max(4, window.n_points);
  for (; n <= 4096; n *= 2) {
    QuadRule rule = gauss_legendre(n, window.x0 - window.epsilon,
                                   window.x0 + window.epsilon);
    double accP = 0.0, accN = 0.0;
    for (int i = 0; i < n; ++i) {
      Eigen::RowVectorXcd bra = quadrature_bra(rule.nodes[i], wb.theta, wb.dl);
      if (eta > 0.0) {
        Vec phi = contract_branch(wb.phi1, bra, ds, wb.dl);
        accP += eta * rule.weights[i] * phi.squaredNorm();
        accN += eta * rule.weights[i] * std::norm(target.amp.dot(phi));
      }
      if (eta < 1.0) {
        Vec phi = contract_branch(wb.phi0, bra, ds, wb.dl);
        accP += (1.0 - eta) * rule.weights[i] * phi.squaredNorm();
        accN += (1.0 - eta) * rule.weights[i] * std::norm(target.amp.dot(phi));
      }
    }
    if (P >= 0.0 && std::abs(accP - P) <= 1e-6 * std::max(accP, 1e-30)) {
      P = accP;
      num = accN;
      break;
    }
    P = accP;
    num = accN;
  }
  if (P < 1e-12) {
    throw degenerate_outcome_error("windowed_fidelity: window weight ~ 0");
  }
  return WindowedFP{num / P, P};
}

namespace {

// Sharp-outcome mixture fidelity at one setting, from evolved branches.
double sharp_fidelity(const WindowBranches& wb, const Vec& target, double eta,
                      double x0, double theta) {
  Eigen::RowVectorXcd bra = quadrature_bra(x0, theta, wb.dl);
  double num = 0.0, den = 0.0;
  if (eta > 0.0) {
    Vec phi = contract_branch(wb.phi1, bra, wb.ds, wb.dl);
    num += eta * std::norm(target.dot(phi));
    den += eta * phi.squaredNorm();
  }
  if (eta < 1.0) {
    Vec phi = contract_branch(wb.phi0, bra, wb.ds, wb.dl);
    num += (1.0 - eta) * std::norm(target.dot(phi));
    den += (1.0 - eta) * phi.squaredNorm();
  }
  if (den < 1e-300) return 0.0;
  return num / den;
}

template <class F>
double golden_max(F&& f, double lo, double hi, int iters, double* best_x) {
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = f(x1);
    }
  }
  double xm = 0.5 * (a + b);
  double fm = f(xm);
  if (best_x) *best_x = xm;
  return fm;
}

}  // namespace

SharpSetup optimize_sharp_setup(const FockVector& input, const FockVector& target,
                                double eta) {
  std::vector<double> Ts;
  for (double T = 0.30; T <= 0.991; T += 0.01) Ts.push_back(T);
  const int nth = 32;
  const int nx = 61;
  struct Slot {
    double F = -1.0, T = 0, x0 = 0, theta = 0;
  };
  std::vector<Slot> slots(Ts.size());

  for_index(Ts.size(), [&](std::size_t it) {
    GateSpec spec;
    spec.variant = GateVariant::bs_homodyne;
    spec.T = Ts[it];
    WindowBranches wb = evolve_branches(input, spec);
    Slot best;
    for (int ith = 0; ith < nth; ++ith) {
      double theta = 2.0 * kPi * ith / nth;
      for (int ix = 0; ix < nx; ++ix) {
        double x0 = 3.0 * ix / (nx - 1);
        double F = sharp_fidelity(wb, target.amp, eta, x0, theta);
        if (F > best.F) best = Slot{F, Ts[it], x0, theta};
      }
    }
    slots[it] = best;
  });

  Slot best;
  for (const Slot& s : slots) {
    if (s.F > best.F) best = s;
  }

  // Coordinate golden-section refinement; deterministic.
  double T = best.T, x0 = best.x0, theta = best.theta;
  for (int round = 0; round < 2; ++round) {
    {
      auto f = [&](double Tt) {
        GateSpec spec;
        spec.variant = GateVariant::bs_homodyne;
        spec.T = Tt;
        WindowBranches wb = evolve_branches(input, spec);
        return sharp_fidelity(wb, target.amp, eta, x0, theta);
      };
      golden_max(f, std::max(0.05, T - 0.02), std::min(0.995, T + 0.02), 20, &T);
    }
    GateSpec spec;
    spec.variant = GateVariant::bs_homodyne;
    spec.T = T;
    WindowBranches wb = evolve_branches(input, spec);
    {
      auto f = [&](double x) {
        return sharp_fidelity(wb, target.amp, eta, x, theta);
      };
      golden_max(f, std::max(0.0, x0 - 0.1), x0 + 0.1, 24, &x0);
    }
    {
      auto f = [&](double th) {
        return sharp_fidelity(wb, target.amp, eta, x0, th);
      };
      golden_max(f, theta - 0.25, theta + 0.25, 24, &theta);
    }
  }
  GateSpec spec;
  spec.variant = GateVariant::bs_homodyne;
  spec.T = T;
  WindowBranches wb = evolve_branches(input, spec);
  double F = sharp_fidelity(wb, target.amp, eta, x0, theta);
  return SharpSetup{T, x0, theta, F};
}

}  // namespace xgs
