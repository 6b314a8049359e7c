#include "xgs/benchmarks.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "xgs/quadrature.hpp"
#include "xgs/twomode.hpp"

namespace xgs {

namespace {
constexpr double kPi = 3.14159265358979323846;

double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  int iters, double* best_x) {
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
  if (best_x) *best_x = xm;
  return f(xm);
}

Vec apply_displacement_vec(cx d, const Vec& v) {
  Vec u = apply_exp_annihilation_poly(-std::conj(d), cx(0, 0), v);
  u = apply_exp_creation_poly(d, cx(0, 0), u);
  return std::exp(-0.5 * std::norm(d)) * u;
}

// Normal-ordered application of exp[-zeta/2 a^+2 + zeta*/2 a^2].
Vec apply_squeeze_vec(cx zeta, const Vec& v) {
  const double s = std::abs(zeta);
  if (s == 0.0) return v;
  const cx phase = zeta / s;
  const double th = std::tanh(s);
  Vec u = apply_exp_annihilation_poly(cx(0, 0), 0.5 * th * std::conj(phase), v);
  const double ch = std::cosh(s);
  for (int n = 0; n < u.size(); ++n) {
    u(n) *= std::pow(ch, -(double(n) + 0.5));
  }
  u = apply_exp_creation_poly(cx(0, 0), -0.5 * th * phase, u);
  return u;
}

}  // namespace

ModeOp classical_gate(cx alpha, double T, int dim) {
  if (!(T > 0.0) || !(T < 1.0)) {
    throw std::domain_error("classical_gate: T must lie in (0, 1)");
  }
  const double R = std::sqrt(1.0 - T * T);
  ModeOp out = attenuation_op(T, dim);
  out = exp_annihilation_poly(cx(0, 0), -0.5 * R * R / (T * T), dim) * out;
  out = exp_annihilation_poly(alpha * R, cx(0, 0), dim) * out;
  out = exp_creation_poly(alpha * R, cx(0, 0), dim) * out;
  return out;
}

ClassicalReport classical_threshold(const FockVector& input,
                                    const FockVector& target,
                                    const ClassicalOptions& opts) {
  const int dim = input.dim();
  if (target.dim() != dim) {
    throw std::domain_error("classical_threshold: dimension mismatch");
  }
  std::vector<double> Ts;
  for (double T = opts.T_min; T <= opts.T_max + 1e-12; T += opts.T_step) {
    Ts.push_back(T);
  }
  const int nmag = static_cast<int>(std::round(opts.alpha_max / opts.alpha_step)) + 1;

  struct Slot {
    double F = -1.0;
    cx alpha{0, 0};
    double T = 0;
  };
  std::vector<Slot> slots(Ts.size());

  auto eval = [&](cx alpha, double T, const Vec& base) -> double {
    const double R = std::sqrt(1.0 - T * T);
    Vec v;
    if (opts.detection == ClassicalDetection::homodyne_x0) {
      v = apply_exp_annihilation_poly(alpha * R, cx(0, 0), base);
      v = apply_exp_creation_poly(alpha * R, cx(0, 0), v);
    } else {
      v = apply_exp_creation_poly(alpha * R / T, cx(0, 0), base);
    }
    const double n2 = v.squaredNorm();
    if (n2 < 1e-300) return 0.0;
    return std::norm(target.amp.dot(v)) / n2;
  };

  auto base_for = [&](double T) -> Vec {
    Vec u = apply_attenuation(T, input.amp);
    if (opts.detection == ClassicalDetection::homodyne_x0) {
      const double R = std::sqrt(1.0 - T * T);
      u = apply_exp_annihilation_poly(cx(0, 0), -0.5 * R * R / (T * T), u);
    }
    return u;
  };

  for_index(Ts.size(), [&](std::size_t it) {
    const double T = Ts[it];
    Vec base = base_for(T);
    Slot best;
    for (int im = 0; im < nmag; ++im) {
      const double mag = im * opts.alpha_step;
      const int nph = (im == 0) ? 1 : opts.phase_steps;
      for (int ip = 0; ip < nph; ++ip) {
        const double ph = 2.0 * kPi * ip / opts.phase_steps;
        const cx alpha = mag * std::exp(cx(0, ph));
        const double F = eval(alpha, T, base);
        if (F > best.F) best = Slot{F, alpha, T};
      }
    }
    slots[it] = best;
  }, opts.exec);

  Slot best;
  for (const Slot& s : slots) {
    if (s.F > best.F) best = s;
  }

  // Coordinate refinement on (|alpha|, arg alpha, T).
  double mag = std::abs(best.alpha), ph = std::arg(best.alpha), T = best.T;
  for (int round = 0; round < 2; ++round) {
    Vec base = base_for(T);
    golden_max(
        [&](double m) { return eval(m * std::exp(cx(0, ph)), T, base); },
        std::max(0.0, mag - opts.alpha_step),
        std::min(opts.alpha_max, mag + opts.alpha_step), 24, &mag);
    if (mag > 1e-9) {
      golden_max(
          [&](double p) { return eval(mag * std::exp(cx(0, p)), T, base); },
          ph - 2.0 * kPi / opts.phase_steps, ph + 2.0 * kPi / opts.phase_steps,
          24, &ph);
    }
    golden_max(
        [&](double t) {
          return eval(mag * std::exp(cx(0, ph)), t, base_for(t));
        },
        std::max(0.01, T - opts.T_step), std::min(0.995, T + opts.T_step), 20,
        &T);
  }
  Vec base = base_for(T);
  ClassicalReport rep;
  rep.alpha = mag * std::exp(cx(0, ph));
  rep.T = T;
  rep.F = eval(rep.alpha, T, base);
  rep.boundary_warning =
      (mag > opts.alpha_max - opts.alpha_step) ||
      (T < opts.T_min + 0.5 * opts.T_step) || (T > opts.T_max - 0.5 * opts.T_step);
  return rep;
}

GaussianReport gaussian_threshold(const FockVector& input,
                                  const FockVector& target,
                                  const GaussianOptions& opts) {
  const int dim = input.dim();
  if (target.dim() != dim) {
    throw std::domain_error("gaussian_threshold: dimension mismatch");
  }
  const int nd = static_cast<int>(std::round(opts.disp_max / opts.disp_step)) + 1;
  const int ns =
      static_cast<int>(std::round(opts.squeeze_max / opts.squeeze_step)) + 1;

  // Precompute D(-d)|target> and S(z)|input>, normalized to compensate the
  // truncated tails of the exact unitaries.
  struct Cand {
    cx par;
    Vec vec;
  };
  std::vector<Cand> ds;
  ds.reserve(1 + (nd - 1) * opts.phase_steps);
  for (int im = 0; im < nd; ++im) {
    const double mag = im * opts.disp_step;
    const int nph = (im == 0) ? 1 : opts.phase_steps;
    for (int ip = 0; ip < nph; ++ip) {
      const double phd = 2.0 * kPi * ip / opts.phase_steps;
      ds.push_back({mag * std::exp(cx(0, phd)), Vec()});
    }
  }
  std::vector<Cand> zs;
  zs.reserve(1 + (ns - 1) * opts.phase_steps);
  for (int im = 0; im < ns; ++im) {
    const double mag = im * opts.squeeze_step;
    if (opts.squeeze_phase_locked) {
      zs.push_back({mag * std::exp(cx(0, kPi)), Vec()});
      continue;
    }
    const int nph = (im == 0) ? 1 : opts.phase_steps;
    for (int ip = 0; ip < nph; ++ip) {
      const double phz = 2.0 * kPi * ip / opts.phase_steps;
      zs.push_back({mag * std::exp(cx(0, phz)), Vec()});
    }
  }
  for_index(ds.size(), [&](std::size_t i) {
    Vec u = apply_displacement_vec(-ds[i].par, target.amp);
    ds[i].vec = u / u.norm();
  }, opts.exec);
  for_index(zs.size(), [&](std::size_t i) {
    Vec u = apply_squeeze_vec(zs[i].par, input.amp);
    zs[i].vec = u / u.norm();
  }, opts.exec);

  struct Slot {
    double F = -1.0;
    cx d{0, 0}, z{0, 0};
  };
  std::vector<Slot> slots(ds.size());
  for_index(ds.size(), [&](std::size_t i) {
    Slot best;
    for (std::size_t j = 0; j < zs.size(); ++j) {
      const double F = std::norm(ds[i].vec.dot(zs[j].vec));
      if (F > best.F) best = Slot{F, ds[i].par, zs[j].par};
    }
    slots[i] = best;
  }, opts.exec);

  Slot best;
  for (const Slot& s : slots) {
    if (s.F > best.F) best = s;
  }

  auto eval = [&](cx d, cx z) -> double {
    Vec u = apply_displacement_vec(-d, target.amp);
    u /= u.norm();
    Vec v = apply_squeeze_vec(z, input.amp);
    v /= v.norm();
    return std::norm(u.dot(v));
  };
  double dm = std::abs(best.d), dp = std::arg(best.d);
  double zm = std::abs(best.z);
  double zp = opts.squeeze_phase_locked ? kPi : std::arg(best.z);
  for (int round = 0; round < 2; ++round) {
    golden_max([&](double m) { return eval(m * std::exp(cx(0, dp)),
                                           zm * std::exp(cx(0, zp))); },
               std::max(0.0, dm - opts.disp_step),
               std::min(opts.disp_max, dm + opts.disp_step), 24, &dm);
    if (dm > 1e-9) {
      golden_max([&](double p) { return eval(dm * std::exp(cx(0, p)),
                                             zm * std::exp(cx(0, zp))); },
                 dp - 2.0 * kPi / opts.phase_steps,
                 dp + 2.0 * kPi / opts.phase_steps, 24, &dp);
    }
    golden_max([&](double m) { return eval(dm * std::exp(cx(0, dp)),
                                           m * std::exp(cx(0, zp))); },
               std::max(0.0, zm - opts.squeeze_step),
               std::min(opts.squeeze_max, zm + opts.squeeze_step), 24, &zm);
    if (!opts.squeeze_phase_locked && zm > 1e-9) {
      golden_max([&](double p) { return eval(dm * std::exp(cx(0, dp)),
                                             zm * std::exp(cx(0, p))); },
                 zp - 2.0 * kPi / opts.phase_steps,
                 zp + 2.0 * kPi / opts.phase_steps, 24, &zp);
    }
  }
  GaussianReport rep;
  rep.displacement = dm * std::exp(cx(0, dp));
  rep.squeeze = zm * std::exp(cx(0, zp));
  rep.F = eval(rep.displacement, rep.squeeze);
  rep.boundary_warning = (dm > opts.disp_max - opts.disp_step) ||
                         (zm > opts.squeeze_max - opts.squeeze_step);
  return rep;
}

namespace {

struct BranchData {
  double w1, w0;  // branch weights
  double F1, F0;  // branch fidelities against the target
};

BranchData corrected_branch_data(const FockVector& input, const FockVector& target,
                                 cx lm, cx lp, double T) {
  GateSpec spec = resolve_gate_settings(lm, lp, T);
  CorrectedBranches br = corrected_branch_operators(spec, input.dim());
  Vec v1 = br.one * input.amp;
  Vec v0 = br.vac * input.amp;
  BranchData d;
  d.w1 = v1.squaredNorm();
  d.w0 = v0.squaredNorm();
  d.F1 = std::norm(target.amp.dot(v1)) / d.w1;
  d.F0 = std::norm(target.amp.dot(v0)) / d.w0;
  return d;
}

double mix_fidelity(const BranchData& d, double eta) {
  const double num = eta * d.w1 * d.F1 + (1.0 - eta) * d.w0 * d.F0;
  const double den = eta * d.w1 + (1.0 - eta) * d.w0;
  return num / den;
}

}  // namespace

EfficiencyCurve critical_efficiency(const FockVector& input, cx lm, cx lp,
                                    double threshold,
                                    const std::vector<double>& T_grid,
                                    Exec exec) {
  if (!(threshold > 0.0) || !(threshold < 1.0)) {
    throw std::domain_error("critical_efficiency: threshold must lie in (0,1)");
  }
  FockVector target(ideal_gate_operator(lm, lp, input.dim()) * input.amp);
  target.normalize();

  EfficiencyCurve curve;
  curve.T = T_grid;
  curve.F_eta1.resize(T_grid.size());
  curve.eta_c.assign(T_grid.size(), std::numeric_limits<double>::quiet_NaN());
  std::vector<char> monotone(T_grid.size(), 1);

  for_index(T_grid.size(), [&](std::size_t i) {
    BranchData d = corrected_branch_data(input, target, lm, lp, T_grid[i]);
    curve.F_eta1[i] = d.F1;
    // monotonicity of F(eta) on a grid
    double prev = -1.0;
    for (int k = 0; k <= 10; ++k) {
      double F = mix_fidelity(d, 0.1 * k);
      if (F < prev - 1e-12) monotone[i] = 0;
      prev = F;
    }
    if (d.F1 < threshold) return;  // unreachable at this T
    if (mix_fidelity(d, 0.0) >= threshold) {
      curve.eta_c[i] = 0.0;
      return;
    }
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 60; ++it) {
      double mid = 0.5 * (lo + hi);
      if (mix_fidelity(d, mid) >= threshold) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    curve.eta_c[i] = 0.5 * (lo + hi);
  }, exec);

  curve.monotone_valid = true;
  for (char m : monotone) curve.monotone_valid = curve.monotone_valid && m;
  curve.eta_c_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < T_grid.size(); ++i) {
    if (!std::isnan(curve.eta_c[i]) && curve.eta_c[i] < curve.eta_c_min) {
      curve.eta_c_min = curve.eta_c[i];
      curve.T_at_min = T_grid[i];
      curve.reachable = true;
    }
  }
  if (!curve.reachable) curve.eta_c_min = std::numeric_limits<double>::quiet_NaN();
  return curve;
}

std::vector<SweepRow> fidelity_vs_T_sweep(const FockVector& input, cx lm, cx lp,
                                          const std::vector<double>& eta_list,
                                          const std::vector<double>& T_grid,
                                          Exec exec) {
  FockVector target(ideal_gate_operator(lm, lp, input.dim()) * input.amp);
  target.normalize();
  std::vector<SweepRow> rows(eta_list.size() * T_grid.size());
  for_index(T_grid.size(), [&](std::size_t i) {
    BranchData d = corrected_branch_data(input, target, lm, lp, T_grid[i]);
    for (std::size_t j = 0; j < eta_list.size(); ++j) {
      rows[i * eta_list.size() + j] =
          SweepRow{T_grid[i], eta_list[j], mix_fidelity(d, eta_list[j])};
    }
  }, exec);
  return rows;
}

namespace {

struct CachedBranches {
  TwoModeVec phi1, phi0;
  int ds, dl;
};

CachedBranches evolve_for_T(const FockVector& input, double T) {
  CachedBranches cb;
  cb.ds = input.dim();
  cb.dl = input.dim();
  TwoModeOp U = bs_unitary(T, cb.ds, cb.dl);
  cb.phi1 = U * joint_state(input.amp, number_state(1, cb.dl).amp);
  cb.phi0 = U * joint_state(input.amp, number_state(0, cb.dl).amp);
  return cb;
}

struct FPPair {
  double F, P;
};

FPPair window_fp_cached(const CachedBranches& cb, const Vec& target, double eta,
                        double theta, double x0, double eps, int nodes) {
  QuadRule rule = gauss_legendre(nodes, x0 - eps, x0 + eps);
  double P = 0.0, num = 0.0;
  Vec phi(cb.ds);
  for (int i = 0; i < nodes; ++i) {
    Eigen::RowVectorXcd bra = quadrature_bra(rule.nodes[i], theta, cb.dl);
    if (eta > 0.0) {
      for (int m = 0; m < cb.ds; ++m) {
        cx acc = 0.0;
        for (int j = 0; j < cb.dl; ++j) acc += bra(j) * cb.phi1(m * cb.dl + j);
        phi(m) = acc;
      }
      P += eta * rule.weights[i] * phi.squaredNorm();
      num += eta * rule.weights[i] * std::norm(target.dot(phi));
    }
    if (eta < 1.0) {
      for (int m = 0; m < cb.ds; ++m) {
        cx acc = 0.0;
        for (int j = 0; j < cb.dl; ++j) acc += bra(j) * cb.phi0(m * cb.dl + j);
        phi(m) = acc;
      }
      P += (1.0 - eta) * rule.weights[i] * phi.squaredNorm();
      num += (1.0 - eta) * rule.weights[i] * std::norm(target.dot(phi));
    }
  }
  return FPPair{P > 0 ? num / P : 0.0, P};
}

// Solve eps so that P(eps) = P_target; returns false when unreachable.
bool solve_eps(const CachedBranches& cb, const Vec& target, double eta,
               double theta, double x0, double P_target, int nodes,
               double* eps_out, FPPair* fp_out) {
  double lo = 1e-4, hi = 6.0;
  FPPair at_hi = window_fp_cached(cb, target, eta, theta, x0, hi, nodes);
  if (at_hi.P < P_target) return false;
  FPPair fp{0, 0};
  for (int it = 0; it < 40; ++it) {
    double mid = 0.5 * (lo + hi);
    fp = window_fp_cached(cb, target, eta, theta, x0, mid, nodes);
    (fp.P > P_target ? hi : lo) = mid;
  }
  *eps_out = 0.5 * (lo + hi);
  *fp_out = window_fp_cached(cb, target, eta, theta, x0, *eps_out, nodes);
  return true;
}

}  // namespace

ConstrainedPoint best_f_at_success(const FockVector& input, cx lm, cx lp,
                                   double eta, double P_target, Exec exec) {
  FockVector target(ideal_gate_operator(lm, lp, input.dim()) * input.amp);
  target.normalize();

  std::vector<double> Ts;
  for (double T = 0.35; T <= 0.951; T += 0.025) Ts.push_back(T);
  const int nth = 8, nx = 21;
  const int scan_nodes = 24;

  std::vector<ConstrainedPoint> slots(Ts.size());
  for_index(Ts.size(), [&](std::size_t it) {
    CachedBranches cb = evolve_for_T(input, Ts[it]);
    ConstrainedPoint best;
    for (int ith = 0; ith < nth; ++ith) {
      const double theta = 2.0 * kPi * ith / nth;
      for (int ix = 0; ix < nx; ++ix) {
        const double x0 = 2.5 * ix / (nx - 1);
        double eps;
        FPPair fp;
        if (!solve_eps(cb, target.amp, eta, theta, x0, P_target, scan_nodes,
                       &eps, &fp)) {
          continue;
        }
        if (fp.F > best.F) {
          best.F = fp.F;
          best.P = fp.P;
          best.epsilon = eps;
          best.setup = SharpSetup{Ts[it], x0, theta, fp.F};
        }
      }
    }
    slots[it] = best;
  }, exec);

  ConstrainedPoint best;
  for (const ConstrainedPoint& s : slots) {
    if (s.F > best.F) best = s;
  }

  // Coordinate refinement with the F-at-P objective.
  double T = best.setup.T, x0 = best.setup.x0, theta = best.setup.theta;
  auto objective = [&](double Tt, double x, double th) -> double {
    CachedBranches cb = evolve_for_T(input, Tt);
    double eps;
    FPPair fp;
    if (!solve_eps(cb, target.amp, eta, th, x, P_target, 2 * scan_nodes, &eps,
                   &fp)) {
      return -1.0;
    }
    return fp.F;
  };
  for (int round = 0; round < 2; ++round) {
    golden_max([&](double t) { return objective(t, x0, theta); },
               std::max(0.05, T - 0.03), std::min(0.99, T + 0.03), 16, &T);
    {
      CachedBranches cb = evolve_for_T(input, T);
      auto fx = [&](double x) {
        double eps;
        FPPair fp;
        if (!solve_eps(cb, target.amp, eta, theta, x, P_target, 2 * scan_nodes,
                       &eps, &fp)) {
          return -1.0;
        }
        return fp.F;
      };
      golden_max(fx, std::max(0.0, x0 - 0.15), x0 + 0.15, 20, &x0);
      auto fth = [&](double th) {
        double eps;
        FPPair fp;
        if (!solve_eps(cb, target.amp, eta, th, x0, P_target, 2 * scan_nodes,
                       &eps, &fp)) {
          return -1.0;
        }
        return fp.F;
      };
      golden_max(fth, theta - 0.4, theta + 0.4, 20, &theta);
    }
  }
  CachedBranches cb = evolve_for_T(input, T);
  double eps;
  FPPair fp;
  ConstrainedPoint out;
  if (solve_eps(cb, target.amp, eta, theta, x0, P_target, 128, &eps, &fp)) {
    out.F = fp.F;
    out.P = fp.P;
    out.epsilon = eps;
    out.setup = SharpSetup{T, x0, theta, fp.F};
  } else {
    out = best;
  }
  return out;
}

FPCurve f_vs_p_curve(const FockVector& input, cx lm, cx lp, double eta,
                     const std::vector<double>& eps_grid, Exec exec) {
  FockVector target(ideal_gate_operator(lm, lp, input.dim()) * input.amp);
  target.normalize();
  FPCurve curve;
  curve.setup = optimize_sharp_setup(input, target, eta);
  GateSpec spec;
  spec.variant = GateVariant::bs_homodyne;
  spec.T = curve.setup.T;
  spec.theta = curve.setup.theta;
  spec.x0 = curve.setup.x0;
  spec.corrected = false;
  AncillaModel anc;
  anc.eta = eta;
  curve.rows.resize(eps_grid.size());
  for_index(eps_grid.size(), [&](std::size_t i) {
    Window w;
    w.x0 = curve.setup.x0;
    w.epsilon = eps_grid[i];
    WindowedFP fp = windowed_fidelity(input, target, spec, anc, w);
    curve.rows[i] = FPRow{eps_grid[i], fp.F, fp.P};
  }, exec);
  return curve;
}

}  // namespace xgs
