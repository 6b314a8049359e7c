// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Every tolerance is pinned here.
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "xgs/benchmarks.hpp"
#include "xgs/fock.hpp"
#include "xgs/gate.hpp"
#include "xgs/polynomial.hpp"
#include "xgs/quadrature.hpp"
#include "xgs/stateprep.hpp"
#include "xgs/synthesis.hpp"
#include "xgs/twomode.hpp"

using namespace xgs;

namespace {

int g_failures = 0;

struct Criterion {
  std::string name;
  bool ok = true;
  std::string detail;

  void check(bool cond, const std::string& what) {
    if (!cond) ok = false;
    detail += (cond ? "\n    [ok]   " : "\n    [FAIL] ") + what;
  }
  void finish() const {
    std::printf("%s criterion %s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
  }
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2e", v);
  return buf;
}

FockVector ideal_target(const FockVector& in, cx lm, cx lp) {
  FockVector t(ideal_gate_operator(lm, lp, in.dim()) * in.amp);
  t.normalize();
  return t;
}

double phase_aligned_distance(Vec a, Vec b) {
  a /= a.norm();
  b /= b.norm();
  cx ov = b.dot(a);
  if (std::abs(ov) > 0) a *= std::conj(ov) / std::abs(ov);
  return (a - b).norm();
}

Vec random_support_state(int support, int dim, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  Vec v = Vec::Zero(dim);
  for (int n = 0; n < support; ++n) v(n) = cx(u(rng), u(rng));
  v /= v.norm();
  return v;
}

const cx kLm(1.5, 0.0);
const cx kLp(-1.5, 0.0);

// Benchmark input states in the calibrated orientations: coherent amplitudes
// real, squeezed parameters on the imaginary axis.
struct Fig2Inputs {
  FockVector coh01, coh10, sq01, sq10, fock1;
  double thr_coh01, thr_coh10, thr_sq01, thr_sq10, thr_fock1;
};

Fig2Inputs make_inputs(int dim) {
  Fig2Inputs in{coherent_state(cx(0.1, 0), dim),
                coherent_state(cx(1.0, 0), dim),
                squeezed_vacuum(cx(0, 0.1), dim),
                squeezed_vacuum(cx(0, 1.0), dim),
                number_state(1, dim),
                0, 0, 0, 0, 0};
  in.thr_coh01 = classical_threshold(in.coh01, ideal_target(in.coh01, kLm, kLp)).F;
  in.thr_coh10 = classical_threshold(in.coh10, ideal_target(in.coh10, kLm, kLp)).F;
  in.thr_sq01 = classical_threshold(in.sq01, ideal_target(in.sq01, kLm, kLp)).F;
  in.thr_sq10 = classical_threshold(in.sq10, ideal_target(in.sq10, kLm, kLp)).F;
  in.thr_fock1 = classical_threshold(in.fock1, ideal_target(in.fock1, kLm, kLp)).F;
  return in;
}

}  // namespace

int main() {
  const int dim = 40;
  std::printf("acceptance suite: gate 1 + 1.5a - 1.5a^+, dim = %d\n", dim);
  std::fflush(stdout);

  Fig2Inputs in = make_inputs(dim);

  {  // 1. classical benchmarks
    Criterion c{"1 (classical benchmarks)"};
    c.check(std::abs(in.thr_coh01 - 0.79) <= 0.01,
            "coherent 0.1: " + num(in.thr_coh01) + " vs 0.79 +- 0.01");
    c.check(std::abs(in.thr_coh10 - 0.79) <= 0.01,
            "coherent 1.0: " + num(in.thr_coh10) + " vs 0.79 +- 0.01");
    c.check(std::abs(in.thr_sq01 - 0.79) <= 0.01,
            "squeezed 0.1: " + num(in.thr_sq01) + " vs 0.79 +- 0.01");
    c.check(std::abs(in.thr_fock1 - 0.52) <= 0.01,
            "single photon: " + num(in.thr_fock1) + " vs 0.52 +- 0.01");
    c.finish();
  }

  std::vector<double> Tgrid;
  for (double T = 0.05; T <= 0.99; T += 0.005) Tgrid.push_back(T);

  {  // 2. gaussian benchmark and the resulting critical efficiency
    Criterion c{"2 (Gaussian benchmark for the single photon)"};
    GaussianReport g =
        gaussian_threshold(in.fock1, ideal_target(in.fock1, kLm, kLp));
    c.check(std::abs(g.F - 0.82) <= 0.02,
            "benchmark: " + num(g.F) + " vs 0.82 +- 0.02");
    EfficiencyCurve e = critical_efficiency(in.fock1, kLm, kLp, 0.82, Tgrid);
    c.check(std::abs(e.eta_c_min - 0.7) <= 0.05,
            "eta_c: " + num(e.eta_c_min) + " vs 0.7 +- 0.05");
    c.check(std::abs(e.T_at_min - 0.734) <= 0.05,
            "T at minimum: " + num(e.T_at_min) + " vs 0.734 +- 0.05");
    c.finish();
  }

  {  // 3. critical efficiencies against the classical thresholds
    Criterion c{"3 (critical efficiencies)"};
    EfficiencyCurve e1 =
        critical_efficiency(in.coh01, kLm, kLp, in.thr_coh01, Tgrid);
    c.check(std::abs(e1.eta_c_min - 0.55) <= 0.05,
            "coherent 0.1: " + num(e1.eta_c_min) + " vs 0.55 +- 0.05");
    EfficiencyCurve e2 =
        critical_efficiency(in.coh10, kLm, kLp, in.thr_coh10, Tgrid);
    c.check(std::abs(e2.eta_c_min - 0.35) <= 0.05,
            "coherent 1.0: " + num(e2.eta_c_min) + " vs 0.35 +- 0.05");
    EfficiencyCurve e3 =
        critical_efficiency(in.sq01, kLm, kLp, in.thr_sq01, Tgrid);
    c.check(std::abs(e3.eta_c_min - 0.7) <= 0.05,
            "squeezed 0.1: " + num(e3.eta_c_min) + " vs 0.7 +- 0.05");
    EfficiencyCurve e4 =
        critical_efficiency(in.sq10, kLm, kLp, in.thr_sq10, Tgrid);
    c.check(std::abs(e4.eta_c_min - 0.6) <= 0.05,
            "squeezed 1.0: " + num(e4.eta_c_min) + " vs 0.6 +- 0.05");
    EfficiencyCurve e5 =
        critical_efficiency(in.fock1, kLm, kLp, in.thr_fock1, Tgrid);
    c.check(std::abs(e5.eta_c_min - 0.12) <= 0.05,
            "single photon: " + num(e5.eta_c_min) + " vs 0.12 +- 0.05");
    c.check(std::abs(e5.T_at_min - 0.45) <= 0.05,
            "single photon T: " + num(e5.T_at_min) + " vs 0.45 +- 0.05");
    c.finish();
  }

  {  // 4. window trade-off
    Criterion c{"4 (homodyne window trade-off)"};
    const int d32 = 32;
    FockVector f1 = number_state(1, d32);
    ConstrainedPoint p1 = best_f_at_success(f1, kLm, kLp, 1.0, 0.10);
    c.check(std::abs(p1.F - 0.95) <= 0.02 && std::abs(p1.P - 0.10) <= 0.02,
            "single photon: F = " + num(p1.F) + ", P = " + num(p1.P) +
                " vs (0.95, 0.10) +- 0.02");
    FockVector cb = coherent_state(cx(0, 1.0), d32);
    std::vector<double> eps;
    for (double e = 1e-3; e <= 1.0; e *= 1.15) eps.push_back(e);
    FPCurve curve = f_vs_p_curve(cb, kLm, kLp, 1.0, eps);
    double Fat010 = 0.0;
    for (std::size_t i = 1; i < curve.rows.size(); ++i) {
      if (curve.rows[i].P >= 0.10) {
        // interpolate in P
        const FPRow& a = curve.rows[i - 1];
        const FPRow& b = curve.rows[i];
        double w = (0.10 - a.P) / (b.P - a.P);
        Fat010 = a.F + w * (b.F - a.F);
        break;
      }
    }
    c.check(std::abs(Fat010 - 0.91) <= 0.02,
            "coherent (im) 1.0: F at P = 0.10 is " + num(Fat010) +
                " vs 0.91 +- 0.02");
    FPCurve curve1 = f_vs_p_curve(f1, kLm, kLp, 1.0, eps);
    bool exists = false;
    for (const FPRow& r : curve1.rows) {
      if (r.P >= 0.05 && r.F > in.thr_fock1) exists = true;
    }
    c.check(exists, "a point with P >= 0.05 above the classical threshold");
    c.finish();
  }

  {  // 5. cat generation
    Criterion c{"5 (cat generation)"};
    double F = cat_fidelity(3.0, 16, 80);
    c.check(std::abs(F - 0.993) <= 0.002,
            "beta 3, n_max 16: " + num(F) + " vs 0.993 +- 0.002");
    bool monotone = true;
    for (double beta : {1.0, 2.0, 3.0}) {
      double prev = -1.0;
      for (int nmax = 0; nmax <= 20; nmax += 2) {
        double Fn = cat_fidelity(beta, nmax, 100);
        if (Fn < prev - 1e-12) monotone = false;
        prev = Fn;
      }
    }
    c.check(monotone, "fidelity non-decreasing in n_max for beta in {1,2,3}");
    c.finish();
  }

  {  // 6. oracle equivalence of every analytic Kraus form
    Criterion c{"6 (two-mode oracle equivalence)"};
    const int support = 30;  // random inputs at dim 30
    std::mt19937 rng(2026);
    auto battery = [&](int sim, const ModeOp& analytic, const TwoModeOp& U,
                       const Vec& anc, const Eigen::RowVectorXcd& bra,
                       const std::string& label) {
      double worst = 0.0;
      for (int k = 0; k < 20; ++k) {
        Vec psi = random_support_state(support, sim, rng);
        Projection p = project_ancilla(U * joint_state(psi, anc), bra, sim, sim);
        worst = std::max(worst,
                         phase_aligned_distance(analytic * psi, p.unnormalized));
      }
      c.check(worst <= 1e-8,
              label + ": worst distance " + sci(worst) + " <= 1e-8");
    };

    {
      const int sim = 44;
      Vec anc1 = number_state(1, sim).amp;
      Vec anc0 = number_state(0, sim).amp;
      TwoModeOp U = bs_unitary(0.8, sim, sim);
      battery(sim, kraus_bs_homodyne(0.8, 0.7, 0.9, sim), U, anc1,
              quadrature_bra(0.7, 0.9, sim), "homodyne gate");
      HeterodyneBra hb = heterodyne_bra(0.8, -0.3, 0.6, sim);
      TwoModeOp U2 = bs_unitary(0.85, sim, sim);
      battery(sim, kraus_bs_heterodyne(0.85, hb.A, hb.B, sim), U2, anc1,
              hb.row, "heterodyne gate");
      cx Ap(0.4, 0.2), Bp(0.25, -0.1);
      battery(sim, correction_bs(0.85, Ap, Bp, sim), U2, anc0,
              gaussian_bra(Ap, Bp, sim), "vacuum correction pass");
    }
    {
      // the coherent-ancilla chain climbs the ladder; extra headroom
      const int sim = 52;
      cx alpha(0.8, 0.5);
      TwoModeOp U3 = bs_unitary(0.75, sim, sim);
      battery(sim, classical_gate(alpha, 0.75, sim), U3,
              coherent_state(alpha, sim).amp, quadrature_bra(0.0, 0.0, sim),
              "coherent-ancilla gate");
    }
    {
      const int sim = 44;
      const double kappa = 0.5;
      Vec anc1 = number_state(1, sim).amp;
      Vec anc0 = number_state(0, sim).amp;
      cx A(0.5, -0.3), B(0.2, 0.1);
      TwoModeOp U = qnd_unitary(kappa, sim, sim);
      battery(sim, qnd_gate(kappa, A, B, sim), U, anc1,
              gaussian_bra(A, B, sim), "QND gate");
      cx c1(1.0, 0.4);
      Vec anc = anc0 + c1 * anc1;
      anc /= anc.norm();
      Eigen::RowVectorXcd vac_bra = Eigen::RowVectorXcd::Zero(sim);
      vac_bra(0) = 1.0;
      battery(sim, qnd_photon_counting(kappa, c1, sim), U, anc, vac_bra,
              "QND photon counting");
    }
    c.finish();
  }

  {  // 7. correction identity
    Criterion c{"7 (correction identity)"};
    const int d = 40;
    const double T = 0.9;
    const double R = std::sqrt(1 - T * T);
    double worst = 0.0;
    for (cx AB : {cx(0.7, 0.2), cx(0.3, -0.4)}) {
      cx A = AB;
      cx B = 0.3 * AB;
      ModeOp comp = correction_bs(T, -A / T, -B / (T * T), d) *
                    kraus_bs_heterodyne(T, A, B, d);
      ModeOp a = annihilation_op(d);
      ModeOp lin = std::conj(A) * ModeOp::Identity(d, d) -
                   2.0 * std::conj(B) * R * a + R * a.adjoint();
      ModeOp expect = attenuation_op(T * T, d) * lin;
      // proportional comparison
      comp /= comp.norm();
      expect /= expect.norm();
      cx ph = (comp.adjoint() * expect).trace();
      comp *= ph / std::abs(ph);
      worst = std::max(worst, (comp - expect).norm());
    }
    c.check(worst <= 1e-10,
            "composite vs (T'T)^n (A* - 2B* R a + R a^+): " + sci(worst));
    c.finish();
  }

  {  // 8. scheduling identity
    Criterion c{"8 (attenuation scheduling)"};
    const int d = 30;
    DecompositionPlan plan = cubic_plan(0.1);
    std::vector<double> Ts(plan.lambdas.size());
    for (std::size_t i = 0; i < Ts.size(); ++i) Ts[i] = 0.85 + 0.02 * double(i);
    ScheduledForm f = schedule_attenuation(plan, Ts, d);
    double rel = (f.literal - f.collapsed).norm() / f.collapsed.norm();
    c.check(rel <= 1e-10, "literal vs collapsed product: " + sci(rel));
    const double T = 0.85;
    ModeOp a = annihilation_op(d);
    ModeOp Tn = attenuation_op(T, d);
    double c1n = (Tn * a - a * (Tn / T)).norm();
    double c2n = (Tn * a.adjoint() - a.adjoint() * (Tn * T)).norm();
    c.check(c1n <= 1e-12, "T^n a = a T^(n-1): " + sci(c1n));
    c.check(c2n <= 1e-12, "T^n a+ = a+ T^(n+1): " + sci(c2n));
    c.finish();
  }

  {  // 9. cubic factorization
    Criterion c{"9 (cubic factorization)"};
    const double chi = 0.1;
    DecompositionPlan plan = cubic_plan(chi);
    c.check(plan.residual <= 1e-10,
            "reconstruction residual: " + sci(plan.residual));
    const int d = 40;
    ModeOp X = quadrature_op(0.0, d);
    ModeOp prod = ModeOp::Identity(d, d);
    for (cx l : plan.lambdas) prod = prod * (ModeOp::Identity(d, d) + l * X);
    prod *= plan.scale;
    ModeOp direct = ModeOp::Identity(d, d) + cx(0, chi) * X * X * X -
                    0.5 * chi * chi * X * X * X * X * X * X;
    double dist =
        (prod * number_state(0, d).amp - direct * number_state(0, d).amp)
            .norm();
    c.check(dist <= 1e-10,
            "product vs direct polynomial on vacuum: " + sci(dist));
    c.finish();
  }

  {  // 10. single-shot identity
    Criterion c{"10 (single-shot composite)"};
    // The degree-6 ancilla polynomial has heavy Fock tails, so the composite
    // is simulated with headroom and compared on the interior block where
    // both sides have converged.
    const int d = 56, keep = 40;
    const double kappa = 0.5;
    DecompositionPlan plan = cubic_plan(0.1);
    Poly F6 = poly_from_gate_factors(plan.lambdas, plan.scale);
    double worst = 0.0;
    for (const Poly& F : {Poly{cx(1, 0), cx(1, 0)}, F6}) {
      ModeOp op = single_shot_operator(F, kappa, 0.0, d, true);
      ModeOp expect = function_of_x(
          [&](double x) {
            return poly_eval(F, x) * std::exp(-0.5 * kappa * kappa * x * x);
          },
          d);
      ModeOp a = op.topLeftCorner(keep, keep);
      ModeOp b = expect.topLeftCorner(keep, keep);
      a /= a.norm();
      b /= b.norm();
      cx ph = (a.adjoint() * b).trace();
      a *= ph / std::abs(ph);
      worst = std::max(worst, (a - b).norm());
    }
    c.check(worst <= 1e-6,
            "composite vs F(X) exp(-k^2 X^2/2): " + sci(worst));
    c.finish();
  }

  {  // 11. wavefunction generation identity
    Criterion c{"11 (wavefunction generation)"};
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-1, 1);
    double worst = 0.0;
    for (int N : {3, 7, 12}) {
      std::vector<cx> coeff(N + 1);
      for (auto& z : coeff) z = cx(u(rng), u(rng));
      Poly g = wavefunction_to_x_polynomial(coeff);
      const int d = N + 24;
      Vec out = apply_x_polynomial(g, number_state(0, d).amp);
      Vec expect = Vec::Zero(d);
      for (int n = 0; n <= N; ++n) expect(n) = coeff[n];
      worst = std::max(worst, (out - expect).norm() / expect.norm());
    }
    c.check(worst <= 1e-10, "G(X)|0> vs sum c_n |n>: " + sci(worst));
    c.finish();
  }

  {  // 12. numerical hygiene
    Criterion c{"12 (numerical hygiene)"};
    // Hermite orthonormality
    {
      QuadRule rule = gauss_legendre(220, -10.0, 10.0);
      const int nmax = 30;
      Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(nmax, nmax);
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        Eigen::VectorXd row = position_wavefunction(rule.nodes[i], nmax);
        gram += rule.weights[i] * row * row.transpose();
      }
      double worst = 0.0;
      for (int m = 0; m < nmax; ++m) {
        for (int n = 0; n < nmax; ++n) {
          worst = std::max(worst, std::abs(gram(m, n) - (m == n ? 1 : 0)));
        }
      }
      c.check(worst <= 1e-8,
              "Hermite-function orthonormality: " + sci(worst));
    }
    // BS block unitarity
    {
      const int d = 20;
      TwoModeOp U = bs_unitary(0.73, d, d);
      double worst = 0.0;
      for (int m = 0; m < d; ++m) {
        Eigen::MatrixXcd block(m + 1, m + 1);
        for (int i = 0; i <= m; ++i) {
          for (int j = 0; j <= m; ++j) {
            block(i, j) = U(i * d + (m - i), j * d + (m - j));
          }
        }
        worst = std::max(
            worst, (block.adjoint() * block -
                    Eigen::MatrixXcd::Identity(m + 1, m + 1))
                       .norm());
      }
      c.check(worst <= 1e-12, "BS block unitarity: " + sci(worst));
    }
    // determinism: serial and parallel sweeps agree bitwise; repeat runs too
    {
      ClassicalOptions coarse;
      coarse.alpha_step = 0.2;
      coarse.phase_steps = 20;
      coarse.T_step = 0.05;
      ClassicalOptions serial = coarse;
      serial.exec = Exec::serial;
      FockVector t1 = ideal_target(in.fock1, kLm, kLp);
      ClassicalReport a = classical_threshold(in.fock1, t1, coarse);
      ClassicalReport b = classical_threshold(in.fock1, t1, serial);
      ClassicalReport a2 = classical_threshold(in.fock1, t1, coarse);
      c.check(a.F == b.F && a.T == b.T && a.alpha == b.alpha,
              "parallel sweep equals the serial reference bitwise");
      c.check(a.F == a2.F && a.T == a2.T && a.alpha == a2.alpha,
              "repeat run is bitwise identical");
    }
    c.finish();
  }

  std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures;
}
