#ifndef XGS_GATE_HPP
#define XGS_GATE_HPP

#include <optional>

#include "xgs/fock.hpp"
#include "xgs/twomode.hpp"

namespace xgs {

enum class GateVariant {
  bs_homodyne,
  bs_heterodyne,
  qnd_homodyne,
  qnd_photon_counting,
};

// Target coefficients plus resolved physical settings of one elementary gate
// 1 + lambda_- a + lambda_+ a^+.
struct GateSpec {
  cx lambda_minus{0, 0};
  cx lambda_plus{0, 0};
  GateVariant variant = GateVariant::bs_heterodyne;
  double T = 0.9;        // BS transmission (BS variants)
  double kappa = 0.5;    // QND strength (QND variants)
  double theta = 0.0;    // measured quadrature phase
  double x0 = 0.0;       // homodyne outcome
  cx A{0, 0};            // generalized measurement outcome
  cx B{0, 0};
  bool corrected = true;
};

struct AncillaModel {
  double eta = 1.0;      // single-photon efficiency
  double squeeze_r = 0;  // QND ancilla pre-squeezing
  cx c1{0, 0};           // photon-counting variant superposition weight
};

struct GateResult {
  DensityMatrix rho;        // normalized output state
  double success = 0.0;     // probability (windowed) or outcome density
  double attenuation_T = 1; // residual noiseless-attenuation base
  double truncation_tail = 0.0;
};

struct Window {
  double x0 = 0.0;
  double epsilon = 1e-3;
  int n_points = 16;
};

// ---- elementary operators (analytic Kraus forms) ------------------------
//
// Conventions match bs_unitary / gaussian_bra exactly: every operator below
// equals the corresponding two-mode projection (up to overall scale, which
// carries no physics for conditional maps).

// 1 + lm a + lp a^+
ModeOp ideal_gate_operator(cx lm, cx lp, int dim);

// <x_theta| U_BS |1>_L:
// T^n exp[-sqrt2 x e^{-i th} R a - R^2 e^{-2i th} a^2 / 2]
//     (sqrt2 x / T + (R e^{-i th}/T) a + (R e^{i th}/T) a^+)
ModeOp kraus_bs_homodyne(double T, double x, double theta, int dim);

// <A,B| U_BS |1>_L:
// exp[-A* (R/T) a + B* (R^2/T^2) a^2] T^{n-1} (A* - 2 B* R a + R a^+)
// Requires |B| < 1/2 (heterodyne); the |B| = 1/2 boundary is homodyne.
ModeOp kraus_bs_heterodyne(double T, cx A, cx B, int dim);

// Same operator without the |B| validation; used for resolved boundary gates.
ModeOp kraus_bs_gaussian(double T, cx A, cx B, int dim);

// <A',B'| U_BS |0>_L = T'^n exp[-A'* R' a + B'* R'^2 a^2].
// With A' = -A/T, B' = -B/T^2 and R' = R it cancels the error exponential of
// the heterodyne gate exactly.
ModeOp correction_bs(double Tp, cx Ap, cx Bp, int dim);

// <A,B| U_QND |1>_L as a function of X:
// exp[(A* k/sqrt2) X + (B*/2 - 1/4) k^2 X^2] (A* + (2B* - 1) k X / sqrt2)
ModeOp qnd_gate(double kappa, cx A, cx B, int dim);

// <-A,-B| U_QND |0>_L with the schematic squeezed-ancilla compensation
// exp[tanh(r) k^2 X^2 / 2] (both passes' redundant Gaussians):
// exp[-(A* k/sqrt2) X - (B*/2 + 1/4) k^2 X^2 + tanh(r) k^2 X^2 / 2]
ModeOp qnd_correction(double kappa, cx A, cx B, double squeeze_r, int dim);

// <0|_Fock U_QND (|0> + c1 |1>)_L = exp[-k^2 X^2/4] (1 - c1 k X / sqrt2)
ModeOp qnd_photon_counting(double kappa, cx c1, int dim);

// ---- gate resolution and application ------------------------------------

// Solve the physical settings realizing 1 + lm a + lp a^+ at transmission T.
// |lm| < |lp|: heterodyne with B* = -lm/(2 lp), A* = R/lp.
// |lm| = |lp|: homodyne boundary (|B| = 1/2), theta = arg(lp/lm)/2,
//             x0 = R/(sqrt2 |lp|).
// |lm| > |lp| is not reachable by this scheme.
GateSpec resolve_gate_settings(cx lm, cx lp, double T);

// Corrected branch operators in closed form (correction pass in the T' -> 1
// limit, so the residual attenuation is T^n):
//   single-photon branch: T^n (A* - 2 B* R a + R a^+) / T
//   vacuum branch:        T^n
// Exact scalars included; branch weights follow from the returned operators.
struct CorrectedBranches {
  ModeOp one;   // ancilla |1> branch
  ModeOp vac;   // ancilla |0> branch
};
CorrectedBranches corrected_branch_operators(const GateSpec& spec, int dim);

// Sharp-outcome corrected gate with the ancilla mixture
// eta |1><1| + (1-eta) |0><0|; branch weights emerge from the exact branch
// norms.
GateResult realistic_gate_density(const FockVector& input, const GateSpec& spec,
                                  double eta);

// Finite homodyne window: rho(eps) ~ int_{x0-eps}^{x0+eps} dx
//   sum_branch w_branch K_x |psi><psi| K_x^+,
// with exact two-mode evolution per ancilla branch and adaptive
// Gauss-Legendre integration (nodes doubled until P changes < 1e-6 rel).
// No correction pass is applied inside the window.
GateResult apply_gate_windowed(const FockVector& input, const GateSpec& spec,
                               const AncillaModel& ancilla, const Window& window);

// Lightweight F/P evaluation of the same integral against a fixed target.
struct WindowedFP {
  double F;
  double P;
};
WindowedFP windowed_fidelity(const FockVector& input, const FockVector& target,
                             const GateSpec& spec, const AncillaModel& ancilla,
                             const Window& window);

// Scan (T, x0, theta) for the sharp-outcome setup maximizing the conditional
// fidelity with `target` (uncorrected single-pass gate, ancilla mixture eta).
// Deterministic grid scan plus coordinate golden-section refinement.
struct SharpSetup {
  double T;
  double x0;
  double theta;
  double F;
};
SharpSetup optimize_sharp_setup(const FockVector& input, const FockVector& target,
                                double eta);

}  // namespace xgs

#endif
