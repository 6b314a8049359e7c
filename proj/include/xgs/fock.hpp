#ifndef XGS_FOCK_HPP
#define XGS_FOCK_HPP

#include <Eigen/Dense>
#include <complex>

#include "xgs/errors.hpp"

namespace xgs {

using cx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

// Dense operator on one truncated mode.
using ModeOp = Eigen::MatrixXcd;

// Dense density matrix of one truncated mode.
using DensityMatrix = Eigen::MatrixXcd;

// Default tail-weight bound enforced by the global truncation guard.
inline constexpr double kTailGuard = 1e-6;

// State of one bosonic mode over number states |0 .. dim-1>.
//
// pre_trunc_tail records the weight that an exact (infinite-dimensional)
// construction carried above the truncation before renormalizing;
// trunc_warning is set when that weight was large enough to matter.
struct FockVector {
  Vec amp;
  double pre_trunc_tail = 0.0;
  bool trunc_warning = false;

  FockVector() = default;
  explicit FockVector(Vec a) : amp(std::move(a)) {}

  int dim() const { return static_cast<int>(amp.size()); }
  double norm() const { return amp.norm(); }
  void normalize() { amp /= amp.norm(); }

  // Weight held by the top k Fock levels.
  double tail_weight(int k) const;
};

// ---- states -----------------------------------------------------------

FockVector number_state(int n, int dim);

// Coherent state |beta>.  The exact tail above the truncation is recorded;
// the guard throws if it exceeds `tail_bound` and enforce is true.
FockVector coherent_state(cx beta, int dim, bool enforce_guard = false,
                          double tail_bound = kTailGuard);

// Squeezed vacuum exp[-xi/2 a^+2 + xi*/2 a^2]|0>, even amplitudes only.
FockVector squeezed_vacuum(cx xi, int dim, bool enforce_guard = false,
                           double tail_bound = kTailGuard);

// ---- operators --------------------------------------------------------

ModeOp annihilation_op(int dim);
ModeOp creation_op(int dim);
ModeOp number_op(int dim);

// X_theta = (a e^{-i theta} + a^+ e^{i theta}) / sqrt(2); theta = 0 gives X,
// theta = pi/2 gives P.  Vacuum quadrature variance is 1/2.
ModeOp quadrature_op(double theta, int dim);

// diag(T^n)
ModeOp attenuation_op(double T, int dim);

// Displacement exp[alpha a^+ - alpha* a] via Hermitian eigendecomposition.
ModeOp displacement_op(cx alpha, int dim);

// Squeeze exp[-zeta/2 a^+2 + zeta*/2 a^2] via Hermitian eigendecomposition.
ModeOp squeeze_op(cx zeta, int dim);

// exp[c1 a + c2 a^2]; exact because the generator is nilpotent on the
// truncated space (the series terminates).
ModeOp exp_annihilation_poly(cx c1, cx c2, int dim);

// exp[c1 a^+ + c2 a^+2] = exp_annihilation_poly(c1*, c2*)^H
ModeOp exp_creation_poly(cx c1, cx c2, int dim);

// Eigendecomposition of the truncated position operator X.
struct XBasis {
  Eigen::VectorXd values;
  Mat vectors;  // columns are eigenvectors
};
XBasis x_eigenbasis(int dim);

// f(X) for scalar complex-valued f, through the X eigendecomposition.
template <class F>
ModeOp function_of_x(F&& f, int dim) {
  XBasis xb = x_eigenbasis(dim);
  Vec d(dim);
  for (int i = 0; i < dim; ++i) d(i) = f(xb.values(i));
  return xb.vectors * d.asDiagonal() * xb.vectors.adjoint();
}

// ---- wavefunctions and fidelity ----------------------------------------

// Row of Hermite functions <x|n> for n < dim, by the normalized three-term
// recurrence (no raw Hermite polynomials or factorials are formed).
Eigen::VectorXd position_wavefunction(double x, int dim);

// |<a|b>|^2 for normalized pure states.
double fidelity(const FockVector& a, const FockVector& b);

// <t|rho|t> / Tr rho for a mixed state against a normalized pure target.
double fidelity(const DensityMatrix& rho, const FockVector& target);

// ---- vector fast paths --------------------------------------------------

Vec apply_annihilation(const Vec& v);
Vec apply_creation(const Vec& v);
// exp[c1 a + c2 a^2] v without forming the matrix.
Vec apply_exp_annihilation_poly(cx c1, cx c2, const Vec& v);
// exp[c1 a^+ + c2 a^+2] v without forming the matrix.
Vec apply_exp_creation_poly(cx c1, cx c2, const Vec& v);
Vec apply_attenuation(double T, const Vec& v);

// Throws truncation_error when the state keeps more than `bound` weight in
// its top three levels and the caller did not override.
void tail_guard(const FockVector& s, double bound = kTailGuard,
                bool override_guard = false);

}  // namespace xgs

#endif
