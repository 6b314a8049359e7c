#ifndef XGS_TWOMODE_HPP
#define XGS_TWOMODE_HPP

#include <Eigen/Dense>

#include "xgs/fock.hpp"

namespace xgs {

// Joint objects live on system (dim ds) x ancilla (dim dl) with flat index
// n_s * dl + n_l.
using TwoModeVec = Eigen::VectorXcd;
using TwoModeOp = Eigen::MatrixXcd;

// Beam-splitter unitary exp[arccos(T) (a^+ b - a b^+)], built block by block
// over total photon number, so it conserves photon number exactly.
// Convention: T = cos(kappa t), R = sqrt(1 - T^2) >= 0, equal to the factored
// form T^n exp(-R b^+ a) exp(R b a^+) T^(-n_L).
TwoModeOp bs_unitary(double T, int ds, int dl);

// QND unitary exp[-i kappa X (x) P_L], through the eigendecompositions of the
// two commuting Hermitian factors.
TwoModeOp qnd_unitary(double kappa, int ds, int dl);

// psi (x) anc as a joint vector.
TwoModeVec joint_state(const Vec& system, const Vec& ancilla);

struct Projection {
  FockVector state;       // normalized conditional state
  Vec unnormalized;       // before normalization
  double weight;          // squared norm: probability, or density for
                          // quadrature bras
};

// Contract the ancilla index with a bra row (bra coefficients as given; no
// implicit conjugation).  Throws degenerate_outcome_error on zero weight.
Projection project_ancilla(const TwoModeVec& state, const Eigen::RowVectorXcd& bra,
                           int ds, int dl);

// Row vector of <0| exp[A* b + B* b^2] in the Fock basis (unnormalized).
Eigen::RowVectorXcd gaussian_bra(cx A, cx B, int dim);

// Dirac-normalized quadrature eigenbra <x_theta|, i.e. psi_n(x) e^{-i n theta}.
Eigen::RowVectorXcd quadrature_bra(double x, double theta, int dim);

struct HeterodyneBra {
  Eigen::RowVectorXcd row;
  cx A;
  cx B;
};

// Unbalanced-heterodyne projection: split the mode at (tau, sqrt(1-tau^2)),
// measure X on one port at x and P on the other at p.  A = sqrt2 (x tau - i p r),
// B = (r^2 - tau^2)/2.  tau in (0,1) strictly; the tau -> {0,1} boundary is the
// single-homodyne limit and is rejected here.
HeterodyneBra heterodyne_bra(double x, double p, double tau, int dim);

// Effective system operator (I (x) bra) U (I (x) anc).
ModeOp conditional_operator(const TwoModeOp& U, const Vec& ancilla,
                            const Eigen::RowVectorXcd& bra, int ds, int dl);

}  // namespace xgs

#endif
