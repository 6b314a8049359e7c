#include "xgs/twomode.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace xgs {

TwoModeOp bs_unitary(double T, int ds, int dl) {
  if (!(T > 0.0) || T > 1.0) {
    throw std::domain_error("bs_unitary: T must lie in (0, 1]");
  }
  const int dim = ds * dl;
  TwoModeOp U = TwoModeOp::Zero(dim, dim);
  const double angle = std::acos(T);
  for (int m = 0; m <= ds + dl - 2; ++m) {
    // Basis states |n_s, m - n_s> present in the truncated space.
    const int lo = std::max(0, m - dl + 1);
    const int hi = std::min(m, ds - 1);
    const int nb = hi - lo + 1;
    if (nb == 1) {
      U(( lo) * dl + (m - lo), lo * dl + (m - lo)) = 1.0;
      continue;
    }
    // Generator block of a^+ b - a b^+ (real antisymmetric):
    // <n+1, l-1| a^+ b |n, l> = sqrt((n+1) l)
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(nb, nb);
    for (int i = 0; i + 1 < nb; ++i) {
      const int n = lo + i;
      const int l = m - n;
      const double c = std::sqrt(double(n + 1) * double(l));
      g(i + 1, i) = c;
      g(i, i + 1) = -c;
    }
    Eigen::MatrixXcd h = cx(0, 1) * angle * g.cast<cx>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Vec ph(nb);
    for (int i = 0; i < nb; ++i) ph(i) = std::exp(cx(0, -es.eigenvalues()(i)));
    Eigen::MatrixXcd ub =
        es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
    for (int i = 0; i < nb; ++i) {
      const int ri = (lo + i) * dl + (m - lo - i);
      for (int j = 0; j < nb; ++j) {
        const int cj = (lo + j) * dl + (m - lo - j);
        U(ri, cj) = ub(i, j);
      }
    }
  }
  return U;
}

TwoModeOp qnd_unitary(double kappa, int ds, int dl) {
  if (std::abs(kappa) > 2.0) {
    throw std::domain_error("qnd_unitary: |kappa| must be <= 2");
  }
  // X (x) P_L is Hermitian with eigenvalues x_i p_j and eigenvectors u_i (x) v_j.
  ModeOp x = quadrature_op(0.0, ds);
  ModeOp p = quadrature_op(0.5 * 3.14159265358979323846, dl);
  Eigen::SelfAdjointEigenSolver<Mat> ex(x), ep(p);
  const int dim = ds * dl;
  TwoModeOp V(dim, dim);
  for (int i = 0; i < ds; ++i) {
    for (int j = 0; j < dl; ++j) {
      const int col = i * dl + j;
      for (int a = 0; a < ds; ++a) {
        for (int b = 0; b < dl; ++b) {
          V(a * dl + b, col) = ex.eigenvectors()(a, i) * ep.eigenvectors()(b, j);
        }
      }
    }
  }
  Vec ph(dim);
  for (int i = 0; i < ds; ++i) {
    for (int j = 0; j < dl; ++j) {
      ph(i * dl + j) =
          std::exp(cx(0, -kappa * ex.eigenvalues()(i) * ep.eigenvalues()(j)));
    }
  }
  return V * ph.asDiagonal() * V.adjoint();
}

TwoModeVec joint_state(const Vec& system, const Vec& ancilla) {
  const int ds = static_cast<int>(system.size());
  const int dl = static_cast<int>(ancilla.size());
  TwoModeVec out(ds * dl);
  for (int i = 0; i < ds; ++i) {
    out.segment(i * dl, dl) = system(i) * ancilla;
  }
  return out;
}

Projection project_ancilla(const TwoModeVec& state,
                           const Eigen::RowVectorXcd& bra, int ds, int dl) {
  if (bra.size() != dl) {
    throw std::domain_error("project_ancilla: bra length must equal dl");
  }
  Vec out(ds);
  for (int i = 0; i < ds; ++i) {
    cx acc = 0.0;
    for (int j = 0; j < dl; ++j) acc += bra(j) * state(i * dl + j);
    out(i) = acc;
  }
  const double w = out.squaredNorm();
  if (w < 1e-300) {
    throw degenerate_outcome_error("project_ancilla: outcome has zero weight");
  }
  Projection proj;
  proj.unnormalized = out;
  proj.weight = w;
  proj.state = FockVector(out / std::sqrt(w));
  return proj;
}

Eigen::RowVectorXcd gaussian_bra(cx A, cx B, int dim) {
  Eigen::RowVectorXcd c(dim);
  const cx As = std::conj(A);
  const cx Bs = std::conj(B);
  c(0) = 1.0;
  if (dim > 1) c(1) = As;
  for (int n = 1; n + 1 < dim; ++n) {
    c(n + 1) = (As * c(n) + 2.0 * Bs * std::sqrt(double(n)) * c(n - 1)) /
               std::sqrt(double(n + 1));
  }
  return c;
}

Eigen::RowVectorXcd quadrature_bra(double x, double theta, int dim) {
  Eigen::VectorXd psi = position_wavefunction(x, dim);
  Eigen::RowVectorXcd c(dim);
  for (int n = 0; n < dim; ++n) {
    c(n) = psi(n) * std::exp(cx(0, -theta * n));
  }
  return c;
}

HeterodyneBra heterodyne_bra(double x, double p, double tau, int dim) {
  if (!(tau > 0.0) || !(tau < 1.0)) {
    throw std::domain_error(
        "heterodyne_bra: tau must lie strictly inside (0, 1); "
        "|B| = 1/2 is the homodyne limit");
  }
  const double r = std::sqrt(1.0 - tau * tau);
  HeterodyneBra out;
  out.A = std::sqrt(2.0) * cx(x * tau, -p * r);
  out.B = 0.5 * (r * r - tau * tau);
  out.row = gaussian_bra(out.A, out.B, dim);
  return out;
}

ModeOp conditional_operator(const TwoModeOp& U, const Vec& ancilla,
                            const Eigen::RowVectorXcd& bra, int ds, int dl) {
  ModeOp out(ds, ds);
  for (int n = 0; n < ds; ++n) {
    // column n: project U (|n> (x) anc)
    TwoModeVec col = TwoModeVec::Zero(ds * dl);
    for (int j = 0; j < dl; ++j) col(n * dl + j) = ancilla(j);
    TwoModeVec evolved = U * col;
    for (int m = 0; m < ds; ++m) {
      cx acc = 0.0;
      for (int j = 0; j < dl; ++j) acc += bra(j) * evolved(m * dl + j);
      out(m, n) = acc;
    }
  }
  return out;
}

}  // namespace xgs
