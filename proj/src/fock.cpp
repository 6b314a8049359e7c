#include "xgs/fock.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace xgs {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double FockVector::tail_weight(int k) const {
  if (k <= 0) return 0.0;
  if (k >= dim()) return amp.squaredNorm();
  return amp.tail(k).squaredNorm();
}

FockVector number_state(int n, int dim) {
  if (dim < 2) throw std::domain_error("number_state: dim must be >= 2");
  if (n < 0 || n >= dim) throw std::domain_error("number_state: n out of range");
  Vec a = Vec::Zero(dim);
  a(n) = 1.0;
  return FockVector(std::move(a));
}

FockVector coherent_state(cx beta, int dim, bool enforce_guard,
                          double tail_bound) {
  if (dim < 2) throw std::domain_error("coherent_state: dim must be >= 2");
  Vec a(dim);
  // c_n = e^{-|beta|^2/2} beta^n / sqrt(n!)
  a(0) = std::exp(-0.5 * std::norm(beta));
  for (int n = 1; n < dim; ++n) a(n) = a(n - 1) * beta / std::sqrt(double(n));
  FockVector s(std::move(a));
  double kept = s.amp.squaredNorm();
  s.pre_trunc_tail = std::max(0.0, 1.0 - kept);
  s.trunc_warning = s.pre_trunc_tail > 1e-10;
  if (enforce_guard && s.pre_trunc_tail > tail_bound) {
    throw truncation_error("coherent_state: truncation tail above bound");
  }
  s.amp /= std::sqrt(kept);
  return s;
}

FockVector squeezed_vacuum(cx xi, int dim, bool enforce_guard,
                           double tail_bound) {
  if (dim < 2) throw std::domain_error("squeezed_vacuum: dim must be >= 2");
  const double r = std::abs(xi);
  Vec a = Vec::Zero(dim);
  if (r == 0.0) {
    a(0) = 1.0;
    return FockVector(std::move(a));
  }
  const cx phase = xi / r;
  const double th = std::tanh(r);
  // exp[-xi/2 a^+2 + ...]|0>: c_{2m+2}/c_{2m} = -e^{i phi} tanh(r)
  //                                             * sqrt((2m+1)/(2m+2))
  a(0) = 1.0 / std::sqrt(std::cosh(r));
  for (int m = 0; 2 * m + 2 < dim; ++m) {
    a(2 * m + 2) = -phase * th *
                   std::sqrt(double(2 * m + 1) / double(2 * m + 2)) *
                   a(2 * m);
  }
  FockVector s(std::move(a));
  double kept = s.amp.squaredNorm();
  s.pre_trunc_tail = std::max(0.0, 1.0 - kept);
  s.trunc_warning = s.pre_trunc_tail > 1e-10;
  if (enforce_guard && s.pre_trunc_tail > tail_bound) {
    throw truncation_error("squeezed_vacuum: truncation tail above bound");
  }
  s.amp /= std::sqrt(kept);
  return s;
}

ModeOp annihilation_op(int dim) {
  ModeOp a = ModeOp::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

ModeOp creation_op(int dim) { return annihilation_op(dim).adjoint(); }

ModeOp number_op(int dim) {
  ModeOp n = ModeOp::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) n(k, k) = double(k);
  return n;
}

ModeOp quadrature_op(double theta, int dim) {
  const cx em(std::cos(theta), -std::sin(theta));
  ModeOp a = annihilation_op(dim);
  return (em * a + std::conj(em) * a.adjoint()) / std::sqrt(2.0);
}

ModeOp attenuation_op(double T, int dim) {
  ModeOp m = ModeOp::Zero(dim, dim);
  double p = 1.0;
  for (int n = 0; n < dim; ++n) {
    m(n, n) = p;
    p *= T;
  }
  return m;
}

namespace {

// exp(G) for anti-Hermitian G, via the Hermitian eigendecomposition of iG.
ModeOp exp_antihermitian(const ModeOp& g) {
  Mat h = cx(0, 1) * g;
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  Vec phases(h.rows());
  for (int i = 0; i < h.rows(); ++i) {
    phases(i) = std::exp(cx(0, -es.eigenvalues()(i)));
  }
  return es.eigenvectors() * phases.asDiagonal() *
         es.eigenvectors().adjoint();
}

}  // namespace

ModeOp displacement_op(cx alpha, int dim) {
  ModeOp a = annihilation_op(dim);
  return exp_antihermitian(alpha * a.adjoint() - std::conj(alpha) * a);
}

ModeOp squeeze_op(cx zeta, int dim) {
  ModeOp a = annihilation_op(dim);
  ModeOp a2 = a * a;
  return exp_antihermitian(-0.5 * zeta * a2.adjoint() +
                           0.5 * std::conj(zeta) * a2);
}

ModeOp exp_annihilation_poly(cx c1, cx c2, int dim) {
  ModeOp out(dim, dim);
  for (int n = 0; n < dim; ++n) {
    Vec col = Vec::Zero(dim);
    col(n) = 1.0;
    out.col(n) = apply_exp_annihilation_poly(c1, c2, col);
  }
  return out;
}

ModeOp exp_creation_poly(cx c1, cx c2, int dim) {
  return exp_annihilation_poly(std::conj(c1), std::conj(c2), dim).adjoint();
}

XBasis x_eigenbasis(int dim) {
  ModeOp x = quadrature_op(0.0, dim);
  Eigen::SelfAdjointEigenSolver<Mat> es(x);
  return XBasis{es.eigenvalues(), es.eigenvectors()};
}

Eigen::VectorXd position_wavefunction(double x, int dim) {
  Eigen::VectorXd psi(dim);
  psi(0) = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
  if (dim > 1) psi(1) = std::sqrt(2.0) * x * psi(0);
  for (int n = 1; n + 1 < dim; ++n) {
    psi(n + 1) = std::sqrt(2.0 / (n + 1)) * x * psi(n) -
                 std::sqrt(double(n) / (n + 1)) * psi(n - 1);
  }
  return psi;
}

double fidelity(const FockVector& a, const FockVector& b) {
  if (a.dim() != b.dim()) throw std::domain_error("fidelity: dimension mismatch");
  return std::norm(a.amp.dot(b.amp));
}

double fidelity(const DensityMatrix& rho, const FockVector& target) {
  if (rho.rows() != target.dim()) {
    throw std::domain_error("fidelity: dimension mismatch");
  }
  const double tr = rho.trace().real();
  const cx val = target.amp.dot(rho * target.amp);
  return val.real() / tr;
}

Vec apply_annihilation(const Vec& v) {
  const int dim = static_cast<int>(v.size());
  Vec out = Vec::Zero(dim);
  for (int n = 1; n < dim; ++n) out(n - 1) = std::sqrt(double(n)) * v(n);
  return out;
}

Vec apply_creation(const Vec& v) {
  const int dim = static_cast<int>(v.size());
  Vec out = Vec::Zero(dim);
  for (int n = 0; n + 1 < dim; ++n) out(n + 1) = std::sqrt(double(n + 1)) * v(n);
  return out;
}

Vec apply_exp_annihilation_poly(cx c1, cx c2, const Vec& v) {
  // Series terminates: each application lowers the top occupied level.
  Vec acc = v;
  Vec term = v;
  const int dim = static_cast<int>(v.size());
  for (int k = 1; k <= dim; ++k) {
    Vec next = c1 * apply_annihilation(term);
    if (c2 != cx(0, 0)) {
      next += c2 * apply_annihilation(apply_annihilation(term));
    }
    term = next / double(k);
    if (term.isZero(0.0)) break;
    acc += term;
  }
  return acc;
}

Vec apply_exp_creation_poly(cx c1, cx c2, const Vec& v) {
  Vec acc = v;
  Vec term = v;
  const int dim = static_cast<int>(v.size());
  for (int k = 1; k <= dim; ++k) {
    Vec next = c1 * apply_creation(term);
    if (c2 != cx(0, 0)) {
      next += c2 * apply_creation(apply_creation(term));
    }
    term = next / double(k);
    double tn = term.norm();
    acc += term;
    if (tn == 0.0) break;
  }
  return acc;
}

Vec apply_attenuation(double T, const Vec& v) {
  const int dim = static_cast<int>(v.size());
  Vec out(dim);
  double p = 1.0;
  for (int n = 0; n < dim; ++n) {
    out(n) = p * v(n);
    p *= T;
  }
  return out;
}

void tail_guard(const FockVector& s, double bound, bool override_guard) {
  if (override_guard) return;
  double w = s.tail_weight(3) / s.amp.squaredNorm();
  if (w > bound) {
    throw truncation_error("tail_guard: state occupies the truncation edge");
  }
}

}  // namespace xgs
