#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "xgs/twomode.hpp"

using namespace xgs;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("bs unitary basics") {
  const int ds = 12, dl = 12;
  TwoModeOp id = bs_unitary(1.0, ds, dl);
  CHECK((id - TwoModeOp::Identity(ds * dl, ds * dl)).norm() < 1e-12);
  CHECK_THROWS_AS(bs_unitary(0.0, ds, dl), std::domain_error);
  CHECK_THROWS_AS(bs_unitary(-0.3, ds, dl), std::domain_error);

  TwoModeOp U = bs_unitary(0.8, ds, dl);
  // single-photon block is a rotation with sin = R
  cx amp = U(0 * dl + 1, 1 * dl + 0);
  CHECK(std::abs(std::abs(amp) - 0.6) < 1e-12);
}

TEST_CASE("bs photon-number block unitarity") {
  const int ds = 14, dl = 14;
  TwoModeOp U = bs_unitary(0.73, ds, dl);
  for (int m = 0; m < std::min(ds, dl); ++m) {
    Eigen::MatrixXcd block(m + 1, m + 1);
    for (int i = 0; i <= m; ++i) {
      for (int j = 0; j <= m; ++j) {
        block(i, j) = U(i * dl + (m - i), j * dl + (m - j));
      }
    }
    CHECK((block.adjoint() * block -
           Eigen::MatrixXcd::Identity(m + 1, m + 1))
              .norm() < 1e-12);
  }
  // exact photon-number conservation: entries between different totals vanish
  cx off = U(0 * dl + 0, 1 * dl + 0);
  CHECK(off == cx(0, 0));
}

TEST_CASE("qnd unitary") {
  const int ds = 16, dl = 16;
  TwoModeOp id = qnd_unitary(0.0, ds, dl);
  CHECK((id - TwoModeOp::Identity(ds * dl, ds * dl)).norm() < 1e-12);

  TwoModeOp U = qnd_unitary(0.5, ds, dl);
  // unitary on the interior subspace
  TwoModeOp G = U.adjoint() * U;
  const int keep_s = ds - 4, keep_l = dl - 4;
  double worst = 0.0;
  for (int i = 0; i < keep_s; ++i) {
    for (int j = 0; j < keep_l; ++j) {
      for (int k = 0; k < keep_s; ++k) {
        for (int l = 0; l < keep_l; ++l) {
          cx expect = (i == k && j == l) ? cx(1, 0) : cx(0, 0);
          worst = std::max(worst,
                           std::abs(G(i * dl + j, k * dl + l) - expect));
        }
      }
    }
  }
  CHECK(worst < 1e-10);

  // commutes with X (x) I
  ModeOp X = quadrature_op(0.0, ds);
  TwoModeOp XI = TwoModeOp::Zero(ds * dl, ds * dl);
  for (int i = 0; i < ds; ++i) {
    for (int k = 0; k < ds; ++k) {
      for (int j = 0; j < dl; ++j) XI(i * dl + j, k * dl + j) = X(i, k);
    }
  }
  CHECK((U * XI - XI * U).norm() / XI.norm() < 1e-10);
}

TEST_CASE("project_ancilla") {
  const int ds = 10, dl = 10;
  FockVector psi = coherent_state(cx(0.4, 0.1), ds);
  TwoModeVec joint = joint_state(psi.amp, number_state(0, dl).amp);

  Eigen::RowVectorXcd bra0 = Eigen::RowVectorXcd::Zero(dl);
  bra0(0) = 1.0;
  Projection p = project_ancilla(joint, bra0, ds, dl);
  CHECK((p.state.amp - psi.amp).norm() < 1e-14);
  CHECK(p.weight == doctest::Approx(1.0).epsilon(1e-12));

  Eigen::RowVectorXcd bra1 = Eigen::RowVectorXcd::Zero(dl);
  bra1(1) = 1.0;
  CHECK_THROWS_AS(project_ancilla(joint, bra1, ds, dl),
                  degenerate_outcome_error);

  TwoModeVec vac = joint_state(number_state(0, ds).amp,
                               number_state(0, dl).amp);
  Projection q = project_ancilla(vac, quadrature_bra(0.0, 0.0, dl), ds, dl);
  CHECK(q.weight ==
        doctest::Approx(std::pow(kPi, -0.5)).epsilon(1e-12));
}

TEST_CASE("heterodyne bra parameters") {
  const int dl = 20;
  HeterodyneBra hb = heterodyne_bra(0.0, 0.0, 1.0 / std::sqrt(2.0), dl);
  CHECK(std::abs(hb.A) < 1e-14);
  CHECK(std::abs(hb.B) < 1e-14);
  Eigen::RowVectorXcd vac_bra = Eigen::RowVectorXcd::Zero(dl);
  vac_bra(0) = 1.0;
  CHECK((hb.row - vac_bra).norm() < 1e-14);

  HeterodyneBra hb2 = heterodyne_bra(1.0, 0.0, 1.0 / std::sqrt(2.0), dl);
  CHECK(std::abs(hb2.A - cx(1, 0)) < 1e-12);
  CHECK(std::abs(hb2.B) < 1e-14);

  CHECK_THROWS_AS(heterodyne_bra(0.1, 0.2, 0.0, dl), std::domain_error);
  CHECK_THROWS_AS(heterodyne_bra(0.1, 0.2, 1.0, dl), std::domain_error);
}

TEST_CASE("heterodyne bra equals the two-homodyne two-mode construction") {
  const int dl = 26;
  const double tau = 0.7, x = 0.9, p = -0.4;
  HeterodyneBra hb = heterodyne_bra(x, p, tau, dl);
  TwoModeOp U = bs_unitary(tau, dl, dl);
  Eigen::RowVectorXcd xrow = quadrature_bra(x, 0.0, dl);
  Eigen::RowVectorXcd prow = quadrature_bra(p, 0.5 * kPi, dl);
  Eigen::RowVectorXcd oracle = Eigen::RowVectorXcd::Zero(dl);
  for (int j = 0; j < dl; ++j) {
    cx acc = 0;
    for (int l = 0; l < dl; ++l) {
      for (int l2 = 0; l2 < dl; ++l2) {
        acc += xrow(l) * prow(l2) * U(l * dl + l2, j * dl + 0);
      }
    }
    oracle(j) = acc;
  }
  // proportional up to the dropped Gaussian prefactor
  Eigen::RowVectorXcd an = hb.row;
  cx ov = 0;
  for (int j = 0; j < dl; ++j) ov += std::conj(an(j)) * oracle(j);
  an *= (ov / std::abs(ov)) * (oracle.norm() / an.norm());
  CHECK((an - oracle).norm() / oracle.norm() < 1e-8);
}

TEST_CASE("gaussian bra recurrence") {
  // coefficients c_n = sqrt(n!) [t^n] exp(A* t + B* t^2)
  const int dl = 12;
  cx A(0.5, -0.2), B(0.2, 0.1);
  Eigen::RowVectorXcd row = gaussian_bra(A, B, dl);
  // g_{n+1} = (A* g_n + 2 B* g_{n-1}) / (n+1)
  std::vector<cx> gs{cx(1, 0), std::conj(A)};
  for (int n = 1; n + 1 < dl; ++n) {
    gs.push_back((std::conj(A) * gs[n] + 2.0 * std::conj(B) * gs[n - 1]) /
                 double(n + 1));
  }
  double fact = 1.0;
  for (int n = 0; n < dl; ++n) {
    if (n > 0) fact *= n;
    CHECK(std::abs(row(n) - std::sqrt(fact) * gs[n]) < 1e-12);
  }
}
