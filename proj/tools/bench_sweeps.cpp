// Compares the serial reference path against the OpenMP path on the two
// hottest sweeps and checks that their results agree exactly.
#include <chrono>
#include <cmath>
#include <cstdio>

#include "xgs/benchmarks.hpp"
#include "xgs/fock.hpp"
#include "xgs/gate.hpp"

using namespace xgs;
using clock_type = std::chrono::steady_clock;

namespace {
double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}
}  // namespace

int main() {
  const int dim = 40;
  const cx lm(1.5, 0.0), lp(-1.5, 0.0);
  FockVector input = number_state(1, dim);
  FockVector target(ideal_gate_operator(lm, lp, dim) * input.amp);
  target.normalize();

  std::printf("%-28s %12s %12s %10s %10s\n", "sweep", "serial [s]", "openmp [s]",
              "speedup", "max|diff|");

  {
    ClassicalOptions ser;
    ser.exec = Exec::serial;
    ClassicalOptions par;
    par.exec = Exec::par;
    auto t0 = clock_type::now();
    ClassicalReport a = classical_threshold(input, target, ser);
    double ts = seconds_since(t0);
    t0 = clock_type::now();
    ClassicalReport b = classical_threshold(input, target, par);
    double tp = seconds_since(t0);
    std::printf("%-28s %12.3f %12.3f %10.2f %10.2e\n", "classical_threshold",
                ts, tp, ts / tp, std::abs(a.F - b.F));
  }
  {
    GaussianOptions ser;
    ser.exec = Exec::serial;
    GaussianOptions par;
    par.exec = Exec::par;
    auto t0 = clock_type::now();
    GaussianReport a = gaussian_threshold(input, target, ser);
    double ts = seconds_since(t0);
    t0 = clock_type::now();
    GaussianReport b = gaussian_threshold(input, target, par);
    double tp = seconds_since(t0);
    std::printf("%-28s %12.3f %12.3f %10.2f %10.2e\n", "gaussian_threshold",
                ts, tp, ts / tp, std::abs(a.F - b.F));
  }
  {
    std::vector<double> Tgrid;
    for (double T = 0.05; T <= 0.99; T += 0.002) Tgrid.push_back(T);
    auto t0 = clock_type::now();
    EfficiencyCurve a = critical_efficiency(input, lm, lp, 0.52, Tgrid,
                                            Exec::serial);
    double ts = seconds_since(t0);
    t0 = clock_type::now();
    EfficiencyCurve b = critical_efficiency(input, lm, lp, 0.52, Tgrid,
                                            Exec::par);
    double tp = seconds_since(t0);
    double md = 0.0;
    for (std::size_t i = 0; i < a.eta_c.size(); ++i) {
      if (std::isnan(a.eta_c[i]) != std::isnan(b.eta_c[i])) md = 1.0;
      if (!std::isnan(a.eta_c[i])) {
        md = std::max(md, std::abs(a.eta_c[i] - b.eta_c[i]));
      }
    }
    std::printf("%-28s %12.3f %12.3f %10.2f %10.2e\n", "critical_efficiency",
                ts, tp, ts / tp, md);
  }
  return 0;
}
