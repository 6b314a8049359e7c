// Command-line driver: gate experiments, figure-data reproduction, plan and
// state export.
#include <CLI11.hpp>
#include <json.hpp>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "xgs/benchmarks.hpp"
#include "xgs/fock.hpp"
#include "xgs/gate.hpp"
#include "xgs/polynomial.hpp"
#include "xgs/stateprep.hpp"
#include "xgs/synthesis.hpp"

using json = nlohmann::ordered_json;
using namespace xgs;

namespace {

// ---- formatting ---------------------------------------------------------

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

json to_json(cx z) { return json::array({z.real(), z.imag()}); }

// ---- parsing ------------------------------------------------------------

class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& w) : std::runtime_error(w) {}
};

// Accepts "1.5", "-2", "1i", "-0.5i", "0.3+0.4i", "i", "-i".
cx parse_complex(const std::string& s) {
  std::string t;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  }
  if (t.empty()) throw config_error("empty complex literal");
  auto parse_part = [](std::string p) -> double {
    if (p.empty() || p == "+") return 1.0;
    if (p == "-") return -1.0;
    return std::stod(p);
  };
  if (t.back() == 'i' || t.back() == 'I') {
    t.pop_back();
    // split into real + imaginary at the last +/- that is not an exponent
    for (std::size_t k = t.size(); k-- > 1;) {
      if ((t[k] == '+' || t[k] == '-') &&
          !(t[k - 1] == 'e' || t[k - 1] == 'E')) {
        return cx(std::stod(t.substr(0, k)), parse_part(t.substr(k)));
      }
    }
    return cx(0.0, parse_part(t));
  }
  return cx(std::stod(t), 0.0);
}

struct InputSpec {
  std::string kind;
  cx par{0, 0};
};

InputSpec parse_input_spec(const std::string& s) {
  auto pos = s.find(':');
  InputSpec spec;
  spec.kind = s.substr(0, pos);
  if (spec.kind == "vacuum") return spec;
  if (pos == std::string::npos) {
    throw config_error("input spec needs kind:value, e.g. fock:1");
  }
  spec.par = parse_complex(s.substr(pos + 1));
  if (spec.kind != "fock" && spec.kind != "coherent" && spec.kind != "squeezed") {
    throw config_error("unknown input kind '" + spec.kind + "'");
  }
  return spec;
}

FockVector build_input(const InputSpec& spec, int dim) {
  if (spec.kind == "vacuum") return number_state(0, dim);
  if (spec.kind == "fock") {
    return number_state(static_cast<int>(std::lround(spec.par.real())), dim);
  }
  if (spec.kind == "coherent") return coherent_state(spec.par, dim, true);
  return squeezed_vacuum(spec.par, dim, true);
}

std::string input_to_string(const InputSpec& s) {
  if (s.kind == "vacuum") return "vacuum";
  std::ostringstream os;
  os << s.kind << ":" << fmt(s.par.real());
  if (s.par.imag() != 0) {
    os << (s.par.imag() > 0 ? "+" : "") << fmt(s.par.imag()) << "i";
  }
  return os.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw config_error("cannot open output file " + path);
  f << text;
}

// ---- commands -----------------------------------------------------------

struct GateArgs {
  std::string lm = "0", lp = "0";
  std::string input = "fock:1";
  double eta = 1.0;
  double eps = 1e-3;
  int dim = 50;
  double T = -1.0;      // < 0: optimize / default
  double x0 = -1000.0;  // sentinel: optimize
  double theta = -1000.0;
  bool corrected = false;
  std::string out;
};

int cmd_gate(const GateArgs& a) {
  cx lm = parse_complex(a.lm), lp = parse_complex(a.lp);
  if (lm == cx(0, 0) && lp == cx(0, 0)) {
    throw config_error("null gate: both lambda coefficients are zero");
  }
  InputSpec ispec = parse_input_spec(a.input);
  FockVector input = build_input(ispec, a.dim);
  FockVector target(ideal_gate_operator(lm, lp, a.dim) * input.amp);
  target.normalize();

  json cfg;
  cfg["command"] = "gate";
  cfg["lambda_minus"] = to_json(lm);
  cfg["lambda_plus"] = to_json(lp);
  cfg["input"] = input_to_string(ispec);
  cfg["eta"] = a.eta;
  cfg["dim"] = a.dim;
  cfg["corrected"] = a.corrected;

  GateResult result;
  if (a.corrected) {
    double T = a.T > 0 ? a.T : 0.9;
    GateSpec spec = resolve_gate_settings(lm, lp, T);
    result = realistic_gate_density(input, spec, a.eta);
    cfg["T"] = T;
    cfg["variant"] = spec.variant == GateVariant::bs_homodyne ? "bs-homodyne"
                                                              : "bs-heterodyne";
    cfg["A"] = to_json(spec.A);
    cfg["B"] = to_json(spec.B);
  } else {
    GateSpec spec;
    spec.variant = GateVariant::bs_homodyne;
    spec.corrected = false;
    if (a.T > 0 && a.x0 > -999 && a.theta > -999) {
      spec.T = a.T;
      spec.x0 = a.x0;
      spec.theta = a.theta;
    } else {
      SharpSetup setup = optimize_sharp_setup(input, target, a.eta);
      spec.T = setup.T;
      spec.x0 = setup.x0;
      spec.theta = setup.theta;
    }
    cfg["T"] = spec.T;
    cfg["x0"] = spec.x0;
    cfg["theta"] = spec.theta;
    cfg["epsilon"] = a.eps;
    AncillaModel anc;
    anc.eta = a.eta;
    Window w;
    w.x0 = spec.x0;
    w.epsilon = a.eps;
    result = apply_gate_windowed(input, spec, anc, w);
  }

  // Dominant eigenvector of the output density matrix as the state record.
  Eigen::SelfAdjointEigenSolver<Mat> es(result.rho);
  const int dim = input.dim();
  Vec dominant = es.eigenvectors().col(dim - 1);
  const double purity = (result.rho * result.rho).trace().real();
  const double F = fidelity(result.rho, target);

  json out;
  out["config"] = cfg;
  out["F"] = F;
  out["P"] = result.success;
  out["attenuation_T"] = result.attenuation_T;
  out["truncation_tail"] = result.truncation_tail;
  out["purity"] = purity;
  out["dominant_eigenvalue"] = es.eigenvalues()(dim - 1);
  json amps = json::array();
  for (int n = 0; n < dim; ++n) amps.push_back(to_json(dominant(n)));
  out["state"] = amps;
  write_text(a.out, out.dump(2) + "\n");
  return 0;
}

struct Fig2Args {
  std::string input;  // empty: all four panels
  int dim = 40;
  std::string out;
};

int cmd_fig2(const Fig2Args& a) {
  const cx lm(1.5, 0), lp(-1.5, 0);
  std::vector<InputSpec> inputs;
  if (a.input.empty()) {
    inputs.push_back(parse_input_spec("coherent:0.1"));
    inputs.push_back(parse_input_spec("coherent:1"));
    inputs.push_back(parse_input_spec("squeezed:0.1"));
    inputs.push_back(parse_input_spec("fock:1"));
  } else {
    inputs.push_back(parse_input_spec(a.input));
  }
  // Calibrated orientations of the benchmark panels: coherent amplitudes on
  // the real axis, squeeze parameters on the imaginary axis.
  for (InputSpec& ispec : inputs) {
    if (ispec.kind == "squeezed" && ispec.par.imag() == 0) {
      ispec.par = cx(0.0, ispec.par.real());
    }
  }
  std::vector<double> etas{1.0, 0.8, 0.6, 0.4};
  std::vector<double> Tgrid;
  for (double T = 0.05; T <= 0.99 + 1e-9; T += 0.01) Tgrid.push_back(T);

  std::ostringstream csv;
  csv << "# command=fig2 gate=1+1.5a-1.5a+ dim=" << a.dim << "\n";
  const bool multi = inputs.size() > 1;
  csv << (multi ? "input,T,eta,F,classical_threshold"
                : "T,eta,F,classical_threshold")
      << "\n";
  for (const InputSpec& ispec : inputs) {
    FockVector in = build_input(ispec, a.dim);
    FockVector t(ideal_gate_operator(lm, lp, a.dim) * in.amp);
    t.normalize();
    ClassicalReport thr = classical_threshold(in, t);
    auto rows = fidelity_vs_T_sweep(in, lm, lp, etas, Tgrid);
    for (const SweepRow& r : rows) {
      if (multi) csv << input_to_string(ispec) << ",";
      csv << fmt(r.T) << "," << fmt(r.eta) << "," << fmt(r.F) << ","
          << fmt(thr.F) << "\n";
    }
  }
  write_text(a.out, csv.str());
  return 0;
}

struct Fig3Args {
  std::string input = "fock:1";
  double eta = 1.0;
  int dim = 32;
  std::string out;
};

int cmd_fig3(const Fig3Args& a) {
  const cx lm(1.5, 0), lp(-1.5, 0);
  InputSpec ispec = parse_input_spec(a.input);
  // The window trade-off panels use the purely-imaginary coherent family.
  if (ispec.kind == "coherent" && ispec.par.imag() == 0) {
    ispec.par = cx(0.0, ispec.par.real());
  }
  FockVector in = build_input(ispec, a.dim);
  std::vector<double> eps;
  for (double e = 1e-3; e <= 1.0 + 1e-12; e *= std::pow(1000.0, 1.0 / 60.0)) {
    eps.push_back(e);
  }
  FPCurve curve = f_vs_p_curve(in, lm, lp, a.eta, eps);
  std::ostringstream csv;
  csv << "# command=fig3 gate=1+1.5a-1.5a+ input=" << input_to_string(ispec)
      << " eta=" << fmt(a.eta) << " dim=" << a.dim << " T=" << fmt(curve.setup.T)
      << " x0=" << fmt(curve.setup.x0) << " theta=" << fmt(curve.setup.theta)
      << "\n";
  csv << "epsilon,F,P\n";
  for (const FPRow& r : curve.rows) {
    csv << fmt(r.epsilon) << "," << fmt(r.F) << "," << fmt(r.P) << "\n";
  }
  write_text(a.out, csv.str());
  return 0;
}

struct Fig4Args {
  std::string betas = "1,2,3";
  int nmax_hi = 20;
  std::string out;
};

int cmd_fig4(const Fig4Args& a) {
  std::ostringstream csv;
  csv << "# command=fig4 nmax=0.." << a.nmax_hi << "\n";
  csv << "beta,n_max,F\n";
  std::stringstream ss(a.betas);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const double beta = std::stod(tok);
    const int dim =
        std::max(60, static_cast<int>(a.nmax_hi + 4 * beta * beta + 24));
    for (int nmax = 0; nmax <= a.nmax_hi; nmax += 2) {
      csv << fmt(beta) << "," << nmax << ","
          << fmt(cat_fidelity(beta, nmax, dim)) << "\n";
    }
  }
  write_text(a.out, csv.str());
  return 0;
}

int cmd_cubic(double chi, const std::string& out) {
  DecompositionPlan plan = cubic_plan(chi);
  json j;
  j["config"] = {{"command", "cubic"}, {"chi", chi}};
  json roots = json::array();
  for (cx l : plan.lambdas) roots.push_back(to_json(l));
  j["lambdas"] = roots;
  j["scale"] = to_json(plan.scale);
  j["residual"] = plan.residual;
  write_text(out, j.dump(2) + "\n");
  return 0;
}

int cmd_plan(const std::string& poly_str, const std::string& out) {
  Poly p;
  std::stringstream ss(poly_str);
  std::string tok;
  while (std::getline(ss, tok, ',')) p.push_back(parse_complex(tok));
  if (p.empty()) throw config_error("plan: empty polynomial");
  DecompositionPlan plan = factor_poly(p);
  json j;
  j["config"] = {{"command", "plan"}, {"poly", poly_str}};
  json roots = json::array();
  for (cx l : plan.lambdas) roots.push_back(to_json(l));
  j["lambdas"] = roots;
  j["scale"] = to_json(plan.scale);
  j["residual"] = plan.residual;
  write_text(out, j.dump(2) + "\n");
  return 0;
}

int cmd_cat(double beta, int nmax, const std::string& out) {
  const int dim = std::max(60, static_cast<int>(nmax + 4 * beta * beta + 24));
  CatPolynomial cp = cat_polynomial(beta, nmax, dim);
  const double F = cat_fidelity(beta, nmax, dim);
  json j;
  j["config"] = {{"command", "cat"}, {"beta", beta}, {"nmax", nmax}, {"dim", dim}};
  j["fidelity"] = F;
  j["normalization"] = cp.normalization;
  json coeffs = json::array();
  for (cx c : cp.coeffs) coeffs.push_back(to_json(c));
  j["creation_polynomial"] = coeffs;
  json amps = json::array();
  for (int n = 0; n <= nmax; ++n) {
    double amp = (n % 2 == 0)
                     ? cp.normalization * cp.coeffs[n].real() *
                           std::sqrt(std::tgamma(double(n) + 1.0))
                     : 0.0;
    amps.push_back(amp);
  }
  j["state"] = amps;
  write_text(out, j.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated Fock-space simulator of measurement-induced "
               "oscillator gates"};
  app.require_subcommand(1);

  GateArgs ga;
  auto* gate = app.add_subcommand("gate", "Apply one generalized gate");
  gate->add_option("--lm", ga.lm, "lambda_- coefficient (complex)");
  gate->add_option("--lp", ga.lp, "lambda_+ coefficient (complex)");
  gate->add_option("--input", ga.input, "input state, e.g. fock:1, coherent:1i");
  gate->add_option("--eta", ga.eta, "single-photon ancilla efficiency");
  gate->add_option("--eps", ga.eps, "homodyne window half-width");
  gate->add_option("--dim", ga.dim, "Fock truncation");
  gate->add_option("--T", ga.T, "BS transmission (default: optimized)");
  gate->add_option("--x0", ga.x0, "homodyne outcome (default: optimized)");
  gate->add_option("--theta", ga.theta, "measured quadrature phase");
  gate->add_flag("--corrected", ga.corrected,
                 "sharp corrected gate instead of the windowed pass");
  gate->add_option("--out", ga.out, "output file (default stdout)");

  Fig2Args f2;
  auto* fig2 = app.add_subcommand("fig2", "Fidelity vs transmission table");
  fig2->add_option("--input", f2.input, "restrict to one input");
  fig2->add_option("--dim", f2.dim, "Fock truncation");
  fig2->add_option("--out", f2.out, "output file");

  Fig3Args f3;
  auto* fig3 = app.add_subcommand("fig3", "F(eps) vs P(eps) table");
  fig3->add_option("--input", f3.input, "fock:1 or coherent:|beta|");
  fig3->add_option("--eta", f3.eta, "ancilla efficiency");
  fig3->add_option("--dim", f3.dim, "Fock truncation");
  fig3->add_option("--out", f3.out, "output file");

  Fig4Args f4;
  auto* fig4 = app.add_subcommand("fig4", "Cat-state fidelity table");
  fig4->add_option("--betas", f4.betas, "comma-separated amplitudes");
  fig4->add_option("--nmax", f4.nmax_hi, "largest photon cutoff");
  fig4->add_option("--out", f4.out, "output file");

  double chi = 0.1;
  std::string cubic_out;
  auto* cubic = app.add_subcommand("cubic", "Cubic-gate decomposition plan");
  cubic->add_option("--chi", chi, "cubic strength");
  cubic->add_option("--out", cubic_out, "output file");

  std::string poly_str, plan_out;
  auto* plan = app.add_subcommand("plan", "Factor a gate polynomial");
  plan->add_option("--poly", poly_str, "coefficients c0,c1,... (complex)")
      ->required();
  plan->add_option("--out", plan_out, "output file");

  double cat_beta = 3.0;
  int cat_nmax = 16;
  std::string cat_out;
  auto* cat = app.add_subcommand("cat", "Even cat-state preparation");
  cat->add_option("--beta", cat_beta, "cat amplitude");
  cat->add_option("--nmax", cat_nmax, "highest photon number (even)");
  cat->add_option("--out", cat_out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  }

  try {
    if (*gate) return cmd_gate(ga);
    if (*fig2) return cmd_fig2(f2);
    if (*fig3) return cmd_fig3(f3);
    if (*fig4) return cmd_fig4(f4);
    if (*cubic) return cmd_cubic(chi, cubic_out);
    if (*plan) return cmd_plan(poly_str, plan_out);
    if (*cat) return cmd_cat(cat_beta, cat_nmax, cat_out);
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const truncation_error& e) {
    std::cerr << "truncation error: " << e.what() << "\n";
    return 4;
  } catch (const degenerate_outcome_error& e) {
    std::cerr << "degenerate outcome: " << e.what() << "\n";
    return 5;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
