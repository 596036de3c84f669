#include "boostcoh/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>

#include "boostcoh/cli/config.hpp"
#include "boostcoh/cli/csv.hpp"
#include "boostcoh/cli/sweep.hpp"
#include "boostcoh/coherence.hpp"
#include "boostcoh/density.hpp"
#include "boostcoh/integrals.hpp"
#include "boostcoh/wigner.hpp"

namespace boostcoh::cli {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void print_spectrum(std::ostream& out, const coherence::Spectrum& spec) {
  out << "spectrum:";
  for (double v : spec.values()) out << ' ' << fmt(std::abs(v) < 1e-15 ? 0.0 : v);
  out << '\n';
}

int check_n_value(long long n) {
  if (n < 0) {
    std::ostringstream os;
    os << "n must satisfy n > -1/2 (a nonnegative integer), got " << n;
    throw DomainError(os.str());
  }
  if (n > 1000000) throw DomainError("n is unreasonably large");
  return static_cast<int>(n);
}

Scenario parse_scenario(const std::string& s) {
  return s == "dual" ? Scenario::dual_boost : Scenario::single_boost;
}

// Comma-separated betas "0.95,0.8" or pairs "0.95:0.3,0.8:0.8".
std::vector<std::pair<double, double>> parse_betas(const std::string& list) {
  std::vector<std::pair<double, double>> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    try {
      if (colon == std::string::npos) {
        const double b = std::stod(item);
        out.emplace_back(b, b);
      } else {
        out.emplace_back(std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1)));
      }
    } catch (const std::logic_error&) {
      throw DomainError("bad beta value '" + item + "'");
    }
  }
  if (out.empty()) throw DomainError("no beta values given");
  return out;
}

struct WignerArgs {
  double beta = 0.0;
  double p_over_m = 0.0;
};

int cmd_wigner(const WignerArgs& a, std::ostream& out) {
  const auto boost = boost_from_beta(a.beta);
  if (!std::isfinite(a.p_over_m)) throw DomainError("p/m must be finite");
  const auto trig = wigner::half_angle_perp(boost, a.p_over_m);
  out << "cos2_half: " << fmt(trig.cos2_half) << '\n'
      << "sin2_half: " << fmt(trig.sin2_half) << '\n'
      << "sincos_half: " << fmt(trig.sincos_half) << '\n'
      << "phi: " << fmt(wigner::rotation_angle(trig)) << '\n';
  return kExitOk;
}

struct CoherenceArgs {
  std::string scenario = "single";
  double theta = kPi / 4.0;
  double beta = 0.0;
  std::optional<double> beta1;
  std::optional<double> beta2;
  double sigma = 100.0;
  double mass = kNeutronMassMev;
  long long n = 2;
  std::string method = "perturbative";
};

int cmd_coherence(const CoherenceArgs& a, std::ostream& out) {
  const int n = check_n_value(a.n);
  check_theta(a.theta);
  const Scenario scenario = parse_scenario(a.scenario);
  const bool dual = scenario == Scenario::dual_boost;
  const WavePacket pkt(n, a.sigma, a.mass);
  const double som = pkt.sigma_over_mass();

  std::vector<BoostParams> boosts{boost_from_beta(a.beta1.value_or(a.beta))};
  if (dual) boosts.push_back(boost_from_beta(a.beta2.value_or(a.beta)));

  const auto bounds = integrals::n_bounds(som, scenario);
  if (!bounds.admits(n)) {
    std::ostringstream os;
    os << "n = " << n << " outside the admissible range -1/2 < n <= " << bounds.upper;
    throw DomainError(os.str());
  }

  const auto f1 = integrals::f_factor(n, boosts[0], som);
  out << "scenario: " << (dual ? "dual" : "single") << '\n';
  out << "method: " << a.method << '\n';
  out << "F1: " << fmt(f1.f) << '\n';
  std::optional<integrals::PerturbativeFactor> f2;
  if (dual) {
    f2 = integrals::f_factor(n, boosts[1], som);
    out << "F2: " << fmt(f2->f) << '\n';
  }

  std::optional<coherence::CoherenceReport> report;
  if (a.method == "perturbative") {
    report = coherence::report_perturbative(a.theta, n, boosts, som);
  } else if (a.method == "exact-eig") {
    const DensityMatrix rho = dual ? density::rho_dual_boost_perturbative(a.theta, f1, *f2)
                                   : density::rho_single_boost_perturbative(a.theta, f1);
    report = coherence::report_eigensolver(rho);
  } else {
    const auto m1 = integrals::moments_quadrature(pkt, boosts[0]);
    out << "moments1: " << fmt(m1.i1()) << ' ' << fmt(m1.i2()) << ' ' << fmt(m1.i3()) << '\n';
    if (dual) {
      const auto m2 = integrals::moments_quadrature(pkt, boosts[1]);
      out << "moments2: " << fmt(m2.i1()) << ' ' << fmt(m2.i2()) << ' ' << fmt(m2.i3()) << '\n';
      report = coherence::report_eigensolver(density::rho_dual_boost_general(a.theta, m1, m2));
    } else {
      report = coherence::report_eigensolver(density::rho_single_boost_general(a.theta, m1));
    }
  }
  print_spectrum(out, report->spectrum);
  out << "c_l1: " << fmt(report->c_l1) << '\n';
  out << "c_F: " << fmt(report->c_frobenius) << '\n';
  return kExitOk;
}

struct SweepArgs {
  std::string scenario = "single";
  double theta = kPi / 4.0;
  long long n = 2;
  double mass = kNeutronMassMev;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  int steps = 0;
  std::string betas;
  std::string methods = "perturbative";
  std::string out_path;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  SweepSpec spec;
  spec.scenario = parse_scenario(a.scenario);
  spec.theta = a.theta;
  spec.n = check_n_value(a.n);
  spec.mass = a.mass;
  spec.sigma_grid = SigmaGrid{a.sigma_min, a.sigma_max, a.steps};
  spec.betas = parse_betas(a.betas);
  spec.methods = parse_methods(a.methods);
  const auto rows = run_sweep(spec);
  write_csv_file(a.out_path, rows);
  out << "wrote " << rows.size() << " rows to " << a.out_path << '\n';
  return kExitOk;
}

struct FigureArgs {
  std::string name;
  std::string out_path;
  std::optional<double> theta;
  std::optional<long long> n;
  std::optional<double> mass;
  std::optional<double> sigma_max;
  std::optional<int> steps;
  std::optional<std::string> methods;
};

int cmd_figure(const FigureArgs& a, std::ostream& out) {
  SweepSpec spec = figure_preset(a.name);
  if (a.theta) spec.theta = *a.theta;
  if (a.n) spec.n = check_n_value(*a.n);
  if (a.mass) spec.mass = *a.mass;
  const double ratio = a.sigma_max ? *a.sigma_max / spec.mass : 0.3;
  const int steps = a.steps.value_or(256);
  spec.sigma_grid = SigmaGrid{ratio * spec.mass / steps, ratio * spec.mass, steps};
  if (a.methods) spec.methods = parse_methods(*a.methods);
  const auto rows = run_sweep(spec);
  write_csv_file(a.out_path, rows);
  out << "wrote " << rows.size() << " rows to " << a.out_path << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spin coherence of entangled pairs under Lorentz boosts", "boostcoh"};
  app.require_subcommand(1);

  WignerArgs wa;
  auto* wig = app.add_subcommand("wigner", "Wigner rotation half-angle quantities (e = z, f = x)");
  wig->add_option("--beta", wa.beta, "boost speed v/c in [0, 1)");
  wig->add_option("--p-over-m", wa.p_over_m, "particle momentum over mass");

  CoherenceArgs ca;
  auto* coh = app.add_subcommand("coherence", "Coherence of the boosted reduced spin state");
  coh->add_option("--scenario", ca.scenario)->check(CLI::IsMember({"single", "dual"}));
  coh->add_option("--theta", ca.theta, "entanglement angle in [0, pi/2]");
  coh->add_option("--beta", ca.beta, "boost speed (both particles in the dual scenario)");
  coh->add_option("--beta1", ca.beta1, "boost speed of particle 1");
  coh->add_option("--beta2", ca.beta2, "boost speed of particle 2 (dual)");
  coh->add_option("--sigma", ca.sigma, "wave-packet width in MeV");
  coh->add_option("--mass", ca.mass, "rest mass in MeV");
  coh->add_option("--n", ca.n, "generalization exponent (nonnegative integer)");
  coh->add_option("--method", ca.method)
      ->check(CLI::IsMember({"perturbative", "exact-eig", "quadrature"}));

  SweepArgs sa;
  auto* swp = app.add_subcommand("sweep", "Sweep sigma and write CSV");
  swp->add_option("--scenario", sa.scenario)->check(CLI::IsMember({"single", "dual"}));
  swp->add_option("--theta", sa.theta);
  swp->add_option("--n", sa.n);
  swp->add_option("--mass", sa.mass);
  swp->add_option("--sigma-min", sa.sigma_min)->required();
  swp->add_option("--sigma-max", sa.sigma_max)->required();
  swp->add_option("--steps", sa.steps)->required();
  swp->add_option("--betas", sa.betas, "comma list; b1:b2 pairs for the dual scenario")->required();
  swp->add_option("--methods", sa.methods, "comma list of perturbative, exact-eig, quadrature");
  swp->add_option("--out", sa.out_path)->required();

  FigureArgs fa;
  auto* fig = app.add_subcommand("figure", "Write the data behind a figure preset");
  fig->add_option("name", fa.name, "fig1 or fig2")->required()->check(CLI::IsMember({"fig1", "fig2"}));
  fig->add_option("--out", fa.out_path)->required();
  fig->add_option("--theta", fa.theta);
  fig->add_option("--n", fa.n);
  fig->add_option("--mass", fa.mass);
  fig->add_option("--sigma-max", fa.sigma_max);
  fig->add_option("--steps", fa.steps);
  fig->add_option("--methods", fa.methods);

  try {
    std::vector<std::string> args = apply_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (wig->parsed()) return cmd_wigner(wa, out);
    if (coh->parsed()) return cmd_coherence(ca, out);
    if (swp->parsed()) return cmd_sweep(sa, out);
    if (fig->parsed()) return cmd_figure(fa, out);
  } catch (const integrals::QuadratureToleranceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace boostcoh::cli
