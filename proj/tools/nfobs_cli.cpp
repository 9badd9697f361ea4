// nfobs command-line front end.
//
//   nfobs simulate SCENARIO [key=value ...] -o traj.csv
//   nfobs observe SCENARIO [key=value ...] -o traj.csv
//   nfobs check-input SCENARIO [--delta D]
//   nfobs gamma-table SCENARIO --v0 a:b:n --rho a:b:n -o table.csv
//   nfobs invert SCENARIO -i z.csv -o v.csv | --random N --seed S
//   nfobs reproduce-figure -o DIR
//
// Exit codes: 0 ok, 2 config/IO, 3 assumption violated, 4 numeric failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "nfobs/config.hpp"
#include "nfobs/kernels.hpp"
#include "nfobs/observability.hpp"

namespace fs = std::filesystem;
using namespace nfobs;

namespace {

struct Common {
  std::string scenario;
  std::vector<std::string> overrides;
  std::vector<std::string> sets;
  std::string out;
  int stride = 0;
  bool full = false;

  [[nodiscard]] ScenarioConfig load() const {
    std::vector<std::string> all = overrides;
    all.insert(all.end(), sets.begin(), sets.end());
    return load_scenario(scenario, all);
  }
  [[nodiscard]] int effective_stride(const ScenarioConfig& cfg) const {
    if (full) return 1;
    return stride > 0 ? stride : cfg.stride;
  }
};

void add_common(CLI::App* app, Common& c, bool needs_out) {
  app->add_option("scenario", c.scenario, "Scenario YAML file")->required();
  app->add_option("overrides", c.overrides, "key=value overrides applied over the file");
  app->add_option("--set", c.sets, "key=value override (repeatable)");
  auto* o = app->add_option("-o,--out", c.out, "Output path");
  if (needs_out) o->required();
}

std::string fmt(double x) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof(buf), x);
  return {buf, r.ptr};
}

void print_summary(std::ostream& os, const TrajectoryRecord& rec) {
  os << "switches: " << rec.switches.size() << '\n';
  for (std::size_t i = 0; i < rec.switches.size(); ++i) {
    const auto& s = rec.switches[i];
    os << "  t" << i + 1 << " = " << s.t << "  (" << mode_name(s.from) << " -> " << mode_name(s.to) << ")\n";
  }
  os << "terminal_error: " << rec.terminal_error() << '\n';
  os << "max_transient_error: " << rec.initial_peak() << '\n';
  if (!rec.ok()) os << "aborted: " << rec.failure << '\n';
}

void warn_delta(const Scenario& s) {
  const ReducedModel red = reduced(s);
  const double ds = delta_star(red.input->certified_c(), red.params.j0, red.params.sigmoid.gain);
  if (red.params.j0 > 0.0 && s.observer.inverse.delta >= ds) {
    std::cerr << "warning: delta = " << s.observer.inverse.delta << " >= delta* = " << ds
              << " with J0 > 0; the passage-time bound does not apply\n";
  }
}

int cmd_simulate(const Common& c) {
  ScenarioConfig cfg = c.load();
  cfg.scenario.with_observer = false;
  const TrajectoryRecord rec = run_scenario(cfg.scenario);
  write_csv(rec, c.out, c.effective_stride(cfg));
  if (!rec.ok()) std::cerr << "error: " << rec.failure << '\n';
  return rec.failure_code;
}

int cmd_observe(const Common& c) {
  ScenarioConfig cfg = c.load();
  cfg.scenario.with_observer = true;
  warn_delta(cfg.scenario);
  const TrajectoryRecord rec = run_scenario(cfg.scenario);
  write_csv(rec, c.out, c.effective_stride(cfg));
  print_summary(std::cout, rec);
  return rec.failure_code;
}

int cmd_check_input(const Common& c, double delta, double t_end, int samples) {
  const ScenarioConfig cfg = c.load();
  const ReducedModel red = reduced(cfg.scenario);
  const Model model(red.params);
  const double t1 = t_end > 0.0 ? t_end : cfg.scenario.t_end;
  const InputScan scan = scan_input(model, *red.input, 0.0, t1, samples);

  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!c.out.empty()) {
    file.open(c.out);
    if (!file) throw IoError("cannot open '" + c.out + "' for writing");
    os = &file;
  }
  *os << "t,I0,wedge,det_G,delta_star\n";
  for (const auto& r : scan.rows) {
    *os << fmt(r.t) << ',' << fmt(r.i0) << ',' << fmt(r.wedge) << ',' << fmt(r.det_G) << ','
        << fmt(r.delta_star) << '\n';
  }

  const double ds = delta_star(scan.c_effective, model.j0(), model.sigma_prime0());
  const double d = delta > 0.0 ? delta : cfg.scenario.observer.inverse.delta;
  std::cerr << "# input: " << red.input->describe() << '\n'
            << "# c_effective: " << scan.c_effective << "  (raw input c: " << cfg.scenario.input->certified_c()
            << ")\n"
            << "# min_wedge: " << scan.min_wedge << '\n'
            << "# delta_star: " << ds << '\n';
  if (d > 0.0 && d < ds && scan.c_effective > 0.0) {
    std::cerr << "# t_delta(" << d << "): " << t_delta(d, ds, scan.c_effective) << '\n';
  } else {
    std::cerr << "# t_delta(" << d << "): undefined (delta >= delta_star)\n";
  }

  int code = 0;
  if (!(scan.c_effective > 0.0)) {
    std::cerr << "violation: I0 = " << scan.c_effective << " <= 0 at t = " << scan.t_min_i0 << '\n';
    code = 3;
  }
  if (!(scan.min_wedge > 0.0)) {
    std::cerr << "violation: |I12 ^ dI12| = " << scan.min_wedge << " at t = " << scan.t_min_wedge << '\n';
    code = 3;
  }
  return code;
}

std::vector<double> parse_range(const std::string& spec) {
  // "a:b:n" (n points, inclusive) or a comma list.
  std::vector<double> out;
  if (spec.find(':') != std::string::npos) {
    std::stringstream ss(spec);
    std::string a, b, n;
    std::getline(ss, a, ':');
    std::getline(ss, b, ':');
    std::getline(ss, n, ':');
    try {
      const double lo = std::stod(a), hi = std::stod(b);
      const int k = std::stoi(n);
      if (k < 1) throw ConfigError("range '" + spec + "' needs n >= 1");
      for (int i = 0; i < k; ++i) out.push_back(k == 1 ? lo : lo + (hi - lo) * i / (k - 1));
    } catch (const std::logic_error&) {
      throw ConfigError("bad range '" + spec + "' (expected a:b:n)");
    }
    return out;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::logic_error&) {
      throw ConfigError("bad number '" + item + "' in '" + spec + "'");
    }
  }
  return out;
}

int cmd_gamma_table(const Common& c, const std::string& v0_spec, const std::string& rho_spec,
                    const std::vector<int>& ps, const std::vector<int>& js) {
  const ScenarioConfig cfg = c.load();
  const ReducedModel red = reduced(cfg.scenario);
  const Model model(red.params);
  const auto v0s = parse_range(v0_spec);
  const auto rhos = parse_range(rho_spec);
  for (int p : ps) {
    if (p < 0 || p > 4) throw OrderError("p = " + std::to_string(p) + " outside [0, 4]");
  }
  for (int j : js) {
    if (j < 0 || j > 3) throw OrderError("j = " + std::to_string(j) + " outside [0, 3]");
  }
  const auto grid = gamma_grid(model, v0s, rhos, 4, 3, Exec::Parallel);

  std::ofstream out(c.out);
  if (!out) throw IoError("cannot open '" + c.out + "' for writing");
  out << "# sigma(x) = tanh(" << model.mu() << " x), odd base";
  if (red.v0_offset != 0.0) out << "; physical threshold h0 = " << red.v0_offset << " folded into I0";
  out << "\np,j,v0,rho,gamma\n";
  for (int p : ps) {
    for (int j : js) {
      for (std::size_t a = 0; a < v0s.size(); ++a) {
        for (std::size_t b = 0; b < rhos.size(); ++b) {
          out << p << ',' << j << ',' << fmt(v0s[a]) << ',' << fmt(rhos[b]) << ','
              << fmt(grid[a * rhos.size() + b](p, j)) << '\n';
        }
      }
    }
  }
  return 0;
}

int cmd_invert(const Common& c, const std::string& in_path, int random_n, unsigned seed) {
  const ScenarioConfig cfg = c.load();
  const ReducedModel red = reduced(cfg.scenario);
  const Model model(red.params);
  const InverseConfig& inv = cfg.scenario.observer.inverse;

  std::ofstream out(c.out);
  if (!out) throw IoError("cannot open '" + c.out + "' for writing");

  if (random_n > 0) {
    // Round-trip audit on random states of the good region.
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mag(inv.delta, inv.R), rad(inv.eta, inv.R), ang(-M_PI, M_PI),
        tt(0.0, cfg.scenario.t_end);
    out << "t,v0,v1,v2,u0,u1,u2,err\n";
    double worst = 0.0;
    for (int i = 0; i < random_n; ++i) {
      const double sign = (rng() & 1U) ? 1.0 : -1.0;
      const double r = rad(rng), a = ang(rng), t = tt(rng);
      const Vec3 v{sign * mag(rng), r * std::cos(a), r * std::sin(a)};
      const Vec3 u = pseudo_inverse(inv, model, *red.input, T_map(model, *red.input, v, t), v.x(), t);
      const double e = (u - v).norm();
      worst = std::max(worst, e);
      out << fmt(t) << ',' << fmt(v.x()) << ',' << fmt(v.y()) << ',' << fmt(v.z()) << ',' << fmt(u.x()) << ','
          << fmt(u.y()) << ',' << fmt(u.z()) << ',' << fmt(e) << '\n';
    }
    std::cout << "max_roundtrip_error: " << worst << '\n';
    return 0;
  }

  if (in_path.empty()) throw ConfigError("invert needs --in or --random");
  const auto rows = read_csv(in_path);
  out << "t,u0,u1,u2\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.size() != 6) {
      throw IoError(in_path + ": row " + std::to_string(i + 2) + " has " + std::to_string(r.size()) +
                    " fields, expected t,z0,z1,z2,z3,sign");
    }
    const Vec4 z{r[1], r[2], r[3], r[4]};
    const Vec3 u = pseudo_inverse(inv, model, *red.input, z, r[5], r[0]);
    out << fmt(r[0]) << ',' << fmt(u.x()) << ',' << fmt(u.y()) << ',' << fmt(u.z()) << '\n';
  }
  return 0;
}

int cmd_reproduce_figure(const std::string& out_dir, const std::vector<std::string>& overrides, int stride) {
  std::vector<std::string> ovs = overrides;
  ScenarioConfig cfg = parse_scenario(paper_scenario_yaml(), ovs);
  cfg.scenario.with_observer = true;
  const TrajectoryRecord rec = run_scenario(cfg.scenario);

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create '" + out_dir + "': " + ec.message());
  const int st = stride > 0 ? stride : cfg.stride;
  write_csv(rec, (fs::path(out_dir) / "figure_traj.csv").string(), st);

  const std::string log_path = (fs::path(out_dir) / "figure_logerr.csv").string();
  std::ofstream log(log_path);
  if (!log) throw IoError("cannot open '" + log_path + "' for writing");
  log << "t,err,log10_err\n";
  for (std::size_t i = 0; i < rec.rows.size(); ++i) {
    if (i % static_cast<std::size_t>(st) != 0 && i + 1 != rec.rows.size()) continue;
    const auto& r = rec.rows[i];
    log << fmt(r.t) << ',' << fmt(r.err) << ',' << fmt(std::log10(std::max(r.err, 1e-16))) << '\n';
  }

  nlohmann::json summary;
  summary["switch_times"] = nlohmann::json::array();
  summary["switches"] = nlohmann::json::array();
  for (const auto& s : rec.switches) {
    summary["switch_times"].push_back(s.t);
    summary["switches"].push_back({{"t", s.t}, {"from", mode_name(s.from)}, {"to", mode_name(s.to)}});
  }
  summary["terminal_error"] = rec.terminal_error();
  summary["max_transient_error"] = rec.initial_peak();
  summary["completed"] = rec.ok();
  if (!rec.ok()) summary["failure"] = rec.failure;
  const std::string sum_path = (fs::path(out_dir) / "figure_summary.json").string();
  std::ofstream sum(sum_path);
  if (!sum) throw IoError("cannot open '" + sum_path + "' for writing");
  sum << summary.dump(2) << '\n';

  print_summary(std::cout, rec);
  return rec.failure_code;
}

int exit_code(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const IoError*>(&e) ||
      dynamic_cast<const ParameterError*>(&e)) {
    return 2;
  }
  if (dynamic_cast<const AssumptionError*>(&e)) return 3;
  return 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neural-field simulation and hybrid high-gain observer"};
  app.require_subcommand(1);

  Common sim_c, obs_c, chk_c, gam_c, inv_c;
  auto* sim = app.add_subcommand("simulate", "Plant-only simulation to CSV");
  add_common(sim, sim_c, true);
  sim->add_option("--stride", sim_c.stride, "Write every N-th row");
  sim->add_flag("--full-resolution", sim_c.full, "Write every row");

  auto* obs = app.add_subcommand("observe", "Plant + observer co-simulation to CSV, summary on stdout");
  add_common(obs, obs_c, true);
  obs->add_option("--stride", obs_c.stride, "Write every N-th row");
  obs->add_flag("--full-resolution", obs_c.full, "Write every row");

  double chk_delta = 0.0, chk_t_end = 0.0;
  int chk_samples = 4000;
  auto* chk = app.add_subcommand("check-input", "Input persistence diagnostics as CSV");
  add_common(chk, chk_c, false);
  chk->add_option("--delta", chk_delta, "delta for t_delta (default: observer.delta)");
  chk->add_option("--t-end", chk_t_end, "Scan horizon (default: sim.t_end)");
  chk->add_option("--samples", chk_samples, "Number of grid intervals");

  std::string v0_spec = "-1:1:5", rho_spec = "0:2:5";
  std::vector<int> ps{0, 1, 2, 3}, js{0, 1, 2, 3};
  auto* gam = app.add_subcommand("gamma-table", "Tabulate Gamma_p^j on a grid");
  add_common(gam, gam_c, true);
  gam->add_option("--v0", v0_spec, "v0 grid a:b:n or list");
  gam->add_option("--rho", rho_spec, "rho grid a:b:n or list");
  gam->add_option("--p", ps, "Orders p")->delimiter(',');
  gam->add_option("--j", js, "Orders j")->delimiter(',');

  std::string inv_in;
  int inv_random = 0;
  unsigned inv_seed = 1;
  auto* inv = app.add_subcommand("invert", "Pseudo-inverse of t,z0..z3,sign rows");
  add_common(inv, inv_c, true);
  inv->add_option("-i,--in", inv_in, "Input CSV t,z0,z1,z2,z3,sign");
  inv->add_option("--random", inv_random, "Round-trip audit on N random states instead");
  inv->add_option("--seed", inv_seed, "Seed for --random");

  std::string fig_dir;
  std::vector<std::string> fig_sets;
  int fig_stride = 0;
  auto* fig = app.add_subcommand("reproduce-figure", "Run the canonical scenario and write figure CSVs");
  fig->add_option("-o,--out", fig_dir, "Output directory")->required();
  fig->add_option("--set", fig_sets, "key=value override (repeatable)");
  fig->add_option("--stride", fig_stride, "Write every N-th row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*sim) return cmd_simulate(sim_c);
    if (*obs) return cmd_observe(obs_c);
    if (*chk) return cmd_check_input(chk_c, chk_delta, chk_t_end, chk_samples);
    if (*gam) return cmd_gamma_table(gam_c, v0_spec, rho_spec, ps, js);
    if (*inv) return cmd_invert(inv_c, inv_in, inv_random, inv_seed);
    if (*fig) return cmd_reproduce_figure(fig_dir, fig_sets, fig_stride);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e);
  }
  return 0;
}
