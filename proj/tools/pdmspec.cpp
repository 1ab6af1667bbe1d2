// pdmspec: spectra, ordering classification, SUSY exports and verification
// for the exponentially graded position-dependent-mass model.

#include <algorithm>
#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "format.hpp"
#include "pdm/ambiguity.hpp"
#include "pdm/analytic.hpp"
#include "pdm/errors.hpp"
#include "pdm/ordering.hpp"
#include "pdm/spectrum_solver.hpp"
#include "pdm/susy.hpp"
#include "verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace pdmspec;

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kComplexOrdering = 3,
  kVerifyFailed = 4,
  kIoFailure = 5,
};

struct CommonOpts {
  pdm::SystemConfig sys{1.0, 1.0, 1.0, 2.0};
  std::string ordering = "zhu-kroemer";
  int levels = 4;
  std::string grid;  // "xmin:xmax:n"; empty picks a per-command default
  std::string format = "table";
  std::string out;
  std::string csv_delim = "space";
  std::string config;  // consumed by the argv preprocessing in main
  std::uint64_t seed = pdm::kDefaultSeed;
};

void add_system_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--hbar", o.sys.hbar, "Planck constant (default 1)");
  cmd->add_option("--m0", o.sys.m0, "mass scale (default 1)");
  cmd->add_option("--c", o.sys.c, "exponential grading rate (default 1)");
  cmd->add_option("--V0", o.sys.V0, "potential strength (default 2)");
  cmd->add_option("--ordering", o.ordering,
                  "preset name or explicit a,alpha,beta,gamma (default zhu-kroemer)");
  cmd->add_option("--config", o.config, "key=value file; command-line flags override");
}

// Expands --config FILE into option tokens placed directly after the
// subcommand, so explicit flags (parsed later, take-last) override the file.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    }
  }
  if (path.empty() || args.empty()) return args;

  std::ifstream file(path);
  if (!file) throw IoError("cannot open config file: " + path);
  std::vector<std::string> injected;
  std::string line;
  while (std::getline(file, line)) {
    const auto strip = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    line = strip(line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw IoError("config line without '=' in " + path);
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    if (key.empty()) throw IoError("config line with empty key in " + path);
    injected.push_back("--" + key + "=" + value);
  }

  std::vector<std::string> result;
  result.push_back(args[0]);  // the subcommand
  result.insert(result.end(), injected.begin(), injected.end());
  result.insert(result.end(), args.begin() + 1, args.end());
  return result;
}

void add_output_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--format", o.format, "table|csv|json (default table)")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  cmd->add_option("--out", o.out, "output path (default stdout)");
  cmd->add_option("--csv-delim", o.csv_delim, "space|comma (default space)")
      ->check(CLI::IsMember({"space", "comma"}));
}

pdm::OrderingParams parse_ordering(const std::string& spec) {
  if (spec.find(',') == std::string::npos) return pdm::preset(spec).params;
  std::vector<double> v;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t comma = spec.find(',', pos);
    const std::string tok = spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
    try {
      v.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw pdm::InvalidConfig("cannot parse ordering component: '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (v.size() != 4) {
    throw pdm::InvalidConfig("explicit ordering needs exactly a,alpha,beta,gamma");
  }
  return pdm::make_ordering(v[0], v[1], v[2], v[3]);
}

pdm::Grid parse_grid(const std::string& spec) {
  double lo, hi;
  int n;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &lo, &hi, &n) != 3) {
    throw pdm::InvalidConfig("grid must be xmin:xmax:n, got '" + spec + "'");
  }
  return pdm::Grid(lo, hi, n);
}

// Default domains follow the decay structure: 40/|c| into the marginal flank,
// 8/|c| into the double-exponential flank.
pdm::Grid default_numeric_grid(const pdm::SystemConfig& sys, int n = 8192) {
  const double w = std::abs(sys.c);
  return sys.c > 0 ? pdm::Grid(-40.0 / w, 8.0 / w, n) : pdm::Grid(-8.0 / w, 40.0 / w, n);
}

pdm::Grid default_susy_grid(const pdm::SystemConfig& sys) {
  const double w = std::abs(sys.c);
  return sys.c > 0 ? pdm::Grid(-12.0 / w, 8.0 / w, 1000) : pdm::Grid(-8.0 / w, 12.0 / w, 1000);
}

json system_json(const pdm::SystemConfig& sys) {
  return {{"hbar", sys.hbar}, {"m0", sys.m0}, {"c", sys.c}, {"V0", sys.V0}};
}

json ordering_json(const pdm::OrderingParams& p) {
  json j{{"a", p.a()}, {"alpha", p.alpha()}, {"beta", p.beta()}, {"gamma", p.gamma()}};
  if (p.exact()) {
    const auto& r = p.rationals();
    j["exact"] = {r[0].str(), r[1].str(), r[2].str(), r[3].str()};
  }
  return j;
}

int cmd_orderings(const CommonOpts& o) {
  TableWriter table({"name", "a", "alpha", "beta", "gamma", "q/c^2", "nu^2", "nu"}, o.format,
                    o.csv_delim);
  json rows = json::array();
  for (const auto& p : pdm::ordering_presets()) {
    const pdm::AmbiguityReport rep = pdm::nu_value(p.params);
    const auto& r = p.params.rationals();
    const std::string nu_cell = rep.real() ? g17(*rep.nu) : "COMPLEX";
    table.row({std::string(p.name), r[0].str(), r[1].str(), r[2].str(), r[3].str(),
               rep.q_over_c2_exact->str(), rep.nu_squared_exact->str(), nu_cell});
    json row{{"name", p.name},
             {"a", r[0].str()},
             {"alpha", r[1].str()},
             {"beta", r[2].str()},
             {"gamma", r[3].str()},
             {"q_over_c2", rep.q_over_c2_exact->str()},
             {"nu_squared", rep.nu_squared_exact->str()},
             {"classification", rep.real() ? "real" : "complex"}};
    if (rep.real()) row["nu"] = *rep.nu;
    rows.push_back(row);
  }

  OutputSink sink(o.out);
  if (o.format == "json") {
    sink.stream() << json{{"schema", 1}, {"orderings", rows}}.dump(2) << "\n";
  } else {
    table.write(sink.stream());
  }
  sink.finish();
  return kOk;
}

int cmd_spectrum(const CommonOpts& o, bool numeric) {
  const pdm::OrderingParams ordering = parse_ordering(o.ordering);
  const pdm::Spectrum morse = pdm::morse_spectrum(o.sys, ordering, o.levels - 1);
  const pdm::Spectrum osc = pdm::oscillator_spectrum(o.sys, ordering, o.levels - 1);

  std::optional<pdm::NumericSpectrum> num;
  std::optional<pdm::Grid> grid;
  if (numeric) {
    grid = o.grid.empty() ? default_numeric_grid(o.sys) : parse_grid(o.grid);
    num = pdm::solve_spectrum(o.sys, ordering, *grid, o.levels, o.seed);
  }

  std::vector<std::string> header{"n", "E_morse", "E_oscillator"};
  if (num) {
    header.insert(header.end(), {"E_numeric", "error_estimate", "rel_deviation"});
  }
  TableWriter table(header, o.format, o.csv_delim);
  json levels = json::array();
  for (int n = 0; n < o.levels; ++n) {
    std::vector<std::string> cells{std::to_string(n), g17(morse.levels[n].energy),
                                   g17(osc.levels[n].energy)};
    json row{{"n", n},
             {"morse", morse.levels[n].energy},
             {"oscillator", osc.levels[n].energy}};
    if (num) {
      const auto& lv = num->levels[n];
      const double rel = std::abs(lv.energy - morse.levels[n].energy) /
                         std::max(1e-300, std::abs(morse.levels[n].energy));
      cells.insert(cells.end(), {g17(lv.energy), g17(lv.error_estimate), g17(rel)});
      row["numeric"] = lv.energy;
      row["error_estimate"] = lv.error_estimate;
      row["rel_deviation"] = rel;
    }
    table.row(cells);
    levels.push_back(row);
  }

  OutputSink sink(o.out);
  if (o.format == "json") {
    json doc{{"schema", 1},
             {"system", system_json(o.sys)},
             {"ordering", ordering_json(ordering)},
             {"nu", morse.nu},
             {"kappa", morse.kappa},
             {"levels", levels}};
    if (num) {
      doc["seed"] = o.seed;
      doc["grid"] = {{"x_min", grid->x_min()}, {"x_max", grid->x_max()}, {"n", grid->size()}};
      doc["grid_report"] = {{"boundary_shift", num->grid_report.boundary_shift},
                            {"boundary_sensitive", num->grid_report.boundary_sensitive},
                            {"clustered", num->grid_report.clustered}};
    }
    sink.stream() << doc.dump(2) << "\n";
  } else {
    if (o.format == "table") {
      sink.stream() << "# hbar=" << g12(o.sys.hbar) << " m0=" << g12(o.sys.m0)
                    << " c=" << g12(o.sys.c) << " V0=" << g12(o.sys.V0)
                    << " nu=" << g12(morse.nu) << " kappa=" << g12(morse.kappa) << "\n";
    }
    table.write(sink.stream());
  }
  sink.finish();
  return kOk;
}

int cmd_susy(const CommonOpts& o) {
  if (o.out.empty()) throw pdm::InvalidConfig("susy requires --out (writes CSV and JSON)");
  const pdm::SystemConfig& sys = o.sys;
  const pdm::Superpotential sp = pdm::solve_superpotential(sys);
  const pdm::ExponentialProfile profile(sys);
  const pdm::OrderingParams zk = pdm::preset("zhu-kroemer").params;
  const pdm::Grid grid = o.grid.empty() ? default_susy_grid(sys) : parse_grid(o.grid);

  // psi0 is exported on the requested window and normalized there; the
  // strict decay gate of ground_state_closed_form applies to the state used
  // in computations, not to plot exports.
  const double amp = std::sqrt(2.0 * sys.m0 * sys.V0) / (sys.hbar * std::abs(sys.c));
  pdm::GridFunction psi0 = pdm::sample(
      [&](double x) { return std::exp(0.5 * sys.c * x - amp * std::exp(sys.c * x)); }, grid);
  const double norm = psi0.norm();
  for (double& v : psi0.values) v /= norm;

  double vmax = 0, partner_resid = 0, fact_resid = 0;
  for (int i = 0; i < grid.size(); ++i) {
    vmax = std::max(vmax, std::abs(profile.potential(grid.point(i))));
  }
  TableWriter table({"x", "m", "V", "U_nu0", "W", "V1", "V2", "psi0"}, "csv", o.csv_delim);
  for (int i = 0; i < grid.size(); ++i) {
    const double x = grid.point(i);
    const double v = profile.potential(x);
    const double u = pdm::ambiguity_potential(zk, profile, x);
    const double w = pdm::superpotential_value(sp, sys, x);
    const double v1 = pdm::partner_potential_1(sp, sys, x);
    const double v2 = pdm::partner_potential_2(sp, sys, x);
    partner_resid = std::max(partner_resid, std::abs(v2 - v));
    fact_resid = std::max(fact_resid, std::abs(v1 + sp.E0 - v - u));
    table.row({g17(x), g17(profile.mass(x)), g17(v), g17(u), g17(w), g17(v1), g17(v2),
               g17(psi0.values[i])});
  }

  const pdm::Spectrum nu0 = pdm::morse_spectrum(sys, zk, 0);
  json summary{{"schema", 1},
               {"system", system_json(sys)},
               {"grid", {{"x_min", grid.x_min()}, {"x_max", grid.x_max()}, {"n", grid.size()}}},
               {"w_plus", sp.w_plus},
               {"w_minus", sp.w_minus},
               {"E0", sp.E0},
               {"kappa", sys.kappa()},
               {"ground_level_analytic", nu0.levels[0].energy},
               {"identity_residuals",
                {{"partner_rel", partner_resid / vmax},
                 {"factorization_rel", fact_resid / vmax},
                 {"e0_vs_ground_rel", std::abs(sp.E0 - nu0.levels[0].energy) / sys.kappa()}}}};

  std::string json_path = o.out;
  const std::size_t dot = json_path.find_last_of('.');
  if (dot != std::string::npos && json_path.substr(dot) == ".csv") {
    json_path = json_path.substr(0, dot) + ".json";
  } else {
    json_path += ".json";
  }

  OutputSink csv_sink(o.out);
  table.write(csv_sink.stream());
  csv_sink.finish();

  OutputSink json_sink(json_path);
  json_sink.stream() << summary.dump(2) << "\n";
  json_sink.finish();
  return kOk;
}

int cmd_verify(const CommonOpts& o, const std::string& inject_fault) {
  VerifyOptions vopts;
  vopts.grid = o.grid.empty() ? default_numeric_grid({1, 1, 1, 2}) : parse_grid(o.grid);
  vopts.levels = o.levels;
  vopts.seed = o.seed;
  vopts.inject_fault = inject_fault;

  const std::vector<CheckResult> results = run_verification(vopts);
  int failures = 0;

  OutputSink sink(o.out);
  if (o.format == "json") {
    json rows = json::array();
    for (const auto& r : results) {
      if (!r.pass) ++failures;
      rows.push_back({{"name", r.name},
                      {"pass", r.pass},
                      {"metric", r.metric},
                      {"threshold", r.threshold},
                      {"diagnostic", r.diagnostic}});
    }
    sink.stream() << json{{"schema", 1}, {"failures", failures}, {"checks", rows}}.dump(2)
                  << "\n";
  } else {
    for (const auto& r : results) {
      if (!r.pass) ++failures;
      sink.stream() << (r.pass ? "PASS " : "FAIL ") << r.name << " metric=" << g12(r.metric)
                    << " threshold=" << g12(r.threshold);
      if (!r.diagnostic.empty()) sink.stream() << " [" << r.diagnostic << "]";
      sink.stream() << "\n";
    }
    sink.stream() << (failures ? "DEGRADED: " : "OK: ") << results.size() - failures << "/"
                  << results.size() << " checks passed\n";
  }
  sink.finish();
  return failures == 0 ? kOk : kVerifyFailed;
}

int cmd_sweep(const CommonOpts& o, const std::string& param, const std::string& range) {
  double lo, hi;
  int count;
  if (std::sscanf(range.c_str(), "%lf:%lf:%d", &lo, &hi, &count) != 3 || count < 1) {
    throw pdm::InvalidConfig("range must be start:stop:count, got '" + range + "'");
  }
  const bool ordering_param = param == "a" || param == "alpha" || param == "gamma";
  if (!ordering_param && param != "V0" && param != "c" && param != "m0") {
    throw pdm::InvalidConfig("sweep parameter must be one of V0, c, m0, a, alpha, gamma");
  }
  const pdm::OrderingParams base = parse_ordering(o.ordering);

  std::vector<std::string> header{param, "status", "nu_squared", "nu", "kappa"};
  for (int i = 0; i < o.levels; ++i) header.push_back("E" + std::to_string(i));
  TableWriter table(header, o.format, o.csv_delim);
  json rows = json::array();

  for (int step = 0; step < count; ++step) {
    const double value = count == 1 ? lo : lo + (hi - lo) * step / (count - 1);
    pdm::SystemConfig sys = o.sys;
    double a = base.a(), alpha = base.alpha(), gamma = base.gamma();
    if (param == "V0") sys.V0 = value;
    if (param == "c") sys.c = value;
    if (param == "m0") sys.m0 = value;
    if (param == "a") a = value;
    if (param == "alpha") alpha = value;
    if (param == "gamma") gamma = value;

    std::vector<std::string> cells{g17(value)};
    json row{{param, value}};
    const auto flagged = [&](const std::string& status, const std::string& nu2) {
      cells.insert(cells.end(), {status, nu2, "-", "-"});
      row["status"] = status;
      for (int i = 0; i < o.levels; ++i) cells.push_back("-");
    };
    try {
      // beta is re-solved from the constraint when ordering parameters sweep
      const pdm::OrderingParams ord =
          ordering_param ? pdm::make_ordering(a, alpha, -1.0 - alpha - gamma, gamma) : base;
      const pdm::AmbiguityReport rep = pdm::nu_value(ord);
      const std::string nu2 = exact_or_g17(rep.nu_squared_exact, rep.nu_squared);
      row["nu_squared"] = rep.nu_squared;
      if (!rep.real()) {
        flagged("complex", nu2);
      } else {
        try {
          const pdm::Spectrum spec = pdm::morse_spectrum(sys, ord, o.levels - 1);
          cells.insert(cells.end(), {"ok", nu2, g17(spec.nu), g17(spec.kappa)});
          row["status"] = "ok";
          row["nu"] = spec.nu;
          row["kappa"] = spec.kappa;
          json energies = json::array();
          for (const auto& lv : spec.levels) {
            cells.push_back(g17(lv.energy));
            energies.push_back(lv.energy);
          }
          row["levels"] = energies;
        } catch (const pdm::NoBoundStates&) {
          flagged("no-bound-states", nu2);
        } catch (const pdm::InvalidConfig&) {
          flagged("invalid", nu2);
        }
      }
    } catch (const pdm::DegenerateOrdering&) {
      flagged("degenerate", "-");
    } catch (const pdm::InvalidConfig&) {
      flagged("invalid", "-");
    }
    table.row(cells);
    rows.push_back(row);
  }

  OutputSink sink(o.out);
  if (o.format == "json") {
    sink.stream() << json{{"schema", 1},
                          {"parameter", param},
                          {"system", system_json(o.sys)},
                          {"rows", rows}}
                         .dump(2)
                  << "\n";
  } else {
    table.write(sink.stream());
  }
  sink.finish();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"position-dependent-mass spectra: ordering classification, exact and numeric "
               "spectra, SUSY factorization exports"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  CommonOpts orderings_opts;
  CLI::App* orderings_cmd =
      app.add_subcommand("orderings", "classification table of the literature orderings");
  add_output_flags(orderings_cmd, orderings_opts);

  CommonOpts spectrum_opts;
  bool numeric = false;
  CLI::App* spectrum_cmd =
      app.add_subcommand("spectrum", "analytic (and optionally numeric) bound-state levels");
  add_system_flags(spectrum_cmd, spectrum_opts);
  add_output_flags(spectrum_cmd, spectrum_opts);
  spectrum_cmd->add_option("--levels", spectrum_opts.levels, "number of levels (default 4)")
      ->check(CLI::PositiveNumber);
  spectrum_cmd->add_option("--grid", spectrum_opts.grid, "xmin:xmax:n for --numeric");
  spectrum_cmd->add_flag("--numeric", numeric, "run the finite-difference eigensolver too");
  spectrum_cmd->add_option("--seed", spectrum_opts.seed, "inverse-iteration seed");

  CommonOpts susy_opts;
  CLI::App* susy_cmd = app.add_subcommand(
      "susy", "dump x, m, V, U_nu0, W, V1, V2, psi0 (CSV) plus a JSON summary");
  add_system_flags(susy_cmd, susy_opts);
  add_output_flags(susy_cmd, susy_opts);
  susy_cmd->add_option("--grid", susy_opts.grid, "xmin:xmax:n (default -12/|c|:8/|c|:1000)");

  CommonOpts verify_opts;
  std::string inject_fault;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run every invariant check, exit 4 on failure");
  add_output_flags(verify_cmd, verify_opts);
  verify_cmd->add_option("--grid", verify_opts.grid, "xmin:xmax:n (default -40:8:8192)");
  verify_cmd->add_option("--levels", verify_opts.levels, "levels for the numeric checks")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify_opts.seed, "inverse-iteration seed");
  verify_cmd->add_option("--inject-fault", inject_fault, "negative control (preset-nu)")
      ->group("");  // hidden

  CommonOpts sweep_opts;
  std::string sweep_param, sweep_range;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "sweep one parameter, emit levels per row");
  add_system_flags(sweep_cmd, sweep_opts);
  add_output_flags(sweep_cmd, sweep_opts);
  sweep_cmd->add_option("--param", sweep_param, "V0|c|m0|a|alpha|gamma")->required();
  sweep_cmd->add_option("--range", sweep_range, "start:stop:count")->required();
  sweep_cmd->add_option("--levels", sweep_opts.levels, "levels per row (default 4)")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> args = expand_config(argc, argv);
    std::reverse(args.begin(), args.end());  // CLI11 vector parse wants reversed args
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoFailure;
  }

  try {
    if (orderings_cmd->parsed()) return cmd_orderings(orderings_opts);
    if (spectrum_cmd->parsed()) return cmd_spectrum(spectrum_opts, numeric);
    if (susy_cmd->parsed()) return cmd_susy(susy_opts);
    if (verify_cmd->parsed()) return cmd_verify(verify_opts, inject_fault);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_opts, sweep_param, sweep_range);
  } catch (const pdm::ComplexOrdering& e) {
    std::cerr << "error: complex nu: physically unacceptable ordering (" << e.what() << ")\n";
    return kComplexOrdering;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoFailure;
  } catch (const pdm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kOk;
}
