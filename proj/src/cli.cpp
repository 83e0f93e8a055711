#include "qho/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qho/core.hpp"
#include "qho/errors.hpp"
#include "qho/golden.hpp"
#include "qho/orbits.hpp"
#include "qho/shells.hpp"
#include "qho/spectrum.hpp"
#include "qho/table.hpp"
#include "qho/variational.hpp"

namespace qho::cli {
namespace {

using nlohmann::json;

json base_config(const RunConfig& cfg) {
  json j;
  j["subcommand"] = cfg.subcommand;
  j["format"] = cfg.format;
  j["out"] = cfg.out_path;
  j["hbar_omega0"] = 1.0;
  return j;
}

json spectrum_config(const RunConfig& cfg) {
  json j = base_config(cfg);
  j["tau"] = cfg.tau;
  j["epsilon"] = cfg.epsilon;
  j["n_max"] = cfg.n_max;
  j["delta"] = cfg.delta;
  return j;
}

struct Emission {
  Table table;
  json config;
};

Emission run_levels(const RunConfig& cfg) {
  const LevelScheme scheme =
      build_scheme({cfg.tau, cfg.epsilon, 1.0}, cfg.n_max);
  Emission e;
  e.table.columns = {
      {"n", true}, {"l", true}, {"energy", false}, {"capacity", true}};
  for (const Level& lev : scheme.levels) {
    e.table.rows.push_back({static_cast<double>(lev.n),
                            static_cast<double>(lev.l), lev.energy,
                            static_cast<double>(lev.capacity)});
  }
  e.table.footer = {
      {"total_capacity", static_cast<double>(scheme.total_capacity)}};
  e.config = spectrum_config(cfg);
  return e;
}

Emission run_magic(const RunConfig& cfg) {
  const LevelScheme scheme =
      build_scheme({cfg.tau, cfg.epsilon, 1.0}, cfg.n_max);
  const MagicTable table = magic_numbers(scheme, cfg.delta);
  Emission e;
  if (cfg.plot) {
    e.table = plot_data(table);
  } else {
    e.table.columns = {{"i", true}, {"N", true}};
    for (const auto& [i, n_i] : table.entries) {
      e.table.rows.push_back(
          {static_cast<double>(i), static_cast<double>(n_i)});
    }
  }
  e.config = spectrum_config(cfg);
  e.config["plot"] = cfg.plot;
  return e;
}

Emission run_slope(const RunConfig& cfg) {
  const LevelScheme scheme =
      build_scheme({cfg.tau, cfg.epsilon, 1.0}, cfg.n_max);
  const MagicTable table = magic_numbers(scheme, cfg.delta);
  const int i_to = cfg.i_to > 0
                       ? cfg.i_to
                       : (table.entries.empty() ? 0
                                                : table.entries.back().first);
  const SlopeFit fit = fit_cuberoot_line(table, cfg.i_from, i_to);
  Emission e;
  e.table.columns = {{"slope", false},
                     {"intercept", false},
                     {"rms", false},
                     {"i_from", true},
                     {"i_to", true}};
  e.table.rows.push_back({fit.slope, fit.intercept, fit.rms,
                          static_cast<double>(fit.i_from),
                          static_cast<double>(fit.i_to)});
  e.config = spectrum_config(cfg);
  e.config["i_from"] = cfg.i_from;
  e.config["i_to"] = i_to;
  return e;
}

Emission run_shells(const RunConfig& cfg) {
  if (cfg.n_cut <= 0) {
    throw ConfigError("shells requires --ncut > 0");
  }
  const LevelScheme scheme =
      build_scheme({cfg.tau, cfg.epsilon, 1.0}, cfg.n_max);
  const ShellDecomposition dec = shell_decomposition(scheme, cfg.n_cut);
  Emission e;
  if (cfg.plot) {
    e.table = plot_data(dec);
  } else {
    e.table.columns = {
        {"N", true}, {"E", false}, {"E_av", false}, {"E_shell", false}};
    for (const ShellSample& s : dec.samples) {
      e.table.rows.push_back({static_cast<double>(s.n_particles), s.e_total,
                              s.e_avg, s.e_shell});
    }
    e.table.footer = {{"a1", dec.fit.a[0]},
                      {"a2", dec.fit.a[1]},
                      {"a3", dec.fit.a[2]},
                      {"a4", dec.fit.a[3]},
                      {"a5", dec.fit.a[4]},
                      {"a6", dec.fit.a[5]},
                      {"sigma", dec.fit.sigma},
                      {"n_points", static_cast<double>(dec.fit.n_points)},
                      {"n_cut", static_cast<double>(dec.fit.n_cut)}};
  }
  e.config = spectrum_config(cfg);
  e.config["n_cut"] = cfg.n_cut;
  e.config["plot"] = cfg.plot;
  return e;
}

Emission run_vmi(const RunConfig& cfg) {
  const VmiParams p{cfg.vmi_c, cfg.theta0};
  Emission e;
  e.table.columns = {{"J", true}, {"theta", false}, {"energy", false}};
  for (int j = 0; j <= cfg.j_max; ++j) {
    e.table.rows.push_back(
        {static_cast<double>(j), vmi_theta(j, p), vmi_energy(j, p)});
  }
  e.table.footer = {{"C", p.c}, {"theta0", p.theta0}};
  e.config = base_config(cfg);
  e.config["C"] = p.c;
  e.config["theta0"] = p.theta0;
  e.config["j_max"] = cfg.j_max;
  return e;
}

Emission run_morse(const RunConfig& cfg) {
  const MorseParams p{cfg.morse_d, cfg.morse_alpha, cfg.morse_mass};
  Emission e;
  e.table.columns = {{"n", true}, {"energy", false}};
  for (int n = 0; n <= cfg.n_levels; ++n) {
    e.table.rows.push_back({static_cast<double>(n), morse_spectrum(n, p)});
  }
  e.table.footer = {{"omega", morse_omega(p)},
                    {"x_e", morse_xe(p)},
                    {"D", p.d},
                    {"alpha", p.alpha},
                    {"mass", p.mass}};
  e.config = base_config(cfg);
  e.config["D"] = p.d;
  e.config["alpha"] = p.alpha;
  e.config["mass"] = p.mass;
  e.config["n_levels"] = cfg.n_levels;
  return e;
}

Emission run_vfo_derive(const RunConfig& cfg) {
  /* side-by-side check of the variational derivation: the closed-form
     anharmonic levels against the epsilon-mapped ones */
  const double eps_equiv = 1.0 / (2.0 * cfg.vfo_c * cfg.omega0 * cfg.omega0);
  const QhoParams mapped{cfg.tau, eps_equiv, cfg.omega0};
  Emission e;
  e.table.columns = {{"n", true},
                     {"l", true},
                     {"e_q", false},
                     {"energy", false},
                     {"energy_mapped", false},
                     {"omega_stationary", false},
                     {"omega_absorbed", false}};
  for (int n = 0; n <= cfg.n_max; ++n) {
    for (int l : allowed_l(n)) {
      const QuantumNumbers qn{n, l};
      e.table.rows.push_back(
          {static_cast<double>(n), static_cast<double>(l), e_q(qn, cfg.tau),
           qvfo_energy(qn, cfg.tau, cfg.vfo_c, cfg.omega0),
           vfo_energy(energy(qn, mapped), mapped),
           qvfo_frequency(qn, cfg.tau, cfg.vfo_c, cfg.omega0),
           qvfo_frequency_absorbed(qn, cfg.tau, cfg.vfo_c, cfg.omega0)});
    }
  }
  e.table.footer = {{"C", cfg.vfo_c},
                    {"omega0", cfg.omega0},
                    {"epsilon_equiv", eps_equiv}};
  e.config = base_config(cfg);
  e.config["tau"] = cfg.tau;
  e.config["n_max"] = cfg.n_max;
  e.config["C"] = cfg.vfo_c;
  e.config["omega0"] = cfg.omega0;
  return e;
}

void emit_error(std::ostream& err, const Error& e) {
  err << json{{"error", e.code()}, {"message", e.what()}}.dump() << '\n';
}

}  // namespace

int execute(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "qshell: electronic shell structure of metal clusters from a deformed "
      "oscillator model"};
  app.set_config("--config", "",
                 "read key=value defaults from a file; flags override");

  RunConfig cfg;
  bool golden_flag = false;
  app.add_flag("--golden", golden_flag,
               "recompute the built-in reference tables and report a "
               "pass/fail diff");

  app.add_option("--tau", cfg.tau, "deformation parameter (q = e^tau)")
      ->capture_default_str();
  app.add_option("--epsilon", cfg.epsilon,
                 "anharmonicity, units 1/(hbar omega0)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--nmax", cfg.n_max, "highest oscillator shell kept")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--delta", cfg.delta, "energy-gap threshold for closures")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--ncut", cfg.n_cut,
                 "largest particle number of the energy series");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out_path,
                 "write the table to this file instead of stdout");

  auto* levels =
      app.add_subcommand("levels", "sorted, truncated level scheme");
  auto* magic =
      app.add_subcommand("magic", "magic numbers from spectral gaps");
  magic->add_flag("--plot", cfg.plot,
                  "emit (i, N^{1/3}) rows plus the 0.605 i reference line");
  auto* slope =
      app.add_subcommand("slope", "straight-line fit of N_i^{1/3} vs i");
  slope->add_option("--ifrom", cfg.i_from, "first index of the fit range")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  slope
      ->add_option("--ito", cfg.i_to,
                   "last index of the fit range (0 = last entry)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  auto* shells = app.add_subcommand(
      "shells", "total energy, liquid-drop average and shell part");
  shells->add_flag("--plot", cfg.plot, "emit (N, N^{1/3}, E_shell) rows");
  auto* vmi =
      app.add_subcommand("vmi", "variable-moment-of-inertia rotor levels");
  vmi->add_option("--C", cfg.vmi_c, "stiffness")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  vmi->add_option("--theta0", cfg.theta0, "ground-state moment of inertia")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  vmi->add_option("--jmax", cfg.j_max, "highest angular momentum")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  auto* morse = app.add_subcommand("morse", "Morse-well level spectrum");
  morse->add_option("--D", cfg.morse_d, "well depth")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  morse->add_option("--alpha", cfg.morse_alpha, "inverse range")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  morse->add_option("--mass", cfg.morse_mass, "particle mass")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  morse->add_option("--nlevels", cfg.n_levels, "number of levels to list")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  auto* vfo_derive = app.add_subcommand(
      "vfo-derive",
      "variational anharmonic oscillator on the deformed spectrum");
  vfo_derive->add_option("--C", cfg.vfo_c, "variational stiffness")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  vfo_derive->add_option("--omega0", cfg.omega0, "base frequency omega(0,0)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  for (CLI::App* sub :
       {levels, magic, slope, shells, vmi, morse, vfo_derive}) {
    sub->fallthrough();
  }
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (golden_flag) {
      return golden::run_comparison(out) ? 0 : 3;
    }
    const auto parsed = app.get_subcommands();
    if (parsed.empty()) {
      throw ConfigError(
          "a subcommand is required: levels, magic, slope, shells, vmi, "
          "morse or vfo-derive (or --golden)");
    }
    cfg.subcommand = parsed.front()->get_name();

    Emission emission;
    if (cfg.subcommand == "levels") {
      emission = run_levels(cfg);
    } else if (cfg.subcommand == "magic") {
      emission = run_magic(cfg);
    } else if (cfg.subcommand == "slope") {
      emission = run_slope(cfg);
    } else if (cfg.subcommand == "shells") {
      emission = run_shells(cfg);
    } else if (cfg.subcommand == "vmi") {
      emission = run_vmi(cfg);
    } else if (cfg.subcommand == "morse") {
      emission = run_morse(cfg);
    } else {
      emission = run_vfo_derive(cfg);
    }

    std::ostringstream buffer;
    if (cfg.format == "csv") {
      write_csv(emission.table, buffer);
    } else {
      write_json(emission.table, emission.config, buffer);
    }
    if (cfg.out_path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(cfg.out_path, std::ios::binary);
      if (!file) {
        throw ConfigError("cannot open output file: " + cfg.out_path);
      }
      file << buffer.str();
    }
    return 0;
  } catch (const ConfigError& e) {
    emit_error(err, e);
    return 1;
  } catch (const Error& e) {
    emit_error(err, e);
    return 2;
  }
}

}  // namespace qho::cli
