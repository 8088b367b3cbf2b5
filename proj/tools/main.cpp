#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "ftwave/error.hpp"

namespace {

using ftwave::cli::RunConfig;

struct Flags {
  double sigma = 0.0;
  double tau = 0.0;
  double alpha = 0.0;
  double mu = 0.0;
  double omega_min = 0.0;
  double omega_max = 0.0;
  double omega_step = 0.0;
  std::string out;
  std::string format;
  std::string config;
  std::string suite;
  double half_extent = 0.0;
  int points = 0;
  bool verify = false;
};

}  // namespace

int main(int argc, char** argv) {
  using namespace ftwave::cli;
  CLI::App app{"Standing waves of the NLS with a delta-plus-dipole point interaction"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags f;
  std::map<std::string, CLI::Option*> opts;
  opts["sigma"] = app.add_option("--sigma", f.sigma, "nonlinearity power, 0 < sigma <= 2");
  opts["tau"] = app.add_option("--tau", f.tau, "jump ratio, tau > 1");
  opts["alpha"] = app.add_option("--alpha", f.alpha, "delta strength, alpha >= 0");
  opts["mu"] = app.add_option("--mu", f.mu, "mass");
  opts["omega-min"] = app.add_option("--omega-min", f.omega_min, "first frequency of a sweep");
  opts["omega-max"] = app.add_option("--omega-max", f.omega_max, "last frequency of a sweep");
  opts["omega-step"] = app.add_option("--omega-step", f.omega_step, "sweep step");
  opts["out"] = app.add_option("--out", f.out, "output directory");
  opts["format"] = app.add_option("--format", f.format, "comma list of csv, json, svg");
  opts["verify"] = app.add_flag("--verify", f.verify, "cross-check with the discrete minimizer");
  opts["suite"] = app.add_option("--suite", f.suite, "verification checks: all or ids like 1,2,9");
  opts["grid.half-extent"] = app.add_option("--grid.half-extent", f.half_extent, "grid half length");
  opts["grid.points"] = app.add_option("--grid.points", f.points, "intervals per half-line");
  app.add_option("--config", f.config, "JSON config; flags override its keys");

  const std::map<std::string, int (*)(const RunConfig&, std::ostream&, std::ostream&)> verbs = {
      {"branch", cmd_branch},     {"ground-state", cmd_ground_state},
      {"critical", cmd_critical}, {"minimize", cmd_minimize},
      {"verify", cmd_verify},     {"plot", cmd_plot}};
  const std::map<std::string, std::string> help = {
      {"branch", "sweep omega and tabulate both branches"},
      {"ground-state", "ground state at mass --mu"},
      {"critical", "critical masses and GN constant for --tau"},
      {"minimize", "discrete constrained energy minimization at mass --mu"},
      {"verify", "run the acceptance checks"},
      {"plot", "SVG of the mass curves and the ground state"}};
  for (const auto& [name, text] : help) app.add_subcommand(name, text);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    RunConfig config;
    if (!f.config.empty()) apply_json(config, read_config_file(f.config));
    const auto given = [&](const char* key) { return opts.at(key)->count() > 0; };
    if (given("sigma")) config.params.sigma = f.sigma;
    if (given("tau")) config.params.tau = f.tau;
    if (given("alpha")) config.params.alpha = f.alpha;
    if (given("mu")) config.mu = f.mu;
    if (given("omega-min")) config.omega_min = f.omega_min;
    if (given("omega-max")) config.omega_max = f.omega_max;
    if (given("omega-step")) config.omega_step = f.omega_step;
    if (given("out")) config.out_dir = f.out;
    if (given("format")) config.formats = parse_formats(f.format);
    if (given("verify")) config.verify = f.verify;
    if (given("suite")) config.suite = f.suite;
    if (given("grid.half-extent")) config.grid_half_extent = f.half_extent;
    if (given("grid.points")) config.grid_points = f.points;

    const std::string verb = app.get_subcommands().front()->get_name();
    return verbs.at(verb)(config, std::cout, std::cerr);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code();
  } catch (const ftwave::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ftwave::ErrorKind::DomainError ? kConfig : kNoSolution;
  }
}
