#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <ostream>
#include <thread>

#include "ftwave/critical.hpp"
#include "ftwave/error.hpp"
#include "ftwave/variational.hpp"
#include "output.hpp"
#include "verification.hpp"

namespace ftwave::cli {
namespace {

using nlohmann::json;

void validate_params(const RunConfig& c) {
  try {
    c.params.validate();
  } catch (const Error& e) {
    throw CliError(kConfig, e.what());
  }
}

std::vector<double> omega_grid(const RunConfig& c) {
  if (!c.omega_min || !c.omega_max) {
    throw CliError(kConfig, "--omega-min and --omega-max are required");
  }
  if (!(c.omega_step > 0.0) || !std::isfinite(c.omega_step)) {
    throw CliError(kConfig, "--omega-step must be positive");
  }
  if (!(*c.omega_min > 0.0) || !(*c.omega_max >= *c.omega_min)) {
    throw CliError(kConfig, "empty omega range: need 0 < omega-min <= omega-max");
  }
  std::vector<double> grid;
  const double span = *c.omega_max - *c.omega_min;
  const auto count = static_cast<long>(std::floor(span / c.omega_step + 1e-9));
  if (count > 1000000) throw CliError(kConfig, "omega range has more than 1e6 points");
  for (long k = 0; k <= count; ++k) grid.push_back(*c.omega_min + k * c.omega_step);
  return grid;
}

std::vector<BranchRow> rows_at(const ModelParams& p, double omega) {
  std::vector<BranchRow> rows;
  for (Branch b : {Branch::L, Branch::R}) {
    if (!branch_exists(p, omega, b)) continue;
    StationaryState s;
    try {
      s = solve_branch(p, omega, b);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NumericalOverflow) continue;
      throw;
    }
    BranchRow r{b,       omega,  s.t_minus,         s.t_plus,         s.x_minus, s.x_plus,
                s.mass,  s.energy, s.jump_residual(), s.flux_residual(), false};
    r.flagged = !(r.jump_res < 1e-9 && r.flux_res < 1e-9);
    rows.push_back(r);
  }
  return rows;
}

json params_json(const ModelParams& p) {
  return {{"sigma", p.sigma}, {"tau", p.tau}, {"alpha", p.alpha}};
}

json thresholds_json(const ModelParams& p) {
  const Thresholds th = thresholds(p);
  json j = {{"omega_lin", th.omega_lin}, {"omega_res", th.omega_res}};
  if (th.mu_alpha) j["mu_alpha"] = *th.mu_alpha;
  if (p.is_critical()) {
    const CriticalData cd = critical_data(p.tau);
    j["mu_star"] = cd.mu_star;
    j["mu_line"] = cd.mu_line;
    j["mu_tilde"] = cd.mu_tilde;
  }
  return j;
}

json state_json(const StationaryState& s) {
  return {{"branch", to_string(s.branch)}, {"omega", s.omega},     {"mass", s.mass},
          {"energy", s.energy},           {"t_minus", s.t_minus}, {"t_plus", s.t_plus},
          {"x_minus", s.x_minus},         {"x_plus", s.x_plus}};
}

std::string profile_csv(const GridFunction& u) {
  std::string csv = "x,u\n";
  for (int i = 0; i <= u.intervals(); ++i) {
    csv += format_double(u.left_x(i)) + "," + format_double(u.left()[i]) + "\n";
  }
  for (int i = 0; i <= u.intervals(); ++i) {
    csv += format_double(u.right_x(i)) + "," + format_double(u.right()[i]) + "\n";
  }
  return csv;
}

double profile_extent(const RunConfig& c, double omega) {
  return c.grid_half_extent > 0.0 ? c.grid_half_extent : 20.0 / std::sqrt(omega);
}

Series profile_series(const GridFunction& u, const std::string& label, const std::string& color) {
  Series s{label, color, {}};
  const int stride = std::max(1, u.intervals() / 400);
  for (int i = 0; i <= u.intervals(); i += stride) s.points.emplace_back(u.left_x(i), u.left()[i]);
  s.points.emplace_back(0.0, u.left().back());
  for (int i = 0; i <= u.intervals(); i += stride) s.points.emplace_back(u.right_x(i), u.right()[i]);
  return s;
}

std::string mass_svg(const RunConfig& c, const BranchTable& table) {
  Series l{"branch L", "#1f77b4", {}};
  Series r{"branch R", "#d62728", {}};
  for (const auto& row : table) (row.branch == Branch::L ? l : r).points.emplace_back(row.omega, row.mass);
  char title[128];
  std::snprintf(title, sizeof title, "mass vs omega (sigma=%g, tau=%g, alpha=%g)", c.params.sigma,
                c.params.tau, c.params.alpha);
  return render_svg(title, "omega", "mass", {l, r});
}

int write_branch_outputs(const RunConfig& c, const BranchTable& table, std::ostream& out) {
  if (c.wants("csv")) {
    write_text(c.out_dir / "branch.csv", branch_csv(table));
    out << "wrote " << (c.out_dir / "branch.csv").string() << "\n";
  }
  if (c.wants("json")) {
    json rows = json::array();
    for (const auto& r : table) {
      rows.push_back({{"branch", to_string(r.branch)}, {"omega", r.omega}, {"t_minus", r.t_minus},
                      {"t_plus", r.t_plus},           {"x_minus", r.x_minus}, {"x_plus", r.x_plus},
                      {"mass", r.mass},               {"energy", r.energy},   {"jump_res", r.jump_res},
                      {"flux_res", r.flux_res},       {"flagged", r.flagged}});
    }
    const json doc = {{"params", params_json(c.params)}, {"thresholds", thresholds_json(c.params)},
                      {"rows", rows}};
    write_text(c.out_dir / "branch.json", dump_json(doc));
    out << "wrote " << (c.out_dir / "branch.json").string() << "\n";
  }
  if (c.wants("svg")) {
    write_text(c.out_dir / "branch_mass.svg", mass_svg(c, table));
    out << "wrote " << (c.out_dir / "branch_mass.svg").string() << "\n";
  }
  return kOk;
}

std::string regime_message(const ModelParams& p, double mu, const GroundStateLookup& g) {
  std::string msg = "no ground state at mu = " + format_double(mu) + ": infimum " +
                    to_string(g.infimum) + " (" + g.reason + ")";
  if (p.is_critical()) {
    const RegimeReport r = classify_mass_regime(p, mu);
    if (r.excited_state_exists) msg += "; an excited state exists on the R branch";
    if (r.no_stationary_state) msg += "; no positive stationary state at this mass";
  }
  return msg;
}

}  // namespace

BranchTable build_branch_table(const RunConfig& config) {
  validate_params(config);
  const std::vector<double> grid = omega_grid(config);
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
  const std::size_t chunk = (grid.size() + workers - 1) / workers;
  std::vector<std::future<BranchTable>> jobs;
  for (std::size_t start = 0; start < grid.size(); start += chunk) {
    const std::size_t stop = std::min(grid.size(), start + chunk);
    jobs.push_back(std::async(std::launch::async, [&, start, stop] {
      BranchTable part;
      for (std::size_t i = start; i < stop; ++i) {
        for (auto& r : rows_at(config.params, grid[i])) part.push_back(r);
      }
      return part;
    }));
  }
  BranchTable table;
  for (auto& job : jobs) {
    for (auto& r : job.get()) table.push_back(r);
  }
  return table;
}

std::string branch_csv(const BranchTable& table) {
  std::string csv = "branch,omega,t_minus,t_plus,x_minus,x_plus,mass,energy,jump_res,flux_res\n";
  for (const auto& r : table) {
    csv += std::string(to_string(r.branch));
    for (double v : {r.omega, r.t_minus, r.t_plus, r.x_minus, r.x_plus, r.mass, r.energy,
                     r.jump_res, r.flux_res}) {
      csv += "," + format_double(v);
    }
    csv += "\n";
  }
  return csv;
}

int cmd_branch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const BranchTable table = build_branch_table(config);
  for (const auto& r : table) {
    if (r.flagged) {
      err << "warning: residual above 1e-9 at omega = " << format_double(r.omega) << " branch "
          << to_string(r.branch) << "\n";
    }
  }
  return write_branch_outputs(config, table, out);
}

int cmd_ground_state(const RunConfig& config, std::ostream& out, std::ostream& err) {
  validate_params(config);
  if (!config.mu || !(*config.mu > 0.0)) throw CliError(kConfig, "--mu must be positive");
  const double mu = *config.mu;
  const GroundStateLookup g = identify_ground_state(config.params, mu);
  if (!g.state) {
    err << regime_message(config.params, mu, g) << "\n";
    return kNoSolution;
  }
  const StationaryState& s = *g.state;
  json doc = state_json(s);
  doc["params"] = params_json(config.params);
  doc["mu"] = mu;
  doc["mu_thresholds"] = thresholds_json(config.params);
  doc["infimum"] = to_string(g.infimum);

  const double extent = profile_extent(config, s.omega);
  const GridFunction sampled = sample_state(s, extent, config.grid_points);
  if (config.verify) {
    try {
      MinimizeOptions opt;
      opt.reference = s;
      opt.half_extent = extent;
      opt.intervals = config.grid_points;
      opt.require_convergence = false;
      const MinimizationReport rep = minimize_energy(config.params, mu, opt);
      doc["verify"] = {{"converged", rep.converged},
                       {"iterations", rep.iterations},
                       {"discrete_energy", rep.energy_history.back()},
                       {"lagrange_omega", rep.lagrange_omega},
                       {"profile_error_l2", *rep.profile_error_l2}};
    } catch (const Error& e) {
      doc["verify"] = {{"skipped", e.what()}};
    }
  }
  if (config.wants("json")) {
    write_text(config.out_dir / "ground_state.json", dump_json(doc));
    out << "wrote " << (config.out_dir / "ground_state.json").string() << "\n";
  }
  if (config.wants("csv")) {
    write_text(config.out_dir / "ground_state.csv", profile_csv(sampled));
    out << "wrote " << (config.out_dir / "ground_state.csv").string() << "\n";
  }
  if (config.wants("svg")) {
    write_text(config.out_dir / "ground_state.svg",
               render_svg("ground state profile", "x", "u", {profile_series(sampled, "u", "#1f77b4")}));
    out << "wrote " << (config.out_dir / "ground_state.svg").string() << "\n";
  }
  out << "ground state: branch " << to_string(s.branch) << ", omega " << format_double(s.omega)
      << ", energy " << format_double(s.energy) << "\n";
  return kOk;
}

int cmd_critical(const RunConfig& config, std::ostream& out, std::ostream&) {
  CriticalData cd;
  try {
    cd = critical_data(config.params.tau);
  } catch (const Error& e) {
    throw CliError(kConfig, e.what());
  }
  const json doc = {{"tau", cd.tau},   {"mu_star", cd.mu_star}, {"mu_tilde", cd.mu_tilde},
                    {"k_tau", cd.k_tau}, {"mu_line", cd.mu_line}};
  out << dump_json(doc);
  return kOk;
}

int cmd_minimize(const RunConfig& config, std::ostream& out, std::ostream& err) {
  validate_params(config);
  if (!config.mu || !(*config.mu > 0.0)) throw CliError(kConfig, "--mu must be positive");
  if (config.grid_points < 2) throw CliError(kConfig, "--grid.points must be at least 2");
  const double mu = *config.mu;
  MinimizeOptions opt;
  opt.half_extent = config.grid_half_extent;
  opt.intervals = config.grid_points;
  opt.require_convergence = false;
  const GroundStateLookup g = identify_ground_state(config.params, mu);
  if (g.state) opt.reference = *g.state;

  MinimizationReport rep = [&] {
    try {
      return minimize_energy(config.params, mu, opt);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Unbounded || e.kind() == ErrorKind::DomainError) {
        throw CliError(kNoSolution, e.what());
      }
      throw;
    }
  }();
  if (!rep.converged) err << "warning: minimization stopped before convergence\n";
  json doc = {{"params", params_json(config.params)},
              {"mu", mu},
              {"converged", rep.converged},
              {"iterations", rep.iterations},
              {"energy", rep.energy_history.back()},
              {"lagrange_omega", rep.lagrange_omega},
              {"half_extent", rep.final.half_extent()},
              {"intervals", rep.final.intervals()}};
  if (rep.profile_error_l2) {
    doc["profile_error_l2"] = *rep.profile_error_l2;
    doc["closed_form"] = state_json(*g.state);
  }
  if (config.wants("json")) {
    write_text(config.out_dir / "minimize.json", dump_json(doc));
    out << "wrote " << (config.out_dir / "minimize.json").string() << "\n";
  }
  if (config.wants("csv")) {
    write_text(config.out_dir / "minimize.csv", profile_csv(rep.final));
    out << "wrote " << (config.out_dir / "minimize.csv").string() << "\n";
  }
  if (config.wants("svg")) {
    write_text(config.out_dir / "minimize.svg",
               render_svg("discrete minimizer", "x", "u", {profile_series(rep.final, "u", "#2ca02c")}));
    out << "wrote " << (config.out_dir / "minimize.svg").string() << "\n";
  }
  out << "energy " << format_double(rep.energy_history.back()) << ", omega "
      << format_double(rep.lagrange_omega) << "\n";
  return kOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream&) {
  std::vector<int> ids;
  try {
    ids = verify::parse_selector(config.suite);
  } catch (const Error& e) {
    throw CliError(kConfig, e.what());
  }
  bool all = true;
  for (int id : ids) {
    const verify::CheckResult r = verify::run_check(id);
    out << verify::format_line(r) << "\n" << std::flush;
    all = all && r.passed;
  }
  return all ? kOk : kVerifyFailed;
}

int cmd_plot(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const BranchTable table = build_branch_table(config);
  write_text(config.out_dir / "branch_mass.svg", mass_svg(config, table));
  out << "wrote " << (config.out_dir / "branch_mass.svg").string() << "\n";
  if (config.mu) {
    const GroundStateLookup g = identify_ground_state(config.params, *config.mu);
    if (!g.state) {
      err << regime_message(config.params, *config.mu, g) << "\n";
      return kNoSolution;
    }
    const GridFunction u =
        sample_state(*g.state, profile_extent(config, g.state->omega), config.grid_points);
    write_text(config.out_dir / "ground_state.svg",
               render_svg("ground state profile", "x", "u", {profile_series(u, "u", "#1f77b4")}));
    out << "wrote " << (config.out_dir / "ground_state.svg").string() << "\n";
  }
  return kOk;
}

}  // namespace ftwave::cli
