#include "verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "ftwave/critical.hpp"
#include "ftwave/error.hpp"
#include "ftwave/oracle.hpp"
#include "ftwave/variational.hpp"
#include "random_grids.hpp"

namespace ftwave::verify {
namespace {

constexpr double kPi = std::numbers::pi;
const double kRoot3 = std::sqrt(3.0);

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

Outcome critical_constants() {
  const CriticalData one = critical_data(1.0);
  const CriticalData big = critical_data(1e6);
  const double e1 = std::abs(one.mu_star - kRoot3 * kPi / 2.0);
  const double e2 = std::abs(one.k_tau - 4.0 / (kPi * kPi));
  const double e3 = std::abs(big.mu_star - kRoot3 * kPi / 4.0);
  return {e1 <= 1e-12 && e2 <= 1e-12 && e3 <= 1e-6,
          fmt("|mu*(1)-sqrt3 pi/2|=%.2e |K(1)-4/pi^2|=%.2e |mu*(1e6)-sqrt3 pi/4|=%.2e", e1, e2, e3)};
}

Outcome mass_sum_identity() {
  double worst = 0.0;
  for (int k = 1; k <= 20; ++k) {
    const double tau = 1.0 + 99.0 * std::pow(k / 20.0, 2);
    const CriticalData cd = critical_data(tau);
    worst = std::max(worst, std::abs(cd.mu_star + cd.mu_tilde - kRoot3 * kPi));
  }
  return {worst <= 1e-12, fmt("max error %.2e over 20 tau", worst)};
}

Outcome subcritical_threshold() {
  const ModelParams p{1.0, 2.0, 1.0};
  const double formula = mu_alpha_formula(p);
  const double e1 = std::abs(formula - soliton_mass(1.0, 1.0 / 9.0));
  const double e2 = std::abs(formula - 4.0 / 3.0);
  const double omega = thresholds(p).omega_res * (1.0 + 1e-8);
  const double e3 = std::abs(branch_mass(p, omega, Branch::R) - 4.0 / 3.0);
  return {e1 <= 1e-10 && e2 <= 1e-10 && e3 <= 1e-4,
          fmt("|mu_alpha-m(1/9)|=%.2e |mu_alpha-4/3|=%.2e |m_R-4/3|=%.2e", e1, e2, e3)};
}

Outcome multiplicity_boundaries() {
  const ModelParams p{1.0, 2.0, 1.0};
  const double probes[] = {0.04 - 1e-9, 0.04 + 1e-9, 1.0 / 9.0 - 1e-9, 1.0 / 9.0 + 1e-9};
  const int expected[] = {0, 1, 1, 2};
  std::ostringstream got;
  bool ok = true;
  for (int i = 0; i < 4; ++i) {
    const int m = multiplicity(p, probes[i]);
    ok = ok && m == expected[i];
    got << m << (i < 3 ? "," : "");
  }
  return {ok, "counts " + got.str() + " (expected 0,1,1,2)"};
}

Outcome closed_form_vs_quadrature() {
  double worst_mass = 0.0;
  double worst_energy = 0.0;
  int states = 0;
  for (double sigma : {1.0, 2.0}) {
    for (double tau : {1.5, 2.0, 5.0}) {
      for (double alpha : {0.0, 0.5, 1.0}) {
        const ModelParams p{sigma, tau, alpha};
        const double base = thresholds(p).omega_res;
        for (double step : {0.25, 1.0, 4.0}) {
          for (Branch b : {Branch::L, Branch::R}) {
            const StationaryState s = solve_branch(p, base + step, b);
            worst_mass = std::max(worst_mass, std::abs(s.mass - quadrature_mass(s)));
            ++states;
          }
        }
      }
    }
  }
  for (double tau : {1.5, 2.0, 5.0}) {
    for (double omega : {0.25, 1.0, 4.0}) {
      const auto [u1, u2] = dipole_critical_states(tau, omega);
      worst_energy = std::max({worst_energy, std::abs(u1.energy), std::abs(u2.energy)});
    }
  }
  return {worst_mass <= 1e-8 && worst_energy <= 1e-8,
          fmt("max mass error %.2e over %g states, max dipole energy %.2e", worst_mass, states,
              worst_energy)};
}

// Deterministic sample of (params, omega, branch) with the branch present.
struct BranchPoint {
  ModelParams params;
  double omega;
  Branch branch;
};

std::vector<BranchPoint> branch_points(int count) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> tau(1.2, 5.0);
  std::uniform_real_distribution<double> alpha(0.1, 2.0);
  std::uniform_real_distribution<double> factor(1.2, 6.0);
  const double sigmas[] = {0.5, 1.0, 1.5, 2.0};
  std::vector<BranchPoint> pts;
  for (int i = 0; i < count; ++i) {
    const ModelParams p{sigmas[i % 4], tau(rng), alpha(rng)};
    const Branch b = (i / 4) % 2 == 0 ? Branch::L : Branch::R;
    const Thresholds th = thresholds(p);
    const double base = b == Branch::L ? th.omega_lin : th.omega_res;
    pts.push_back({p, base * factor(rng), b});
  }
  return pts;
}

Outcome mass_derivative() {
  double worst = 0.0;
  double smallest = INFINITY;
  for (const auto& pt : branch_points(50)) {
    const double exact = branch_mass_derivative(pt.params, pt.omega, pt.branch);
    const double fd = fd_derivative(
        [&](double w) { return branch_mass(pt.params, w, pt.branch); }, pt.omega, 1e-5 * pt.omega);
    worst = std::max(worst, std::abs(exact - fd) / std::abs(exact));
    smallest = std::min(smallest, exact);
  }
  return {worst <= 1e-6 && smallest > 0.0,
          fmt("max relative fd mismatch %.2e, min derivative %.3e", worst, smallest)};
}

Outcome residuals() {
  double worst_flux = 0.0;
  double worst_el = 0.0;
  for (const auto& pt : branch_points(50)) {
    const StationaryState s = solve_branch(pt.params, pt.omega, pt.branch);
    worst_flux = std::max(worst_flux, s.flux_residual());
    const double span = 10.0 / std::sqrt(pt.omega);
    for (int k = 0; k < 50; ++k) {
      const double x = -span + (2.0 * span) * (k + 0.5) / 50.0;
      const Side side = x < 0.0 ? Side::Left : Side::Right;
      const double scale = 1.0 + std::abs(s.curvature(x, side));
      worst_el = std::max(worst_el, s.euler_lagrange_residual(x) / scale);
    }
  }
  return {worst_flux < 1e-10 && worst_el < 1e-8,
          fmt("max flux residual %.2e, max scaled E-L residual %.2e", worst_flux, worst_el)};
}

Outcome reference_translations() {
  const ModelParams p{2.0, 1.2, 0.0};
  const StationaryState l = solve_branch(p, 0.25, Branch::L);
  const StationaryState r = solve_branch(p, 0.25, Branch::R);
  const double e = std::max({std::abs(l.x_plus + 0.648), std::abs(l.x_minus + 1.161),
                             std::abs(r.x_plus - 0.648), std::abs(r.x_minus - 1.161)});
  return {e < 5e-3,
          fmt("L: x+=%.5f x-=%.5f, max deviation %.2e", l.x_plus, l.x_minus, e)};
}

Outcome variational_cross_check() {
  const ModelParams p{1.0, 2.0, 1.0};
  const StationaryState gs = state_by_mass(p, 1.0, Branch::L);
  MinimizeOptions opt;
  opt.reference = gs;
  const MinimizationReport rep = minimize_energy(p, 1.0, opt);
  const double gap = std::abs(rep.energy_history.back() - gs.energy);
  const double rel_omega = std::abs(rep.lagrange_omega - gs.omega) / gs.omega;
  const bool ok = rep.converged && *rep.profile_error_l2 < 1e-2 && gap < 1e-3 && rel_omega < 1e-2;
  return {ok,
          fmt("L2 error %.2e, energy gap %.2e, omega rel. error %.2e", *rep.profile_error_l2, gap,
              rel_omega)};
}

Outcome gn_optimality() {
  const double k = critical_data(2.0).k_tau;
  const GnMaximum m = maximize_gn_quotient(2.0);
  const double rel = std::abs(m.quotient - k) / k;
  const StationaryState u1 = dipole_critical_states(2.0, 1.0).first;
  const double sampled = gn_quotient(sample_state(u1, 30.0, 4000));
  const double e = std::abs(sampled - k);
  return {rel < 1e-2 && e < 1e-3,
          fmt("max quotient rel. error %.2e, |Q(u1)-K| = %.2e (K = %.6f)", rel, e, k)};
}

Outcome inequality_suites() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> sigma_dist(0.2, 2.0);
  std::uniform_real_distribution<double> tau_dist(1.05, 6.0);
  int violations[3] = {0, 0, 0};
  double worst[3] = {0.0, 0.0, 0.0};
  const double line = 4.0 / (kPi * kPi);
  for (int i = 0; i < 100; ++i) {
    const double sigma = sigma_dist(rng);
    const ModelParams p{sigma, tau_dist(rng), 0.0};
    const GridFunction u = random_grid(p, rng);
    const double slack = 1.0 + 10.0 * u.h();
    const double r = gn_ratio(u, sigma) / gn_jump_constant(sigma);
    worst[0] = std::max(worst[0], r);
    if (r > slack) ++violations[0];
  }
  for (int i = 0; i < 100; ++i) {
    const ModelParams p{2.0, tau_dist(rng), 0.0};
    RandomGridOptions o;
    o.vanish_at_origin = true;
    const GridFunction u = random_grid(p, rng, o);
    const double r = gn_quotient(u) / line;
    worst[1] = std::max(worst[1], r);
    if (r > 1.0 + 10.0 * u.h()) ++violations[1];
  }
  for (int i = 0; i < 100; ++i) {
    const ModelParams p{2.0, tau_dist(rng), 0.0};
    const GridFunction u = random_grid(p, rng);
    const ModifiedGnSides s = modified_gn_sides(u);
    const double r = s.lhs / s.rhs;
    worst[2] = std::max(worst[2], r);
    if (r > 1.0 + 10.0 * u.h()) ++violations[2];
  }
  const int total = violations[0] + violations[1] + violations[2];
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "violations %d/%d/%d, max lhs/rhs %.3f (subcritical) %.3f (origin-vanishing) "
                "%.3f (modified)",
                violations[0], violations[1], violations[2], worst[0], worst[1], worst[2]);
  return {total == 0, buf};
}

Outcome rearrangement() {
  const ModelParams p{1.0, 2.0, 1.0};
  std::mt19937_64 rng(11);
  RandomGridOptions o;
  o.nonnegative = true;
  double worst_mass = 0.0;
  double worst_increase = -INFINITY;
  bool mass_ok = true;
  bool energy_ok = true;
  for (int i = 0; i < 50; ++i) {
    const GridFunction u = random_grid(p, rng, o);
    const GridFunction r = rearrange(u);
    const double peak = std::max(*std::max_element(u.left().begin(), u.left().end()),
                                 *std::max_element(u.right().begin(), u.right().end()));
    const double dm = std::abs(r.mass() - u.mass());
    worst_mass = std::max(worst_mass, dm);
    mass_ok = mass_ok && dm <= u.h() * peak * peak;
    const double e0 = discrete_energy(u);
    const double inc = discrete_energy(r) - e0;
    worst_increase = std::max(worst_increase, inc);
    energy_ok = energy_ok && inc <= 1e-12 * std::max(1.0, std::abs(e0));
  }
  const StationaryState excited = state_by_mass(p, 2.0, Branch::R);
  const GridFunction sampled = sample_state(excited, 60.0, 4000);
  const double drop = discrete_energy(sampled) - discrete_energy(rearrange(sampled));
  return {mass_ok && energy_ok && drop > 1e-6,
          fmt("max mass change %.2e, max energy change %.2e, R-state energy drop %.4f",
              worst_mass, worst_increase, drop)};
}

Outcome competitor() {
  const Competitor c = subcritical_competitor(1.0, 2.0, 1.0);
  return {c.energy_gap > 0.0 && c.jump_residual < 1e-12,
          fmt("nu = %.6f, energy gap %.6e, jump residual %.2e", c.nu, c.energy_gap,
              c.jump_residual)};
}

// Expected rows read off the two critical-case theorems.
struct ExpectedRegime {
  Infimum infimum;
  bool ground;
  bool excited;
};

ExpectedRegime expected_regime(double alpha, double mu, const CriticalData& cd) {
  const double tol = 1e-9;
  if (alpha == 0.0) {
    return {mu <= cd.mu_star + tol ? Infimum::Zero : Infimum::MinusInfinity,
            std::abs(mu - cd.mu_star) <= tol, std::abs(mu - cd.mu_tilde) <= tol};
  }
  return {mu < cd.mu_star ? Infimum::FiniteNegative : Infimum::MinusInfinity, mu < cd.mu_star,
          mu > cd.mu_line && mu < cd.mu_tilde};
}

Outcome regime_table() {
  int rows = 0;
  int mismatches = 0;
  for (double tau : {1.5, 2.0, 5.0}) {
    const CriticalData cd = critical_data(tau);
    const double probes[] = {0.5 * cd.mu_star,         cd.mu_star,
                             0.5 * (cd.mu_star + cd.mu_line), cd.mu_line + 0.1,
                             cd.mu_tilde - 0.01,       cd.mu_tilde + 0.1};
    for (double alpha : {0.0, 1.0}) {
      const ModelParams p{2.0, tau, alpha};
      for (double mu : probes) {
        ++rows;
        const RegimeReport r = classify_mass_regime(p, mu);
        const ExpectedRegime e = expected_regime(alpha, mu, cd);
        bool ok = r.infimum == e.infimum && r.ground_state_exists == e.ground &&
                  r.excited_state_exists == e.excited &&
                  r.no_stationary_state == (!e.ground && !e.excited);
        // The closed-form branches must agree with the table.
        if (alpha > 0.0) {
          const GroundStateLookup g = identify_ground_state(p, mu);
          ok = ok && g.state.has_value() == e.ground && g.infimum == e.infimum;
          if (e.excited) {
            const StationaryState s = state_by_mass(p, mu, Branch::R);
            ok = ok && std::abs(s.mass - mu) < 1e-9;
          }
        }
        if (!ok) ++mismatches;
      }
    }
  }
  return {mismatches == 0,
          fmt("%g rows, %g mismatches", rows, mismatches)};
}

struct Check {
  const char* name;
  std::function<Outcome()> run;
};

const std::vector<Check>& checks() {
  static const std::vector<Check> all = {
      {"critical constants", critical_constants},
      {"mu* + mu~ = sqrt3 pi", mass_sum_identity},
      {"subcritical threshold mass", subcritical_threshold},
      {"multiplicity boundaries", multiplicity_boundaries},
      {"closed form vs quadrature", closed_form_vs_quadrature},
      {"mass derivative", mass_derivative},
      {"boundary and E-L residuals", residuals},
      {"reference translations tau=1.2", reference_translations},
      {"variational cross-check", variational_cross_check},
      {"GN optimality tau=2", gn_optimality},
      {"inequality suites", inequality_suites},
      {"rearrangement", rearrangement},
      {"subcritical competitor", competitor},
      {"critical regime table", regime_table}};
  return all;
}

}  // namespace

int check_count() { return static_cast<int>(checks().size()); }

CheckResult run_check(int id) {
  if (id < 1 || id > check_count()) {
    throw Error(ErrorKind::DomainError, "no acceptance check with id " + std::to_string(id));
  }
  const Check& c = checks()[id - 1];
  try {
    const Outcome o = c.run();
    return {id, c.name, o.passed, o.detail};
  } catch (const std::exception& e) {
    return {id, c.name, false, std::string("threw: ") + e.what()};
  }
}

std::vector<int> parse_selector(const std::string& selector) {
  std::vector<int> ids;
  if (selector.empty() || selector == "all") {
    for (int i = 1; i <= check_count(); ++i) ids.push_back(i);
    return ids;
  }
  std::istringstream in(selector);
  std::string token;
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    int id = 0;
    try {
      id = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || id < 1 || id > check_count()) {
      throw Error(ErrorKind::DomainError, "bad check selector '" + token + "'");
    }
    ids.push_back(id);
  }
  return ids;
}

std::vector<CheckResult> run_checks(const std::vector<int>& ids) {
  std::vector<CheckResult> out;
  out.reserve(ids.size());
  for (int id : ids) out.push_back(run_check(id));
  return out;
}

std::string format_line(const CheckResult& r) {
  char head[64];
  std::snprintf(head, sizeof head, "[%s] %02d ", r.passed ? "PASS" : "FAIL", r.id);
  return head + r.name + ": " + r.detail;
}

}  // namespace ftwave::verify
