#include <cmath>
#include <functional>
#include <numbers>

#include <gtest/gtest.h>

#include "ftwave/critical.hpp"
#include "ftwave/error.hpp"
#include "ftwave/oracle.hpp"

using namespace ftwave;

namespace {

constexpr double kPi = std::numbers::pi;
const double kMuLine = std::sqrt(3.0) * kPi / 2.0;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no ftwave::Error thrown";
  return ErrorKind::DomainError;
}

struct Norms {
  double mass = 0.0;
  double kinetic = 0.0;
  double l6 = 0.0;
};

Norms norms(const StationaryState& s) {
  const Quadrature q{1e-13, 50};
  const double r = truncation_radius(2.0, s.omega);
  Norms n;
  for (Side side : {Side::Left, Side::Right}) {
    const double a = side == Side::Left ? -r : 0.0;
    const double b = side == Side::Left ? 0.0 : r;
    n.mass += integrate([&](double x) { return std::pow(s.value(x, side), 2); }, a, b, q);
    n.kinetic += integrate([&](double x) { return std::pow(s.slope(x, side), 2); }, a, b, q);
    n.l6 += integrate([&](double x) { return std::pow(s.value(x, side), 6); }, a, b, q);
  }
  return n;
}

}  // namespace

TEST(CriticalData, TauOne) {
  const CriticalData d = critical_data(1.0);
  EXPECT_NEAR(d.mu_star, kMuLine, 1e-12);
  EXPECT_NEAR(d.mu_tilde, kMuLine, 1e-12);
  EXPECT_NEAR(d.k_tau, 4.0 / (kPi * kPi), 1e-12);
  EXPECT_NEAR(d.mu_line, kMuLine, 1e-15);
}

TEST(CriticalData, TauTwo) {
  const CriticalData d = critical_data(2.0);
  EXPECT_NEAR(d.mu_star, 1.7846650144816924, 1e-13);
  EXPECT_NEAR(d.mu_tilde, 3.6567330782209612, 1e-13);
  EXPECT_NEAR(d.k_tau, 0.94190658813847829, 1e-13);
  EXPECT_NEAR(d.mu_star + d.mu_tilde, std::sqrt(3.0) * kPi, 1e-13);
}

TEST(CriticalData, LargeTau) {
  EXPECT_NEAR(critical_data(1e6).mu_star, std::sqrt(3.0) * kPi / 4.0, 1e-6);
  EXPECT_NEAR(critical_data(1e6).mu_tilde, 3.0 * std::sqrt(3.0) * kPi / 4.0, 1e-6);
  const CriticalData huge = critical_data(1e200);
  EXPECT_TRUE(std::isfinite(huge.mu_star));
  EXPECT_NEAR(huge.mu_star, std::sqrt(3.0) * kPi / 4.0, 1e-12);
}

TEST(CriticalData, OrderingAndMonotonicity) {
  double last_star = critical_data(1.0).mu_star;
  double last_tilde = critical_data(1.0).mu_tilde;
  for (double tau = 1.01; tau < 50.0; tau *= 1.1) {
    const CriticalData d = critical_data(tau);
    EXPECT_LT(d.mu_star, last_star);
    EXPECT_GT(d.mu_tilde, last_tilde);
    EXPECT_LT(std::sqrt(3.0) * kPi / 4.0, d.mu_star);
    EXPECT_LT(d.mu_star, d.mu_line);
    EXPECT_LT(d.mu_line, d.mu_tilde);
    EXPECT_LT(d.mu_tilde, 3.0 * std::sqrt(3.0) * kPi / 4.0);
    EXPECT_GE(d.k_tau, 4.0 / (kPi * kPi));
    EXPECT_LE(d.k_tau, 16.0 / (kPi * kPi));
    EXPECT_NEAR(d.mu_star + d.mu_tilde, std::sqrt(3.0) * kPi, 1e-12);
    last_star = d.mu_star;
    last_tilde = d.mu_tilde;
  }
}

TEST(CriticalData, RejectsSmallTau) {
  EXPECT_EQ(kind_of([] { critical_data(0.9); }), ErrorKind::DomainError);
  EXPECT_EQ(kind_of([] { critical_data(std::nan("")); }), ErrorKind::DomainError);
}

TEST(DipoleStates, MassesAreCriticalValues) {
  const CriticalData d = critical_data(2.0);
  for (double omega : {0.5, 1.0, 2.0}) {
    const auto [u1, u2] = dipole_critical_states(2.0, omega);
    EXPECT_EQ(u1.branch, Branch::L);
    EXPECT_EQ(u2.branch, Branch::R);
    EXPECT_NEAR(u1.mass, d.mu_star, 1e-10);
    EXPECT_NEAR(u2.mass, d.mu_tilde, 1e-10);
  }
  const auto [u1, u2] = dipole_critical_states(2.0, 1.0);
  EXPECT_NEAR(quadrature_mass(u1), d.mu_star, 1e-6);
  EXPECT_NEAR(quadrature_mass(u2), d.mu_tilde, 1e-6);
  EXPECT_NEAR(u1.energy, 0.0, 1e-8);
  EXPECT_NEAR(u2.energy, 0.0, 1e-8);
}

TEST(DipoleStates, TranslationsMatchClosedForm) {
  const double tau = 3.0;
  const double omega = 0.8;
  const auto [u1, u2] = dipole_critical_states(tau, omega);
  const double r = std::sqrt(1.0 + std::pow(tau, 4));
  EXPECT_NEAR(std::abs(u1.t_plus), 1.0 / r, 1e-14);
  EXPECT_NEAR(std::abs(u1.t_minus), tau * tau / r, 1e-14);
  EXPECT_NEAR(u2.t_plus, -u1.t_plus, 1e-14);
  EXPECT_NEAR(u2.t_minus, -u1.t_minus, 1e-14);
}

TEST(DipoleStates, PohozaevIdentityAndOptimalQuotient) {
  const CriticalData d = critical_data(2.0);
  const auto [u1, u2] = dipole_critical_states(2.0, 1.0);
  for (const StationaryState& u : {u1, u2}) {
    const Norms n = norms(u);
    EXPECT_NEAR(n.l6 / (1.5 * u.omega * n.mass), 1.0, 1e-9);
  }
  const Norms n = norms(u1);
  EXPECT_NEAR(n.l6 / (n.kinetic * n.mass * n.mass), d.k_tau, 1e-6);
}

TEST(DipoleStates, Errors) {
  EXPECT_EQ(kind_of([] { dipole_critical_states(1.0, 1.0); }), ErrorKind::DomainError);
  EXPECT_EQ(kind_of([] { dipole_critical_states(2.0, 0.0); }), ErrorKind::DomainError);
}

TEST(CriticalBranch, RSweepsLineToTilde) {
  const ModelParams p{2.0, 2.0, 1.0};
  const double res = thresholds(p).omega_res;
  EXPECT_NEAR(branch_mass(p, res * (1.0 + 1e-8), Branch::R), kMuLine, 1e-3);
  EXPECT_NEAR(branch_mass(p, res * 1e6, Branch::R), critical_data(2.0).mu_tilde, 1e-3);
  const MassRange range = attainable_masses(p, Branch::R);
  EXPECT_NEAR(range.lo, kMuLine, 1e-12);
  EXPECT_NEAR(range.hi, critical_data(2.0).mu_tilde, 1e-12);
  const MassRange left = attainable_masses(p, Branch::L);
  EXPECT_EQ(left.lo, 0.0);
  EXPECT_NEAR(left.hi, critical_data(2.0).mu_star, 1e-12);
}

TEST(Regime, DipoleRows) {
  const ModelParams p{2.0, 2.0, 0.0};
  const CriticalData d = critical_data(2.0);
  const RegimeReport below = classify_mass_regime(p, 0.5 * d.mu_star);
  EXPECT_EQ(below.infimum, Infimum::Zero);
  EXPECT_FALSE(below.ground_state_exists);
  EXPECT_FALSE(below.excited_state_exists);
  EXPECT_TRUE(below.no_stationary_state);

  const RegimeReport at = classify_mass_regime(p, d.mu_star);
  EXPECT_EQ(at.infimum, Infimum::Zero);
  EXPECT_TRUE(at.ground_state_exists);

  const RegimeReport excited = classify_mass_regime(p, d.mu_tilde);
  EXPECT_EQ(excited.infimum, Infimum::MinusInfinity);
  EXPECT_FALSE(excited.ground_state_exists);
  EXPECT_TRUE(excited.excited_state_exists);
  EXPECT_EQ(excited.excited_lo, excited.excited_hi);

  const RegimeReport between = classify_mass_regime(p, kMuLine);
  EXPECT_EQ(between.infimum, Infimum::MinusInfinity);
  EXPECT_TRUE(between.no_stationary_state);
}

TEST(Regime, PositiveAlphaRows) {
  const ModelParams p{2.0, 2.0, 1.0};
  const CriticalData d = critical_data(2.0);
  const RegimeReport gs = classify_mass_regime(p, 1.0);
  EXPECT_EQ(gs.infimum, Infimum::FiniteNegative);
  EXPECT_TRUE(gs.ground_state_exists);
  EXPECT_FALSE(gs.excited_state_exists);

  const RegimeReport boundary = classify_mass_regime(p, d.mu_star);
  EXPECT_EQ(boundary.infimum, Infimum::MinusInfinity);
  EXPECT_FALSE(boundary.ground_state_exists);

  const RegimeReport gap = classify_mass_regime(p, 2.0);
  EXPECT_TRUE(gap.no_stationary_state);
  EXPECT_EQ(gap.infimum, Infimum::MinusInfinity);

  const RegimeReport excited = classify_mass_regime(p, 3.0);
  EXPECT_TRUE(excited.excited_state_exists);
  EXPECT_FALSE(excited.ground_state_exists);
  EXPECT_EQ(excited.infimum, Infimum::MinusInfinity);
  EXPECT_NEAR(excited.excited_lo, kMuLine, 1e-12);
  EXPECT_NEAR(excited.excited_hi, d.mu_tilde, 1e-12);

  const RegimeReport beyond = classify_mass_regime(p, d.mu_tilde + 0.1);
  EXPECT_FALSE(beyond.excited_state_exists);
  EXPECT_TRUE(beyond.no_stationary_state);
}

TEST(Regime, AgreesWithBranchSolvers) {
  for (double tau : {1.5, 2.0, 5.0}) {
    const ModelParams p{2.0, tau, 1.0};
    const CriticalData d = critical_data(tau);
    for (double mu : {0.5 * d.mu_star, 0.99 * d.mu_star}) {
      EXPECT_TRUE(classify_mass_regime(p, mu).ground_state_exists);
      EXPECT_NEAR(state_by_mass(p, mu, Branch::L).mass, mu, 1e-10);
    }
    for (double mu : {kMuLine + 0.1, d.mu_tilde - 0.01}) {
      EXPECT_TRUE(classify_mass_regime(p, mu).excited_state_exists);
      EXPECT_NEAR(state_by_mass(p, mu, Branch::R).mass, mu, 1e-10);
    }
  }
}

TEST(Regime, RejectsOtherSigma) {
  EXPECT_EQ(kind_of([] { classify_mass_regime({1.0, 2.0, 1.0}, 1.0); }), ErrorKind::WrongSigma);
}
