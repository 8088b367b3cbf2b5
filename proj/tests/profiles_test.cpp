#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "ftwave/error.hpp"
#include "ftwave/oracle.hpp"
#include "ftwave/profiles.hpp"

using namespace ftwave;

namespace {

constexpr double kPi = std::numbers::pi;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no ftwave::Error thrown";
  return ErrorKind::DomainError;
}

}  // namespace

TEST(ModelParams, Validation) {
  EXPECT_NO_THROW((ModelParams{1.0, 2.0, 0.0}.validate()));
  EXPECT_NO_THROW((ModelParams{2.0, 1.0001, 3.0}.validate()));
  EXPECT_EQ(kind_of([] { ModelParams{0.0, 2.0, 1.0}.validate(); }), ErrorKind::DomainError);
  EXPECT_EQ(kind_of([] { ModelParams{2.1, 2.0, 1.0}.validate(); }), ErrorKind::DomainError);
  EXPECT_EQ(kind_of([] { ModelParams{1.0, 1.0, 1.0}.validate(); }), ErrorKind::DomainError);
  EXPECT_EQ(kind_of([] { ModelParams{1.0, 0.5, 1.0}.validate(); }), ErrorKind::DomainError);
  EXPECT_EQ(kind_of([] { ModelParams{1.0, 2.0, -0.1}.validate(); }), ErrorKind::DomainError);
}

TEST(SolitonValue, Examples) {
  EXPECT_NEAR(soliton_value({2.0, 1.0 / 3.0, 0.0}, 0.0), 1.0, 1e-15);
  EXPECT_NEAR(soliton_value({1.0, 1.0, 0.0}, 0.0), std::sqrt(2.0), 1e-15);
  // (3/4)^{1/4} sech^{1/2}(0.648)
  EXPECT_NEAR(soliton_value({2.0, 0.25, 0.648}, 0.0), 0.843428489841361, 1e-13);
}

TEST(SolitonValue, EvenAndDecreasing) {
  const SolitonProfile p{1.3, 0.7, 0.4};
  for (double d : {0.1, 0.5, 2.0, 7.0}) {
    EXPECT_NEAR(p.value(0.4 + d), p.value(0.4 - d), 1e-15);
    EXPECT_LT(p.value(0.4 + d), p.value(0.4 + 0.5 * d));
    EXPECT_GT(p.value(0.4 + d), 0.0);
  }
  EXPECT_GT(p.value(500.0), 0.0);
}

TEST(SolitonValue, AnalyticDerivativesMatchFiniteDifferences) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> sigma(0.3, 2.0);
  std::uniform_real_distribution<double> omega(0.2, 3.0);
  std::uniform_real_distribution<double> x(-3.0, 3.0);
  for (int i = 0; i < 20; ++i) {
    const SolitonProfile p{sigma(rng), omega(rng), 0.3};
    const double at = x(rng);
    const double fd = fd_derivative([&](double y) { return p.value(y); }, at, 1e-5);
    EXPECT_NEAR(p.slope(at), fd, 1e-6 * (1.0 + std::abs(fd)));
    const double fd2 = fd_derivative([&](double y) { return p.slope(y); }, at, 1e-5);
    EXPECT_NEAR(p.curvature(at), fd2, 1e-6 * (1.0 + std::abs(fd2)));
  }
}

TEST(SolitonValue, SolvesProfileEquation) {
  for (double sigma : {0.5, 1.0, 2.0}) {
    const SolitonProfile p{sigma, 1.7, -0.2};
    for (double x : {-3.0, -0.2, 0.5, 4.0}) {
      const double u = p.value(x);
      EXPECT_NEAR(p.curvature(x) + std::pow(u, 2.0 * sigma + 1.0), p.omega * u, 1e-12);
    }
  }
}

TEST(SolitonMass, Examples) {
  EXPECT_NEAR(soliton_mass(1.0, 1.0 / 9.0), 4.0 / 3.0, 1e-14);
  EXPECT_NEAR(soliton_mass(1.0, 1.0), 4.0, 1e-14);
  for (double omega : {0.01, 1.0, 50.0}) {
    EXPECT_NEAR(soliton_mass(2.0, omega), std::sqrt(3.0) * kPi / 2.0, 1e-12);
  }
  EXPECT_EQ(kind_of([] { soliton_mass(1.0, 0.0); }), ErrorKind::DomainError);
  EXPECT_EQ(kind_of([] { soliton_mass(1.0, -1.0); }), ErrorKind::DomainError);
}

TEST(SolitonMass, MatchesQuadratureAndIgnoresShift) {
  for (double sigma : {0.5, 1.0, 1.5, 2.0}) {
    for (double shift : {-3.0, -0.5, 0.0, 1.0, 4.0}) {
      const SolitonProfile p{sigma, 0.8, shift};
      const double r = truncation_radius(sigma, 0.8);
      const auto sq = [&](double x) { return p.value(x) * p.value(x); };
      const double q = integrate(sq, shift - r, shift, {1e-13, 50}) +
                       integrate(sq, shift, shift + r, {1e-13, 50});
      EXPECT_NEAR(q, soliton_mass(sigma, 0.8), 1e-12) << sigma << " " << shift;
    }
  }
}

TEST(SolitonByMass, Inversion) {
  EXPECT_NEAR(soliton_by_mass(1.0, 4.0).omega, 1.0, 1e-14);
  EXPECT_NEAR(soliton_by_mass(1.0, 4.0 / 3.0).omega, 1.0 / 9.0, 1e-15);
  EXPECT_NEAR(soliton_by_mass(0.5, soliton_mass(0.5, 1.0)).omega, 1.0, 1e-12);
  for (double sigma : {0.5, 1.0, 1.5}) {
    for (double omega : {0.05, 1.0, 20.0}) {
      EXPECT_NEAR(soliton_by_mass(sigma, soliton_mass(sigma, omega)).omega / omega, 1.0, 1e-10);
    }
    const SolitonProfile p = soliton_by_mass(sigma, 2.5);
    EXPECT_NEAR(soliton_mass(sigma, p.omega) / 2.5, 1.0, 1e-12);
    EXPECT_EQ(p.shift, 0.0);
  }
}

TEST(SolitonByMass, Errors) {
  EXPECT_EQ(kind_of([] { soliton_by_mass(2.0, 1.0); }), ErrorKind::CriticalSigma);
  EXPECT_EQ(kind_of([] { soliton_by_mass(1.0, 0.0); }), ErrorKind::DomainError);
  EXPECT_EQ(kind_of([] { soliton_by_mass(1.0, -2.0); }), ErrorKind::DomainError);
}

TEST(NlsEnergy, Examples) {
  for (double omega : {0.3, 1.0, 4.0}) {
    EXPECT_NEAR(nls_energy(SolitonProfile{2.0, omega, 0.0}), 0.0, 1e-8);
  }
  EXPECT_NEAR(nls_energy(SolitonProfile{1.0, 1.0, 0.0}), -2.0 / 3.0, 1e-8);
}

TEST(NlsEnergy, ShiftInvariantAndSplitsIntoHalves) {
  const double base = nls_energy(SolitonProfile{1.5, 0.6, 0.0});
  for (double shift : {-2.0, -0.3, 0.7, 3.0, 10.0}) {
    const SolitonProfile p{1.5, 0.6, shift};
    EXPECT_NEAR(nls_energy(p), base, 1e-12);
    EXPECT_NEAR(nls_energy(p, Side::Left) + nls_energy(p, Side::Right), base, 1e-11);
  }
  const SolitonProfile centred{1.5, 0.6, 0.0};
  EXPECT_NEAR(nls_energy(centred, Side::Left), 0.5 * base, 1e-12);
}

TEST(ThetaSigma, ScalingLaw) {
  for (double sigma : {0.5, 1.0, 1.5}) {
    const double theta = theta_sigma(sigma);
    EXPECT_GT(theta, 0.0);
    for (double mu : {0.5, 2.0, 3.0}) {
      const double e = nls_energy(soliton_by_mass(sigma, mu));
      EXPECT_NEAR(e, -theta * std::pow(mu, (sigma + 2.0) / (2.0 - sigma)), 1e-9 * (1.0 + std::abs(e)));
    }
  }
  // sigma = 1: E(phi_4) = -2/3 gives theta = 2/3 / 64.
  EXPECT_NEAR(theta_sigma(1.0), 2.0 / 3.0 / 64.0, 1e-10);
  EXPECT_EQ(kind_of([] { theta_sigma(2.0); }), ErrorKind::CriticalSigma);
}
