#include <cmath>
#include <functional>
#include <numbers>

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

TEST(Integrate, ConstantOnUnitInterval) {
  EXPECT_NEAR(integrate([](double) { return 1.0; }, 0.0, 1.0), 1.0, 1e-14);
}

TEST(Integrate, SechSquaredOnWideInterval) {
  const auto f = [](double x) {
    const double s = 1.0 / std::cosh(x);
    return s * s;
  };
  EXPECT_NEAR(integrate(f, -50.0, 50.0), 2.0 * std::tanh(50.0), 1e-10);
}

TEST(Integrate, CosineOverHalfPeriod) {
  EXPECT_NEAR(integrate([](double x) { return std::cos(x); }, 0.0, kPi), 0.0, 1e-10);
}

TEST(Integrate, CubicIsExact) {
  const auto f = [](double x) { return 3.0 * x * x * x - x * x + 2.0; };
  // Antiderivative 3/4 x^4 - x^3/3 + 2x on [-1, 2].
  const double exact = (0.75 * 16 - 8.0 / 3 + 4) - (0.75 - (-1.0 / 3) - 2);
  EXPECT_NEAR(integrate(f, -1.0, 2.0), exact, 1e-10);
}

TEST(Integrate, Additive) {
  const auto f = [](double x) { return std::exp(-x * x) * (1.0 + x); };
  const Quadrature q;
  const double ab = integrate(f, -1.0, 0.3, q);
  const double bc = integrate(f, 0.3, 2.5, q);
  const double ac = integrate(f, -1.0, 2.5, q);
  EXPECT_LE(std::abs(ac - ab - bc), 3.0 * q.abs_tol);
}

TEST(Integrate, EmptyIntervalIsZero) {
  EXPECT_EQ(integrate([](double x) { return x; }, 1.5, 1.5), 0.0);
}

TEST(Integrate, Errors) {
  EXPECT_EQ(kind_of([] { integrate([](double) { return NAN; }, 0.0, 1.0); }), ErrorKind::NonFinite);
  EXPECT_EQ(kind_of([] { integrate([](double) { return 1.0; }, 1.0, 0.0); }), ErrorKind::DomainError);
  // A jump never satisfies the local error test.
  EXPECT_EQ(kind_of([] {
              integrate([](double x) { return x < 0.123456789 ? 0.0 : 1.0; }, 0.0, 1.0,
                        Quadrature{1e-300, 8});
            }),
            ErrorKind::DepthExceeded);
}

TEST(ProfileIntegral, FullIntervals) {
  EXPECT_NEAR(profile_integral(1.0, -1.0, 1.0), 2.0, 1e-12);
  EXPECT_NEAR(profile_integral(2.0, -1.0, 1.0), kPi, 1e-12);
}

TEST(ProfileIntegral, ArcsinClosedForm) {
  EXPECT_NEAR(profile_integral(2.0, 0.0, 1.0 / std::sqrt(2.0)), kPi / 4.0, 1e-13);
  EXPECT_NEAR(profile_integral(2.0, -0.3, 0.8), std::asin(0.8) + std::asin(0.3), 1e-13);
}

TEST(ProfileIntegral, MatchesDirectQuadrature) {
  // sigma = 1/2: integrand 1 - t^2, polynomial.
  EXPECT_NEAR(profile_integral(0.5, -0.2, 0.7), (0.7 - 0.343 / 3) - (-0.2 + 0.008 / 3), 1e-13);
  // sigma = 1.5: singular endpoint, reference from high precision quadrature.
  EXPECT_NEAR(profile_integral(1.5, -1.0, 1.0), 2.5871095592297905, 1e-12);
}

TEST(ProfileIntegral, ReflectionSymmetry) {
  for (double sigma : {0.3, 0.5, 1.0, 1.3, 1.7, 2.0}) {
    for (auto [a, b] : {std::pair{-0.9, 0.2}, std::pair{0.1, 0.99}, std::pair{-1.0, -0.4}}) {
      EXPECT_NEAR(profile_integral(sigma, a, b), profile_integral(sigma, -b, -a), 1e-13)
          << "sigma " << sigma;
    }
  }
}

TEST(ProfileIntegral, DomainErrors) {
  EXPECT_EQ(kind_of([] { profile_integral(1.0, -1.5, 0.0); }), ErrorKind::DomainError);
  EXPECT_EQ(kind_of([] { profile_integral(1.0, 0.5, 0.2); }), ErrorKind::DomainError);
  EXPECT_EQ(kind_of([] { profile_integral(2.5, 0.0, 0.2); }), ErrorKind::DomainError);
}

TEST(FdDerivative, Examples) {
  EXPECT_NEAR(fd_derivative([](double x) { return x * x; }, 1.0, 1e-4), 2.0, 1e-7);
  EXPECT_NEAR(fd_derivative([](double x) { return std::sin(x); }, 0.0, 1e-4), 1.0, 1e-8);
  EXPECT_NEAR(fd_derivative([](double w) { return soliton_mass(1.0, w); }, 1.0, 1e-4), 2.0, 1e-6);
}

TEST(FdDerivative, Errors) {
  EXPECT_EQ(kind_of([] { fd_derivative([](double x) { return x; }, 0.0, 0.0); }),
            ErrorKind::DomainError);
  EXPECT_EQ(kind_of([] { fd_derivative([](double) { return NAN; }, 0.0, 1e-3); }),
            ErrorKind::NonFinite);
}
