#include "gausscoh/fock.hpp"

#include "doctest.h"
#include "support.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <random>

using namespace gausscoh;

namespace {

double photon_expectation(const FockDensityMatrix& m) {
  double acc = 0.0;
  for (int k = 0; k < m.cutoff; ++k) acc += k * m.rho(k, k).real();
  return acc;
}

GaussianState displaced_thermal(double nu, double dx, double dy) {
  Vec d0(2);
  d0 << dx, dy;
  return {1, nu * Mat::Identity(2, 2), d0};
}

}  // namespace

TEST_CASE("truncated thermal states") {
  const FockDensityMatrix vac = thermal_fock(1.0, 16);
  CHECK(vac.rho(0, 0).real() == 1.0);
  CHECK(std::abs(vac.rho(1, 1)) == 0.0);
  CHECK(vac.trace_deficit == doctest::Approx(0.0).epsilon(1e-15));

  const FockDensityMatrix th3 = thermal_fock(3.0, 30);
  CHECK(th3.rho(0, 0).real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(th3.rho(1, 1).real() == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(th3.trace_deficit == doctest::Approx(std::pow(0.5, 30)).epsilon(1e-4));

  CHECK_THROWS_AS(thermal_fock(0.9, 16), std::invalid_argument);
  CHECK_THROWS_AS(thermal_fock(2.0, 1), std::invalid_argument);
}

TEST_CASE("truncated displacement operators") {
  const CMat id = displacement_fock({0.0, 0.0}, 12);
  CHECK((id - CMat::Identity(12, 12)).cwiseAbs().maxCoeff() <= 1e-14);

  // vacuum overlap e^{-|l|^2/2}
  for (std::complex<double> l : {std::complex<double>{0.5, 0.0},
                                 std::complex<double>{0.0, 1.3},
                                 std::complex<double>{1.4, -1.2}}) {
    const CMat D = displacement_fock(l, 80);
    CHECK(std::abs(D(0, 0) - std::exp(-0.5 * std::norm(l))) <= 1e-8);
  }

  // inverse displacement on the lower three quarters of the basis
  const CMat D = displacement_fock({0.8, -0.6}, 80);
  const CMat Dinv = displacement_fock({-0.8, 0.6}, 80);
  const CMat prod = D * Dinv;
  for (int i = 0; i < 60; ++i)
    for (int j = 0; j < 60; ++j) {
      const double expect = i == j ? 1.0 : 0.0;
      CHECK(std::abs(prod(i, j) - expect) <= 1e-8);
    }
}

TEST_CASE("displaced thermal construction and photon expectations") {
  const FockDensityMatrix vac = gaussian_to_fock(vacuum_state(1), 24);
  CHECK(std::abs(vac.rho(0, 0) - 1.0) <= 1e-14);

  CHECK(photon_expectation(gaussian_to_fock(displaced_thermal(1.0, 2.0, 0.0), 60)) ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(photon_expectation(gaussian_to_fock(displaced_thermal(3.0, 2.0, 0.0), 80)) ==
        doctest::Approx(2.0).epsilon(1e-5));

  GaussianState squeezed{1, Mat(2, 2), Vec::Zero(2)};
  squeezed.V << 2.0, 0.0, 0.0, 0.5;
  CHECK_THROWS_AS(gaussian_to_fock(squeezed, 24), std::invalid_argument);
}

TEST_CASE("constructed density matrices are Hermitian with nonnegative spectrum") {
  std::mt19937_64 rng(test::base_seed() + 52);
  std::uniform_real_distribution<double> unu(1.0, 4.0);
  std::uniform_real_distribution<double> ud(-2.0, 2.0);
  for (int trial = 0; trial < 5; ++trial) {
    const FockDensityMatrix m =
        gaussian_to_fock(displaced_thermal(unu(rng), ud(rng), ud(rng)), 80);
    CHECK((m.rho - m.rho.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(m.trace_deficit >= 0.0);
    CHECK(m.trace_deficit < 1.0);
    Eigen::SelfAdjointEigenSolver<CMat> es(m.rho, Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() >= -1e-10);
  }
}

TEST_CASE("numeric characteristic function against the closed form") {
  const FockDensityMatrix vac = gaussian_to_fock(vacuum_state(1), 60);
  CHECK(std::abs(char_function_numeric(vac, {0.0, 0.0}) - 1.0) <= 1e-12);
  CHECK(std::abs(char_function_numeric(vac, {1.0, 0.0}) - std::exp(-0.5)) <= 1e-6);

  const FockDensityMatrix th3 = thermal_fock(3.0, 100);
  CHECK(std::abs(char_function_numeric(th3, {1.0, 0.0}) - std::exp(-1.5)) <= 1e-5);
}

TEST_CASE("characteristic-function bridge on displaced thermals") {
  std::mt19937_64 rng(test::base_seed() + 50);
  std::uniform_real_distribution<double> unu(1.0, 4.0);
  std::uniform_real_distribution<double> ud(-2.0, 2.0);
  const double edge = 1.5 / std::sqrt(2.0);
  for (int trial = 0; trial < 4; ++trial) {
    const GaussianState s = displaced_thermal(unu(rng), ud(rng), ud(rng));
    const FockDensityMatrix rho = gaussian_to_fock(s, 100);
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b) {
        const std::complex<double> l(-edge + a * edge / 2.0, -edge + b * edge / 2.0);
        Vec lv(2);
        lv << l.real(), l.imag();
        CHECK(std::abs(char_function(s, lv) - char_function_numeric(rho, l)) <= 1e-6);
      }
  }
}

TEST_CASE("relative entropy basics") {
  const FockDensityMatrix th3 = thermal_fock(3.0, 60);
  CHECK(relative_entropy_numeric(th3, th3) == doctest::Approx(0.0).epsilon(1e-10));

  const FockDensityMatrix vac = thermal_fock(1.0, 60);
  CHECK(relative_entropy_numeric(vac, th3) == doctest::Approx(1.0).epsilon(1e-10));

  // support violation: a thermal state against the vacuum projector
  CHECK(std::isinf(relative_entropy_numeric(th3, vac)));
}

TEST_CASE("numeric state coherence agrees with the closed form") {
  const FockCrResult th = cr_state_numeric(displaced_thermal(2.5, 0.0, 0.0), 80);
  CHECK(std::abs(th.value) <= 1e-8);

  const FockCrResult coh = cr_state_numeric(displaced_thermal(1.0, 2.0, 0.0), 80);
  CHECK(std::abs(coh.value - 2.0) <= 1e-4);
  CHECK(std::abs(coh.nu_opt - 3.0) <= 1e-3);
  CHECK_FALSE(coh.cutoff_insufficient);

  const double expected = f_thermal(2.0) - f_thermal(1.0);
  const FockCrResult dth = cr_state_numeric(displaced_thermal(3.0, 2.0, 0.0), 120);
  CHECK(std::abs(dth.value - expected) <= 1e-4);
}

TEST_CASE("closed-form bridge on sampled displaced thermals") {
  std::mt19937_64 rng(test::base_seed() + 51);
  std::uniform_real_distribution<double> unu(1.0, 5.0);
  std::uniform_real_distribution<double> uphase(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> unbar(0.0, 4.0);
  for (int trial = 0; trial < 8; ++trial) {
    const double nu = unu(rng);
    // pick the displacement so the total photon number stays <= 4
    const double budget = std::max(0.0, unbar(rng) - 0.5 * (nu - 1.0));
    const double amp = 2.0 * std::sqrt(budget);
    const double phase = uphase(rng);
    const GaussianState s =
        displaced_thermal(nu, amp * std::cos(phase), amp * std::sin(phase));
    const int cutoff = std::min(120, recommended_cutoff(nu, 1e-10, 80));
    const FockCrResult numeric = cr_state_numeric(s, cutoff);
    CHECK(std::abs(numeric.value - cr_state(s)) <= 1e-4);
  }
}

TEST_CASE("raising the cutoff does not worsen the bridges") {
  const GaussianState s = displaced_thermal(2.0, 1.6, -0.9);

  auto char_err = [&](int cutoff) {
    const FockDensityMatrix rho = gaussian_to_fock(s, cutoff);
    double worst = 0.0;
    const double edge = 1.5 / std::sqrt(2.0);
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b) {
        const std::complex<double> l(-edge + a * edge / 2.0, -edge + b * edge / 2.0);
        Vec lv(2);
        lv << l.real(), l.imag();
        worst = std::max(worst,
                         std::abs(char_function(s, lv) - char_function_numeric(rho, l)));
      }
    return worst;
  };
  auto cr_err = [&](int cutoff) {
    return std::abs(cr_state_numeric(s, cutoff).value - cr_state(s));
  };

  CHECK(char_err(120) <= char_err(60) + 1e-9);
  CHECK(cr_err(120) <= cr_err(60) + 1e-9);
}

TEST_CASE("recommended cutoff tracks the thermal tail") {
  CHECK(recommended_cutoff(1.0) == 60);
  const int c = recommended_cutoff(5.0, 1e-10, 60);
  const double q = 4.0 / 6.0;
  CHECK(std::pow(q, c) < 1e-10);
  CHECK(std::pow(q, c - 2) > 1e-11);
}
