#include "gausscoh/coherence.hpp"

#include "doctest.h"
#include "support.hpp"

#include <cmath>
#include <random>

using namespace gausscoh;

TEST_CASE("identity channel carries no coherence") {
  const CoherenceResult r = cr_channel(identity_channel(1));
  REQUIRE(r.status == SearchStatus::converged);
  REQUIRE(r.value.has_value());
  CHECK(std::abs(*r.value) <= 1e-9);
}

TEST_CASE("displacement channel coherence and its maximizer") {
  const CoherenceResult r = cr_channel(displacement_channel({{1.0, 0.0}}));
  REQUIRE(r.status == SearchStatus::converged);
  CHECK(*r.value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(std::abs(r.argmax_nu(0) - 1.0) <= 1e-3);
}

TEST_CASE("constant channel coherence is flat in the thermal input") {
  const GaussianState sigma = coherent_state({1.0, 0.0});
  const GaussianChannel c = constant_channel(sigma);
  const CoherenceResult r = cr_channel(c);
  REQUIRE(r.status == SearchStatus::converged);
  CHECK(*r.value == doctest::Approx(2.0).epsilon(1e-9));

  // the objective itself does not depend on nu at all
  Vec nu(1);
  double lo = 1e300, hi = -1e300;
  for (double v : {1.0, 2.0, 10.0, 250.0, 1000.0}) {
    nu << v;
    const double g = cr_state(apply_channel(c, thermal_state(nu)));
    lo = std::min(lo, g);
    hi = std::max(hi, g);
  }
  CHECK(hi - lo <= 1e-9);
}

TEST_CASE("closed forms for displacement and constant channels") {
  CHECK(cr_displacement_analytic({}) == 0.0);
  CHECK(cr_displacement_analytic({{0.0, 0.0}}) == 0.0);
  CHECK(cr_displacement_analytic({{1.0, 0.0}}) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(cr_displacement_analytic({{1.0, 0.0}, {1.0, 0.0}}) ==
        doctest::Approx(4.0).epsilon(1e-14));

  Vec three(1);
  three << 3.0;
  CHECK(cr_constant_analytic(thermal_state(three)) <= 1e-12);
  CHECK(cr_constant_analytic(coherent_state({1.0, 0.0})) ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("optimizer matches the displacement closed form") {
  std::mt19937_64 rng(test::base_seed() + 40);
  std::uniform_real_distribution<double> amp(-3.0, 3.0);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 1 + trial % 2;
    std::vector<std::complex<double>> lambda;
    for (int j = 0; j < n; ++j) lambda.push_back({amp(rng), amp(rng)});
    const CoherenceResult r = cr_channel(displacement_channel(lambda));
    REQUIRE(r.status == SearchStatus::converged);
    CHECK(std::abs(*r.value - cr_displacement_analytic(lambda)) <= 1e-6);
    for (int j = 0; j < n; ++j) CHECK(std::abs(r.argmax_nu(j) - 1.0) <= 1e-3);
  }
}

TEST_CASE("optimizer matches the constant closed form") {
  std::mt19937_64 rng(test::base_seed() + 41);
  for (int trial = 0; trial < 8; ++trial) {
    const GaussianState sigma = test::random_valid_state(1 + trial % 2, rng);
    const CoherenceResult r = cr_channel(constant_channel(sigma));
    REQUIRE(r.value.has_value());
    CHECK(std::abs(*r.value - cr_constant_analytic(sigma)) <= 1e-6);
  }
}

TEST_CASE("structurally incoherent channels score zero, displaced ones do not") {
  std::mt19937_64 rng(test::base_seed() + 42);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 2);
    const GaussianChannel c = random_incoherent_channel(n, rng());
    const CoherenceResult r = cr_channel(c);
    REQUIRE(r.value.has_value());
    CHECK(*r.value <= 1e-6);

    GaussianChannel displaced = c;
    displaced.d(0) += 0.5;
    const CoherenceResult rd = cr_channel(displaced);
    REQUIRE(rd.value.has_value());
    CHECK(*rd.value > 1e-4);
  }
}

TEST_CASE("rank-deficient amplification is flagged divergent") {
  // quadrature eraser: keeps x, discards y; the thermal supremum grows like
  // half a bit per doubling of nu
  GaussianChannel c{1, Mat::Zero(2, 2), Mat::Identity(2, 2), Vec::Zero(2)};
  c.T(0, 0) = 1.0;
  REQUIRE(validate_channel(c).valid());
  const CoherenceResult r = cr_channel(c);
  CHECK(r.status == SearchStatus::divergent);
  CHECK_FALSE(r.value.has_value());
  CHECK(r.evaluations > 0);
}

TEST_CASE("a balanced beam splitter has divergent coherence") {
  // mixing two thermal modes of different temperature leaves a correlated,
  // non-thermal output whose coherence grows without bound in the hotter
  // mode, roughly half a bit per temperature doubling
  const double c = std::cos(M_PI / 4.0), s = std::sin(M_PI / 4.0);
  GaussianChannel bs{2, Mat::Zero(4, 4), Mat::Zero(4, 4), Vec::Zero(4)};
  bs.T.block<2, 2>(0, 0) = c * Mat2::Identity();
  bs.T.block<2, 2>(0, 2) = -s * Mat2::Identity();
  bs.T.block<2, 2>(2, 0) = s * Mat2::Identity();
  bs.T.block<2, 2>(2, 2) = c * Mat2::Identity();
  REQUIRE(is_unitary_channel(bs));
  REQUIRE_FALSE(is_incoherent_channel(bs).incoherent);

  const CoherenceResult r = cr_channel(bs);
  CHECK(r.status == SearchStatus::divergent);
  CHECK_FALSE(r.value.has_value());
}

TEST_CASE("optimizer is deterministic") {
  std::mt19937_64 rng(test::base_seed() + 43);
  const GaussianChannel c = random_channel(2, rng());
  const CoherenceResult a = cr_channel(c);
  const CoherenceResult b = cr_channel(c);
  CHECK(a.status == b.status);
  CHECK(a.evaluations == b.evaluations);
  if (a.value) {
    REQUIRE(b.value.has_value());
    CHECK(*a.value == *b.value);  // bit-identical
    CHECK((a.argmax_nu - b.argmax_nu).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("optimizer rejects invalid channels and malformed options") {
  GaussianChannel bad{1, 2.0 * Mat::Identity(2, 2), Mat::Zero(2, 2), Vec::Zero(2)};
  CHECK_THROWS_AS(cr_channel(bad), std::invalid_argument);

  OptimizerOptions opts;
  opts.nu_max = 0.5;
  CHECK_THROWS_AS(cr_channel(identity_channel(1), opts), std::invalid_argument);
}

TEST_CASE("an exhausted evaluation budget is reported, not silently truncated") {
  OptimizerOptions opts;
  opts.max_evaluations = 10;
  CHECK_THROWS_AS(cr_channel(identity_channel(2), opts), std::runtime_error);
}

TEST_CASE("search protocol: constant objectives tie-break to the smallest point") {
  OptimizerOptions opts;
  const CoherenceResult r = detail::maximize_over_thermal_box(
      [](const Vec&) { return 42.0; }, 2, opts);
  CHECK(r.status == SearchStatus::converged);
  CHECK(*r.value == 42.0);
  CHECK(r.argmax_nu(0) == 1.0);
  CHECK(r.argmax_nu(1) == 1.0);
}

TEST_CASE("search protocol: logarithmic growth is divergent") {
  OptimizerOptions opts;
  const CoherenceResult r = detail::maximize_over_thermal_box(
      [](const Vec& nu) { return std::log2(nu(0)); }, 1, opts);
  CHECK(r.status == SearchStatus::divergent);
  CHECK_FALSE(r.value.has_value());
  CHECK(r.argmax_nu(0) >= 1.0);
}

TEST_CASE("search protocol: sub-threshold growth at the edge is boundary-max") {
  OptimizerOptions opts;
  const CoherenceResult r = detail::maximize_over_thermal_box(
      [](const Vec& nu) { return 1e-8 * std::log2(nu(0)); }, 1, opts);
  CHECK(r.status == SearchStatus::boundary_max);
  REQUIRE(r.value.has_value());
  // best point sits on the edge of the twice-doubled box
  CHECK(r.argmax_nu(0) == doctest::Approx(4.0 * opts.nu_max).epsilon(1e-6));
}

TEST_CASE("search protocol: an interior peak beyond the first box is found") {
  OptimizerOptions opts;
  auto peak_at_1500 = [](const Vec& nu) {
    const double d = std::log(nu(0) / 1500.0);
    return -d * d;
  };
  const CoherenceResult r = detail::maximize_over_thermal_box(peak_at_1500, 1, opts);
  CHECK(r.status == SearchStatus::converged);
  CHECK(r.argmax_nu(0) == doctest::Approx(1500.0).epsilon(1e-6));
}

TEST_CASE("monotonicity under incoherent superchannels") {
  std::mt19937_64 rng(test::base_seed() + 44);

  const MonotonicityReport same =
      check_monotonicity(displacement_channel({{1.0, 0.0}}), identity_superchannel(1));
  CHECK(same.holds);
  CHECK(*same.lhs.value == doctest::Approx(*same.rhs.value).epsilon(1e-12));

  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 2);
    std::vector<std::complex<double>> lambda;
    std::uniform_real_distribution<double> amp(-1.5, 1.5);
    for (int j = 0; j < n; ++j) lambda.push_back({amp(rng), amp(rng)});
    const GaussianSuperchannel sc = random_incoherent_superchannel(n, rng());
    const MonotonicityReport rep = check_monotonicity(displacement_channel(lambda), sc);
    CHECK(rep.holds);
    if (rep.comparable)
      CHECK(*rep.lhs.value <= cr_displacement_analytic(lambda) + 1e-7);
  }

  GaussianSuperchannel not_incoherent = identity_superchannel(1);
  not_incoherent.dbar(0) = 0.3;
  CHECK_THROWS_AS(check_monotonicity(identity_channel(1), not_incoherent),
                  std::invalid_argument);
}

TEST_CASE("pre-composition-only superchannels obey monotonicity") {
  std::mt19937_64 rng(test::base_seed() + 45);
  for (int trial = 0; trial < 5; ++trial) {
    GaussianSuperchannel sc = random_incoherent_superchannel(1, rng());
    sc.A = Mat::Identity(2, 2);
    sc.Y = Mat::Zero(2, 2);
    REQUIRE(is_incoherent_superchannel(sc).incoherent);
    const GaussianChannel c = random_incoherent_channel(1, rng());
    GaussianChannel displaced = c;
    displaced.d(0) += 0.7;
    CHECK(check_monotonicity(displaced, sc).holds);
  }
}

TEST_CASE("additivity over tensor products") {
  const AdditivityReport zeros = check_additivity(identity_channel(1), identity_channel(1));
  CHECK(zeros.holds);
  CHECK(*zeros.joint.value <= 1e-9);

  const AdditivityReport disp = check_additivity(displacement_channel({{1.0, 0.0}}),
                                                 displacement_channel({{1.0, 0.0}}));
  CHECK(disp.holds);
  CHECK(*disp.joint.value == doctest::Approx(4.0).epsilon(1e-9));

  Vec three(1);
  three << 3.0;
  const AdditivityReport mixed = check_additivity(displacement_channel({{1.0, 0.0}}),
                                                  constant_channel(thermal_state(three)));
  CHECK(mixed.holds);
  CHECK(*mixed.joint.value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("the search trace can be kept") {
  OptimizerOptions opts;
  opts.keep_trace = true;
  const CoherenceResult r = cr_channel(displacement_channel({{0.5, 0.0}}), opts);
  CHECK(static_cast<long>(r.trace.size()) == r.evaluations);
  REQUIRE(!r.trace.empty());
  CHECK(r.trace.front().nu.size() == 1);
}
