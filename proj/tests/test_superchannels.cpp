#include "gausscoh/superchannels.hpp"

#include "doctest.h"
#include "support.hpp"

#include <cmath>
#include <random>

using namespace gausscoh;

namespace {

void check_channels_equal(const GaussianChannel& a, const GaussianChannel& b, double tol) {
  CHECK((a.T - b.T).cwiseAbs().maxCoeff() <= tol);
  CHECK((a.N - b.N).cwiseAbs().maxCoeff() <= tol);
  CHECK((a.d - b.d).cwiseAbs().maxCoeff() <= tol);
}

}  // namespace

TEST_CASE("superchannel validation on the canonical examples") {
  CHECK(validate_superchannel(identity_superchannel(1)).valid());
  CHECK(validate_superchannel(identity_superchannel(2)).valid());

  GaussianSuperchannel stretched = identity_superchannel(1);
  stretched.O(1, 1) = 2.0;
  const auto rep = validate_superchannel(stretched);
  CHECK_FALSE(rep.valid());
  CHECK_FALSE(rep.o_orthogonal);

  GaussianSuperchannel gained = identity_superchannel(1);
  gained.A = 2.0 * Mat::Identity(2, 2);
  const auto rep2 = validate_superchannel(gained);
  CHECK_FALSE(rep2.valid());
  CHECK(rep2.post_cp.min_eigenvalue == doctest::Approx(-3.0).epsilon(1e-12));
}

TEST_CASE("a valid O is symplectic as well as orthogonal") {
  // i(Omega - O Omega O^t) has +/- paired eigenvalues, so positivity forces
  // O Omega O^t = Omega; a reflection violates it.
  GaussianSuperchannel flipped = identity_superchannel(1);
  flipped.O = reflection2(0.0);
  CHECK_FALSE(validate_superchannel(flipped).valid());

  std::mt19937_64 rng(test::base_seed() + 30);
  GaussianSuperchannel rotated = identity_superchannel(2);
  rotated.O = random_orthogonal_symplectic(2, rng());
  CHECK(validate_superchannel(rotated).valid());
}

TEST_CASE("superchannel action") {
  std::mt19937_64 rng(test::base_seed() + 31);
  const GaussianChannel c = random_channel(2, rng());
  const GaussianChannel same = apply_superchannel(identity_superchannel(2), c);
  check_channels_equal(same, c, 0.0);

  GaussianSuperchannel shift = identity_superchannel(1);
  shift.dbar(0) = 1.0;
  const GaussianChannel shifted = apply_superchannel(shift, identity_channel(1));
  CHECK((shifted.T - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);
  CHECK(shifted.N.cwiseAbs().maxCoeff() == 0.0);
  CHECK(shifted.d(0) == 1.0);
  CHECK(shifted.d(1) == 0.0);
}

TEST_CASE("decomposition factors reproduce the action") {
  std::mt19937_64 rng(test::base_seed() + 32);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 2);
    const GaussianSuperchannel sc = random_superchannel(n, rng());
    REQUIRE(validate_superchannel(sc).valid());
    const GaussianChannel c = random_channel(n, rng());
    const SuperchannelFactors f = decompose_superchannel(sc);
    CHECK(validate_channel(f.pre).valid());
    CHECK(validate_channel(f.post).valid());
    const GaussianChannel via_factors = compose_channels(f.post, compose_channels(c, f.pre));
    const GaussianChannel direct = apply_superchannel(sc, c);
    check_channels_equal(via_factors, direct, 1e-10);
    CHECK(validate_channel(direct).valid());
  }
}

TEST_CASE("decomposition of the identity and of a mode swap") {
  const SuperchannelFactors id = decompose_superchannel(identity_superchannel(1));
  check_channels_equal(id.pre, identity_channel(1), 0.0);
  check_channels_equal(id.post, identity_channel(1), 0.0);

  GaussianSuperchannel swap = identity_superchannel(2);
  swap.O = Mat::Zero(4, 4);
  swap.O.block<2, 2>(0, 2) = Mat2::Identity();
  swap.O.block<2, 2>(2, 0) = Mat2::Identity();
  REQUIRE(validate_superchannel(swap).valid());
  const SuperchannelFactors f = decompose_superchannel(swap);
  CHECK((f.pre.T - swap.O).cwiseAbs().maxCoeff() == 0.0);  // swap commutes with parity
  CHECK(is_unitary_channel(f.pre));
  CHECK(is_incoherent_channel(f.pre).incoherent);
}

TEST_CASE("incoherent-superchannel classification") {
  CHECK(is_incoherent_superchannel(identity_superchannel(1)).incoherent);

  GaussianSuperchannel shifted = identity_superchannel(1);
  shifted.dbar(0) = 0.1;
  const auto chk = is_incoherent_superchannel(shifted);
  CHECK_FALSE(chk.incoherent);
  CHECK(chk.failure.find("dbar") != std::string::npos);
}

TEST_CASE("sampled incoherent superchannels behave per the structure theorem") {
  std::mt19937_64 rng(test::base_seed() + 33);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 2);
    const GaussianSuperchannel sc = random_incoherent_superchannel(n, rng());
    CHECK(validate_superchannel(sc).valid());
    const auto chk = is_incoherent_superchannel(sc);
    REQUIRE(chk.incoherent);

    // orthogonality of a block-column O forces unit scales and a bijective row map
    REQUIRE(chk.o_structure.has_value());
    std::vector<bool> seen(n, false);
    for (int j = 0; j < n; ++j) {
      CHECK(std::abs(chk.o_structure->t[j] - 1.0) <= 1e-9);
      CHECK_FALSE(seen[chk.o_structure->row[j]]);
      seen[chk.o_structure->row[j]] = true;
    }

    // factors are incoherent channels
    const SuperchannelFactors f = decompose_superchannel(sc);
    CHECK(is_incoherent_channel(f.pre).incoherent);
    CHECK(is_incoherent_channel(f.post).incoherent);

    // action maps incoherent channels to incoherent channels
    for (int rep = 0; rep < 5; ++rep) {
      const GaussianChannel chi = random_incoherent_channel(n, rng());
      CHECK(is_incoherent_channel(apply_superchannel(sc, chi)).incoherent);
    }
  }
}

TEST_CASE("perturbed superchannels fail classification") {
  std::mt19937_64 rng(test::base_seed() + 34);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 2);
    GaussianSuperchannel sc = random_incoherent_superchannel(n, rng());
    switch (rng() % 3) {
      case 0: sc.dbar(0) += 1e-3; break;
      case 1:
        sc.Y(0, 1) += 1e-3;
        sc.Y(1, 0) += 1e-3;
        break;
      default: sc.A(0, 0) += 1e-3; break;
    }
    CHECK_FALSE(is_incoherent_superchannel(sc).incoherent);
  }
}
