#pragma once

#include "gausscoh/states.hpp"
#include "gausscoh/symplectic.hpp"

#include <random>

namespace gausscoh::test {

inline std::uint64_t base_seed() {
  if (const char* s = std::getenv("GAUSCOH_SEED")) return std::strtoull(s, nullptr, 10);
  return 0x5eed0001u;
}

inline Mat2 random_mat2(std::mt19937_64& rng, double scale = 2.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Mat2 m;
  m << u(rng), u(rng), u(rng), u(rng);
  return m;
}

inline Vec random_nu(int n, std::mt19937_64& rng, double hi = 6.0) {
  std::uniform_real_distribution<double> u(1.0, hi);
  Vec nu(n);
  for (int j = 0; j < n; ++j) nu(j) = u(rng);
  return nu;
}

// Valid covariance with known symplectic spectrum: conjugate a thermal
// matrix by a random symplectic, then displace.
inline GaussianState random_valid_state(int n, std::mt19937_64& rng,
                                        double displacement_scale = 1.0) {
  const Mat S = random_symplectic(n, rng());
  const Vec nu = random_nu(n, rng);
  Mat V = Mat::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) V(2 * j, 2 * j) = V(2 * j + 1, 2 * j + 1) = nu(j);
  V = S * V * S.transpose();
  V = 0.5 * (V + V.transpose());
  std::normal_distribution<double> g(0.0, displacement_scale);
  Vec d0(2 * n);
  for (int i = 0; i < 2 * n; ++i) d0(i) = g(rng);
  return {n, std::move(V), std::move(d0)};
}

}  // namespace gausscoh::test
