#pragma once

#include "gausscoh/states.hpp"

namespace gausscoh {

/// Gaussian channel (T, N, d): acts on a state as d0 -> T d0 + d,
/// V -> T V T^t + N. Completely positive iff N + i(Omega - T Omega T^t) >= 0.
struct GaussianChannel {
  int n = 0;
  Mat T, N;
  Vec d;
};

GaussianChannel make_channel(Mat T, Mat N, Vec d);
GaussianChannel identity_channel(int n);

struct ChannelValidity {
  bool n_symmetric = false;
  double n_symmetry_error = 0.0;
  PsdReport cp;  // N + i*Omega - i*T*Omega*T^t >= 0

  bool valid() const { return n_symmetric && cp.psd; }
};

ChannelValidity validate_channel(const GaussianChannel& c, double tol = kDefaultTol);

GaussianState apply_channel(const GaussianChannel& c, const GaussianState& s);

/// Composition: first is applied first, outer second.
GaussianChannel compose_channels(const GaussianChannel& outer, const GaussianChannel& first);

GaussianChannel tensor_channels(const GaussianChannel& a, const GaussianChannel& b);

/// N = 0 and T symplectic, within tol (max-norm tests).
bool is_unitary_channel(const GaussianChannel& c, double tol = kDefaultTol);

struct IncoherentChannelCheck {
  bool incoherent = false;
  std::string failure;  // first failing clause, empty when incoherent
  std::optional<TnStructure> structure;
  std::vector<double> omega;  // per-mode noise scalars when N is block-scalar
};

/// Structural test for thermal-preserving channels: d = 0, T in the
/// scaled-orthogonal block-column family, N a per-mode scalar block matrix,
/// and each noise scalar at or above its floor |1 - sum t_k^2 det T_k|.
IncoherentChannelCheck is_incoherent_channel(const GaussianChannel& c, double tol = 1e-8);

/// Squeezing parametrization for the channel-state correspondence.
struct ChoiParams {
  double r = 1.0;
  double ch2r = std::cosh(2.0);
  double sh2r = std::sinh(2.0);

  static ChoiParams from_r(double r);
};

/// Choi state on 2n modes: send one half of a two-mode-squeezed pair per mode
/// through the channel. V = [[T T^t ch + N, T Sigma sh], [Sigma T^t sh, I ch]],
/// d0 = (d, 0).
GaussianState choi_state(const GaussianChannel& c, const ChoiParams& p);

/// Unitary displacement channel: T = I, N = 0, d = 2*lambda interleaved.
GaussianChannel displacement_channel(const std::vector<std::complex<double>>& lambda);

/// Channel mapping every input to the fixed state sigma: T = 0, N = sigma.V,
/// d = sigma.d0.
GaussianChannel constant_channel(const GaussianState& sigma);

/// Draws a thermal-preserving channel: random block structure for T, scalar
/// block noise at or above the floor, d = 0. Passes both validate_channel
/// and is_incoherent_channel by construction.
GaussianChannel random_incoherent_channel(int n, std::uint64_t seed);

/// Generic CP sampler: random contraction-scaled T, N set to the compensating
/// multiple of the identity plus random symmetric PSD slack, small random d.
GaussianChannel random_channel(int n, std::uint64_t seed);

}  // namespace gausscoh
