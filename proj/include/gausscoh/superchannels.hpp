#pragma once

#include "gausscoh/channels.hpp"

namespace gausscoh {

/// Gaussian superchannel (A, O, Y, dbar): maps a channel (T, N, d) to
/// (A T Sigma O^t Sigma, A N A^t + Y, A d + dbar). O must be orthogonal,
/// Y symmetric, and the two positivity constraints below must hold:
///   Y + i(Omega - A Omega A^t) >= 0
///   i(Omega - O Omega O^t) >= 0    (equivalently, O is also symplectic).
struct GaussianSuperchannel {
  int n = 0;
  Mat A, O, Y;
  Vec dbar;
};

GaussianSuperchannel make_superchannel(Mat A, Mat O, Mat Y, Vec dbar);
GaussianSuperchannel identity_superchannel(int n);

struct SuperchannelValidity {
  bool o_orthogonal = false;
  double o_orthogonality_error = 0.0;
  bool y_symmetric = false;
  double y_symmetry_error = 0.0;
  PsdReport pre_cp;   // i(Omega - O Omega O^t) >= 0
  PsdReport post_cp;  // Y + i(Omega - A Omega A^t) >= 0

  bool valid() const { return o_orthogonal && y_symmetric && pre_cp.psd && post_cp.psd; }
};

SuperchannelValidity validate_superchannel(const GaussianSuperchannel& sc,
                                           double tol = kDefaultTol);

GaussianChannel apply_superchannel(const GaussianSuperchannel& sc, const GaussianChannel& c);

struct SuperchannelFactors {
  GaussianChannel pre;   // (Sigma O^t Sigma, 0, 0)
  GaussianChannel post;  // (A, Y, dbar)
};

/// Factorization as post . channel . pre; both factors are valid channels
/// whenever the superchannel is valid.
SuperchannelFactors decompose_superchannel(const GaussianSuperchannel& sc);

struct IncoherentSuperchannelCheck {
  bool incoherent = false;
  std::string failure;  // first failing clause
  std::optional<TnStructure> a_structure;
  std::optional<TnStructure> o_structure;
  std::vector<double> eta;  // per-mode scalars of Y when block-scalar
};

/// Structural test: dbar = 0, A and O both in the scaled-orthogonal
/// block-column family, Y a per-mode scalar block matrix.
IncoherentSuperchannelCheck is_incoherent_superchannel(const GaussianSuperchannel& sc,
                                                       double tol = 1e-8);

/// Draws a superchannel passing both validate_superchannel and
/// is_incoherent_superchannel: A from a random block structure, O a
/// rotation-block permutation (orthogonal and symplectic), Y block-scalar
/// at or above the positivity floor, dbar = 0.
GaussianSuperchannel random_incoherent_superchannel(int n, std::uint64_t seed);

/// Generic valid sampler: random A, random orthogonal-symplectic O,
/// Y = compensating multiple of I plus PSD slack, random dbar.
GaussianSuperchannel random_superchannel(int n, std::uint64_t seed);

}  // namespace gausscoh
