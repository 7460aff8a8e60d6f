#include "gausscoh/channels.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <cassert>
#include <random>
#include <sstream>
#include <stdexcept>

namespace gausscoh {

GaussianChannel make_channel(Mat T, Mat N, Vec d) {
  if (T.rows() != T.cols() || T.rows() % 2 != 0 || T.rows() == 0)
    throw std::invalid_argument("channel: T must be 2n x 2n");
  if (N.rows() != T.rows() || N.cols() != T.cols())
    throw std::invalid_argument("channel: N must match T in shape");
  if (d.size() != T.rows())
    throw std::invalid_argument("channel: d length must match T dimension");
  GaussianChannel c;
  c.n = static_cast<int>(T.rows()) / 2;
  c.T = std::move(T);
  c.N = std::move(N);
  c.d = std::move(d);
  return c;
}

GaussianChannel identity_channel(int n) {
  return {n, Mat::Identity(2 * n, 2 * n), Mat::Zero(2 * n, 2 * n), Vec::Zero(2 * n)};
}

ChannelValidity validate_channel(const GaussianChannel& c, double tol) {
  if (c.T.rows() != 2 * c.n || c.N.rows() != 2 * c.n || c.d.size() != 2 * c.n)
    throw std::invalid_argument("validate_channel: T/N/d dimensions do not match n");

  ChannelValidity rep;
  const double nscale = std::max(1.0, c.N.cwiseAbs().maxCoeff());
  rep.n_symmetry_error = (c.N - c.N.transpose()).cwiseAbs().maxCoeff();
  rep.n_symmetric = rep.n_symmetry_error <= 1e-12 * nscale;

  const Mat omega = symplectic_form(c.n);
  const Mat skew = omega - c.T * omega * c.T.transpose();
  rep.cp = hermitian_psd(0.5 * (c.N + c.N.transpose()), 0.5 * (skew - skew.transpose()), tol);
  return rep;
}

GaussianState apply_channel(const GaussianChannel& c, const GaussianState& s) {
  if (c.n != s.n)
    throw std::invalid_argument("apply_channel: channel and state mode counts differ");
  GaussianState out;
  out.n = s.n;
  out.V = c.T * s.V * c.T.transpose() + c.N;
  out.d0 = c.T * s.d0 + c.d;
#ifdef GAUSCOH_VALIDATE_OUTPUTS
  // opt-in: valid inputs guarantee a valid output, so only probes of
  // deliberately invalid objects can trip this
  assert(validate_state(out).valid());
#endif
  return out;
}

GaussianChannel compose_channels(const GaussianChannel& outer, const GaussianChannel& first) {
  if (outer.n != first.n)
    throw std::invalid_argument("compose_channels: mode counts differ");
  GaussianChannel c;
  c.n = outer.n;
  c.T = outer.T * first.T;
  c.N = outer.T * first.N * outer.T.transpose() + outer.N;
  c.d = outer.T * first.d + outer.d;
  return c;
}

GaussianChannel tensor_channels(const GaussianChannel& a, const GaussianChannel& b) {
  const int n = a.n + b.n;
  GaussianChannel c;
  c.n = n;
  c.T = Mat::Zero(2 * n, 2 * n);
  c.N = Mat::Zero(2 * n, 2 * n);
  c.T.topLeftCorner(2 * a.n, 2 * a.n) = a.T;
  c.T.bottomRightCorner(2 * b.n, 2 * b.n) = b.T;
  c.N.topLeftCorner(2 * a.n, 2 * a.n) = a.N;
  c.N.bottomRightCorner(2 * b.n, 2 * b.n) = b.N;
  c.d.resize(2 * n);
  c.d << a.d, b.d;
  return c;
}

bool is_unitary_channel(const GaussianChannel& c, double tol) {
  if (c.N.cwiseAbs().maxCoeff() > tol) return false;
  const Mat omega = symplectic_form(c.n);
  return (c.T * omega * c.T.transpose() - omega).cwiseAbs().maxCoeff() <= tol;
}

IncoherentChannelCheck is_incoherent_channel(const GaussianChannel& c, double tol) {
  IncoherentChannelCheck out;
  const double dscale = std::max(1.0, c.T.cwiseAbs().maxCoeff());
  if (c.d.cwiseAbs().maxCoeff() > tol * dscale) {
    out.failure = "displacement d is nonzero";
    return out;
  }

  std::string why;
  out.structure = classify_tn(c.T, tol, &why);
  if (!out.structure) {
    out.failure = "T is not a scaled-orthogonal block-column matrix: " + why;
    return out;
  }

  const double nscale = std::max(1.0, c.N.cwiseAbs().maxCoeff());
  for (int i = 0; i < 2 * c.n; ++i)
    for (int j = 0; j < 2 * c.n; ++j) {
      if (i == j) continue;
      if (std::abs(c.N(i, j)) > tol * nscale) {
        out.failure = "N has off-diagonal structure";
        return out;
      }
    }
  out.omega.resize(c.n);
  for (int j = 0; j < c.n; ++j) {
    if (std::abs(c.N(2 * j, 2 * j) - c.N(2 * j + 1, 2 * j + 1)) > tol * nscale) {
      out.failure = "N block is not a scalar multiple of the identity";
      return out;
    }
    out.omega[j] = 0.5 * (c.N(2 * j, 2 * j) + c.N(2 * j + 1, 2 * j + 1));
  }

  const std::vector<double> floors = thermal_noise_floors(*out.structure);
  for (int j = 0; j < c.n; ++j) {
    if (out.omega[j] < floors[j] - tol * std::max(1.0, floors[j])) {
      std::ostringstream msg;
      msg << "noise scalar for mode " << j + 1 << " (" << out.omega[j]
          << ") is below its floor " << floors[j];
      out.failure = msg.str();
      return out;
    }
  }
  out.incoherent = true;
  return out;
}

ChoiParams ChoiParams::from_r(double r) {
  ChoiParams p;
  p.r = r;
  p.ch2r = std::cosh(2.0 * r);
  p.sh2r = std::sinh(2.0 * r);
  return p;
}

GaussianState choi_state(const GaussianChannel& c, const ChoiParams& p) {
  const int n = c.n;
  const Mat sigma = parity_form(n);
  GaussianState s;
  s.n = 2 * n;
  s.V.resize(4 * n, 4 * n);
  s.V.topLeftCorner(2 * n, 2 * n) = c.T * c.T.transpose() * p.ch2r + c.N;
  s.V.topRightCorner(2 * n, 2 * n) = c.T * sigma * p.sh2r;
  s.V.bottomLeftCorner(2 * n, 2 * n) = sigma * c.T.transpose() * p.sh2r;
  s.V.bottomRightCorner(2 * n, 2 * n) = Mat::Identity(2 * n, 2 * n) * p.ch2r;
  s.d0 = Vec::Zero(4 * n);
  s.d0.head(2 * n) = c.d;
  return s;
}

GaussianChannel displacement_channel(const std::vector<std::complex<double>>& lambda) {
  const int n = static_cast<int>(lambda.size());
  if (n == 0) throw std::invalid_argument("displacement_channel: empty amplitude list");
  GaussianChannel c = identity_channel(n);
  for (int j = 0; j < n; ++j) {
    c.d(2 * j) = 2.0 * lambda[j].real();
    c.d(2 * j + 1) = 2.0 * lambda[j].imag();
  }
  return c;
}

GaussianChannel constant_channel(const GaussianState& sigma) {
  return {sigma.n, Mat::Zero(2 * sigma.n, 2 * sigma.n), sigma.V, sigma.d0};
}

GaussianChannel random_incoherent_channel(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> slack(0.05, 2.0);

  const TnStructure s = random_tn_structure(n, rng());
  const std::vector<double> floors = thermal_noise_floors(s);

  GaussianChannel c;
  c.n = n;
  c.T = s.reconstruct();
  c.N = Mat::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    const double w = floors[j] + (unit(rng) < 0.2 ? 0.0 : slack(rng));
    c.N(2 * j, 2 * j) = c.N(2 * j + 1, 2 * j + 1) = w;
  }
  c.d = Vec::Zero(2 * n);
  return c;
}

GaussianChannel random_channel(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> slack(0.05, 1.0);
  std::uniform_real_distribution<double> tnorm(0.2, 1.2);

  Mat T(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) T(i, j) = gauss(rng);
  T *= tnorm(rng) / T.operatorNorm();

  // Smallest eigenvalue of i(Omega - T Omega T^t) is minus the largest
  // singular value of the skew part; that multiple of I restores positivity.
  const Mat omega = symplectic_form(n);
  const Mat skew = omega - T * omega * T.transpose();
  const double smax = skew.operatorNorm();

  Mat G(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) G(i, j) = gauss(rng);
  Mat psd = G * G.transpose();
  psd *= slack(rng) / std::max(1.0, psd.operatorNorm());

  GaussianChannel c;
  c.n = n;
  c.T = std::move(T);
  c.N = (smax + slack(rng)) * Mat::Identity(2 * n, 2 * n) + psd;
  c.d.resize(2 * n);
  for (int i = 0; i < 2 * n; ++i) c.d(i) = 0.5 * gauss(rng);
  return c;
}

}  // namespace gausscoh
