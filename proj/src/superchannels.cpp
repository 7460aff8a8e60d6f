#include "gausscoh/superchannels.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace gausscoh {

GaussianSuperchannel make_superchannel(Mat A, Mat O, Mat Y, Vec dbar) {
  if (A.rows() != A.cols() || A.rows() % 2 != 0 || A.rows() == 0)
    throw std::invalid_argument("superchannel: A must be 2n x 2n");
  if (O.rows() != A.rows() || O.cols() != A.cols() || Y.rows() != A.rows() ||
      Y.cols() != A.cols())
    throw std::invalid_argument("superchannel: A, O, Y must share one shape");
  if (dbar.size() != A.rows())
    throw std::invalid_argument("superchannel: dbar length must match A dimension");
  GaussianSuperchannel sc;
  sc.n = static_cast<int>(A.rows()) / 2;
  sc.A = std::move(A);
  sc.O = std::move(O);
  sc.Y = std::move(Y);
  sc.dbar = std::move(dbar);
  return sc;
}

GaussianSuperchannel identity_superchannel(int n) {
  return {n, Mat::Identity(2 * n, 2 * n), Mat::Identity(2 * n, 2 * n),
          Mat::Zero(2 * n, 2 * n), Vec::Zero(2 * n)};
}

SuperchannelValidity validate_superchannel(const GaussianSuperchannel& sc, double tol) {
  if (sc.A.rows() != 2 * sc.n || sc.O.rows() != 2 * sc.n || sc.Y.rows() != 2 * sc.n ||
      sc.dbar.size() != 2 * sc.n)
    throw std::invalid_argument("validate_superchannel: dimensions do not match n");

  SuperchannelValidity rep;
  rep.o_orthogonality_error =
      (sc.O * sc.O.transpose() - Mat::Identity(2 * sc.n, 2 * sc.n)).cwiseAbs().maxCoeff();
  rep.o_orthogonal = rep.o_orthogonality_error <= tol;

  const double yscale = std::max(1.0, sc.Y.cwiseAbs().maxCoeff());
  rep.y_symmetry_error = (sc.Y - sc.Y.transpose()).cwiseAbs().maxCoeff();
  rep.y_symmetric = rep.y_symmetry_error <= 1e-12 * yscale;

  const Mat omega = symplectic_form(sc.n);
  const Mat skew_o = omega - sc.O * omega * sc.O.transpose();
  rep.pre_cp = hermitian_psd(Mat::Zero(2 * sc.n, 2 * sc.n),
                             0.5 * (skew_o - skew_o.transpose()), tol);
  const Mat skew_a = omega - sc.A * omega * sc.A.transpose();
  rep.post_cp = hermitian_psd(0.5 * (sc.Y + sc.Y.transpose()),
                              0.5 * (skew_a - skew_a.transpose()), tol);
  return rep;
}

GaussianChannel apply_superchannel(const GaussianSuperchannel& sc, const GaussianChannel& c) {
  if (sc.n != c.n)
    throw std::invalid_argument("apply_superchannel: mode counts differ");
  const Mat sigma = parity_form(sc.n);
  GaussianChannel out;
  out.n = c.n;
  out.T = sc.A * c.T * sigma * sc.O.transpose() * sigma;
  out.N = sc.A * c.N * sc.A.transpose() + sc.Y;
  out.d = sc.A * c.d + sc.dbar;
  return out;
}

SuperchannelFactors decompose_superchannel(const GaussianSuperchannel& sc) {
  const Mat sigma = parity_form(sc.n);
  SuperchannelFactors f;
  f.pre.n = sc.n;
  f.pre.T = sigma * sc.O.transpose() * sigma;
  f.pre.N = Mat::Zero(2 * sc.n, 2 * sc.n);
  f.pre.d = Vec::Zero(2 * sc.n);
  f.post.n = sc.n;
  f.post.T = sc.A;
  f.post.N = sc.Y;
  f.post.d = sc.dbar;
  return f;
}

IncoherentSuperchannelCheck is_incoherent_superchannel(const GaussianSuperchannel& sc,
                                                       double tol) {
  IncoherentSuperchannelCheck out;
  if (sc.dbar.cwiseAbs().maxCoeff() > tol * std::max(1.0, sc.A.cwiseAbs().maxCoeff())) {
    out.failure = "dbar is nonzero";
    return out;
  }

  std::string why;
  out.a_structure = classify_tn(sc.A, tol, &why);
  if (!out.a_structure) {
    out.failure = "A is not a scaled-orthogonal block-column matrix: " + why;
    return out;
  }
  out.o_structure = classify_tn(sc.O, tol, &why);
  if (!out.o_structure) {
    out.failure = "O is not a scaled-orthogonal block-column matrix: " + why;
    return out;
  }

  const double yscale = std::max(1.0, sc.Y.cwiseAbs().maxCoeff());
  for (int i = 0; i < 2 * sc.n; ++i)
    for (int j = 0; j < 2 * sc.n; ++j) {
      if (i == j) continue;
      if (std::abs(sc.Y(i, j)) > tol * yscale) {
        out.failure = "Y has off-diagonal structure";
        return out;
      }
    }
  out.eta.resize(sc.n);
  for (int j = 0; j < sc.n; ++j) {
    if (std::abs(sc.Y(2 * j, 2 * j) - sc.Y(2 * j + 1, 2 * j + 1)) > tol * yscale) {
      out.failure = "Y block is not a scalar multiple of the identity";
      return out;
    }
    out.eta[j] = 0.5 * (sc.Y(2 * j, 2 * j) + sc.Y(2 * j + 1, 2 * j + 1));
  }
  out.incoherent = true;
  return out;
}

GaussianSuperchannel random_incoherent_superchannel(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> slack(0.05, 2.0);

  const TnStructure a = random_tn_structure(n, rng());

  // O has to stay symplectic as well as orthogonal: rotation blocks with
  // unit scales routed by a permutation.
  TnSampleOptions oopts;
  oopts.permutation_rows = true;
  oopts.unit_scales = true;
  oopts.reflections = false;
  const TnStructure o = random_tn_structure(n, rng(), oopts);

  const std::vector<double> floors = thermal_noise_floors(a);
  GaussianSuperchannel sc;
  sc.n = n;
  sc.A = a.reconstruct();
  sc.O = o.reconstruct();
  sc.Y = Mat::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    const double eta = floors[j] + (unit(rng) < 0.2 ? 0.0 : slack(rng));
    sc.Y(2 * j, 2 * j) = sc.Y(2 * j + 1, 2 * j + 1) = eta;
  }
  sc.dbar = Vec::Zero(2 * n);
  return sc;
}

GaussianSuperchannel random_superchannel(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> slack(0.05, 1.0);
  std::uniform_real_distribution<double> anorm(0.2, 1.2);

  Mat A(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) A(i, j) = gauss(rng);
  A *= anorm(rng) / A.operatorNorm();

  const Mat O = random_orthogonal_symplectic(n, rng());

  const Mat omega = symplectic_form(n);
  const Mat skew = omega - A * omega * A.transpose();
  Mat G(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) G(i, j) = gauss(rng);
  Mat psd = G * G.transpose();
  psd *= slack(rng) / std::max(1.0, psd.operatorNorm());

  GaussianSuperchannel sc;
  sc.n = n;
  sc.A = std::move(A);
  sc.O = O;
  sc.Y = (skew.operatorNorm() + slack(rng)) * Mat::Identity(2 * n, 2 * n) + psd;
  sc.dbar.resize(2 * n);
  for (int i = 0; i < 2 * n; ++i) sc.dbar(i) = 0.5 * gauss(rng);
  return sc;
}

}  // namespace gausscoh
