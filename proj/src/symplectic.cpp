#include "gausscoh/symplectic.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace gausscoh {

Mat2 mode_symplectic_form() {
  Mat2 w;
  w << 0.0, 1.0, -1.0, 0.0;
  return w;
}

Mat symplectic_form(int n) {
  if (n <= 0) throw std::invalid_argument("mode count must be positive");
  Mat omega = Mat::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) omega.block<2, 2>(2 * j, 2 * j) = mode_symplectic_form();
  return omega;
}

Mat parity_form(int n) {
  if (n <= 0) throw std::invalid_argument("mode count must be positive");
  Mat sigma = Mat::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    sigma(2 * j, 2 * j) = 1.0;
    sigma(2 * j + 1, 2 * j + 1) = -1.0;
  }
  return sigma;
}

Mat2 rotation2(double theta) {
  Mat2 q;
  q << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return q;
}

Mat2 reflection2(double theta) {
  Mat2 q;
  q << std::cos(theta), std::sin(theta), std::sin(theta), -std::cos(theta);
  return q;
}

PsdReport hermitian_psd(const Mat& R, const Mat& S, double tol) {
  if (R.rows() != R.cols() || S.rows() != S.cols() || R.rows() != S.rows())
    throw std::invalid_argument("hermitian_psd: R and S must be square with equal size");
  const double rscale = std::max(1.0, R.cwiseAbs().maxCoeff());
  const double sscale = std::max(1.0, S.cwiseAbs().maxCoeff());
  if ((R - R.transpose()).cwiseAbs().maxCoeff() > tol * rscale)
    throw std::invalid_argument("hermitian_psd: R is not symmetric within tolerance");
  if ((S + S.transpose()).cwiseAbs().maxCoeff() > tol * sscale)
    throw std::invalid_argument("hermitian_psd: S is not antisymmetric within tolerance");

  CMat H = R.cast<std::complex<double>>();
  H += std::complex<double>(0.0, 1.0) * S.cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<CMat> es(H, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("hermitian_psd: eigenvalue computation failed");

  PsdReport rep;
  rep.min_eigenvalue = es.eigenvalues().minCoeff();
  rep.scale = std::max(std::abs(es.eigenvalues().minCoeff()),
                       std::abs(es.eigenvalues().maxCoeff()));
  rep.psd = rep.min_eigenvalue >= -tol * std::max(1.0, rep.scale);
  return rep;
}

std::vector<double> symplectic_eigenvalues(const Mat& V) {
  if (V.rows() != V.cols() || V.rows() % 2 != 0 || V.rows() == 0)
    throw std::invalid_argument("symplectic_eigenvalues: V must be 2n x 2n");
  const double scale = std::max(1.0, V.cwiseAbs().maxCoeff());
  if ((V - V.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument("symplectic_eigenvalues: V must be symmetric");

  const int n = static_cast<int>(V.rows()) / 2;
  Eigen::EigenSolver<Mat> es(symplectic_form(n) * V, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("symplectic_eigenvalues: eigenvalue computation failed");

  std::vector<double> moduli(2 * n);
  for (int k = 0; k < 2 * n; ++k) moduli[k] = std::abs(es.eigenvalues()(k));
  std::sort(moduli.begin(), moduli.end());

  // Moduli of the spectrum of i*Omega*V come in equal pairs; adjacent sorted
  // values are averaged, and a mismatched pair is rejected.
  std::vector<double> nu(n);
  for (int j = 0; j < n; ++j) {
    const double a = moduli[2 * j], b = moduli[2 * j + 1];
    if (std::abs(b - a) > 1e-6 * std::max(1.0, 0.5 * (a + b))) {
      std::ostringstream msg;
      msg << "symplectic_eigenvalues: pairing failed, moduli " << a << " and " << b
          << " differ beyond tolerance";
      throw std::runtime_error(msg.str());
    }
    nu[j] = 0.5 * (a + b);
  }
  return nu;
}

std::optional<ScaledOrthogonal> scaled_orthogonal_factor(const Mat2& B, double tol) {
  const double bmax = B.cwiseAbs().maxCoeff();
  if (bmax == 0.0) return ScaledOrthogonal{0.0, Mat2::Identity()};

  const Mat2 G = B * B.transpose();
  const double gscale = std::max(1.0, G.cwiseAbs().maxCoeff());
  if (std::abs(G(0, 1)) > tol * gscale || std::abs(G(1, 0)) > tol * gscale ||
      std::abs(G(0, 0) - G(1, 1)) > tol * gscale)
    return std::nullopt;

  const double t2 = 0.5 * (G(0, 0) + G(1, 1));
  if (t2 < 0.0) return std::nullopt;
  const double t = std::sqrt(t2);
  if (t <= tol * std::max(1.0, bmax)) return ScaledOrthogonal{0.0, Mat2::Identity()};

  ScaledOrthogonal out;
  out.t = t;
  out.unit = B / t;
  if ((out.unit * out.unit.transpose() - Mat2::Identity()).cwiseAbs().maxCoeff() > tol)
    return std::nullopt;
  return out;
}

Mat TnStructure::reconstruct() const {
  Mat T = Mat::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j)
    if (!zero[j]) T.block<2, 2>(2 * row[j], 2 * j) = t[j] * block[j];
  return T;
}

std::optional<TnStructure> classify_tn(const Mat& T, double tol, std::string* why) {
  if (T.rows() != T.cols() || T.rows() % 2 != 0 || T.rows() == 0)
    throw std::invalid_argument("classify_tn: T must be 2n x 2n");
  const int n = static_cast<int>(T.rows()) / 2;
  const double scale = std::max(1.0, T.cwiseAbs().maxCoeff());

  TnStructure s;
  s.n = n;
  s.t.assign(n, 0.0);
  s.block.assign(n, Mat2::Identity());
  s.row.assign(n, 0);
  s.zero.assign(n, true);

  for (int j = 0; j < n; ++j) {
    int found = -1;
    for (int i = 0; i < n; ++i) {
      if (T.block<2, 2>(2 * i, 2 * j).cwiseAbs().maxCoeff() <= tol * scale) continue;
      if (found >= 0) {
        if (why) {
          std::ostringstream msg;
          msg << "column block " << j + 1 << " has nonzero blocks in row blocks "
              << found + 1 << " and " << i + 1;
          *why = msg.str();
        }
        return std::nullopt;
      }
      found = i;
    }
    if (found < 0) {
      s.row[j] = j;  // convention for empty column blocks
      continue;
    }
    auto f = scaled_orthogonal_factor(T.block<2, 2>(2 * found, 2 * j), tol);
    if (!f || f->t == 0.0) {
      if (why) {
        std::ostringstream msg;
        msg << "block at row block " << found + 1 << ", column block " << j + 1
            << " is not orthogonal up to scale";
        *why = msg.str();
      }
      return std::nullopt;
    }
    s.t[j] = f->t;
    s.block[j] = f->unit;
    s.row[j] = found;
    s.zero[j] = false;
  }
  return s;
}

std::vector<double> thermal_noise_floors(const TnStructure& s) {
  std::vector<double> floors(s.n);
  for (int j = 0; j < s.n; ++j) {
    double acc = 0.0;
    for (int k = 0; k < s.n; ++k)
      if (!s.zero[k] && s.row[k] == j) acc += s.t[k] * s.t[k] * s.block[k].determinant();
    floors[j] = std::abs(1.0 - acc);
  }
  return floors;
}

Mat random_symplectic(int n, std::uint64_t seed, double scale) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, scale);
  Mat H(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = i; j < 2 * n; ++j) H(i, j) = H(j, i) = gauss(rng);
  Mat gen = symplectic_form(n) * H;
  return gen.exp();
}

Mat random_orthogonal_symplectic(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMat G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G(i, j) = std::complex<double>(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<CMat> qr(G);
  CMat Q = qr.householderQ();
  CMat R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const std::complex<double> r = R(j, j);
    if (std::abs(r) > 0) Q.col(j) *= r / std::abs(r);
  }

  // Unitary U = X + iY embeds as 2x2 blocks [[X, -Y], [Y, X]] per mode pair.
  Mat O(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      O(2 * i, 2 * j) = Q(i, j).real();
      O(2 * i, 2 * j + 1) = -Q(i, j).imag();
      O(2 * i + 1, 2 * j) = Q(i, j).imag();
      O(2 * i + 1, 2 * j + 1) = Q(i, j).real();
    }
  return O;
}

TnStructure random_tn_structure(int n, std::uint64_t seed, const TnSampleOptions& opts) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> tval(opts.t_min, opts.t_max);

  TnStructure s;
  s.n = n;
  s.t.assign(n, 0.0);
  s.block.assign(n, Mat2::Identity());
  s.row.assign(n, 0);
  s.zero.assign(n, true);

  std::vector<int> rows(n);
  for (int j = 0; j < n; ++j) rows[j] = j;
  if (opts.permutation_rows) {
    for (int j = n - 1; j > 0; --j)
      std::swap(rows[j], rows[std::uniform_int_distribution<int>(0, j)(rng)]);
  } else {
    std::uniform_int_distribution<int> anyrow(0, n - 1);
    for (int j = 0; j < n; ++j) rows[j] = anyrow(rng);
  }

  for (int j = 0; j < n; ++j) {
    if (!opts.permutation_rows && !opts.unit_scales && unit(rng) < opts.zero_prob) {
      s.row[j] = j;
      continue;
    }
    s.zero[j] = false;
    s.row[j] = rows[j];
    s.t[j] = opts.unit_scales ? 1.0 : tval(rng);
    const double th = angle(rng);
    s.block[j] = (opts.reflections && unit(rng) < 0.5) ? reflection2(th) : rotation2(th);
  }
  return s;
}

}  // namespace gausscoh
