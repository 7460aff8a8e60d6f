#include "gausscoh/states.hpp"

#include <cmath>
#include <stdexcept>

namespace gausscoh {

namespace {
constexpr double kClampEps = 1e-9;
constexpr double kNuClamp = 1e-8;
}  // namespace

GaussianState make_state(Mat V, Vec d0) {
  if (V.rows() != V.cols() || V.rows() % 2 != 0 || V.rows() == 0)
    throw std::invalid_argument("state: V must be 2n x 2n");
  if (d0.size() != V.rows())
    throw std::invalid_argument("state: d0 length must match V dimension");
  GaussianState s;
  s.n = static_cast<int>(V.rows()) / 2;
  s.V = std::move(V);
  s.d0 = std::move(d0);
  return s;
}

StateValidity validate_state(const GaussianState& s, double tol) {
  if (s.V.rows() != 2 * s.n || s.V.cols() != 2 * s.n || s.d0.size() != 2 * s.n)
    throw std::invalid_argument("validate_state: V/d0 dimensions do not match n");

  StateValidity rep;
  const double scale = std::max(1.0, s.V.cwiseAbs().maxCoeff());
  rep.symmetry_error = (s.V - s.V.transpose()).cwiseAbs().maxCoeff();
  rep.symmetric = rep.symmetry_error <= 1e-12 * scale;

  const Mat Vsym = 0.5 * (s.V + s.V.transpose());
  rep.uncertainty = hermitian_psd(Vsym, symplectic_form(s.n), tol);
  try {
    rep.nu = symplectic_eigenvalues(Vsym);
    rep.pairing_ok = true;
  } catch (const std::exception& e) {
    rep.pairing_ok = false;
    rep.detail = e.what();
  }
  return rep;
}

GaussianState vacuum_state(int n) {
  if (n <= 0) throw std::invalid_argument("vacuum_state: mode count must be positive");
  return {n, Mat::Identity(2 * n, 2 * n), Vec::Zero(2 * n)};
}

GaussianState thermal_state(const Vec& nu) {
  const int n = static_cast<int>(nu.size());
  if (n == 0) throw std::invalid_argument("thermal_state: empty spectrum");
  Mat V = Mat::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    if (nu(j) < 1.0)
      throw std::invalid_argument("thermal_state: every nu_j must be >= 1");
    V(2 * j, 2 * j) = V(2 * j + 1, 2 * j + 1) = nu(j);
  }
  return {n, std::move(V), Vec::Zero(2 * n)};
}

GaussianState coherent_state(std::complex<double> alpha) {
  Vec d0(2);
  d0 << 2.0 * alpha.real(), 2.0 * alpha.imag();
  return {1, Mat::Identity(2, 2), std::move(d0)};
}

bool is_incoherent_state(const GaussianState& s, double tol) {
  const double scale = std::max(1.0, s.V.cwiseAbs().maxCoeff());
  if (s.d0.cwiseAbs().maxCoeff() > tol * scale) return false;
  for (int j = 0; j < 2 * s.n; ++j)
    for (int k = 0; k < 2 * s.n; ++k) {
      if (j == k) continue;
      if (std::abs(s.V(j, k)) > tol * scale) return false;
    }
  for (int j = 0; j < s.n; ++j) {
    if (std::abs(s.V(2 * j, 2 * j) - s.V(2 * j + 1, 2 * j + 1)) > tol * scale) return false;
    if (s.V(2 * j, 2 * j) < 1.0 - tol * scale) return false;
  }
  return true;
}

std::complex<double> char_function(const GaussianState& s, const Vec& lambda) {
  if (lambda.size() != 2 * s.n)
    throw std::invalid_argument("char_function: lambda length must be 2n");
  const Mat omega = symplectic_form(s.n);
  const Vec ol = omega.transpose() * lambda;
  const double quad = ol.dot(s.V * ol);
  const double phase = (omega * s.d0).dot(lambda);
  return std::exp(std::complex<double>(-0.5 * quad, -phase));
}

double f_thermal(double x) {
  if (x < -kClampEps)
    throw std::domain_error("f_thermal: argument below the roundoff clamp");
  if (x <= 0.0) return 0.0;
  return (x + 1.0) * std::log2(x + 1.0) - x * std::log2(x);
}

Vec mean_photon_numbers(const GaussianState& s) {
  Vec nbar(s.n);
  for (int j = 0; j < s.n; ++j) {
    const double v = 0.25 * (s.V(2 * j, 2 * j) + s.V(2 * j + 1, 2 * j + 1) +
                             s.d0(2 * j) * s.d0(2 * j) + s.d0(2 * j + 1) * s.d0(2 * j + 1) -
                             2.0);
    nbar(j) = std::max(0.0, v);
  }
  return nbar;
}

double entropy(const GaussianState& s) {
  double sum = 0.0;
  for (double nu : symplectic_eigenvalues(s.V)) {
    if (nu < 1.0 && nu >= 1.0 - kNuClamp) nu = 1.0;
    sum += f_thermal(0.5 * (nu - 1.0));
  }
  return sum;
}

double cr_state(const GaussianState& s) {
  const Vec nbar = mean_photon_numbers(s);
  double sum = 0.0;
  for (int j = 0; j < s.n; ++j) sum += f_thermal(nbar(j));
  return sum - entropy(s);
}

GaussianState tensor_states(const GaussianState& a, const GaussianState& b) {
  const int n = a.n + b.n;
  Mat V = Mat::Zero(2 * n, 2 * n);
  V.topLeftCorner(2 * a.n, 2 * a.n) = a.V;
  V.bottomRightCorner(2 * b.n, 2 * b.n) = b.V;
  Vec d0(2 * n);
  d0 << a.d0, b.d0;
  return {n, std::move(V), std::move(d0)};
}

}  // namespace gausscoh
