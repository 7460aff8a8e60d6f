#include "gausscoh/fock.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gausscoh {

namespace {
constexpr double kEigZero = 1e-14;
constexpr double kSupportTol = 1e-10;

double trace_real(const CMat& m) { return m.trace().real(); }
}  // namespace

FockDensityMatrix thermal_fock(double nu, int cutoff) {
  if (nu < 1.0) throw std::invalid_argument("thermal_fock: nu must be >= 1");
  if (cutoff < 2) throw std::invalid_argument("thermal_fock: cutoff must be >= 2");
  const double q = (nu - 1.0) / (nu + 1.0);
  const double head = 2.0 / (nu + 1.0);
  FockDensityMatrix out;
  out.cutoff = cutoff;
  out.rho = CMat::Zero(cutoff, cutoff);
  double w = head;
  double tr = 0.0;
  for (int k = 0; k < cutoff; ++k) {
    out.rho(k, k) = w;
    tr += w;
    w *= q;
  }
  out.trace_deficit = std::max(0.0, 1.0 - tr);
  return out;
}

CMat displacement_fock(std::complex<double> lambda, int cutoff) {
  if (cutoff < 2) throw std::invalid_argument("displacement_fock: cutoff must be >= 2");
  CMat gen = CMat::Zero(cutoff, cutoff);
  for (int k = 1; k < cutoff; ++k) {
    const double root = std::sqrt(static_cast<double>(k));
    gen(k, k - 1) = lambda * root;              // lambda a^dag
    gen(k - 1, k) = -std::conj(lambda) * root;  // -conj(lambda) a
  }
  return gen.exp();
}

FockDensityMatrix gaussian_to_fock(const GaussianState& s, int cutoff) {
  if (s.n != 1)
    throw std::invalid_argument("gaussian_to_fock: only single-mode states are supported");
  const double nu = 0.5 * (s.V(0, 0) + s.V(1, 1));
  const double dev = std::max({std::abs(s.V(0, 0) - nu), std::abs(s.V(1, 1) - nu),
                               std::abs(s.V(0, 1)), std::abs(s.V(1, 0))});
  if (dev > 1e-9 * std::max(1.0, nu))
    throw std::invalid_argument(
        "gaussian_to_fock: V is not a thermal multiple of the identity; outside "
        "the oracle's displaced-thermal scope");

  const std::complex<double> alpha(0.5 * s.d0(0), 0.5 * s.d0(1));
  FockDensityMatrix out = thermal_fock(nu, cutoff);
  if (std::abs(alpha) > 0.0) {
    const CMat D = displacement_fock(alpha, cutoff);
    out.rho = D * out.rho * D.adjoint();
    out.trace_deficit = std::max(0.0, 1.0 - trace_real(out.rho));
  }
  return out;
}

std::complex<double> char_function_numeric(const FockDensityMatrix& rho,
                                           std::complex<double> lambda) {
  return (rho.rho * displacement_fock(lambda, rho.cutoff)).trace();
}

double relative_entropy_numeric(const FockDensityMatrix& rho,
                                const FockDensityMatrix& sigma) {
  if (rho.cutoff != sigma.cutoff)
    throw std::invalid_argument("relative_entropy_numeric: cutoff mismatch");

  Eigen::SelfAdjointEigenSolver<CMat> er(rho.rho);
  Eigen::SelfAdjointEigenSolver<CMat> es(sigma.rho);
  if (er.info() != Eigen::Success || es.info() != Eigen::Success)
    throw std::runtime_error("relative_entropy_numeric: eigendecomposition failed");

  double term1 = 0.0;
  for (int i = 0; i < rho.cutoff; ++i) {
    const double p = er.eigenvalues()(i);
    if (p > kEigZero) term1 += p * std::log2(p);
  }

  double term2 = 0.0;
  double kernel_weight = 0.0;
  for (int k = 0; k < sigma.cutoff; ++k) {
    const double s = es.eigenvalues()(k);
    const double w = (es.eigenvectors().col(k).adjoint() * rho.rho *
                      es.eigenvectors().col(k))(0).real();
    if (s > kEigZero) {
      term2 += w * std::log2(s);
    } else {
      kernel_weight += std::max(0.0, w);
    }
  }
  if (kernel_weight > kSupportTol) return std::numeric_limits<double>::infinity();
  return term1 - term2;
}

FockCrResult cr_state_numeric(const GaussianState& s, int cutoff) {
  const FockDensityMatrix rho = gaussian_to_fock(s, cutoff);

  // tr(rho log2 rho) once; thermal comparisons then only need the diagonal
  // of rho in the number basis.
  Eigen::SelfAdjointEigenSolver<CMat> er(rho.rho);
  if (er.info() != Eigen::Success)
    throw std::runtime_error("cr_state_numeric: eigendecomposition failed");
  double term1 = 0.0;
  for (int i = 0; i < cutoff; ++i) {
    const double p = er.eigenvalues()(i);
    if (p > kEigZero) term1 += p * std::log2(p);
  }
  Vec diag(cutoff);
  for (int k = 0; k < cutoff; ++k) diag(k) = rho.rho(k, k).real();

  auto objective = [&](double nu) {
    const double q = (nu - 1.0) / (nu + 1.0);
    const double head = 2.0 / (nu + 1.0);
    double term2 = 0.0;
    double kernel_weight = 0.0;
    double w = head;
    double logw = std::log2(head);
    const double logq = q > 0.0 ? std::log2(q) : 0.0;
    for (int k = 0; k < cutoff; ++k) {
      if (w > kEigZero) {
        term2 += diag(k) * logw;
      } else {
        kernel_weight += std::max(0.0, diag(k));
      }
      w *= q;
      logw += logq;
    }
    if (kernel_weight > kSupportTol) return std::numeric_limits<double>::infinity();
    return term1 - term2;
  };

  // The minimizing thermal parameter for a displaced thermal state sits at
  // 2*nbar + 1; bracket generously above it.
  const double nbar = mean_photon_numbers(s)(0);
  double a = 1.0;
  double b = std::max(9.0, 8.0 * nbar + 5.0);
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = objective(c);
  double fd = objective(d);
  double best_nu = fc <= fd ? c : d;
  double best_val = std::min(fc, fd);
  while (b - a > 1e-8 * std::max(1.0, b)) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = objective(d);
    }
    if (fc < best_val) { best_val = fc; best_nu = c; }
    if (fd < best_val) { best_val = fd; best_nu = d; }
  }

  FockCrResult out;
  out.value = best_val;
  out.nu_opt = best_nu;
  out.trace_deficit = rho.trace_deficit;
  out.cutoff_insufficient = rho.trace_deficit > 1e-6;
  return out;
}

int recommended_cutoff(double nu, double tail, int floor_dim) {
  if (nu < 1.0) throw std::invalid_argument("recommended_cutoff: nu must be >= 1");
  const double q = (nu - 1.0) / (nu + 1.0);
  if (q <= 0.0) return floor_dim;
  const int k = static_cast<int>(std::ceil(std::log(tail) / std::log(q)));
  return std::max(floor_dim, k);
}

}  // namespace gausscoh
