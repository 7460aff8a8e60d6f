#pragma once

#include "gausscoh/symplectic.hpp"

#include <complex>

namespace gausscoh {

/// Gaussian state in terms of second and first moments. Entries are
/// dimensionless and vacuum-normalized: the vacuum has V = I, d0 = 0.
/// The displacement is interleaved (x1, y1, ..., xn, yn), and the unitary
/// displacement by a complex amplitude lambda shifts d0 by 2*lambda, so a
/// coherent state of amplitude alpha carries d0 = 2*alpha and has mean
/// photon number |alpha|^2. Many toolkits scale this differently; every
/// closed form in this library assumes the 2*lambda convention.
struct GaussianState {
  int n = 0;
  Mat V;
  Vec d0;
};

GaussianState make_state(Mat V, Vec d0);

struct StateValidity {
  bool symmetric = false;
  double symmetry_error = 0.0;
  PsdReport uncertainty;  // V + i*Omega >= 0
  std::vector<double> nu;
  bool pairing_ok = false;
  std::string detail;

  bool valid() const { return symmetric && uncertainty.psd && pairing_ok; }
};

StateValidity validate_state(const GaussianState& s, double tol = kDefaultTol);

GaussianState vacuum_state(int n);

/// Thermal state with per-mode covariance nu_j * I: V = diag(nu) blocks,
/// d0 = 0. Rejects nu_j < 1.
GaussianState thermal_state(const Vec& nu);

/// Single-mode coherent state of amplitude alpha: V = I, d0 = 2*alpha.
GaussianState coherent_state(std::complex<double> alpha);

/// Thermal test: d0 = 0 and V a direct sum of nu_j * I blocks with
/// nu_j >= 1, all within tol (scaled by the magnitude of V).
bool is_incoherent_state(const GaussianState& s, double tol = 1e-8);

/// Characteristic function chi(lambda) = exp[-1/2 l^t Omega V Omega^t l
/// - i (Omega d0)^t l] at the interleaved real point lambda.
std::complex<double> char_function(const GaussianState& s, const Vec& lambda);

/// f(x) = (x+1) log2(x+1) - x log2(x), the thermal entropy profile, in bits.
/// f(0) = 0 by the limit convention. Inputs in [-1e-9, 0) are clamped to 0;
/// anything lower throws std::domain_error.
double f_thermal(double x);

/// Per-mode mean photon numbers from the diagonal covariance blocks and the
/// displacement pairs, clamped to >= 0.
Vec mean_photon_numbers(const GaussianState& s);

/// Von Neumann entropy in bits, sum of f((nu_j - 1)/2) over the symplectic
/// spectrum. Eigenvalues within 1e-8 below 1 are clamped to 1 first.
double entropy(const GaussianState& s);

/// Relative entropy of coherence in bits:
/// sum_j f(nbar_j) - sum_j f((nu_j - 1)/2). Zero exactly on thermal states.
double cr_state(const GaussianState& s);

GaussianState tensor_states(const GaussianState& a, const GaussianState& b);

}  // namespace gausscoh
