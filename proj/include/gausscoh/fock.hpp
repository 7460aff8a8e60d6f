#pragma once

#include "gausscoh/states.hpp"

#include <complex>

namespace gausscoh {

/// Cutoff-truncated single-mode density matrix in the number basis. The
/// truncation loss 1 - tr(rho) is carried alongside and never hidden.
struct FockDensityMatrix {
  int cutoff = 0;
  CMat rho;
  double trace_deficit = 0.0;
};

/// Thermal state truncated at `cutoff`: diagonal entries
/// (2/(nu+1)) * ((nu-1)/(nu+1))^k. Rejects nu < 1 or cutoff < 2.
FockDensityMatrix thermal_fock(double nu, int cutoff);

/// Truncated displacement operator exp(lambda a^dag - conj(lambda) a),
/// computed as a dense matrix exponential. Approximately unitary away from
/// the cutoff edge.
CMat displacement_fock(std::complex<double> lambda, int cutoff);

/// Number-basis matrix of a single-mode displaced thermal state
/// (V = nu*I, d0): D(d0/2) rho_th(nu) D(d0/2)^dag. States outside that
/// family are rejected; this is the oracle's supported scope.
FockDensityMatrix gaussian_to_fock(const GaussianState& s, int cutoff);

/// tr(rho D(lambda)) in the truncated space.
std::complex<double> char_function_numeric(const FockDensityMatrix& rho,
                                           std::complex<double> lambda);

/// Relative entropy tr(rho log2 rho) - tr(rho log2 sigma) in bits via
/// eigendecomposition of both arguments; eigenvalues below 1e-14 count as
/// zero and 0*log(0) = 0. Returns +infinity when rho has weight on the
/// kernel of sigma.
double relative_entropy_numeric(const FockDensityMatrix& rho,
                                const FockDensityMatrix& sigma);

struct FockCrResult {
  double value = 0.0;   // bits
  double nu_opt = 1.0;  // minimizing thermal parameter
  double trace_deficit = 0.0;
  bool cutoff_insufficient = false;  // trace_deficit > 1e-6
};

/// Brute-force coherence of a displaced thermal state: one-dimensional
/// golden-section minimization of the relative entropy to thermal states
/// over nu >= 1. Independent of the closed-form path.
FockCrResult cr_state_numeric(const GaussianState& s, int cutoff);

/// Smallest cutoff keeping the thermal tail ((nu-1)/(nu+1))^cutoff below
/// `tail`, at least `floor_dim`.
int recommended_cutoff(double nu, double tail = 1e-10, int floor_dim = 60);

}  // namespace gausscoh
