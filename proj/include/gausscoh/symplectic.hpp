#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gausscoh {

using Mat = Eigen::MatrixXd;
using Mat2 = Eigen::Matrix2d;
using Vec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;

inline constexpr double kDefaultTol = 1e-9;

/// Single-mode symplectic form, omega = [[0,1],[-1,0]].
Mat2 mode_symplectic_form();

/// Block-diagonal symplectic form Omega for n modes (2n x 2n).
Mat symplectic_form(int n);

/// Per-mode parity matrix Sigma_n = diag(1,-1) repeated n times.
Mat parity_form(int n);

/// Proper rotation by theta.
Mat2 rotation2(double theta);

/// Reflection: rotation composed with diag(1,-1). Together with rotation2
/// this exhausts the 2x2 real orthogonal matrices.
Mat2 reflection2(double theta);

struct PsdReport {
  bool psd = false;
  double min_eigenvalue = 0.0;
  double scale = 1.0;  // spectral norm used for the relative threshold
};

/// Positive-semidefiniteness of the Hermitian matrix R + iS, where R is real
/// symmetric and S real antisymmetric. The test is relative: the matrix
/// passes when its minimum eigenvalue is >= -tol * max(1, ||R + iS||_2).
/// Throws std::invalid_argument on shape mismatch or when R/S fail their
/// symmetry requirements beyond tol.
PsdReport hermitian_psd(const Mat& R, const Mat& S, double tol = kDefaultTol);

/// Symplectic spectrum of a symmetric 2n x 2n matrix V: the n moduli of the
/// eigenvalues of i*Omega*V, which occur in +/- pairs. Sorted ascending.
/// The input does not have to be a physical covariance matrix, but the
/// moduli must pair up: a pair differing by more than 1e-6 * max(1, value)
/// signals a non-physical or ill-conditioned input and throws
/// std::runtime_error.
std::vector<double> symplectic_eigenvalues(const Mat& V);

struct ScaledOrthogonal {
  double t = 0.0;  // nonnegative scale
  Mat2 unit;       // orthogonal factor, unit * unit^t = I
};

/// Factors B as t * T with t >= 0 and T orthogonal, when B B^t is a
/// nonnegative multiple of the identity within tol. B = 0 yields (0, I).
std::optional<ScaledOrthogonal> scaled_orthogonal_factor(const Mat2& B,
                                                         double tol = kDefaultTol);

/// Decomposition of a 2n x 2n matrix whose 2x2 column blocks each hold a
/// single scaled orthogonal block: column block j carries t[j] * block[j]
/// in row block row[j], zeros elsewhere. Zero column blocks are recorded
/// with t[j] = 0, row[j] = j, block[j] = I.
struct TnStructure {
  int n = 0;
  std::vector<double> t;
  std::vector<Mat2> block;
  std::vector<int> row;        // 0-based row-block index per column block
  std::vector<bool> zero;      // t[j] == 0 markers

  Mat reconstruct() const;
};

/// Classifies T as a member of the scaled-orthogonal block-column family.
/// Returns nullopt if some column block has two nonzero 2x2 blocks or a
/// block that is not orthogonal up to scale; `why`, when given, receives a
/// description of the first offending block.
std::optional<TnStructure> classify_tn(const Mat& T, double tol = kDefaultTol,
                                       std::string* why = nullptr);

/// Noise floor per row block j for a channel whose matrix part has the given
/// structure: |1 - sum_{k : row[k] == j} t_k^2 det(block_k)|.
std::vector<double> thermal_noise_floors(const TnStructure& s);

/// Random symmetric-generator symplectic matrix, S = expm(Omega * H).
Mat random_symplectic(int n, std::uint64_t seed, double scale = 0.25);

/// Random element of the intersection of the orthogonal and symplectic
/// groups (the unitary-group image in interleaved coordinates).
Mat random_orthogonal_symplectic(int n, std::uint64_t seed);

struct TnSampleOptions {
  double zero_prob = 0.1;      // chance a column block is empty
  double t_min = 0.2;
  double t_max = 1.5;
  bool reflections = true;     // allow det = -1 blocks
  bool permutation_rows = false;  // force the row map to be a bijection
  bool unit_scales = false;       // force t_j = 1
};

TnStructure random_tn_structure(int n, std::uint64_t seed,
                                const TnSampleOptions& opts = {});

}  // namespace gausscoh
