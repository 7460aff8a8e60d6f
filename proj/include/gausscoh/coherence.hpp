#pragma once

#include "gausscoh/superchannels.hpp"

#include <functional>
#include <optional>

namespace gausscoh {

enum class SearchStatus { converged, divergent, boundary_max };

const char* to_string(SearchStatus s);

struct OptimizerOptions {
  double nu_max = 1e3;             // search box upper edge per coordinate
  int grid_points_per_decade = 8;  // log-spaced seed grid density
  double refine_tol = 1e-9;        // golden-section bracket / sweep stop
  double divergence_growth_eps = 1e-6;
  bool keep_trace = false;
  long max_evaluations = 500000;
};

struct TracePoint {
  Vec nu;
  double value = 0.0;
};

/// Outcome of the thermal-input supremum. `value` is absent when the search
/// kept growing through two box doublings (divergent); for boundary_max it
/// holds the best value inside the searched box.
struct CoherenceResult {
  std::optional<double> value;
  SearchStatus status = SearchStatus::converged;
  Vec argmax_nu;
  long evaluations = 0;
  std::vector<TracePoint> trace;
};

/// Channel coherence: supremum of the output-state coherence over thermal
/// inputs with nu in [1, inf)^n, truncated at opts.nu_max. Log-spaced grid
/// plus per-coordinate golden-section refinement; the box is doubled twice
/// when the incumbent sits on its edge, and sustained growth is reported as
/// divergent rather than as a converged value. Deterministic: identical
/// inputs and options give bit-identical results.
CoherenceResult cr_channel(const GaussianChannel& c, const OptimizerOptions& opts = {});

namespace detail {
/// Search protocol behind cr_channel, on an arbitrary objective over
/// [1, nu_max]^n. Exposed so the status and tie-breaking rules are testable
/// in isolation.
CoherenceResult maximize_over_thermal_box(const std::function<double(const Vec&)>& g,
                                          int n, const OptimizerOptions& opts);
}  // namespace detail

/// Closed form for displacement channels: sum_j f(|lambda_j|^2).
double cr_displacement_analytic(const std::vector<std::complex<double>>& lambda);

/// Closed form for constant channels: the coherence of the fixed output.
double cr_constant_analytic(const GaussianState& sigma);

struct MonotonicityReport {
  CoherenceResult lhs;  // coherence after the superchannel
  CoherenceResult rhs;  // coherence of the original channel
  bool comparable = false;
  bool holds = false;
};

/// Checks C(sc(c)) <= C(c) + 1e-7. Only incoherent superchannels are
/// admissible; anything else throws. Two divergent sides count as holding.
MonotonicityReport check_monotonicity(const GaussianChannel& c,
                                      const GaussianSuperchannel& sc,
                                      const OptimizerOptions& opts = {});

struct AdditivityReport {
  CoherenceResult joint, first, second;
  bool comparable = false;
  double gap = 0.0;
  bool holds = false;
};

/// Checks C(c1 (x) c2) = C(c1) + C(c2) within 1e-6; divergent runs make the
/// report incomparable instead of failing it.
AdditivityReport check_additivity(const GaussianChannel& c1, const GaussianChannel& c2,
                                  const OptimizerOptions& opts = {});

}  // namespace gausscoh
