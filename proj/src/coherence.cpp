#include "gausscoh/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace gausscoh {

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::converged: return "converged";
    case SearchStatus::divergent: return "divergent";
    case SearchStatus::boundary_max: return "boundary-max";
  }
  return "unknown";
}

namespace {

constexpr double kInvPhi = 0.6180339887498949;
constexpr double kBoundaryRel = 1e-6;

struct Incumbent {
  double value = -std::numeric_limits<double>::infinity();
  Vec nu;

  // Strictly-better replacement; exact ties keep the lexicographically
  // smaller coordinate vector.
  void offer(double v, const Vec& x) {
    if (v > value) {
      value = v;
      nu = x;
      return;
    }
    if (v == value && nu.size() == x.size()) {
      for (int i = 0; i < x.size(); ++i) {
        if (x(i) < nu(i)) {
          nu = x;
          return;
        }
        if (x(i) > nu(i)) return;
      }
    }
  }
};

class BoxSearch {
 public:
  BoxSearch(std::function<double(const Vec&)> objective, int n,
            const OptimizerOptions& opts, long& evaluations,
            std::vector<TracePoint>* trace)
      : g_(std::move(objective)), n_(n), opts_(opts), evaluations_(evaluations),
        trace_(trace) {}

  Incumbent run(double hi) {
    const std::vector<double> grid = grid_values(hi);
    const double per_axis = static_cast<double>(grid.size());
    if (std::pow(per_axis, n_) > static_cast<double>(opts_.max_evaluations))
      throw std::runtime_error("cr_channel: grid exceeds the evaluation budget; "
                               "lower nu_max or grid_points_per_decade");

    std::vector<Incumbent> starts = grid_scan(grid);
    Incumbent best;
    for (const Incumbent& s : starts) {
      Incumbent refined = refine(s, hi);
      best.offer(refined.value, refined.nu);
    }
    return best;
  }

 private:
  double eval(const Vec& nu) {
    if (evaluations_ >= opts_.max_evaluations)
      throw std::runtime_error("cr_channel: evaluation budget exhausted");
    ++evaluations_;
    const double v = g_(nu);
    if (trace_) trace_->push_back({nu, v});
    return v;
  }

  std::vector<double> grid_values(double hi) const {
    std::vector<double> grid;
    const double step = 1.0 / opts_.grid_points_per_decade;
    for (int i = 0;; ++i) {
      const double v = std::pow(10.0, i * step);
      if (v >= hi) break;
      grid.push_back(v);
    }
    grid.push_back(hi);
    return grid;
  }

  // Full tensor scan in ascending lexicographic order; keeps the three best
  // distinct points as refinement starts.
  std::vector<Incumbent> grid_scan(const std::vector<double>& grid) {
    const int m = static_cast<int>(grid.size());
    std::vector<int> idx(n_, 0);
    Vec x(n_);
    std::vector<Incumbent> top;
    for (;;) {
      for (int j = 0; j < n_; ++j) x(j) = grid[idx[j]];
      const double v = eval(x);
      place_in_top(top, v, x);
      int j = n_ - 1;
      while (j >= 0 && ++idx[j] == m) idx[j--] = 0;
      if (j < 0) break;
    }
    return top;
  }

  static void place_in_top(std::vector<Incumbent>& top, double v, const Vec& x) {
    constexpr size_t kStarts = 3;
    for (Incumbent& inc : top)
      if (inc.value == v && (inc.nu - x).cwiseAbs().maxCoeff() == 0.0) return;
    if (top.size() < kStarts) {
      top.push_back({v, x});
    } else {
      size_t worst = 0;
      for (size_t i = 1; i < top.size(); ++i)
        if (top[i].value < top[worst].value) worst = i;
      if (v <= top[worst].value) return;
      top[worst] = {v, x};
    }
    std::sort(top.begin(), top.end(),
              [](const Incumbent& a, const Incumbent& b) { return a.value > b.value; });
  }

  // Two ascending-coordinate sweeps of golden-section line maximization,
  // bracketing each coordinate one grid ratio around its current value.
  Incumbent refine(const Incumbent& start, double hi) {
    const double ratio = std::pow(10.0, 1.0 / opts_.grid_points_per_decade);
    Incumbent cur = start;
    for (int sweep = 0; sweep < 2; ++sweep) {
      const double before = cur.value;
      for (int j = 0; j < n_; ++j) {
        const double lo_j = std::max(1.0, cur.nu(j) / ratio);
        const double hi_j = std::min(hi, cur.nu(j) * ratio);
        cur = line_max(cur, j, lo_j, hi_j);
      }
      if (cur.value - before < opts_.refine_tol) break;
    }
    return cur;
  }

  Incumbent line_max(const Incumbent& cur, int coord, double a, double b) {
    Incumbent best = cur;
    Vec x = cur.nu;
    auto probe = [&](double t) {
      x(coord) = t;
      const double v = eval(x);
      best.offer(v, x);
      return v;
    };
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = probe(c);
    double fd = probe(d);
    while (b - a > opts_.refine_tol * std::max(1.0, b)) {
      if (fc > fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - kInvPhi * (b - a);
        fc = probe(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + kInvPhi * (b - a);
        fd = probe(d);
      }
    }
    return best;
  }

  std::function<double(const Vec&)> g_;
  int n_;
  const OptimizerOptions& opts_;
  long& evaluations_;
  std::vector<TracePoint>* trace_;
};

bool at_boundary(const Vec& nu, double hi) {
  for (int j = 0; j < nu.size(); ++j)
    if (nu(j) >= hi * (1.0 - kBoundaryRel)) return true;
  return false;
}

}  // namespace

namespace detail {

CoherenceResult maximize_over_thermal_box(const std::function<double(const Vec&)>& g,
                                          int n, const OptimizerOptions& opts) {
  if (opts.nu_max <= 1.0 || opts.grid_points_per_decade < 1 || opts.refine_tol <= 0.0 ||
      opts.divergence_growth_eps <= 0.0)
    throw std::invalid_argument("cr_channel: malformed optimizer options");

  CoherenceResult res;
  std::vector<TracePoint>* trace = opts.keep_trace ? &res.trace : nullptr;
  BoxSearch search(g, n, opts, res.evaluations, trace);

  std::vector<Incumbent> runs;
  std::vector<double> boxes;
  double hi = opts.nu_max;
  runs.push_back(search.run(hi));
  boxes.push_back(hi);
  // The box is doubled (twice at most) while the incumbent presses on its
  // edge; persistent growth across both doublings marks the supremum as
  // numerically divergent.
  for (int k = 0; k < 2 && at_boundary(runs.back().nu, boxes.back()); ++k) {
    hi *= 2.0;
    runs.push_back(search.run(hi));
    boxes.push_back(hi);
  }

  Incumbent best;
  for (const Incumbent& r : runs) best.offer(r.value, r.nu);
  res.argmax_nu = best.nu;

  if (runs.size() == 3 &&
      runs[1].value - runs[0].value > opts.divergence_growth_eps &&
      runs[2].value - runs[1].value > opts.divergence_growth_eps) {
    res.status = SearchStatus::divergent;
    return res;
  }
  res.value = best.value;
  res.status = at_boundary(best.nu, boxes.back()) ? SearchStatus::boundary_max
                                                  : SearchStatus::converged;
  return res;
}

}  // namespace detail

CoherenceResult cr_channel(const GaussianChannel& c, const OptimizerOptions& opts) {
  if (!validate_channel(c).valid())
    throw std::invalid_argument("cr_channel: channel fails complete positivity");
  return detail::maximize_over_thermal_box(
      [&c](const Vec& nu) { return cr_state(apply_channel(c, thermal_state(nu))); }, c.n,
      opts);
}

double cr_displacement_analytic(const std::vector<std::complex<double>>& lambda) {
  double sum = 0.0;
  for (const auto& l : lambda) sum += f_thermal(std::norm(l));
  return sum;
}

double cr_constant_analytic(const GaussianState& sigma) {
  return cr_state(sigma);
}

MonotonicityReport check_monotonicity(const GaussianChannel& c,
                                      const GaussianSuperchannel& sc,
                                      const OptimizerOptions& opts) {
  if (!is_incoherent_superchannel(sc).incoherent)
    throw std::invalid_argument(
        "check_monotonicity: superchannel is not incoherent; the bound only "
        "constrains incoherent superchannels");

  MonotonicityReport rep;
  rep.lhs = cr_channel(apply_superchannel(sc, c), opts);
  rep.rhs = cr_channel(c, opts);
  const bool both_divergent = rep.lhs.status == SearchStatus::divergent &&
                              rep.rhs.status == SearchStatus::divergent;
  rep.comparable = rep.lhs.value.has_value() && rep.rhs.value.has_value();
  rep.holds = both_divergent ||
              (rep.comparable && *rep.lhs.value <= *rep.rhs.value + 1e-7);
  return rep;
}

AdditivityReport check_additivity(const GaussianChannel& c1, const GaussianChannel& c2,
                                  const OptimizerOptions& opts) {
  AdditivityReport rep;
  rep.joint = cr_channel(tensor_channels(c1, c2), opts);
  rep.first = cr_channel(c1, opts);
  rep.second = cr_channel(c2, opts);
  rep.comparable = rep.joint.value.has_value() && rep.first.value.has_value() &&
                   rep.second.value.has_value();
  if (rep.comparable) {
    rep.gap = std::abs(*rep.joint.value - *rep.first.value - *rep.second.value);
    rep.holds = rep.gap <= 1e-6;
  }
  return rep;
}

}  // namespace gausscoh
