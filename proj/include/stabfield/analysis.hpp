// Copyright 2026 The stabfield Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stabfield/ensemble.hpp"
#include "stabfield/errors.hpp"
#include "stabfield/evolution.hpp"
#include "stabfield/noise.hpp"

namespace stabfield {

/// Averaging interval [t0, t1] in hbar/gap.
struct Window {
  double t0 = 0.0;
  double t1 = 2.0;
  std::string name;

  static Window short_window() { return {0.0, 2.0, "short"}; }
  static Window long_window() { return {0.0, 6.0, "long"}; }

  /// "short", "long", or "T0:T1".
  static Window parse(const std::string& text) {
    if (text == "short") return short_window();
    if (text == "long") return long_window();
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
      try {
        Window w{std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1)), text};
        if (w.t1 > w.t0 && w.t0 >= 0.0) return w;
      } catch (const std::exception&) {
      }
    }
    throw ConfigError("window '" + text + "' is not \"short\", \"long\" or \"T0:T1\" with T1 > T0 >= 0");
  }
};

/// Threshold or crossing search that the data cannot satisfy.
class ThresholdError : public NumericError {
 public:
  using NumericError::NumericError;
};

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

/// Mean and sample standard deviation (n - 1 denominator; 0 for n < 2).
inline MeanStd mean_std(const std::vector<double>& v) {
  MeanStd r;
  if (v.empty()) return r;
  for (double x : v) r.mean += x;
  r.mean /= static_cast<double>(v.size());
  if (v.size() > 1) {
    double ss = 0.0;
    for (double x : v) ss += (x - r.mean) * (x - r.mean);
    r.std = std::sqrt(ss / static_cast<double>(v.size() - 1));
  }
  return r;
}

/// (1 / (t1 - t0)) * integral of the piecewise-linear interpolant of F over
/// the window, i.e. the trapezoid rule with the ends clipped to the window.
inline double time_average(const FidelityTrace& trace, const Window& window) {
  const auto& t = trace.times;
  const auto& f = trace.fidelity;
  if (!(window.t1 > window.t0)) throw ThresholdError("time_average: empty window");
  if (t.size() < 2) throw ThresholdError("time_average: trace has fewer than two points");
  const double eps = 1e-9 * std::max(1.0, window.t1);
  if (window.t0 < t.front() - eps || window.t1 > t.back() + eps) {
    throw ThresholdError("time_average: window [" + std::to_string(window.t0) + ", " +
                         std::to_string(window.t1) + "] exceeds the recorded range [" +
                         std::to_string(t.front()) + ", " + std::to_string(t.back()) + "]");
  }
  const double lo = std::max(window.t0, t.front());
  const double hi = std::min(window.t1, t.back());
  std::size_t inside = 0;
  for (double ti : t) inside += (ti >= lo - eps && ti <= hi + eps) ? 1 : 0;
  if (inside < 2) throw ThresholdError("time_average: fewer than two recorded points in the window");

  double integral = 0.0;
  for (std::size_t k = 0; k + 1 < t.size(); ++k) {
    const double a = std::max(t[k], lo);
    const double b = std::min(t[k + 1], hi);
    if (!(b > a)) continue;
    const double slope = (f[k + 1] - f[k]) / (t[k + 1] - t[k]);
    const double fa = f[k] + slope * (a - t[k]);
    const double fb = f[k] + slope * (b - t[k]);
    integral += 0.5 * (fa + fb) * (b - a);
  }
  return integral / (window.t1 - window.t0);
}

struct SweepPoint {
  double delta = 0.0;
  double mean_avg_fidelity = 0.0;
  double std_avg_fidelity = 0.0;
  std::size_t n_samples = 0;
  std::vector<double> per_sample;  // windowed average fidelity of each sample
};

namespace detail {

inline void require_ascending(const std::vector<double>& grid, const char* what) {
  if (grid.empty()) throw ConfigError(std::string(what) + ": empty grid");
  for (std::size_t k = 1; k < grid.size(); ++k) {
    if (!(grid[k] > grid[k - 1])) throw ConfigError(std::string(what) + ": grid must be strictly ascending");
  }
}

inline double max_window_end(const std::vector<Window>& windows) {
  double t = 0.0;
  for (const auto& w : windows) t = std::max(t, w.t1);
  return t;
}

}  // namespace detail

/// For each delta, sets g_ave = h_ave = omega_x_ave = omega_z_ave = delta and
/// reduces the ensemble to windowed average fidelities. Returns one sweep per
/// window: result[w][k] belongs to windows[w] and grid[k]. The integration
/// horizon is cut to the latest window end.
inline std::vector<std::vector<SweepPoint>> delta_sweep(const StabilizerModel& model,
                                                        const NoiseParams& params_template,
                                                        const std::vector<double>& grid,
                                                        const std::vector<Window>& windows,
                                                        EvolutionConfig config, std::size_t jobs = 1) {
  detail::require_ascending(grid, "delta_sweep");
  if (windows.empty()) throw ConfigError("delta_sweep: no windows");
  config.t_max = detail::max_window_end(windows);
  config.validate();
  const std::size_t ns = params_template.n_samples;
  const TraceRunner runner(model);
  const auto mask = DefectMask::all(model.n_qubits());

  // values[(k * ns + i) * nw + w]
  std::vector<double> values(grid.size() * ns * windows.size());
  parallel_for(grid.size() * ns, jobs, [&](std::size_t job) {
    const std::size_t k = job / ns, i = job % ns;
    NoiseParams p = params_template;
    p.g_ave = p.h_ave = p.omega_x_ave = p.omega_z_ave = grid[k];
    const auto trace = runner.run(sample_fields(p, mask, i), config, i);
    for (std::size_t w = 0; w < windows.size(); ++w) {
      values[job * windows.size() + w] = time_average(trace, windows[w]);
    }
  });

  std::vector<std::vector<SweepPoint>> out(windows.size());
  for (std::size_t w = 0; w < windows.size(); ++w) {
    for (std::size_t k = 0; k < grid.size(); ++k) {
      SweepPoint pt;
      pt.delta = grid[k];
      pt.n_samples = ns;
      for (std::size_t i = 0; i < ns; ++i) pt.per_sample.push_back(values[(k * ns + i) * windows.size() + w]);
      const auto ms = mean_std(pt.per_sample);
      pt.mean_avg_fidelity = ms.mean;
      pt.std_avg_fidelity = ms.std;
      out[w].push_back(std::move(pt));
    }
  }
  return out;
}

inline std::vector<SweepPoint> delta_sweep(const StabilizerModel& model, const NoiseParams& params_template,
                                           const std::vector<double>& grid, const Window& window,
                                           const EvolutionConfig& config, std::size_t jobs = 1) {
  return delta_sweep(model, params_template, grid, std::vector<Window>{window}, config, jobs).front();
}

/// First downward crossing of `level` along (x, y), linearly interpolated.
/// nullopt when y starts below the level or never drops below it.
inline std::optional<double> first_crossing(const std::vector<double>& x, const std::vector<double>& y,
                                            double level) {
  if (x.empty() || y.front() < level) return std::nullopt;
  for (std::size_t k = 1; k < x.size(); ++k) {
    if (y[k] < level) {
      return x[k - 1] + (level - y[k - 1]) * (x[k] - x[k - 1]) / (y[k] - y[k - 1]);
    }
  }
  return std::nullopt;
}

struct Threshold {
  double level = 0.99;
  double delta_star = 0.0;
  double delta_star_std = 0.0;
  std::size_t n_crossed = 0;   // samples whose own curve crosses the level
  std::size_t n_excluded = 0;  // samples that never cross (left out of the std)
};

/// delta at which the mean curve falls to `level`; the spread comes from the
/// per-sample crossings.
inline Threshold threshold_delta(const std::vector<SweepPoint>& sweep, double level = 0.99) {
  if (sweep.empty()) throw ThresholdError("threshold_delta: empty sweep");
  std::vector<double> x, y;
  for (const auto& p : sweep) {
    x.push_back(p.delta);
    y.push_back(p.mean_avg_fidelity);
  }
  if (y.front() < level) {
    throw ThresholdError("threshold_delta: mean fidelity " + std::to_string(y.front()) +
                         " at the first grid point is already below " + std::to_string(level) +
                         "; extend the delta grid toward zero");
  }
  const auto star = first_crossing(x, y, level);
  if (!star) {
    throw ThresholdError("threshold_delta: mean fidelity never drops below " + std::to_string(level) +
                         "; extend the delta grid to larger values");
  }
  Threshold th;
  th.level = level;
  th.delta_star = *star;
  const std::size_t ns = sweep.front().per_sample.size();
  std::vector<double> crossings;
  for (std::size_t i = 0; i < ns; ++i) {
    std::vector<double> yi;
    for (const auto& p : sweep) yi.push_back(p.per_sample.at(i));
    if (auto c = first_crossing(x, yi, level)) {
      crossings.push_back(*c);
    } else {
      ++th.n_excluded;
    }
  }
  th.n_crossed = crossings.size();
  th.delta_star_std = mean_std(crossings).std;
  return th;
}

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::optional<double> x_intercept;  // -intercept / slope, when slope != 0
  std::optional<double> n_max;        // x_intercept, only when slope < 0
  std::vector<std::pair<double, double>> points;
  std::vector<double> residuals;
  std::string diagnostic;
};

/// Ordinary least squares of threshold delta on qubit count.
inline LinearFit fit_nmax(const std::vector<std::pair<double, double>>& points) {
  std::vector<double> xs;
  for (const auto& p : points) xs.push_back(p.first);
  std::sort(xs.begin(), xs.end());
  if (std::unique(xs.begin(), xs.end()) - xs.begin() < 2) {
    throw ThresholdError("fit_nmax: need at least two distinct qubit counts");
  }
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : points) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(points.size());
  my /= static_cast<double>(points.size());
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  LinearFit fit;
  fit.points = points;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (const auto& [x, y] : points) fit.residuals.push_back(y - (fit.slope * x + fit.intercept));
  if (fit.slope != 0.0) fit.x_intercept = -fit.intercept / fit.slope;
  if (fit.slope < 0.0) {
    fit.n_max = fit.x_intercept;
  } else {
    fit.diagnostic = "slope is not negative; the threshold does not shrink with N, no N_max extrapolation";
  }
  return fit;
}

/// Pearson correlation coefficient; NaN when either series is constant.
inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw ThresholdError("pearson: need two equal-length series");
  const auto mx = mean_std(x).mean, my = mean_std(y).mean;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

struct DefectPoint {
  std::size_t n_defect = 0;
  double mean_infidelity = 0.0;
  double std_infidelity = 0.0;
  std::size_t n_samples = 0;
  std::vector<double> per_sample;
};

/// Infidelity 1 - <F>_window versus the number of fluctuating sites. Sample i
/// at size k draws its own uniformly random k-subset; field draws per qubit
/// are shared across sizes.
inline std::vector<DefectPoint> defect_sweep(const StabilizerModel& model, const NoiseParams& params,
                                             const Window& window, const std::vector<std::size_t>& grid,
                                             EvolutionConfig config, std::size_t jobs = 1) {
  params.validate();
  for (auto k : grid) {
    if (k > model.n_qubits()) {
      throw ConfigError("defect_sweep: N_defect " + std::to_string(k) + " exceeds " +
                        std::to_string(model.n_qubits()) + " qubits");
    }
  }
  config.t_max = window.t1;
  config.validate();
  const std::size_t ns = params.n_samples;
  const TraceRunner runner(model);
  std::vector<double> infid(grid.size() * ns);
  parallel_for(grid.size() * ns, jobs, [&](std::size_t job) {
    const std::size_t k = job / ns, i = job % ns;
    const auto mask = random_defect_mask(model.n_qubits(), grid[k], params.seed, i);
    const auto trace = runner.run(sample_fields(params, mask, i), config, i);
    infid[job] = 1.0 - time_average(trace, window);
  });
  std::vector<DefectPoint> out;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    DefectPoint pt;
    pt.n_defect = grid[k];
    pt.n_samples = ns;
    pt.per_sample.assign(infid.begin() + static_cast<std::ptrdiff_t>(k * ns),
                         infid.begin() + static_cast<std::ptrdiff_t>((k + 1) * ns));
    const auto ms = mean_std(pt.per_sample);
    pt.mean_infidelity = ms.mean;
    pt.std_infidelity = ms.std;
    out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace stabfield
