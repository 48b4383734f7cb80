#pragma once

// Empirical statistics over Frobenius place samples: normalized moment
// estimates with standard errors, the exact-integer a1 = 0 atom frequency,
// fixed-range histograms, and moment-distance classification against the
// exact catalog tables.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stg2/catalog.hpp"
#include "stg2/counting.hpp"
#include "stg2/moments.hpp"

namespace stg2 {

// Stable shortest round-trip formatting, shared by every CSV/JSON emitter.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  double back = 0.0;
  std::sscanf(buf, "%lf", &back);
  if (back == v) {
    for (int prec = 1; prec < 17; ++prec) {
      char probe[64];
      std::snprintf(probe, sizeof probe, "%.*g", prec, v);
      std::sscanf(probe, "%lf", &back);
      if (back == v) return probe;
    }
  }
  return buf;
}

struct Histogram {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<u64> counts;
};

inline Histogram make_histogram(double lo, double hi, int bins) {
  return Histogram{lo, hi, std::vector<u64>(size_t(bins), 0)};
}

inline void histogram_add(Histogram& h, double x) {
  const int bins = int(h.counts.size());
  int idx = int(std::floor((x - h.lo) / (h.hi - h.lo) * double(bins)));
  idx = std::clamp(idx, 0, bins - 1);
  ++h.counts[size_t(idx)];
}

inline constexpr int kStatsHistogramBins = 40;

struct EmpiricalStats {
  size_t n = 0;
  int degree = 6;
  std::map<std::pair<int, int>, double> moments;     // means of a1n^i a2n^j
  std::map<std::pair<int, int>, double> std_errors;  // sample stddev / sqrt(n)
  size_t atom_count = 0;                             // places with integer a1 = 0
  double atom_freq = 0.0;
  Histogram hist_a1;  // over [-4, 4]
  Histogram hist_a2;  // over [-2, 6]
};

namespace detail {

struct StatPoint {
  double a1n = 0.0;
  double a2n = 0.0;
  bool atom = false;
};

inline EmpiricalStats stats_over_points(const std::vector<StatPoint>& points, int degree) {
  if (points.empty()) throw ConfigError("empirical moments need at least one sample");
  if (degree < 2 || degree > 8) throw ConfigError("moment degree must lie in [2, 8]");
  EmpiricalStats stats;
  stats.n = points.size();
  stats.degree = degree;
  stats.hist_a1 = make_histogram(-4.0, 4.0, kStatsHistogramBins);
  stats.hist_a2 = make_histogram(-2.0, 6.0, kStatsHistogramBins);
  for (const StatPoint& pt : points) {
    if (pt.a1n < -4.0 - 1e-9 || pt.a1n > 4.0 + 1e-9 || pt.a2n < -2.0 - 1e-9 ||
        pt.a2n > 6.0 + 1e-9)
      throw InvariantError("normalized class outside the Weil range");
    if (pt.atom) ++stats.atom_count;
    histogram_add(stats.hist_a1, pt.a1n);
    histogram_add(stats.hist_a2, pt.a2n);
  }
  stats.atom_freq = double(stats.atom_count) / double(stats.n);

  std::vector<double> pow1(size_t(degree) + 1), pow2(size_t(degree) + 1);
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; i + j <= degree; ++j) {
      stats.moments[{i, j}] = 0.0;
      stats.std_errors[{i, j}] = 0.0;
    }
  std::map<std::pair<int, int>, double> sumsq;
  for (const StatPoint& pt : points) {
    pow1[0] = 1.0;
    pow2[0] = 1.0;
    for (int t = 1; t <= degree; ++t) {
      pow1[size_t(t)] = pow1[size_t(t - 1)] * pt.a1n;
      pow2[size_t(t)] = pow2[size_t(t - 1)] * pt.a2n;
    }
    for (auto& [key, value] : stats.moments) {
      const double x = pow1[size_t(key.first)] * pow2[size_t(key.second)];
      value += x;
      sumsq[key] += x * x;
    }
  }
  const double inv_n = 1.0 / double(stats.n);
  for (auto& [key, value] : stats.moments) {
    value *= inv_n;
    const double var = std::max(0.0, sumsq[key] * inv_n - value * value);
    stats.std_errors[key] = std::sqrt(var * inv_n);
  }
  return stats;
}

}  // namespace detail

// The atom counts places whose integer a1 vanishes exactly, before
// normalization.
inline EmpiricalStats empirical_moments(const std::vector<PlaceSample>& samples,
                                        int degree = 6) {
  std::vector<detail::StatPoint> points;
  points.reserve(samples.size());
  for (const PlaceSample& s : samples)
    points.push_back({s.a1n, s.a2n, s.a1 == 0});
  return detail::stats_over_points(points, degree);
}

// Haar-sample variant; trace-zero components produce a1 = 0.0 exactly.
inline EmpiricalStats empirical_moments(const std::vector<ClassInvariants>& samples,
                                        int degree = 6) {
  std::vector<detail::StatPoint> points;
  points.reserve(samples.size());
  for (const ClassInvariants& s : samples)
    points.push_back({s.a1, s.a2, s.a1 == 0.0});
  return detail::stats_over_points(points, degree);
}

struct GroupDistance {
  std::string group;
  double distance = 0.0;   // factorial-weighted squared moment distance + atom term
  bool atom_flag = false;  // atom frequency off by more than 3 binomial SE
};

struct ClassificationReport {
  int degree = 4;
  size_t n = 0;
  double atom_freq = 0.0;
  std::vector<GroupDistance> ranking;  // ascending distance

  const GroupDistance& best() const { return ranking.front(); }
};

// Distance to group g:
//   sum_{1 <= i+j <= D} (m_hat_ij - t_ij)^2 / (i+j)!
//   + ((atom_hat - mu_g) / sigma)^2,  sigma = max(sqrt(mu_g(1-mu_g)), 1/4) / (2 sqrt N).
// Factorial weights stop combinatorially growing high moments from drowning
// the low ones; the atom term uses a floored binomial scale so degenerate
// masses mu in {0, 1} stay usable.
inline ClassificationReport classify(const EmpiricalStats& stats, int degree = 4) {
  if (degree < 4) throw ConfigError("classification degree must be at least 4");
  if (degree > stats.degree)
    throw ConfigError("classification degree exceeds the computed moment degree");
  ClassificationReport report;
  report.degree = degree;
  report.n = stats.n;
  report.atom_freq = stats.atom_freq;

  double factorial[17];
  factorial[0] = 1.0;
  for (int t = 1; t <= 16; ++t) factorial[t] = factorial[t - 1] * double(t);

  const double sqrt_n = std::sqrt(double(stats.n));
  for (const STGroupDescriptor& group : catalog()) {
    const MomentTable table = moment_table(group, degree);
    double dist = 0.0;
    for (const auto& [key, tv] : table.values) {
      const int total = key.first + key.second;
      if (total < 1) continue;
      const double diff = stats.moments.at(key) - tv;
      dist += diff * diff / factorial[total];
    }
    const double mu = atom_mass(group);
    const double spread = std::max(std::sqrt(mu * (1.0 - mu)), 0.25);
    const double z = (stats.atom_freq - mu) / (spread / (2.0 * sqrt_n));
    dist += z * z;
    const bool flag = std::abs(stats.atom_freq - mu) > 3.0 * spread / sqrt_n;
    report.ranking.push_back({group.name, dist, flag});
  }
  std::sort(report.ranking.begin(), report.ranking.end(),
            [](const GroupDistance& a, const GroupDistance& b) {
              return a.distance != b.distance ? a.distance < b.distance
                                              : a.group < b.group;
            });
  return report;
}

// Stats whose moments are the exact table values and whose atom frequency is
// the group's exact mass, at a nominal sample count.
inline EmpiricalStats stats_from_table(const MomentTable& table,
                                       const STGroupDescriptor& group,
                                       size_t nominal_n = 1000000) {
  EmpiricalStats stats;
  stats.n = nominal_n;
  stats.degree = table.degree;
  stats.moments = table.values;
  for (const auto& [key, value] : table.values) stats.std_errors[key] = 0.0;
  stats.atom_freq = atom_mass(group);
  stats.atom_count = size_t(stats.atom_freq * double(nominal_n));
  stats.hist_a1 = make_histogram(-4.0, 4.0, kStatsHistogramBins);
  stats.hist_a2 = make_histogram(-2.0, 6.0, kStatsHistogramBins);
  return stats;
}

// CSV rows `bin_low,bin_high,count,density`; densities sum to 1 after
// multiplying by the bin width.
inline std::string emit_histogram(const std::vector<PlaceSample>& samples,
                                  const std::string& coordinate, int bins) {
  if (bins < 2) throw ConfigError("histogram needs at least 2 bins");
  if (samples.empty()) throw ConfigError("histogram needs at least one sample");
  double lo = 0.0, hi = 0.0;
  if (coordinate == "a1") {
    lo = -4.0;
    hi = 4.0;
  } else if (coordinate == "a2") {
    lo = -2.0;
    hi = 6.0;
  } else {
    throw ConfigError("histogram coordinate must be a1 or a2");
  }
  Histogram h = make_histogram(lo, hi, bins);
  for (const PlaceSample& s : samples) histogram_add(h, coordinate == "a1" ? s.a1n : s.a2n);
  const double width = (hi - lo) / double(bins);
  std::string out = "bin_low,bin_high,count,density\n";
  for (int b = 0; b < bins; ++b) {
    const double bl = lo + width * double(b);
    const double bh = b + 1 == bins ? hi : lo + width * double(b + 1);
    const double density = double(h.counts[size_t(b)]) / (double(samples.size()) * width);
    out += format_double(bl) + "," + format_double(bh) + "," +
           std::to_string(h.counts[size_t(b)]) + "," + format_double(density) + "\n";
  }
  return out;
}

}  // namespace stg2
