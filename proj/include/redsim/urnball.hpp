#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "redsim/indicators.hpp"
#include "redsim/policy.hpp"

namespace redsim {

// Occupancy order statistics of the urns-and-balls runs: T rounds of drawing
// r urns and dropping a ball in each, averaged over replications.
struct OccupancyStats {
  int n = 0;
  int r = 0;
  long long T = 0;
  int replications = 0;
  double mean_min = 0;                // E[N_{1:n}]
  double mean_max = 0;                // E[N_{n:n}]
  std::vector<double> per_urn_mean;   // length n; sums to T*r
  double lbf_emp = 0;                 // mean_min / mean_max
};

// Overlap-with-initial-set samples X_t, t = 2..T, pooled over replications.
// Kept as a histogram; X is a small integer and the moments are exact sums.
struct OverlapSamples {
  std::vector<std::uint64_t> counts;  // index k = 0..r
  std::uint64_t total = 0;
  double ex_emp = 0;
  double ex2_emp = 0;
};

struct Experiment1Result {
  OccupancyStats occupancy;
  OverlapSamples overlaps;
};

// T rounds of experiment 1 per replication; replication j seeds its policy
// with seed + j. The parallel version distributes replications over OpenMP
// threads; reduction order is fixed, so results are bit-identical to the
// serial reference for any thread count.
Experiment1Result run_experiment1(PolicyKind kind, int n, int r, long long T,
                                  int replications, std::uint64_t seed);
Experiment1Result run_experiment1_serial(PolicyKind kind, int n, int r, long long T,
                                         int replications, std::uint64_t seed);

// Sample-moment indicators: lbf from occupancy, rof/rdf from overlap moments.
IndicatorSet empirical_indicators(const OccupancyStats& occ, const OverlapSamples& ov);

// One row of the occupancy sweep tables (min/max load and LBF as a function
// of r, one row per (n, r) cell). Cells whose parameters are invalid carry an
// error note and empty values; the sweep keeps going.
struct OccupancyCurveRow {
  int n = 0;
  int r = 0;
  std::optional<double> mean_min;
  std::optional<double> mean_max;
  std::optional<double> lbf_emp;
  std::optional<double> lbf_analytic;
  std::string error;
};

std::vector<OccupancyCurveRow> occupancy_curves(PolicyKind kind,
                                                const std::vector<int>& n_list,
                                                int r_min, int r_max, long long T,
                                                int replications, std::uint64_t seed);

}  // namespace redsim
