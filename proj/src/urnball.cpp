#include "redsim/urnball.hpp"

#include <algorithm>
#include <cmath>

#include "redsim/errors.hpp"

namespace redsim {

namespace {

struct RepAccum {
  std::vector<std::uint64_t> urn_counts;   // per-urn totals of this replication
  std::uint64_t min_count = 0;
  std::uint64_t max_count = 0;
  std::vector<std::uint64_t> overlap_counts;  // histogram of X over t=2..T
};

RepAccum run_one_replication(PolicyKind kind, int n, int r, long long T,
                             std::uint64_t policy_seed) {
  RepAccum acc;
  acc.urn_counts.assign(static_cast<std::size_t>(n), 0);
  acc.overlap_counts.assign(static_cast<std::size_t>(r) + 1, 0);

  Policy policy(kind, n, r, policy_seed);
  std::vector<int> sel;
  std::vector<char> initial(static_cast<std::size_t>(n), 0);

  for (long long t = 1; t <= T; ++t) {
    policy.next_selection(sel);
    for (int u : sel) ++acc.urn_counts[static_cast<std::size_t>(u)];
    if (t == 1) {
      for (int u : sel) initial[static_cast<std::size_t>(u)] = 1;
    } else {
      int x = 0;
      for (int u : sel) x += initial[static_cast<std::size_t>(u)];
      ++acc.overlap_counts[static_cast<std::size_t>(x)];
    }
  }
  acc.min_count = *std::min_element(acc.urn_counts.begin(), acc.urn_counts.end());
  acc.max_count = *std::max_element(acc.urn_counts.begin(), acc.urn_counts.end());
  return acc;
}

Experiment1Result reduce(PolicyKind kind, int n, int r, long long T,
                         const std::vector<RepAccum>& reps) {
  const int R = static_cast<int>(reps.size());
  Experiment1Result out;
  out.occupancy.n = n;
  out.occupancy.r = r;
  out.occupancy.T = T;
  out.occupancy.replications = R;

  std::uint64_t min_sum = 0, max_sum = 0;
  std::vector<std::uint64_t> urn_sums(static_cast<std::size_t>(n), 0);
  out.overlaps.counts.assign(static_cast<std::size_t>(r) + 1, 0);
  for (const RepAccum& a : reps) {
    min_sum += a.min_count;
    max_sum += a.max_count;
    for (int u = 0; u < n; ++u) urn_sums[static_cast<std::size_t>(u)] += a.urn_counts[static_cast<std::size_t>(u)];
    for (int k = 0; k <= r; ++k) out.overlaps.counts[static_cast<std::size_t>(k)] += a.overlap_counts[static_cast<std::size_t>(k)];
  }
  out.occupancy.mean_min = static_cast<double>(min_sum) / R;
  out.occupancy.mean_max = static_cast<double>(max_sum) / R;
  out.occupancy.per_urn_mean.resize(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    out.occupancy.per_urn_mean[static_cast<std::size_t>(u)] =
        static_cast<double>(urn_sums[static_cast<std::size_t>(u)]) / R;
  }
  out.occupancy.lbf_emp = out.occupancy.mean_max > 0
                              ? out.occupancy.mean_min / out.occupancy.mean_max
                              : 0.0;

  std::uint64_t total = 0, sum1 = 0, sum2 = 0;
  for (int k = 0; k <= r; ++k) {
    std::uint64_t c = out.overlaps.counts[static_cast<std::size_t>(k)];
    total += c;
    sum1 += c * static_cast<std::uint64_t>(k);
    sum2 += c * static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(k);
  }
  out.overlaps.total = total;
  out.overlaps.ex_emp = total ? static_cast<double>(sum1) / static_cast<double>(total) : 0.0;
  out.overlaps.ex2_emp = total ? static_cast<double>(sum2) / static_cast<double>(total) : 0.0;
  return out;
}

void check_params(PolicyKind kind, int n, int r, long long T, int replications) {
  if (n < 1 || r < 1 || r > n) {
    throw invalid_parameter("experiment 1 requires 1 <= r <= n");
  }
  if (replications < 1) {
    throw invalid_parameter("experiment 1 requires replications >= 1");
  }
  const long long t_min = (n + r - 1) / r;  // ceil(n/r), overlap moment positivity
  if (T < t_min) {
    throw invalid_parameter("experiment 1 requires T >= ceil(n/r) = " +
                            std::to_string(t_min) + ", got T=" + std::to_string(T));
  }
  if (kind == PolicyKind::Bibd && n != bibd_order(r)) {
    throw invalid_parameter("bibd experiment requires n = r(r-1)+1");
  }
}

}  // namespace

Experiment1Result run_experiment1(PolicyKind kind, int n, int r, long long T,
                                  int replications, std::uint64_t seed) {
  check_params(kind, n, r, T, replications);
  std::vector<RepAccum> reps(static_cast<std::size_t>(replications));
#pragma omp parallel for schedule(dynamic)
  for (int j = 0; j < replications; ++j) {
    reps[static_cast<std::size_t>(j)] =
        run_one_replication(kind, n, r, T, seed + static_cast<std::uint64_t>(j));
  }
  return reduce(kind, n, r, T, reps);
}

Experiment1Result run_experiment1_serial(PolicyKind kind, int n, int r, long long T,
                                         int replications, std::uint64_t seed) {
  check_params(kind, n, r, T, replications);
  std::vector<RepAccum> reps(static_cast<std::size_t>(replications));
  for (int j = 0; j < replications; ++j) {
    reps[static_cast<std::size_t>(j)] =
        run_one_replication(kind, n, r, T, seed + static_cast<std::uint64_t>(j));
  }
  return reduce(kind, n, r, T, reps);
}

IndicatorSet empirical_indicators(const OccupancyStats& occ, const OverlapSamples& ov) {
  if (ov.total == 0) {
    throw invalid_parameter("no overlap samples collected (T too small?)");
  }
  if (ov.ex_emp <= 0) {
    throw degenerate_overlap("all overlap samples are zero; empirical ROF/RDF undefined");
  }
  IndicatorSet ind;
  ind.lbf = occ.lbf_emp;
  ind.ex = ov.ex_emp;
  ind.ex2 = ov.ex2_emp;
  ind.rof = 1.0 / ov.ex_emp;
  ind.rdf = 1.0 / ov.ex2_emp;
  return ind;
}

std::vector<OccupancyCurveRow> occupancy_curves(PolicyKind kind,
                                                const std::vector<int>& n_list,
                                                int r_min, int r_max, long long T,
                                                int replications, std::uint64_t seed) {
  std::vector<OccupancyCurveRow> rows;
  for (int n : n_list) {
    for (int r = r_min; r <= std::min(r_max, n); ++r) {
      OccupancyCurveRow row;
      row.n = n;
      row.r = r;
      try {
        Experiment1Result res = run_experiment1(kind, n, r, T, replications, seed);
        row.mean_min = res.occupancy.mean_min;
        row.mean_max = res.occupancy.mean_max;
        row.lbf_emp = res.occupancy.lbf_emp;
        row.lbf_analytic = kind == PolicyKind::Random
                               ? lbf_random_asymptotic(n, r, T)
                               : lbf_exact_cyclic(kind);
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace redsim
