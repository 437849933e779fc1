#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "redsim/policy.hpp"
#include "redsim/rng.hpp"

namespace redsim {

enum class JobClass { Short, Long };

// Exp(mu1) for short jobs, Exp(mu1/q) for long jobs; strictly positive.
double sample_service(JobClass cls, double mu1, double q, Rng& rng);

struct SimConfig {
  PolicyKind policy = PolicyKind::Random;
  int n = 1;                      // servers
  int r = 1;                      // copies per job
  double mu1 = 1.0;               // short-job service rate
  double q = 1.0;                 // long/short mean service ratio (>= 1)
  double p_long = 0.0;            // probability an arrival is long
  double lambda = 0.5;            // Poisson arrival rate
  std::uint64_t seed = 0;
  long long warmup_jobs = 10000;    // discarded
  long long measured_jobs = 100000; // collected
  int replications = 20;
  std::uint64_t max_events = 0;     // 0 = unlimited

  double mean_service_time() const {
    return (1.0 - p_long) / mu1 + p_long * q / mu1;
  }
  double rho() const { return lambda * mean_service_time() / n; }
};

struct JobRecord {
  double arrival_time = 0;
  double service_duration = 0;
  JobClass cls = JobClass::Short;
  double start_time = -1;             // service start; -1 while waiting
  int server = -1;                    // where it (will have) served
  std::vector<int> copy_locations;    // queues holding live copies; emptied at start
};

// Server queues and cancel-on-start bookkeeping, with the event timing left
// to the caller. Copies of a job are enqueued in every selected server's FCFS
// queue; the moment one copy starts service the others become dead entries
// that later pops skip (live counts are kept exact).
class ServerBank {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  explicit ServerBank(int n);

  std::size_t add_job(double arrival_time, JobClass cls, double service_duration);

  // Arrival of `job` with the given selection (sorted ascending). If a
  // selected server is idle the job starts there immediately (lowest index
  // wins) and no copies are queued; returns that server. Otherwise one copy
  // joins each selected queue and -1 is returned.
  int arrive(std::size_t job, double now, const std::vector<int>& selection);

  // Service completion at `server`. Pops dead entries, starts the next live
  // copy (cancelling its siblings), and returns the started job, or npos if
  // the queue emptied and the server went idle.
  std::size_t complete(int server, double now);

  bool busy(int server) const { return servers_[static_cast<std::size_t>(server)].serving != npos; }
  std::size_t in_service(int server) const { return servers_[static_cast<std::size_t>(server)].serving; }
  int queue_length(int server) const { return servers_[static_cast<std::size_t>(server)].live; }
  const JobRecord& job(std::size_t id) const { return jobs_[id]; }
  JobRecord& job(std::size_t id) { return jobs_[id]; }
  std::size_t job_count() const { return jobs_.size(); }
  void reserve_jobs(std::size_t count) { jobs_.reserve(count); }

 private:
  void start_service(std::size_t job, int server, double now);

  struct ServerState {
    std::size_t serving = npos;
    std::deque<std::size_t> queue;
    int live = 0;  // queued copies not yet cancelled
  };
  std::vector<ServerState> servers_;
  std::vector<JobRecord> jobs_;
};

struct SimMetrics {
  double mean_queuing_time = 0;
  double ci_halfwidth = 0;            // 95%, across replications
  double mean_sojourn_time = 0;
  double mean_jobs_in_system = 0;
  double rho = 0;
  double little_residual = 0;         // |L - lambda * W_sojourn| / L
  bool stability_warning = false;     // rho >= 1
  std::vector<double> per_rep_wq;     // one mean queuing time per replication
};

// Runs `replications` independent replications (OpenMP in the non-serial
// version; identical results either way) and aggregates. Deterministic for a
// fixed (config, seed). Throws simulation_underrun if the event budget runs
// out before the measured jobs complete.
SimMetrics run_sim(const SimConfig& config);
SimMetrics run_sim_serial(const SimConfig& config);

struct SweepRow {
  PolicyKind policy = PolicyKind::Random;
  double lambda = 0;
  double rho = 0;
  std::optional<SimMetrics> metrics;
  std::string error;  // per-cell failure; sweep continues
};

// One row per (policy, lambda), all three policies, common random numbers:
// arrival and job class/size streams depend only on (seed, replication), so
// differences between rows at the same lambda isolate the policy.
std::vector<SweepRow> sweep(const SimConfig& base, const std::vector<double>& lambdas);

}  // namespace redsim
