#include "redsim/simqueue.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <queue>

#include "redsim/errors.hpp"

namespace redsim {

double sample_service(JobClass cls, double mu1, double q, Rng& rng) {
  const double rate = cls == JobClass::Short ? mu1 : mu1 / q;
  return rng.exponential(rate);
}

ServerBank::ServerBank(int n) : servers_(static_cast<std::size_t>(n)) {}

std::size_t ServerBank::add_job(double arrival_time, JobClass cls,
                                double service_duration) {
  JobRecord rec;
  rec.arrival_time = arrival_time;
  rec.cls = cls;
  rec.service_duration = service_duration;
  jobs_.push_back(std::move(rec));
  return jobs_.size() - 1;
}

void ServerBank::start_service(std::size_t job, int server, double now) {
  JobRecord& rec = jobs_[job];
  rec.start_time = now;
  rec.server = server;
  // cancel-on-start: sibling copies die instantly
  for (int loc : rec.copy_locations) {
    if (loc != server) --servers_[static_cast<std::size_t>(loc)].live;
  }
  rec.copy_locations.clear();
  rec.copy_locations.shrink_to_fit();
  servers_[static_cast<std::size_t>(server)].serving = job;
}

int ServerBank::arrive(std::size_t job, double now, const std::vector<int>& selection) {
  for (int s : selection) {
    if (servers_[static_cast<std::size_t>(s)].serving == npos) {
      start_service(job, s, now);
      return s;
    }
  }
  jobs_[job].copy_locations = selection;
  for (int s : selection) {
    servers_[static_cast<std::size_t>(s)].queue.push_back(job);
    ++servers_[static_cast<std::size_t>(s)].live;
  }
  return -1;
}

std::size_t ServerBank::complete(int server, double now) {
  ServerState& st = servers_[static_cast<std::size_t>(server)];
  assert(st.serving != npos);
  st.serving = npos;
  while (!st.queue.empty()) {
    std::size_t head = st.queue.front();
    st.queue.pop_front();
    if (jobs_[head].start_time >= 0) continue;  // cancelled copy
    --st.live;
    start_service(head, server, now);
    return head;
  }
  return npos;
}

namespace {

// Two-sided 95% Student-t critical values by degrees of freedom.
double t_critical_975(int dof) {
  static const double table[] = {
      0,     12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262,
      2.228, 2.201,  2.179, 2.160, 2.145, 2.131, 2.120, 2.110, 2.101, 2.093,
      2.086, 2.080,  2.074, 2.069, 2.064, 2.060, 2.056, 2.052, 2.048, 2.045,
      2.042};
  if (dof <= 0) return 0;
  if (dof <= 30) return table[dof];
  if (dof <= 40) return 2.021;
  if (dof <= 60) return 2.000;
  if (dof <= 120) return 1.980;
  return 1.960;
}

struct RepResult {
  double mean_wq = 0;
  double mean_sojourn = 0;
  double jobs_in_system = 0;  // time average over the measurement window
};

struct DepartureEvent {
  double time;
  std::uint64_t seq;
  int server;
  bool operator>(const DepartureEvent& o) const {
    return time != o.time ? time > o.time : seq > o.seq;
  }
};

void validate(const SimConfig& c) {
  if (c.n < 1 || c.r < 1 || c.r > c.n)
    throw invalid_parameter("simulation requires 1 <= r <= n");
  if (!(c.mu1 > 0)) throw invalid_parameter("mu1 must be positive");
  if (!(c.q >= 1)) throw invalid_parameter("q must be >= 1");
  if (!(c.p_long >= 0 && c.p_long <= 1))
    throw invalid_parameter("p must lie in [0,1]");
  if (!(c.lambda > 0)) throw invalid_parameter("lambda must be positive");
  if (c.warmup_jobs < 0) throw invalid_parameter("warmup must be >= 0");
  if (c.measured_jobs < 1) throw invalid_parameter("measured jobs must be >= 1");
  if (c.replications < 1) throw invalid_parameter("replications must be >= 1");
}

RepResult run_replication(const SimConfig& cfg, int rep) {
  // Streams: arrivals and job attributes depend only on (seed, rep) so that
  // sweeps over policies reuse identical workloads (common random numbers).
  Rng arrivals(mix_seed(cfg.seed, static_cast<std::uint64_t>(rep), 0));
  Rng job_attrs(mix_seed(cfg.seed, static_cast<std::uint64_t>(rep), 1));
  Policy policy(cfg.policy, cfg.n, cfg.r,
                mix_seed(cfg.seed, static_cast<std::uint64_t>(rep), 2));

  const long long horizon = cfg.warmup_jobs + cfg.measured_jobs;
  ServerBank bank(cfg.n);
  bank.reserve_jobs(static_cast<std::size_t>(horizon) + 1024);

  std::priority_queue<DepartureEvent, std::vector<DepartureEvent>,
                      std::greater<DepartureEvent>>
      departures;
  std::uint64_t seq = 0;
  std::uint64_t events_processed = 0;

  double next_arrival = arrivals.exponential(cfg.lambda);
  std::uint64_t next_arrival_seq = seq++;

  auto measured = [&](std::size_t job) {
    return static_cast<long long>(job) >= cfg.warmup_jobs &&
           static_cast<long long>(job) < horizon;
  };

  double clock = 0;
  long long in_system = 0;
  double area = 0;             // integral of in_system over time
  double window_t0 = -1, window_area0 = 0;
  double window_t1 = 0;

  double wq_sum = 0;
  double sojourn_sum = 0;
  long long measured_departed = 0;

  std::vector<int> selection;

  auto on_start = [&](std::size_t job, double now) {
    const JobRecord& rec = bank.job(job);
    if (measured(job)) wq_sum += now - rec.arrival_time;
    departures.push(DepartureEvent{now + rec.service_duration, seq++, rec.server});
  };

  while (measured_departed < cfg.measured_jobs) {
    if (cfg.max_events && events_processed >= cfg.max_events) {
      throw simulation_underrun(
          "event budget exhausted after " + std::to_string(events_processed) +
          " events with " + std::to_string(measured_departed) + "/" +
          std::to_string(cfg.measured_jobs) + " measured jobs completed");
    }
    const bool have_dep = !departures.empty();
    const bool take_arrival =
        !have_dep || next_arrival < departures.top().time ||
        (next_arrival == departures.top().time && next_arrival_seq < departures.top().seq);

    const double now = take_arrival ? next_arrival : departures.top().time;
    area += static_cast<double>(in_system) * (now - clock);
    clock = now;
    ++events_processed;

    if (take_arrival) {
      const JobClass cls =
          job_attrs.bernoulli(cfg.p_long) ? JobClass::Long : JobClass::Short;
      const double service = sample_service(cls, cfg.mu1, cfg.q, job_attrs);
      const std::size_t job = bank.add_job(now, cls, service);
      ++in_system;
      if (static_cast<long long>(job) == cfg.warmup_jobs) {
        window_t0 = now;
        window_area0 = area;
      }
      policy.next_selection(selection);
      if (bank.arrive(job, now, selection) >= 0) on_start(job, now);
      next_arrival = now + arrivals.exponential(cfg.lambda);
      next_arrival_seq = seq++;
    } else {
      const int server = departures.top().server;
      departures.pop();
      const std::size_t done = bank.in_service(server);
      --in_system;
      if (measured(done)) {
        sojourn_sum += now - bank.job(done).arrival_time;
        ++measured_departed;
        window_t1 = now;
      }
      const std::size_t next = bank.complete(server, now);
      if (next != ServerBank::npos) on_start(next, now);
    }
  }

  RepResult res;
  res.mean_wq = wq_sum / static_cast<double>(cfg.measured_jobs);
  res.mean_sojourn = sojourn_sum / static_cast<double>(cfg.measured_jobs);
  const double span = window_t1 - window_t0;
  res.jobs_in_system = span > 0 ? (area - window_area0) / span : static_cast<double>(in_system);
  return res;
}

SimMetrics aggregate(const SimConfig& cfg, const std::vector<RepResult>& reps) {
  SimMetrics m;
  m.rho = cfg.rho();
  m.stability_warning = m.rho >= 1.0;
  const int R = static_cast<int>(reps.size());
  m.per_rep_wq.reserve(static_cast<std::size_t>(R));
  double wq = 0, soj = 0, l = 0;
  for (const RepResult& r : reps) {
    m.per_rep_wq.push_back(r.mean_wq);
    wq += r.mean_wq;
    soj += r.mean_sojourn;
    l += r.jobs_in_system;
  }
  m.mean_queuing_time = wq / R;
  m.mean_sojourn_time = soj / R;
  m.mean_jobs_in_system = l / R;
  if (R > 1) {
    double ss = 0;
    for (const RepResult& r : reps) {
      const double d = r.mean_wq - m.mean_queuing_time;
      ss += d * d;
    }
    const double sd = std::sqrt(ss / (R - 1));
    m.ci_halfwidth = t_critical_975(R - 1) * sd / std::sqrt(static_cast<double>(R));
  }
  m.little_residual =
      m.mean_jobs_in_system > 0
          ? std::abs(m.mean_jobs_in_system - cfg.lambda * m.mean_sojourn_time) /
                m.mean_jobs_in_system
          : 0.0;
  return m;
}

}  // namespace

SimMetrics run_sim(const SimConfig& config) {
  validate(config);
  std::vector<RepResult> reps(static_cast<std::size_t>(config.replications));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (int j = 0; j < config.replications; ++j) {
    try {
      reps[static_cast<std::size_t>(j)] = run_replication(config, j);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return aggregate(config, reps);
}

SimMetrics run_sim_serial(const SimConfig& config) {
  validate(config);
  std::vector<RepResult> reps(static_cast<std::size_t>(config.replications));
  for (int j = 0; j < config.replications; ++j) {
    reps[static_cast<std::size_t>(j)] = run_replication(config, j);
  }
  return aggregate(config, reps);
}

std::vector<SweepRow> sweep(const SimConfig& base, const std::vector<double>& lambdas) {
  static const PolicyKind kinds[] = {PolicyKind::Random, PolicyKind::RoundRobin,
                                     PolicyKind::Bibd};
  std::vector<SweepRow> rows;
  for (double lambda : lambdas) {
    for (PolicyKind kind : kinds) {
      SimConfig cfg = base;
      cfg.lambda = lambda;
      cfg.policy = kind;
      SweepRow row;
      row.policy = kind;
      row.lambda = lambda;
      try {
        row.rho = cfg.rho();
        row.metrics = run_sim(cfg);
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace redsim
