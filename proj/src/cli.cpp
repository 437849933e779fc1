#include "redsim/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "redsim/csv.hpp"
#include "redsim/design.hpp"
#include "redsim/errors.hpp"
#include "redsim/indicators.hpp"
#include "redsim/presets.hpp"
#include "redsim/simqueue.hpp"
#include "redsim/urnball.hpp"

namespace redsim::cli {
namespace {

// ---------------------------------------------------------------------------
// Config-file and environment plumbing.
//
// The config file is flat key=value text with keys equal to the long flag
// names of the invoked subcommand. Precedence: command-line flag > config
// file > REDSIM_SEED environment variable (seed only) > built-in default.
// Implemented by appending synthesized "--key value" pairs for keys that the
// command line did not set.
// ---------------------------------------------------------------------------

std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_parameter("cannot open config file: " + path);
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const char* ws = " \t\r";
      s.erase(0, s.find_first_not_of(ws));
      const auto last = s.find_last_not_of(ws);
      s.erase(last == std::string::npos ? 0 : last + 1);
      return s;
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (!key.empty()) pairs.emplace_back(std::move(key), std::move(value));
  }
  return pairs;
}

std::vector<std::string> expand_args(int argc, const char* const* argv) {
  std::vector<std::string> raw(argv + 1, argv + argc);
  std::vector<std::string> args;
  args.reserve(raw.size());

  // Pull out --config (either form) and remember which flags were given.
  std::string config_path;
  std::vector<std::string> seen_flags;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const std::string& a = raw[i];
    if (a.rfind("--", 0) == 0) {
      const auto eq = a.find('=');
      std::string key = eq == std::string::npos ? a.substr(2) : a.substr(2, eq - 2);
      if (key == "config") {
        if (eq != std::string::npos) {
          config_path = a.substr(eq + 1);
        } else if (i + 1 < raw.size()) {
          config_path = raw[++i];
        } else {
          throw invalid_parameter("--config needs a file path");
        }
        continue;
      }
      seen_flags.push_back(std::move(key));
    }
    args.push_back(a);
  }
  auto has_flag = [&seen_flags](const std::string& key) {
    return std::find(seen_flags.begin(), seen_flags.end(), key) != seen_flags.end();
  };

  if (!config_path.empty()) {
    for (const auto& [key, value] : read_config_file(config_path)) {
      if (key == "config" || has_flag(key)) continue;
      args.push_back("--" + key);
      args.push_back(value);
      seen_flags.push_back(key);
    }
  }
  if (const char* env_seed = std::getenv("REDSIM_SEED"); env_seed && !has_flag("seed")) {
    args.emplace_back("--seed");
    args.emplace_back(env_seed);
  }
  return args;
}

// ---------------------------------------------------------------------------
// Output helpers
// ---------------------------------------------------------------------------

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw invalid_parameter("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

// Every run echoes its fully resolved parameters so the output alone is
// enough to reproduce it.
void echo_header(std::ostream& os, const std::string& subcommand,
                 const std::vector<std::pair<std::string, std::string>>& kv) {
  os << "# redsim " << subcommand << "\n#";
  for (const auto& [k, v] : kv) os << ' ' << k << '=' << v;
  os << "\n";
}

std::string opt_str(const std::optional<long long>& v) {
  return v ? std::to_string(*v) : std::string("inf");
}

constexpr const char* kSimHeader =
    "policy,n,r,mu1,q,p,lambda,rho,mean_wq,ci95,mean_sojourn,little_residual,seed";

void write_sim_row(std::ostream& os, const SimConfig& cfg, double lambda, double rho,
                   const SimMetrics* m) {
  os << to_string(cfg.policy) << ',' << cfg.n << ',' << cfg.r << ',' << fmt(cfg.mu1)
     << ',' << fmt(cfg.q) << ',' << fmt(cfg.p_long) << ',' << fmt(lambda) << ','
     << fmt(rho) << ',';
  if (m) {
    os << fmt(m->mean_queuing_time) << ',' << fmt(m->ci_halfwidth) << ','
       << fmt(m->mean_sojourn_time) << ',' << fmt(m->little_residual);
  } else {
    os << ",,,";
  }
  os << ',' << cfg.seed << '\n';
}

std::vector<std::pair<std::string, std::string>> sim_config_kv(const SimConfig& cfg) {
  return {{"policy", to_string(cfg.policy)},
          {"n", std::to_string(cfg.n)},
          {"r", std::to_string(cfg.r)},
          {"mu1", fmt(cfg.mu1)},
          {"q", fmt(cfg.q)},
          {"p-long", fmt(cfg.p_long)},
          {"warmup", std::to_string(cfg.warmup_jobs)},
          {"jobs", std::to_string(cfg.measured_jobs)},
          {"reps", std::to_string(cfg.replications)},
          {"seed", std::to_string(cfg.seed)}};
}

// ---------------------------------------------------------------------------
// Subcommand state + handlers
// ---------------------------------------------------------------------------

struct DesignArgs {
  int r = 0;
  bool json = false;
  bool csv = false;
};

int run_design(const DesignArgs& a) {
  Design d = make_bibd(a.r);
  if (a.json) {
    nlohmann::json j;
    j["n"] = d.n;
    j["r"] = d.r;
    j["lambda"] = 1;
    j["blocks"] = d.blocks;
    std::cout << j.dump() << "\n";
    return 0;
  }
  if (a.csv) {
    std::cout << "block";
    for (int i = 0; i < d.r; ++i) std::cout << ",p" << i;
    std::cout << "\n";
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
      std::cout << b;
      for (int p : d.blocks[b]) std::cout << ',' << p;
      std::cout << "\n";
    }
    return 0;
  }
  for (const auto& block : d.blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      std::cout << (i ? " " : "") << block[i];
    }
    std::cout << "\n";
  }
  return 0;
}

struct IndicatorArgs {
  std::string policy;
  int r = 0;
  std::optional<int> n;
  std::optional<long long> T;
  bool csv = false;
};

int run_indicators(const IndicatorArgs& a) {
  const PolicyKind kind = parse_policy(a.policy);
  const int n = a.n ? *a.n : bibd_order(a.r);
  IndicatorSet ind;
  switch (kind) {
    case PolicyKind::Random: {
      if (!a.T) {
        throw invalid_parameter("random LBF depends on T; pass --T (e.g. --T 50)");
      }
      ind = indicators_from_pmf(overlap_pmf_random(n, a.r),
                                lbf_random_asymptotic(n, a.r, *a.T));
      break;
    }
    case PolicyKind::RoundRobin:
      ind = indicators_from_pmf(overlap_pmf_round_robin(n, a.r, a.T),
                                lbf_exact_cyclic(kind));
      break;
    case PolicyKind::Bibd:
      ind = indicators_from_pmf(overlap_pmf_bibd(n, a.r, a.T), lbf_exact_cyclic(kind));
      break;
  }
  if (a.csv) {
    std::cout << "policy,n,r,T,lbf,rof,rdf,ex,ex2\n";
    std::cout << to_string(kind) << ',' << n << ',' << a.r << ',' << opt_str(a.T) << ','
              << fmt(ind.lbf) << ',' << fmt(ind.rof) << ',' << fmt(ind.rdf) << ','
              << fmt(ind.ex) << ',' << fmt(ind.ex2) << "\n";
  } else {
    std::cout << "policy=" << to_string(kind) << " n=" << n << " r=" << a.r
              << " T=" << opt_str(a.T) << "\n"
              << "  LBF = " << fmt(ind.lbf) << "\n"
              << "  ROF = " << fmt(ind.rof) << "  (E[X]  = " << fmt(ind.ex) << ")\n"
              << "  RDF = " << fmt(ind.rdf) << "  (E[X^2] = " << fmt(ind.ex2) << ")\n";
  }
  return 0;
}

struct UrnArgs {
  std::string policy;
  int n = 0;
  int r = 0;
  long long T = 50;
  int reps = 1;
  std::uint64_t seed = 0;
  std::string csv_path;
};

int run_urns(const UrnArgs& a) {
  const PolicyKind kind = parse_policy(a.policy);
  const Experiment1Result res = run_experiment1(kind, a.n, a.r, a.T, a.reps, a.seed);
  const IndicatorSet emp = empirical_indicators(res.occupancy, res.overlaps);

  std::optional<double> lbf_an, rof_an, rdf_an;
  try {
    switch (kind) {
      case PolicyKind::Random: {
        lbf_an = lbf_random_asymptotic(a.n, a.r, a.T);
        const IndicatorSet an = indicators_from_pmf(overlap_pmf_random(a.n, a.r), *lbf_an);
        rof_an = an.rof;
        rdf_an = an.rdf;
        break;
      }
      case PolicyKind::RoundRobin: {
        const IndicatorSet an =
            indicators_from_pmf(overlap_pmf_round_robin(a.n, a.r), 1.0);
        lbf_an = 1.0;
        rof_an = an.rof;
        rdf_an = an.rdf;
        break;
      }
      case PolicyKind::Bibd: {
        const IndicatorSet an = indicators_from_pmf(overlap_pmf_bibd(a.n, a.r), 1.0);
        lbf_an = 1.0;
        rof_an = an.rof;
        rdf_an = an.rdf;
        break;
      }
    }
  } catch (const unsupported_parameters&) {
    // no closed form at these (n, r); leave the analytic cells empty
  }

  Output out(a.csv_path);
  std::ostream& os = out.stream();
  echo_header(os, "urns",
              {{"policy", to_string(kind)},
               {"n", std::to_string(a.n)},
               {"r", std::to_string(a.r)},
               {"T", std::to_string(a.T)},
               {"reps", std::to_string(a.reps)},
               {"seed", std::to_string(a.seed)}});
  os << "policy,n,r,T,reps,seed,mean_min,mean_max,lbf_emp,rof_emp,rdf_emp,"
        "lbf_analytic,rof_analytic,rdf_analytic\n";
  os << to_string(kind) << ',' << a.n << ',' << a.r << ',' << a.T << ',' << a.reps
     << ',' << a.seed << ',' << fmt(res.occupancy.mean_min) << ','
     << fmt(res.occupancy.mean_max) << ',' << fmt(emp.lbf) << ',' << fmt(emp.rof)
     << ',' << fmt(emp.rdf) << ',' << fmt(lbf_an) << ',' << fmt(rof_an) << ','
     << fmt(rdf_an) << "\n";
  return 0;
}

struct SimulateArgs {
  SimConfig cfg;
  std::string csv_path;
};

int run_simulate(const SimulateArgs& a) {
  const SimMetrics m = run_sim(a.cfg);
  if (m.stability_warning) {
    std::cerr << "warning: rho = " << fmt(m.rho)
              << " >= 1; system is unstable, finite-horizon results only\n";
  }
  Output out(a.csv_path);
  std::ostream& os = out.stream();
  echo_header(os, "simulate", sim_config_kv(a.cfg));
  os << kSimHeader << "\n";
  write_sim_row(os, a.cfg, a.cfg.lambda, m.rho, &m);
  return 0;
}

struct SweepArgs {
  SimConfig cfg;
  std::string preset;
  bool fig8_q15 = false;
  std::vector<double> lambdas;
  std::string csv_path;
  bool have_explicit_nr = false;
};

int run_sweep_cmd(SweepArgs a) {
  if (!a.preset.empty()) {
    SimConfig p = sweep_preset(a.preset, a.fig8_q15);
    p.seed = a.cfg.seed;
    p.warmup_jobs = a.cfg.warmup_jobs;
    p.measured_jobs = a.cfg.measured_jobs;
    p.replications = a.cfg.replications;
    p.max_events = a.cfg.max_events;
    a.cfg = p;
  } else if (!a.have_explicit_nr) {
    throw invalid_parameter("sweep needs --preset or explicit --n/--r parameters");
  }
  if (a.lambdas.empty()) a.lambdas = default_lambda_grid(a.cfg);

  const std::vector<SweepRow> rows = sweep(a.cfg, a.lambdas);

  Output out(a.csv_path);
  std::ostream& os = out.stream();
  auto kv = sim_config_kv(a.cfg);
  kv.erase(kv.begin());  // sweep runs all policies
  if (!a.preset.empty()) kv.emplace_back("preset", a.preset);
  {
    std::string ls;
    for (double l : a.lambdas) ls += (ls.empty() ? "" : ";") + fmt(l);
    kv.emplace_back("lambdas", ls);
  }
  echo_header(os, "sweep", kv);
  os << kSimHeader << "\n";
  for (const SweepRow& row : rows) {
    SimConfig c = a.cfg;
    c.policy = row.policy;
    if (!row.error.empty()) {
      std::cerr << "warning: cell (policy=" << to_string(row.policy)
                << ", lambda=" << fmt(row.lambda) << ") failed: " << row.error << "\n";
    }
    write_sim_row(os, c, row.lambda, row.rho,
                  row.metrics ? &*row.metrics : nullptr);
  }
  return 0;
}

struct FigureArgs {
  std::string preset;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  long long T = 50;
  int urn_reps = 1000;
  long long warmup = 10000;
  long long jobs = 100000;
  int reps = 20;
  bool fig8_q15 = false;
};

int run_figures(const FigureArgs& a) {
  const std::string path = a.out_dir + "/" + a.preset + ".csv";
  if (a.preset == "fig2" || a.preset == "fig3") {
    const std::vector<int> n_list = {7, 13, 21};
    Output out(path);
    std::ostream& os = out.stream();
    echo_header(os, "figures",
                {{"preset", a.preset},
                 {"policy", "random"},
                 {"T", std::to_string(a.T)},
                 {"reps", std::to_string(a.urn_reps)},
                 {"seed", std::to_string(a.seed)}});
    if (a.preset == "fig2") {
      os << "policy,n,r,T,reps,seed,mean_min,mean_max,approx_min,approx_max\n";
    } else {
      os << "policy,n,r,T,reps,seed,lbf_emp,lbf_analytic\n";
    }
    for (int n : n_list) {
      const auto rows = occupancy_curves(PolicyKind::Random, {n}, 1, n, a.T,
                                         a.urn_reps, a.seed);
      for (const auto& row : rows) {
        os << "random," << row.n << ',' << row.r << ',' << a.T << ',' << a.urn_reps
           << ',' << a.seed << ',';
        if (a.preset == "fig2") {
          const double tn = static_cast<double>(a.T) * row.r / row.n;
          const double dev = std::sqrt(2.0 * static_cast<double>(a.T) * row.r *
                                       (row.n - row.r) * std::log(double(row.n)) /
                                       (static_cast<double>(row.n) * row.n));
          os << fmt(row.mean_min) << ',' << fmt(row.mean_max) << ','
             << fmt(std::max(0.0, tn - dev)) << ',' << fmt(tn + dev) << "\n";
        } else {
          os << fmt(row.lbf_emp) << ',' << fmt(row.lbf_analytic) << "\n";
        }
      }
    }
    std::cout << "wrote " << path << "\n";
    return 0;
  }
  if (a.preset == "fig4") {
    Output out(path);
    std::ostream& os = out.stream();
    echo_header(os, "figures", {{"preset", "fig4"}, {"T", std::to_string(a.T)}});
    os << "r,n,T,lbf_random,lbf_round_robin,lbf_bibd,rdf_random,rdf_round_robin,"
          "rdf_bibd\n";
    for (int r = 2; r <= 7; ++r) {
      const IndicatorSet rnd = table1_row(PolicyKind::Random, r, a.T);
      const IndicatorSet rr = table1_row(PolicyKind::RoundRobin, r);
      const IndicatorSet bibd = table1_row(PolicyKind::Bibd, r);
      os << r << ',' << bibd_order(r) << ',' << a.T << ',' << fmt(rnd.lbf) << ','
         << fmt(rr.lbf) << ',' << fmt(bibd.lbf) << ',' << fmt(rnd.rdf) << ','
         << fmt(rr.rdf) << ',' << fmt(bibd.rdf) << "\n";
    }
    std::cout << "wrote " << path << "\n";
    return 0;
  }
  if (a.preset == "fig5" || a.preset == "fig6" || a.preset == "fig7" ||
      a.preset == "fig8") {
    SweepArgs sa;
    sa.preset = a.preset;
    sa.fig8_q15 = a.fig8_q15;
    sa.cfg.seed = a.seed;
    sa.cfg.warmup_jobs = a.warmup;
    sa.cfg.measured_jobs = a.jobs;
    sa.cfg.replications = a.reps;
    sa.csv_path = path;
    const int rc = run_sweep_cmd(sa);
    if (rc == 0) std::cout << "wrote " << path << "\n";
    return rc;
  }
  throw invalid_parameter("unknown figure preset '" + a.preset +
                          "' (expected fig2..fig8)");
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{
      "redundancy scheduling simulator and analysis toolkit\n"
      "Any subcommand accepts --config <file> with flat key=value lines (keys equal\n"
      "to long flag names); command-line flags take precedence, and REDSIM_SEED is\n"
      "used as the lowest-priority seed source."};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "print help for every subcommand");

  DesignArgs design_args;
  auto* sc_design = app.add_subcommand("design", "construct a (n,r,1) block design");
  sc_design->add_option("--r", design_args.r, "block size / redundancy level")
      ->required();
  sc_design->add_flag("--json", design_args.json, "emit JSON");
  sc_design->add_flag("--csv", design_args.csv, "emit CSV");

  IndicatorArgs ind_args;
  auto* sc_ind = app.add_subcommand(
      "indicators", "closed-form LBF/ROF/RDF for a scheduling policy");
  sc_ind->add_option("--policy", ind_args.policy, "random|round-robin|bibd")
      ->required();
  sc_ind->add_option("--r", ind_args.r, "redundancy level")->required();
  sc_ind->add_option("--n", ind_args.n, "urn/server count (default r(r-1)+1)");
  sc_ind->add_option("--T", ind_args.T, "repetitions (default: T -> infinity limit)");
  sc_ind->add_flag("--csv", ind_args.csv, "emit CSV row");

  UrnArgs urn_args;
  auto* sc_urns = app.add_subcommand(
      "urns", "Monte Carlo urns-and-balls occupancy and overlap measurement");
  sc_urns->add_option("--policy", urn_args.policy, "random|round-robin|bibd")
      ->required();
  sc_urns->add_option("--n", urn_args.n, "urn count")->required();
  sc_urns->add_option("--r", urn_args.r, "urns drawn per round")->required();
  sc_urns->add_option("--T", urn_args.T, "rounds per replication");
  sc_urns->add_option("--reps", urn_args.reps, "replications");
  sc_urns->add_option("--seed", urn_args.seed, "base RNG seed");
  sc_urns->add_option("--csv", urn_args.csv_path, "write CSV to this path");

  SimulateArgs sim_args;
  auto* sc_sim = app.add_subcommand(
      "simulate", "discrete-event simulation of the redundancy queuing system");
  std::string sim_policy = "random";
  sc_sim->add_option("--policy", sim_policy, "random|round-robin|bibd");
  sc_sim->add_option("--n", sim_args.cfg.n, "servers")->required();
  sc_sim->add_option("--r", sim_args.cfg.r, "copies per job")->required();
  sc_sim->add_option("--mu1", sim_args.cfg.mu1, "short-job service rate");
  sc_sim->add_option("--q", sim_args.cfg.q, "long/short mean service ratio");
  sc_sim->add_option("--p-long", sim_args.cfg.p_long, "long-job probability");
  sc_sim->add_option("--lambda", sim_args.cfg.lambda, "arrival rate")->required();
  sc_sim->add_option("--seed", sim_args.cfg.seed, "base RNG seed");
  sc_sim->add_option("--warmup", sim_args.cfg.warmup_jobs, "jobs discarded");
  sc_sim->add_option("--jobs", sim_args.cfg.measured_jobs, "jobs measured");
  sc_sim->add_option("--reps", sim_args.cfg.replications, "replications");
  sc_sim->add_option("--max-events", sim_args.cfg.max_events,
                     "event budget per replication (0 = unlimited)");
  sc_sim->add_option("--csv", sim_args.csv_path, "write CSV to this path");

  SweepArgs sweep_args;
  auto* sc_sweep = app.add_subcommand(
      "sweep", "compare all three policies over an arrival-rate grid");
  sc_sweep->add_option("--preset", sweep_args.preset, "fig5|fig6|fig7|fig8");
  sc_sweep->add_flag("--fig8-q15", sweep_args.fig8_q15,
                     "fig8 only: use the q=15 variant from the running text");
  auto* sweep_n = sc_sweep->add_option("--n", sweep_args.cfg.n, "servers");
  auto* sweep_r = sc_sweep->add_option("--r", sweep_args.cfg.r, "copies per job");
  sc_sweep->add_option("--mu1", sweep_args.cfg.mu1, "short-job service rate");
  sc_sweep->add_option("--q", sweep_args.cfg.q, "long/short mean service ratio");
  sc_sweep->add_option("--p-long", sweep_args.cfg.p_long, "long-job probability");
  sc_sweep->add_option("--lambdas", sweep_args.lambdas,
                       "explicit arrival-rate grid (comma separated)")
      ->delimiter(',');
  sc_sweep->add_option("--seed", sweep_args.cfg.seed, "base RNG seed");
  sc_sweep->add_option("--warmup", sweep_args.cfg.warmup_jobs, "jobs discarded");
  sc_sweep->add_option("--jobs", sweep_args.cfg.measured_jobs, "jobs measured");
  sc_sweep->add_option("--reps", sweep_args.cfg.replications, "replications");
  sc_sweep->add_option("--max-events", sweep_args.cfg.max_events,
                       "event budget per replication (0 = unlimited)");
  sc_sweep->add_option("--csv", sweep_args.csv_path, "write CSV to this path");

  FigureArgs fig_args;
  auto* sc_fig = app.add_subcommand("figures", "emit plot-ready CSV for a figure");
  sc_fig->add_option("--preset", fig_args.preset, "fig2|fig3|fig4|fig5|fig6|fig7|fig8")
      ->required();
  sc_fig->add_option("--out", fig_args.out_dir, "output directory");
  sc_fig->add_option("--seed", fig_args.seed, "base RNG seed");
  sc_fig->add_option("--T", fig_args.T, "rounds (fig2/fig3/fig4)");
  sc_fig->add_option("--urn-reps", fig_args.urn_reps, "replications (fig2/fig3)");
  sc_fig->add_option("--warmup", fig_args.warmup, "jobs discarded (fig5-8)");
  sc_fig->add_option("--jobs", fig_args.jobs, "jobs measured (fig5-8)");
  sc_fig->add_option("--reps", fig_args.reps, "replications (fig5-8)");
  sc_fig->add_flag("--fig8-q15", fig_args.fig8_q15, "fig8: q=15 variant");

  std::vector<std::string> args;
  try {
    args = expand_args(argc, argv);
  } catch (const invalid_parameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  try {
    std::vector<const char*> cargs;
    cargs.push_back(argv[0]);
    for (const std::string& a : args) cargs.push_back(a.c_str());
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (sc_design->parsed()) return run_design(design_args);
    if (sc_ind->parsed()) return run_indicators(ind_args);
    if (sc_urns->parsed()) return run_urns(urn_args);
    if (sc_sim->parsed()) {
      sim_args.cfg.policy = parse_policy(sim_policy);
      return run_simulate(sim_args);
    }
    if (sc_sweep->parsed()) {
      sweep_args.have_explicit_nr = sweep_n->count() > 0 && sweep_r->count() > 0;
      return run_sweep_cmd(sweep_args);
    }
    if (sc_fig->parsed()) return run_figures(fig_args);
  } catch (const no_design_available& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const simulation_underrun& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 1;
}

}  // namespace redsim::cli
