#include "ugs_cli.hpp"

#include <fstream>
#include <iomanip>
#include <memory>

#include "CLI11.hpp"
#include "ugs/ugs.hpp"

namespace ugs {
namespace {

// "-" or empty means the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw UsageError("cannot write " + path);
    os_ = file_.get();
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

struct ScheduleArgs {
  std::string scenario;
  std::string algo = "swim";
  std::string min_burst = "1.00";
  std::string capacity;
  int frames = 0;
  std::string out, metrics;
};

struct EvalArgs {
  int ms = 10;
  int frames = 100;
  int trials = 100;
  std::uint64_t seed = 1;
  int demand_min = 1, demand_max = 360;
  int period_min = 4, period_max = 44;
  std::int64_t capacity = 360;
  std::string min_burst = "1.00";
  std::vector<std::string> algos;
  std::string out;
};

int metrics_cycle(std::span<const FlowSpec> flows, int horizon) {
  try {
    auto c = lcm_cycle(flows);
    if (c > horizon) return horizon;
    return static_cast<int>(horizon - horizon % c);
  } catch (const ScenarioError&) {
    return horizon;
  }
}

int schedule(const ScheduleArgs& a, std::ostream& out, std::ostream& err) {
  auto s = load_scenario(a.scenario);
  SchedulerConfig cfg;
  cfg.algorithm = parse_algorithm(a.algo);
  cfg.min_burst_size = ResourceAmount::parse(a.min_burst);
  cfg.capacity = a.capacity.empty() ? s.effective_capacity() : ResourceAmount::parse(a.capacity);
  cfg.horizon = a.frames > 0 ? a.frames : s.effective_horizon();

  auto r = run_schedule(s.flows, s.leaves, cfg);
  if (!r.rejections.empty()) {
    for (const auto& x : r.rejections)
      err << "error: flow " << x.flow_id << " rejected at frame " << x.frame << ": " << x.reason << '\n';
    err << "error: the scenario needs " << total_load(s.flows) << " per frame, capacity is " << cfg.capacity << '\n';
    return kRejected;
  }
  if (!r.misses.empty()) {
    for (const auto& m : r.misses)
      err << "error: flow " << m.flow_id << " missed its deadline at frame " << m.deadline_frame << " with "
          << m.outstanding << " outstanding\n";
    return kSchedulingFailed;
  }

  auto m = compute_metrics(r.grid, r.flows, metrics_cycle(s.flows, cfg.horizon));
  for (const auto& w : m.warnings) err << "warning: " << w << '\n';
  {
    Sink alloc(a.out, out);
    write_allocation(*alloc, r.grid);
  }
  Sink metrics(a.metrics, out);
  write_metrics(*metrics, m);
  return kOk;
}

int eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  TrialParams p;
  p.gen = {a.ms, a.demand_min, a.demand_max, a.period_min, a.period_max, ResourceAmount::units(a.capacity)};
  p.frames = a.frames;
  p.min_burst_size = ResourceAmount::parse(a.min_burst);
  std::vector<Algorithm> algos;
  for (const auto& s : a.algos) algos.push_back(parse_algorithm(s));
  if (algos.empty()) algos.assign(std::begin(kAllAlgorithms), std::end(kAllAlgorithms));

  auto t = run_trials(a.seed, a.trials, p, algos);
  for (const auto& e : t.errors) err << "warning: " << e << '\n';

  Sink sink(a.out, out);
  auto& o = *sink;
  o << std::fixed << std::setprecision(4);
  o << "algorithm,mean_bursts,std_bursts,mean_jitter,std_jitter,max_jitter\n";
  for (const auto& s : t.per_algorithm)
    o << to_string(s.algorithm) << ',' << s.mean_bursts << ',' << s.std_bursts << ',' << s.mean_jitter << ','
      << s.std_jitter << ',' << s.max_jitter << '\n';
  o << "[totals]\n"
    << "trials=" << t.trials << '\n'
    << "failures=" << t.failures << '\n'
    << "seed=" << t.seed << '\n';
  return t.failures == t.trials ? kSchedulingFailed : kOk;
}

int capacity(const std::string& scenario, std::ostream& out) {
  PhyProfile p = scenario.empty() ? PhyProfile{} : load_scenario(scenario).phy;
  out << "dl_slots=" << dl_slots_per_frame(p) << '\n' << "ul_slots=" << ul_slots_per_frame(p) << '\n';
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"UGS scheduling: equal allocation, EDF and swapping min-max", "ugs-sched"};
  app.require_subcommand(1);

  std::string phy_file;
  auto* cap = app.add_subcommand("capacity", "print downlink and uplink slots per frame");
  cap->add_option("scenario", phy_file, "scenario file whose [phy] section to use")->check(CLI::ExistingFile);

  ScheduleArgs sa;
  auto* sch = app.add_subcommand("schedule", "run one algorithm on a scenario file");
  sch->add_option("scenario", sa.scenario, "scenario file")->required();
  sch->add_option("--algo", sa.algo, "eqa, edf or swim")->capture_default_str();
  sch->add_option("--min-burst-size", sa.min_burst, "smallest burst kept on a deadline frame")->capture_default_str();
  sch->add_option("--capacity", sa.capacity, "per-frame capacity, overrides the scenario");
  sch->add_option("--frames", sa.frames, "horizon in frames, overrides the scenario");
  sch->add_option("--out", sa.out, "allocation file (default stdout)");
  sch->add_option("--metrics", sa.metrics, "metrics file (default stdout)");

  EvalArgs ea;
  auto* ev = app.add_subcommand("eval", "randomized trials over all algorithms");
  ev->add_option("--ms", ea.ms, "mobile stations per trial")->capture_default_str();
  ev->add_option("--frames", ea.frames, "frames per trial")->capture_default_str();
  ev->add_option("--trials", ea.trials, "number of trials")->capture_default_str();
  ev->add_option("--seed", ea.seed, "seed of trial 0; trial k uses seed+k")->capture_default_str();
  ev->add_option("--demand-min", ea.demand_min)->capture_default_str();
  ev->add_option("--demand-max", ea.demand_max)->capture_default_str();
  ev->add_option("--period-min", ea.period_min)->capture_default_str();
  ev->add_option("--period-max", ea.period_max)->capture_default_str();
  ev->add_option("--capacity", ea.capacity, "slots per frame")->capture_default_str();
  ev->add_option("--min-burst-size", ea.min_burst)->capture_default_str();
  ev->add_option("--algo", ea.algos, "restrict to these algorithms");
  ev->add_option("--out", ea.out, "summary file (default stdout)");

  std::vector<const char*> argv{"ugs-sched"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*cap) return capacity(phy_file, out);
    if (*sch) return schedule(sa, out, err);
    return eval(ea, out, err);
  } catch (const SchedulingError& e) {
    err << "error: " << e.what() << '\n';
    return kSchedulingFailed;
  } catch (const ScenarioError& e) {
    err << "error: " << e.what() << '\n';
    return kBadScenario;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace ugs
