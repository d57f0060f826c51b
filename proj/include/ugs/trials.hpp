#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ugs/dynamics.hpp"
#include "ugs/metrics.hpp"
#include "ugs/scenario.hpp"

namespace ugs {

class GenerationError : public ScenarioError {
 public:
  using ScenarioError::ScenarioError;
};

/// 64-bit LCG; each draw advances the state, then uses its top bits.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  /// Uniform integer in [a, b].
  std::int64_t uniform(std::int64_t a, std::int64_t b) {
    auto span = static_cast<std::uint64_t>(b - a) + 1;
    return a + static_cast<std::int64_t>((next() >> 33) % span);
  }

 private:
  std::uint64_t state_;
};

struct GeneratorParams {
  int n_ms = 10;
  int demand_min = 1;  // units per SDU
  int demand_max = 360;
  int period_min = 4;
  int period_max = 44;
  ResourceAmount capacity = ResourceAmount::units(360);
};

inline constexpr int kRedrawBudget = 1000;

/// Draws n_ms flows (demand, then period; deadline = period, all joining at
/// frame 0). A draw that would push the load past capacity is redrawn.
inline Scenario generate_scenario(std::uint64_t seed, const GeneratorParams& p) {
  if (p.n_ms < 1) throw UsageError("need at least one MS");
  if (p.demand_min < 1 || p.demand_max < p.demand_min) throw UsageError("invalid demand range");
  if (p.period_min < 1 || p.period_max < p.period_min) throw UsageError("invalid period range");
  if (!p.capacity.positive()) throw UsageError("capacity must be positive");

  Lcg rng(seed);
  Scenario s;
  s.capacity = p.capacity;
  LoadState load{ExactLoad{}, p.capacity};
  for (int i = 1; i <= p.n_ms; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < kRedrawBudget && !placed; ++attempt) {
      auto demand = rng.uniform(p.demand_min, p.demand_max);
      auto period = static_cast<int>(rng.uniform(p.period_min, p.period_max));
      auto f = FlowSpec::make(i, ResourceAmount::units(demand), period);
      auto d = admit(load, f);
      if (!d.accepted) continue;
      load = d.state;
      s.flows.push_back(f);
      placed = true;
    }
    if (!placed)
      throw GenerationError("seed " + std::to_string(seed) + ": MS " + std::to_string(i) + " not admitted after " +
                            std::to_string(kRedrawBudget) + " draws");
  }
  return s;
}

struct TrialParams {
  GeneratorParams gen;
  int frames = 100;
  ResourceAmount min_burst_size = ResourceAmount::units(1);
};

struct AlgorithmSummary {
  Algorithm algorithm = Algorithm::Eqa;
  double mean_bursts = 0;  // per frame
  double std_bursts = 0;
  double mean_jitter = 0;  // frames, per flow
  double std_jitter = 0;
  double max_jitter = 0;
  long frame_samples = 0;
  long flow_samples = 0;
};

struct TrialSummary {
  std::vector<AlgorithmSummary> per_algorithm;
  int trials = 0;
  int failures = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> errors;
};

namespace trials_detail {

struct Moments {
  double sum = 0, sq = 0, max = 0;
  long n = 0;

  void add(double x) {
    sum += x;
    sq += x * x;
    max = n == 0 ? x : std::max(max, x);
    ++n;
  }
  double mean() const { return n ? sum / n : 0; }
  // population; clamped so rounding never yields a negative variance
  double stddev() const { return n ? std::sqrt(std::max(0.0, sq / n - mean() * mean())) : 0; }
};

}  // namespace trials_detail

/// Trial k draws its scenario from seed base_seed + k and runs every
/// requested algorithm on it. Each frame's burst count is one sample; each
/// flow's jitter over its complete windows is one sample. Trials whose
/// generation or scheduling fails are counted and skipped.
inline TrialSummary run_trials(std::uint64_t base_seed, int trials, const TrialParams& p,
                               std::span<const Algorithm> algorithms = kAllAlgorithms) {
  using trials_detail::Moments;
  if (trials < 1) throw UsageError("need at least one trial");
  if (p.frames < 1) throw UsageError("need at least one frame");
  TrialSummary out;
  out.trials = trials;
  out.seed = base_seed;
  std::vector<Moments> bursts(algorithms.size()), jit(algorithms.size());

  for (int k = 0; k < trials; ++k) {
    const auto seed = base_seed + static_cast<std::uint64_t>(k);
    try {
      auto s = generate_scenario(seed, p.gen);
      std::vector<ScheduleResult> runs;
      for (auto a : algorithms) {
        SchedulerConfig cfg{a, p.min_burst_size, p.gen.capacity, p.frames};
        auto r = run_schedule(s.flows, {}, cfg, RunOptions{true, false});
        if (!r.rejections.empty())
          throw SchedulingError("flow rejected: " + r.rejections.front().reason, 0, r.rejections.front().flow_id);
        if (!r.misses.empty())
          throw SchedulingError("deadline missed", r.misses.front().deadline_frame, r.misses.front().flow_id);
        runs.push_back(std::move(r));
      }
      for (std::size_t i = 0; i < runs.size(); ++i) {
        auto m = compute_metrics(runs[i].grid, runs[i].flows, 0);
        for (int b : m.bursts.per_frame) bursts[i].add(b);
        for (const auto& f : m.per_flow) {
          if (f.jitter) jit[i].add(f.jitter->value());
        }
      }
    } catch (const Error& e) {
      ++out.failures;
      out.errors.push_back("trial " + std::to_string(k) + " (seed " + std::to_string(seed) + "): " + e.what());
    }
  }

  for (std::size_t i = 0; i < algorithms.size(); ++i) {
    out.per_algorithm.push_back({algorithms[i], bursts[i].mean(), bursts[i].stddev(), jit[i].mean(), jit[i].stddev(),
                                 jit[i].max, bursts[i].n, jit[i].n});
  }
  return out;
}

}  // namespace ugs
