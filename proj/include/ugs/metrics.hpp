#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ugs/flow.hpp"
#include "ugs/grid.hpp"
#include "ugs/resource.hpp"

namespace ugs {

/// Non-negative exact fraction, kept reduced.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw UsageError("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    auto g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num_;
    if (r.den_ != 1) os << '/' << r.den_;
    return os;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Frame at which the window's cumulative allocation first reaches its
/// demand, or none if it never does inside the grid.
inline std::optional<int> completion_frame(const AllocationGrid& g, const SduWindow& w) {
  int col = g.column_of(w.flow_id);
  ResourceAmount acc;
  for (int t = w.arrival_frame; t <= std::min(w.end_frame, g.horizon() - 1); ++t) {
    acc += g.at(t, col);
    if (acc >= w.demand) return t;
  }
  return std::nullopt;
}

struct DelayReport {
  std::vector<int> delays;             // frames, completion inclusive
  std::vector<int> incomplete_windows; // arrival frames of windows that never completed
};

/// Per-SDU delays over the flow's complete windows: completion frame minus
/// arrival frame plus one.
inline DelayReport sdu_delays(const AllocationGrid& g, const FlowSpec& f, int until) {
  DelayReport r;
  int end = std::min(until, g.horizon());
  if (f.join_frame >= end) return r;
  for (const auto& w : windows_of(f, end)) {
    if (!w.complete) continue;
    if (auto c = completion_frame(g, w))
      r.delays.push_back(*c - w.arrival_frame + 1);
    else
      r.incomplete_windows.push_back(w.arrival_frame);
  }
  return r;
}

/// Mean absolute difference between consecutive delays. None for an empty
/// list, zero for a single SDU.
inline std::optional<Rational> jitter(std::span<const int> delays) {
  if (delays.empty()) return std::nullopt;
  if (delays.size() == 1) return Rational{0};
  std::int64_t s = 0;
  for (std::size_t k = 1; k < delays.size(); ++k) s += std::abs(delays[k] - delays[k - 1]);
  return Rational{s, static_cast<std::int64_t>(delays.size() - 1)};
}

inline std::optional<Rational> mean(std::span<const int> xs) {
  if (xs.empty()) return std::nullopt;
  return Rational{std::accumulate(xs.begin(), xs.end(), std::int64_t{0}), static_cast<std::int64_t>(xs.size())};
}

struct BurstCounts {
  std::vector<int> per_frame;
  long total = 0;
};

// One burst per positive cell.
inline BurstCounts burst_counts(const AllocationGrid& g) {
  BurstCounts b;
  for (int t = 0; t < g.horizon(); ++t) {
    b.per_frame.push_back(positive_cells(g, t));
    b.total += b.per_frame.back();
  }
  return b;
}

struct Throughput {
  ResourceAmount achieved;
  ResourceAmount optimal;
  ResourceAmount leftover;  // capacity not used by any flow
};

/// Achieved = all cells in [0, cycle). Optimal = each flow's demand times
/// its active frames in the cycle over its period (data_size x cycle / period
/// for a flow present throughout), floored to the hundredth.
inline Throughput throughput(const AllocationGrid& g, std::span<const FlowLifetime> flows, int cycle) {
  if (cycle < 0 || cycle > g.horizon()) throw UsageError("cycle must lie within the grid horizon");
  Throughput r;
  for (int t = 0; t < cycle; ++t) r.achieved += grid_frame_sum(g, t);
  for (const auto& [f, until] : flows) {
    std::int64_t active = std::max(0, std::min(cycle, until) - f.join_frame);
    r.optimal += ResourceAmount::hundredths(f.data_size.raw() * active / f.period);
  }
  r.leftover = g.capacity() * cycle - r.achieved;
  return r;
}

struct FlowMetrics {
  int flow_id = 0;
  std::vector<int> sdu_delays;
  std::optional<Rational> mean_delay;
  std::optional<Rational> jitter;
  std::vector<int> incomplete_windows;
};

struct ScheduleMetrics {
  std::vector<FlowMetrics> per_flow;
  BurstCounts bursts;
  Throughput throughput;
  std::vector<std::string> warnings;
};

inline ScheduleMetrics compute_metrics(const AllocationGrid& g, std::span<const FlowLifetime> flows, int cycle) {
  ScheduleMetrics m;
  for (const auto& [f, until] : flows) {
    auto d = sdu_delays(g, f, until);
    FlowMetrics fm{f.id, d.delays, mean(d.delays), jitter(d.delays), d.incomplete_windows};
    for (int a : d.incomplete_windows)
      m.warnings.push_back("flow " + std::to_string(f.id) + ": window arriving at frame " + std::to_string(a) +
                           " never completed; excluded from delay metrics");
    m.per_flow.push_back(std::move(fm));
  }
  m.bursts = burst_counts(g);
  m.throughput = throughput(g, flows, cycle);
  return m;
}

}  // namespace ugs
