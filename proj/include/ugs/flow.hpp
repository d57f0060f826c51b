#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ugs/errors.hpp"
#include "ugs/resource.hpp"

namespace ugs {

/// A UGS connection: `data_size` is due every `period` frames, within
/// `deadline` frames of the period start. The first period starts at
/// `join_frame`.
struct FlowSpec {
  int id = 0;
  ResourceAmount data_size;
  int period = 1;
  int deadline = 1;
  int join_frame = 0;

  static FlowSpec make(int id, ResourceAmount data_size, int period, int deadline = 0,
                       int join_frame = 0) {
    return FlowSpec{id, data_size, period, deadline > 0 ? deadline : period, join_frame};
  }

  friend bool operator==(const FlowSpec&, const FlowSpec&) = default;
};

inline void validate(const FlowSpec& f) {
  auto bad = [&](const std::string& why) {
    return ScenarioError("flow " + std::to_string(f.id) + ": " + why);
  };
  if (!f.data_size.positive()) throw bad("data_size must be positive");
  if (f.period < 1) throw bad("period must be at least 1 frame");
  if (f.deadline < 1 || f.deadline > f.period) throw bad("deadline must lie in [1, period]");
  if (f.join_frame < 0) throw bad("join_frame must be non-negative");
}

inline void validate(std::span<const FlowSpec> flows) {
  std::set<int> seen;
  for (const auto& f : flows) {
    validate(f);
    if (!seen.insert(f.id).second) throw ScenarioError("duplicate flow id " + std::to_string(f.id));
  }
}

/// One period instance of a flow's demand. Frames are absolute indices.
struct SduWindow {
  int flow_id = 0;
  int arrival_frame = 0;
  int deadline_frame = 0;  // arrival + deadline - 1
  int end_frame = 0;       // arrival + period - 1
  ResourceAmount demand;
  bool complete = false;   // end_frame lies inside the horizon

  int span() const { return deadline_frame - arrival_frame + 1; }
  bool contains(int t) const { return arrival_frame <= t && t <= end_frame; }

  friend bool operator==(const SduWindow&, const SduWindow&) = default;
};

inline SduWindow make_window(const FlowSpec& f, int arrival, int horizon) {
  SduWindow w;
  w.flow_id = f.id;
  w.arrival_frame = arrival;
  w.deadline_frame = arrival + f.deadline - 1;
  w.end_frame = arrival + f.period - 1;
  w.demand = f.data_size;
  w.complete = w.end_frame < horizon;
  return w;
}

/// Windows arriving before `horizon`, starting at the join frame.
inline std::vector<SduWindow> windows_of(const FlowSpec& f, int horizon) {
  if (horizon < 1) throw UsageError("horizon must be at least 1 frame");
  std::vector<SduWindow> out;
  for (int a = f.join_frame; a < horizon; a += f.period) out.push_back(make_window(f, a, horizon));
  return out;
}

/// The window of `f` whose period contains frame `t`, if the flow has joined.
inline std::optional<SduWindow> window_at(const FlowSpec& f, int t, int horizon) {
  if (t < f.join_frame) return std::nullopt;
  int k = (t - f.join_frame) / f.period;
  return make_window(f, f.join_frame + k * f.period, horizon);
}

/// Least common multiple of all periods; the schedule repeats over it.
inline std::int64_t lcm_cycle(std::span<const FlowSpec> flows) {
  if (flows.empty()) throw ScenarioError("cannot take the cycle of an empty flow set");
  std::int64_t acc = 1;
  for (const auto& f : flows) {
    if (f.period < 1) throw ScenarioError("period must be at least 1 frame");
    std::int64_t g = std::gcd(acc, static_cast<std::int64_t>(f.period));
    std::int64_t step = f.period / g;
    if (acc > std::numeric_limits<std::int64_t>::max() / step)
      throw ScenarioError("period LCM overflows 64 bits");
    acc *= step;
  }
  return acc;
}

}  // namespace ugs
