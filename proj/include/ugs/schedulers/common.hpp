#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "ugs/admission.hpp"
#include "ugs/errors.hpp"
#include "ugs/flow.hpp"
#include "ugs/grid.hpp"
#include "ugs/resource.hpp"

namespace ugs {

enum class Algorithm { Eqa, Edf, Swim };

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::Eqa, Algorithm::Edf, Algorithm::Swim};

inline std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Eqa: return "eqa";
    case Algorithm::Edf: return "edf";
    case Algorithm::Swim: return "swim";
  }
  return "?";
}

inline Algorithm parse_algorithm(std::string_view s) {
  for (auto a : kAllAlgorithms) {
    if (to_string(a) == s) return a;
  }
  throw UsageError("unknown algorithm '" + std::string(s) + "' (expected eqa, edf or swim)");
}

struct SchedulerConfig {
  Algorithm algorithm = Algorithm::Swim;
  ResourceAmount min_burst_size = ResourceAmount::units(1);
  ResourceAmount capacity;
  int horizon = 0;
};

/// Giver hands `amount` of frame `frame` to receiver; receiver pays the same
/// amount back at `payback_frame`.
struct SwapMove {
  int frame = 0;
  int giver = 0;
  int receiver = 0;
  int payback_frame = 0;
  ResourceAmount amount;

  friend bool operator==(const SwapMove&, const SwapMove&) = default;
};

struct SwimCounters {
  long swaps = 0;
  long pairings = 0;           // giver/receiver pairs examined
  long max_pairings_in_frame = 0;
};

struct SwimTrace {
  std::vector<SwapMove> moves;
  SwimCounters counters;
  bool record_moves = true;
};

/// Mutable engine state shared by all algorithms. `flows` and `until` are
/// aligned with the grid's columns. `initial` holds the values the equal
/// allocation last wrote, so later swaps can be told apart from them.
struct ScheduleState {
  SchedulerConfig config;
  AllocationGrid grid;
  AllocationGrid initial;
  std::vector<FlowSpec> flows;
  std::vector<int> until;
  LoadState load;
  SwimTrace trace;

  explicit ScheduleState(const SchedulerConfig& c)
      : config(c), grid(c.horizon, c.capacity), initial(c.horizon, c.capacity), load{ExactLoad{}, c.capacity} {}

  int add_flow(const FlowSpec& f) {
    int col = grid.add_flow(f.id);
    initial.add_flow(f.id);
    flows.insert(flows.begin() + col, f);
    until.insert(until.begin() + col, grid.horizon());
    return col;
  }

  bool active(int col, int t) const { return t >= flows[col].join_frame && t < until[col]; }

  std::vector<FlowLifetime> lifetimes() const {
    std::vector<FlowLifetime> out;
    for (std::size_t c = 0; c < flows.size(); ++c) out.push_back({flows[c], until[c]});
    return out;
  }
};

}  // namespace ugs
