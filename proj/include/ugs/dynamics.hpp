#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <span>
#include <vector>

#include "ugs/admission.hpp"
#include "ugs/schedulers/common.hpp"
#include "ugs/schedulers/edf.hpp"
#include "ugs/schedulers/eqa.hpp"
#include "ugs/schedulers/swim.hpp"

namespace ugs {

struct JoinEvent {
  FlowSpec flow;
  int at_frame = 0;
};

struct LeaveEvent {
  int flow_id = 0;
  int at_frame = 0;

  friend bool operator==(const LeaveEvent&, const LeaveEvent&) = default;
};

struct Rejection {
  int flow_id = 0;
  int frame = 0;
  ResourceAmount load;  // per-frame load at the time of the request
  std::string reason;
};

namespace dynamics_detail {

// Re-spreads what an existing flow still needs in its current window over
// the frames from `at` to its deadline that still hold the value the equal
// allocation gave them. Cells that swapping changed are pre-allocations and
// are kept verbatim. Frames past the horizon count as unchanged so a
// truncated window is not squeezed into the frames that remain.
inline std::optional<SpreadJob> respread_job(const ScheduleState& s, int col, int at) {
  const auto& g = s.grid;
  auto w = window_at(s.flows[col], at, g.horizon());
  if (!w || w->deadline_frame < at) return std::nullopt;

  SpreadJob job{w->flow_id, {}, {}};
  ResourceAmount fixed;
  for (int u = w->arrival_frame; u < at; ++u) fixed += g.at(u, col);
  for (int u = at; u <= w->deadline_frame; ++u) {
    if (u >= g.horizon() || g.at(u, col) == s.initial.at(u, col))
      job.frames.push_back(u);
    else
      fixed += g.at(u, col);
  }
  // swaps conserve window totals, so this is what the free frames hold now
  job.amount = std::max(w->demand - fixed, ResourceAmount{});
  if (job.frames.empty()) return std::nullopt;
  return job;
}

inline std::vector<SpreadJob> flow_jobs(const FlowSpec& f, int horizon, int from) {
  std::vector<SpreadJob> jobs;
  for (const auto& w : windows_of(f, horizon)) {
    if (w.deadline_frame >= from) jobs.push_back(window_job(w, from));
  }
  return jobs;
}

inline void check_capacity(const AllocationGrid& g, int from, int to) {
  for (int t = from; t < std::min(to, g.horizon()); ++t) {
    if (grid_frame_sum(g, t) > g.capacity())
      throw SchedulingError("per-frame allocation " + grid_frame_sum(g, t).to_string() + " exceeds capacity " +
                                g.capacity().to_string(),
                            t, -1);
  }
}

}  // namespace dynamics_detail

/// Admits the flows joining at frame `at` (in id order) and initializes
/// their allocation; frames before `at` are untouched. Outside EDF the
/// existing flows' windows from `at` on are spread again around their
/// pre-allocations, so rounding is decided jointly. A flow is rejected,
/// leaving the state as it was, if admission fails or its equal allocation
/// cannot be rounded into the spare capacity. Returns the number admitted.
inline int apply_joins(ScheduleState& s, std::span<const FlowSpec> joining, int at, bool enforce_admission = true,
                       std::vector<Rejection>* rejections = nullptr) {
  using namespace dynamics_detail;
  const int H = s.grid.horizon();
  if (at < 0 || at >= H) throw UsageError("join frame outside horizon");
  std::vector<FlowSpec> order(joining.begin(), joining.end());
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.id < b.id; });

  // existing flows are rounded again together with the newcomers
  std::vector<SpreadJob> jobs;
  if (s.config.algorithm != Algorithm::Edf) {
    for (int c = 0; c < s.grid.flow_count(); ++c) {
      if (!s.active(c, at)) continue;
      if (auto j = respread_job(s, c, at)) jobs.push_back(std::move(*j));
      auto now = *window_at(s.flows[c], at, H);
      for (const auto& w : windows_of(s.flows[c], H)) {
        if (w.arrival_frame > now.end_frame) jobs.push_back(window_job(w));
      }
    }
  }

  int admitted = 0;
  for (const auto& f : order) {
    validate(f);
    if (f.join_frame != at) throw UsageError("flow " + std::to_string(f.id) + " does not join at frame " + std::to_string(at));
    if (s.grid.has_flow(f.id)) throw ScenarioError("flow id " + std::to_string(f.id) + " joined twice");
    auto reject = [&](const std::string& why) {
      if (rejections) rejections->push_back({f.id, at, s.load.per_frame_load(), why});
    };

    auto d = admit(s.load, f);
    if (!d.accepted && enforce_admission) {
      reject("per-frame load would exceed capacity " + s.load.capacity.to_string());
      continue;
    }
    ScheduleState next = s;
    next.load.load.add(f);
    next.add_flow(f);
    if (s.config.algorithm == Algorithm::Edf) {
      s = std::move(next);
      ++admitted;
      continue;
    }
    auto trial = jobs;
    auto mine = flow_jobs(f, H, at);
    trial.insert(trial.end(), mine.begin(), mine.end());
    auto grid = next.grid;
    if (!place_spread(grid, trial, true)) {
      if (enforce_admission) {
        reject("rounded equal allocation does not fit the spare capacity");
        continue;
      }
      grid = next.grid;
      place_spread(grid, trial, false);
    }
    next.grid = std::move(grid);
    for (const auto& j : trial) {
      int col = next.grid.column_of(j.flow_id);
      for (int t : j.frames) {
        if (t < H) next.initial.at(t, col) = next.grid.at(t, col);
      }
    }
    jobs = std::move(trial);
    s = std::move(next);
    ++admitted;
  }
  return admitted;
}

inline bool apply_join(ScheduleState& s, const JoinEvent& e, bool enforce_admission = true,
                       std::vector<Rejection>* rejections = nullptr) {
  if (e.flow.join_frame != e.at_frame) throw UsageError("join event frame differs from the flow's join_frame");
  return apply_joins(s, std::span(&e.flow, 1), e.at_frame, enforce_admission, rejections) == 1;
}

/// Removes a flow from `at_frame` on. Its remaining cells are zeroed and the
/// freed capacity is left unused.
inline void apply_leave(ScheduleState& s, int flow_id, int at_frame) {
  if (!s.grid.has_flow(flow_id)) throw UsageError("leave for unknown flow id " + std::to_string(flow_id));
  int col = s.grid.column_of(flow_id);
  if (!s.active(col, at_frame)) throw UsageError("flow " + std::to_string(flow_id) + " is not active at frame " +
                                                 std::to_string(at_frame));
  for (int t = at_frame; t < s.grid.horizon(); ++t) s.grid.at(t, col) = {};
  s.until[col] = at_frame;
  s.load = release(s.load, s.flows[col]);
}

struct ScheduleResult {
  AllocationGrid grid;
  std::vector<FlowLifetime> flows;  // admitted flows, grid column order
  std::vector<Rejection> rejections;
  std::vector<DeadlineMiss> misses;
  SwimTrace trace;
};

struct RunOptions {
  bool enforce_admission = true;
  bool record_moves = true;
};

/// Frame-driven run of one algorithm: at each frame, leaves are applied,
/// then joins (in id order, through admission), then the algorithm's own
/// work for that frame.
inline ScheduleResult run_schedule(std::span<const FlowSpec> flows, std::span<const LeaveEvent> leaves,
                                   const SchedulerConfig& cfg, const RunOptions& opts = {}) {
  validate(flows);
  if (cfg.horizon < 1) throw UsageError("horizon must be at least 1 frame");
  if (cfg.min_burst_size < ResourceAmount{}) throw ConfigError("min_burst_size must be non-negative");

  std::vector<FlowSpec> joins(flows.begin(), flows.end());
  std::sort(joins.begin(), joins.end(), [](const auto& a, const auto& b) {
    return std::tie(a.join_frame, a.id) < std::tie(b.join_frame, b.id);
  });
  std::vector<LeaveEvent> exits(leaves.begin(), leaves.end());
  std::sort(exits.begin(), exits.end(), [](const auto& a, const auto& b) {
    return std::tie(a.at_frame, a.flow_id) < std::tie(b.at_frame, b.flow_id);
  });

  std::map<int, int> leave_at;
  for (const auto& e : exits) {
    if (e.at_frame < 0) throw UsageError("leave frame must be non-negative");
    if (std::none_of(joins.begin(), joins.end(), [&](const auto& f) { return f.id == e.flow_id; }))
      throw UsageError("leave for unknown flow id " + std::to_string(e.flow_id));
    if (!leave_at.emplace(e.flow_id, e.at_frame).second)
      throw UsageError("flow " + std::to_string(e.flow_id) + " leaves twice");
  }

  ScheduleState s(cfg);
  s.trace.record_moves = opts.record_moves;
  ScheduleResult r;
  std::size_t next_join = 0, next_exit = 0;
  for (int t = 0; t < cfg.horizon; ++t) {
    for (; next_exit < exits.size() && exits[next_exit].at_frame == t; ++next_exit) {
      // rejected, or leaving before it ever joined
      if (!s.grid.has_flow(exits[next_exit].flow_id)) continue;
      apply_leave(s, exits[next_exit].flow_id, t);
    }
    std::vector<FlowSpec> now;
    for (; next_join < joins.size() && joins[next_join].join_frame == t; ++next_join) {
      if (auto it = leave_at.find(joins[next_join].id); it != leave_at.end() && it->second <= t) continue;
      now.push_back(joins[next_join]);
    }
    if (!now.empty() && apply_joins(s, now, t, opts.enforce_admission, &r.rejections) > 0 &&
        cfg.algorithm != Algorithm::Edf)
      dynamics_detail::check_capacity(s.grid, t, cfg.horizon);

    switch (cfg.algorithm) {
      case Algorithm::Eqa:
        break;
      case Algorithm::Edf:
        edf_frame(s, t, &r.misses);
        break;
      case Algorithm::Swim:
        consolidate_frame(s.grid, t, s.flows, cfg, &s.trace);
        break;
    }
  }

  r.grid = std::move(s.grid);
  r.flows = s.lifetimes();
  r.trace = std::move(s.trace);
  return r;
}

namespace dynamics_detail {

inline AllocationGrid static_run(std::span<const FlowSpec> flows, SchedulerConfig cfg, Algorithm a,
                                 SwimTrace* trace = nullptr) {
  cfg.algorithm = a;
  auto r = run_schedule(flows, {}, cfg, RunOptions{false, trace != nullptr});
  if (!r.misses.empty())
    throw SchedulingError("deadline missed with " + r.misses.front().outstanding.to_string() + " outstanding",
                          r.misses.front().deadline_frame, r.misses.front().flow_id);
  if (trace) *trace = std::move(r.trace);
  return std::move(r.grid);
}

}  // namespace dynamics_detail

/// Equal allocation of a flow set, no admission step. Throws naming the
/// first frame whose allocation exceeds capacity.
inline AllocationGrid eqa_schedule(std::span<const FlowSpec> flows, const SchedulerConfig& cfg) {
  return dynamics_detail::static_run(flows, cfg, Algorithm::Eqa);
}

inline AllocationGrid edf_schedule(std::span<const FlowSpec> flows, const SchedulerConfig& cfg) {
  return dynamics_detail::static_run(flows, cfg, Algorithm::Edf);
}

/// SWIM's starting point; identical to the equal allocation.
inline AllocationGrid swim_init(std::span<const FlowSpec> flows, const SchedulerConfig& cfg) {
  return eqa_schedule(flows, cfg);
}

inline AllocationGrid swim_schedule(std::span<const FlowSpec> flows, const SchedulerConfig& cfg,
                                    SwimTrace* trace = nullptr) {
  return dynamics_detail::static_run(flows, cfg, Algorithm::Swim, trace);
}

}  // namespace ugs
