#pragma once

#include <algorithm>
#include <climits>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "ugs/schedulers/common.hpp"

namespace ugs {

// Swapping min-max consolidation. Within a frame the connection holding the
// most resource (max-res) absorbs the allocation of the one holding the
// least (min-res); the max-res pays the same amount back in a later frame of
// its own window, no later than the min-res's deadline. Frame sums and window
// totals never change, so the equal-allocation starting point keeps its
// throughput and every window still finishes on its deadline frame as long
// as the deadline-frame cell is protected by a positive MinBurstSize.

namespace swim_detail {

inline ResourceAmount next_cell(const AllocationGrid& g, int t, int col) {
  return t + 1 < g.horizon() ? g.at(t + 1, col) : ResourceAmount{};
}

/// What `col` can still surrender at frame u: its cell, less the min-burst
/// floor on its deadline frame.
inline ResourceAmount surrenderable(const AllocationGrid& g, const SduWindow& w, int col, int u,
                                    ResourceAmount min_burst) {
  auto v = g.at(u, col);
  if (u == w.deadline_frame) v -= min_burst;
  return std::max(v, ResourceAmount{});
}

inline int last_payback_frame(const AllocationGrid& g, const SduWindow& w, int limit) {
  return std::min({w.deadline_frame, limit, g.horizon() - 1});
}

inline ResourceAmount surrender_capacity(const AllocationGrid& g, std::span<const FlowSpec> flows, int col, int t,
                                         int limit, ResourceAmount min_burst) {
  auto w = window_at(flows[col], t, g.horizon());
  if (!w) return {};
  ResourceAmount s;
  for (int u = t + 1; u <= last_payback_frame(g, *w, limit); ++u) s += surrenderable(g, *w, col, u, min_burst);
  return s;
}

/// Receiver choice: largest cell, then larger next-frame cell, then later
/// deadline, then lower id. Only flows holding at least `floor` at t and able
/// to pay back by frame `limit` qualify.
inline std::optional<int> receiver_column(const AllocationGrid& g, int t, std::span<const FlowSpec> flows,
                                          ResourceAmount min_burst, const std::vector<bool>& excluded,
                                          int limit, ResourceAmount floor = {}) {
  std::optional<int> best;
  auto key = [&](int c) {
    auto w = window_at(flows[c], t, g.horizon());
    return std::tuple(g.at(t, c), next_cell(g, t, c), w->deadline_frame, -flows[c].id);
  };
  for (int c = 0; c < g.flow_count(); ++c) {
    if (excluded[c] || !g.at(t, c).positive() || g.at(t, c) < floor) continue;
    if (!surrender_capacity(g, flows, c, t, limit, min_burst).positive()) continue;
    if (!best || key(c) > key(*best)) best = c;
  }
  return best;
}

/// Giver choice: smallest cell, then earlier deadline, then smaller
/// next-frame cell, then lower id. A flow never gives from its deadline frame
/// and never holds more than the receiver it gives to.
inline std::optional<int> giver_column(const AllocationGrid& g, int t, std::span<const FlowSpec> flows,
                                       int receiver_col, const std::vector<bool>& stuck) {
  const auto ceiling = receiver_col >= 0 ? g.at(t, receiver_col) : ResourceAmount{};
  std::optional<int> best;
  auto key = [&](int c) {
    auto w = window_at(flows[c], t, g.horizon());
    return std::tuple(g.at(t, c), w->deadline_frame, next_cell(g, t, c), flows[c].id);
  };
  for (int c = 0; c < g.flow_count(); ++c) {
    if (c == receiver_col || stuck[c] || !g.at(t, c).positive()) continue;
    if (receiver_col >= 0 && g.at(t, c) > ceiling) continue;
    auto w = window_at(flows[c], t, g.horizon());
    if (!w || t >= w->deadline_frame) continue;
    if (!best || key(c) < key(*best)) best = c;
  }
  return best;
}

inline void check_aligned(const AllocationGrid& g, std::span<const FlowSpec> flows) {
  if (static_cast<int>(flows.size()) != g.flow_count())
    throw UsageError("flow list does not match the grid's columns");
  for (int c = 0; c < g.flow_count(); ++c) {
    if (flows[c].id != g.flow_ids()[c]) throw UsageError("flow list must be sorted by id to match the grid");
  }
}

}  // namespace swim_detail

/// The max-res connection of frame t, or none when no flow can absorb more.
inline std::optional<int> select_receiver(const AllocationGrid& g, int t, std::span<const FlowSpec> flows,
                                          ResourceAmount min_burst) {
  swim_detail::check_aligned(g, flows);
  std::vector<bool> none(g.flow_count(), false);
  auto c = swim_detail::receiver_column(g, t, flows, min_burst, none, INT_MAX);
  if (!c) return std::nullopt;
  return flows[*c].id;
}

/// The min-res connection of frame t other than `receiver_id`.
inline std::optional<int> select_giver(const AllocationGrid& g, int t, std::span<const FlowSpec> flows,
                                       int receiver_id) {
  swim_detail::check_aligned(g, flows);
  std::vector<bool> none(g.flow_count(), false);
  int rc = g.has_flow(receiver_id) ? g.column_of(receiver_id) : -1;
  auto c = swim_detail::giver_column(g, t, flows, rc, none);
  if (!c) return std::nullopt;
  return flows[*c].id;
}

/// Applies one swap after validating it. A move that would break a
/// deadline, a window boundary, or the min-burst floor is rejected.
inline void apply_swap(AllocationGrid& g, std::span<const FlowSpec> flows, const SwapMove& m,
                       ResourceAmount min_burst) {
  auto reject = [&](const std::string& why) { return SchedulingError("rejected swap: " + why, m.frame, m.giver); };
  if (m.amount < ResourceAmount{}) throw reject("negative amount");
  if (m.amount.zero()) return;
  if (m.giver == m.receiver) throw reject("giver and receiver are the same flow");
  if (!(0 <= m.frame && m.frame < m.payback_frame && m.payback_frame < g.horizon()))
    throw reject("payback frame must follow the swap frame inside the horizon");
  int gc = g.column_of(m.giver);
  int rc = g.column_of(m.receiver);
  if (flows[gc].id != m.giver || flows[rc].id != m.receiver) throw UsageError("flow list does not match grid");
  auto gw = window_at(flows[gc], m.frame, g.horizon());
  auto rw = window_at(flows[rc], m.frame, g.horizon());
  if (!gw || !rw) throw reject("flow not yet joined");
  if (m.payback_frame > gw->deadline_frame) throw reject("payback lands after the giver's deadline");
  if (m.payback_frame > rw->deadline_frame) throw reject("payback frame outside the receiver's window");
  if (g.at(m.frame, gc) < m.amount) throw reject("giver holds less than the amount");
  if (g.at(m.payback_frame, rc) < m.amount) throw reject("receiver holds less than the amount at the payback frame");
  if (m.payback_frame == rw->deadline_frame && g.at(m.payback_frame, rc) - m.amount < min_burst)
    throw reject("receiver's deadline-frame burst would drop below the minimum");
  g.at(m.frame, gc) -= m.amount;
  g.at(m.frame, rc) += m.amount;
  g.at(m.payback_frame, gc) += m.amount;
  g.at(m.payback_frame, rc) -= m.amount;
}

/// Consolidates frame t. Repeatedly takes the max-res receiver and the
/// min-res giver and moves the giver's whole cell to the receiver, paid back
/// earliest-first from the receiver's later frames. If the receiver runs out
/// the next max-res takes over; a giver nobody can absorb keeps the rest.
inline void consolidate_frame(AllocationGrid& g, int t, std::span<const FlowSpec> flows,
                              const SchedulerConfig& cfg, SwimTrace* trace = nullptr) {
  using namespace swim_detail;
  check_aligned(g, flows);
  const int n = g.flow_count();
  std::vector<bool> stuck(n, false);
  long pairings = 0;
  std::vector<bool> none(n, false);

  while (positive_cells(g, t) > 1) {
    auto receiver = receiver_column(g, t, flows, cfg.min_burst_size, none, INT_MAX);
    if (!receiver) break;
    auto giver = giver_column(g, t, flows, *receiver, stuck);
    if (!giver) break;

    const int gc = *giver;
    const int limit = window_at(flows[gc], t, g.horizon())->deadline_frame;
    std::vector<bool> tried(n, false);
    tried[gc] = true;
    std::optional<int> rc = receiver;
    while (g.at(t, gc).positive() && rc) {
      ++pairings;
      auto rw = *window_at(flows[*rc], t, g.horizon());
      for (int u = t + 1; u <= last_payback_frame(g, rw, limit) && g.at(t, gc).positive(); ++u) {
        auto x = std::min(surrenderable(g, rw, *rc, u, cfg.min_burst_size), g.at(t, gc));
        if (!x.positive()) continue;
        SwapMove m{t, flows[gc].id, flows[*rc].id, u, x};
        apply_swap(g, flows, m, cfg.min_burst_size);
        if (trace) {
          ++trace->counters.swaps;
          if (trace->record_moves) trace->moves.push_back(m);
        }
      }
      tried[*rc] = true;
      if (g.at(t, gc).positive()) rc = receiver_column(g, t, flows, cfg.min_burst_size, tried, limit, g.at(t, gc));
    }
    if (g.at(t, gc).positive()) stuck[gc] = true;
  }

  if (trace) {
    trace->counters.pairings += pairings;
    trace->counters.max_pairings_in_frame = std::max(trace->counters.max_pairings_in_frame, pairings);
  }
}

}  // namespace ugs
