#pragma once

#include <algorithm>
#include <tuple>
#include <vector>

#include "ugs/schedulers/common.hpp"

namespace ugs {

struct DeadlineMiss {
  int flow_id = 0;
  int deadline_frame = 0;
  ResourceAmount outstanding;
};

/// Fills frame t greedily: active windows in order of deadline frame, ties
/// by larger outstanding demand, then lower flow id. Each takes as much as it
/// still needs or as much as is left.
inline void edf_frame(ScheduleState& s, int t, std::vector<DeadlineMiss>* misses = nullptr) {
  auto& g = s.grid;
  struct Pending {
    int deadline;
    ResourceAmount outstanding;
    int id;
    int col;
  };
  std::vector<Pending> pending;
  for (int c = 0; c < g.flow_count(); ++c) {
    if (!s.active(c, t)) continue;
    auto w = window_at(s.flows[c], t, g.horizon());
    ResourceAmount got;
    for (int u = w->arrival_frame; u < t; ++u) got += g.at(u, c);
    if (got < w->demand) pending.push_back({w->deadline_frame, w->demand - got, s.flows[c].id, c});
  }
  std::sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) {
    return std::tuple(a.deadline, b.outstanding, a.id) < std::tuple(b.deadline, a.outstanding, b.id);
  });
  auto left = g.capacity() - grid_frame_sum(g, t);
  for (auto& p : pending) {
    auto x = std::min(p.outstanding, left);
    if (!x.positive()) continue;
    g.at(t, p.col) += x;
    left -= x;
    p.outstanding -= x;
  }
  if (misses) {
    for (const auto& p : pending) {
      if (p.deadline == t && p.outstanding.positive()) misses->push_back({p.id, t, p.outstanding});
    }
  }
}

}  // namespace ugs
