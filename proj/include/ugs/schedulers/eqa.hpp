#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <tuple>
#include <vector>

#include "ugs/schedulers/common.hpp"

namespace ugs {

/// An amount to be spread evenly over a set of frames of one flow. Frames at
/// or past the horizon are virtual: they take their share but nothing is
/// written for them.
struct SpreadJob {
  int flow_id = 0;
  std::vector<int> frames;  // ascending
  ResourceAmount amount;
};

inline SpreadJob window_job(const SduWindow& w, int from = 0) {
  SpreadJob j{w.flow_id, {}, w.demand};
  for (int t = std::max(from, w.arrival_frame); t <= w.deadline_frame; ++t) j.frames.push_back(t);
  return j;
}

namespace eqa_detail {

// Residue hundredths still to place for one job; mark[i] set means frame
// job->frames[i] carries one extra hundredth.
struct Residue {
  std::int64_t extras;
  const SpreadJob* job;
  int col;
  std::vector<char> mark;

  int index_of(int t) const {
    auto it = std::lower_bound(job->frames.begin(), job->frames.end(), t);
    return it != job->frames.end() && *it == t ? static_cast<int>(it - job->frames.begin()) : -1;
  }
};

// Places one more extra of residues[src] by shifting other extras along an
// augmenting path, frames latest-first. Returns false if none exists.
inline bool augment(std::vector<Residue>& residues, std::map<int, std::int64_t>& room, std::size_t src) {
  struct Step {
    std::size_t job;
    int from;  // frame the job's extra moves away from; -1 for the new extra
  };
  std::map<int, Step> parent;
  std::vector<int> queue;
  auto visit = [&](std::size_t j, int from) {
    const auto& r = residues[j];
    for (int i = static_cast<int>(r.job->frames.size()) - 1; i >= 0; --i) {
      int t = r.job->frames[i];
      if (r.mark[i] || parent.count(t)) continue;
      parent.emplace(t, Step{j, from});
      queue.push_back(t);
    }
  };
  visit(src, -1);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int t = queue[head];
    if (room[t] > 0) {
      --room[t];
      for (int at = t;;) {
        auto [j, from] = parent.at(at);
        residues[j].mark[residues[j].index_of(at)] = 1;
        if (from < 0) break;
        residues[j].mark[residues[j].index_of(from)] = 0;
        at = from;
      }
      --residues[src].extras;
      return true;
    }
    for (std::size_t j = 0; j < residues.size(); ++j) {
      int i = residues[j].index_of(t);
      if (i >= 0 && residues[j].mark[i]) visit(j, t);
    }
  }
  return false;
}

}  // namespace eqa_detail

/// Writes the jobs into the grid. Each frame of a job gets the integer
/// quotient; the remaining hundredths go one per frame, as late as possible.
/// With `respect_capacity` the leftovers of all jobs are placed together:
/// first greedily in reverse time, most urgent (latest first frame) first,
/// then by augmenting paths for whatever the greedy pass could not fit.
/// Returns false if the frames cannot hold them; the grid is then partially
/// written and should be discarded.
inline bool place_spread(AllocationGrid& g, std::span<const SpreadJob> jobs, bool respect_capacity) {
  using eqa_detail::Residue;
  const int H = g.horizon();
  std::vector<Residue> left;
  for (const auto& j : jobs) {
    if (j.frames.empty()) {
      if (!j.amount.zero()) return false;
      continue;
    }
    const int col = g.column_of(j.flow_id);
    const auto n = static_cast<std::int64_t>(j.frames.size());
    auto base = ResourceAmount::hundredths(j.amount.raw() / n);
    for (int t : j.frames) {
      if (t < H) g.at(t, col) = base;
    }
    left.push_back({j.amount.raw() % n, &j, col, std::vector<char>(j.frames.size(), 0)});
  }

  if (!respect_capacity) {
    for (auto& [extras, j, col, mark] : left) {
      for (auto it = j->frames.rbegin(); it != j->frames.rend() && extras > 0; ++it, --extras) {
        if (*it < H) g.at(*it, col) += ResourceAmount::hundredths(1);
      }
    }
    return true;
  }

  // frames past the horizon are virtual and never full
  std::map<int, std::int64_t> room;
  for (const auto& l : left) {
    for (int t : l.job->frames) {
      if (room.count(t)) continue;
      if (t >= H) {
        room[t] = std::numeric_limits<std::int64_t>::max();
        continue;
      }
      room[t] = (g.capacity() - grid_frame_sum(g, t)).raw();
      if (room[t] < 0) return false;
    }
  }

  std::vector<Residue*> ready;
  for (auto it = room.rbegin(); it != room.rend(); ++it) {
    const int t = it->first;
    ready.clear();
    for (auto& l : left) {
      if (l.extras > 0 && l.index_of(t) >= 0) ready.push_back(&l);
    }
    std::sort(ready.begin(), ready.end(), [](const Residue* a, const Residue* b) {
      return std::tuple(-a->job->frames.front(), -a->extras, a->col) <
             std::tuple(-b->job->frames.front(), -b->extras, b->col);
    });
    for (std::size_t k = 0; k < ready.size() && it->second > 0; ++k) {
      ready[k]->mark[ready[k]->index_of(t)] = 1;
      --ready[k]->extras;
      --it->second;
    }
  }

  for (std::size_t k = 0; k < left.size(); ++k) {
    while (left[k].extras > 0) {
      if (!eqa_detail::augment(left, room, k)) return false;
    }
  }

  for (const auto& l : left) {
    for (std::size_t i = 0; i < l.mark.size(); ++i) {
      if (l.mark[i] && l.job->frames[i] < H) g.at(l.job->frames[i], l.col) += ResourceAmount::hundredths(1);
    }
  }
  return true;
}

}  // namespace ugs
