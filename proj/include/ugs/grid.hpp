#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "ugs/errors.hpp"
#include "ugs/flow.hpp"
#include "ugs/resource.hpp"

namespace ugs {

/// Frames x flows matrix of allocations. Columns are kept sorted by flow id,
/// so two grids built from the same flows compare equal regardless of the
/// order in which flows were added.
class AllocationGrid {
 public:
  AllocationGrid() = default;
  AllocationGrid(int horizon, ResourceAmount capacity) : horizon_(horizon), capacity_(capacity) {
    if (horizon < 0) throw UsageError("negative horizon");
  }

  int horizon() const { return horizon_; }
  ResourceAmount capacity() const { return capacity_; }
  int flow_count() const { return static_cast<int>(ids_.size()); }
  std::span<const int> flow_ids() const { return ids_; }

  bool has_flow(int id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }

  int column_of(int id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) throw UsageError("unknown flow id " + std::to_string(id));
    return static_cast<int>(it - ids_.begin());
  }

  /// Adds an all-zero column; returns its index.
  int add_flow(int id) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it != ids_.end() && *it == id) throw UsageError("flow id " + std::to_string(id) + " already present");
    int col = static_cast<int>(it - ids_.begin());
    int n = flow_count();
    std::vector<ResourceAmount> cells(static_cast<std::size_t>(horizon_) * (n + 1));
    for (int t = 0; t < horizon_; ++t) {
      for (int c = 0; c < n; ++c) cells[index(t, c + (c >= col ? 1 : 0), n + 1)] = cells_[index(t, c, n)];
    }
    ids_.insert(it, id);
    cells_ = std::move(cells);
    return col;
  }

  ResourceAmount at(int t, int col) const { return cells_[checked(t, col)]; }
  ResourceAmount& at(int t, int col) { return cells_[checked(t, col)]; }

  ResourceAmount cell(int t, int id) const { return at(t, column_of(id)); }
  void set(int t, int id, ResourceAmount v) { at(t, column_of(id)) = v; }

  friend bool operator==(const AllocationGrid&, const AllocationGrid&) = default;

 private:
  static std::size_t index(int t, int col, int n) { return static_cast<std::size_t>(t) * n + col; }

  std::size_t checked(int t, int col) const {
    if (t < 0 || t >= horizon_) throw UsageError("frame " + std::to_string(t) + " outside horizon");
    if (col < 0 || col >= flow_count()) throw UsageError("column " + std::to_string(col) + " out of range");
    return index(t, col, flow_count());
  }

  int horizon_ = 0;
  ResourceAmount capacity_;
  std::vector<int> ids_;
  std::vector<ResourceAmount> cells_;
};

inline ResourceAmount grid_frame_sum(const AllocationGrid& g, int t) {
  if (t < 0 || t >= g.horizon()) throw UsageError("frame " + std::to_string(t) + " outside horizon");
  ResourceAmount s;
  for (int c = 0; c < g.flow_count(); ++c) s += g.at(t, c);
  return s;
}

/// Sum of the window's flow over the window's frames that fall inside the grid.
inline ResourceAmount grid_window_sum(const AllocationGrid& g, const SduWindow& w) {
  int col = g.column_of(w.flow_id);
  ResourceAmount s;
  for (int t = std::max(0, w.arrival_frame); t <= std::min(w.end_frame, g.horizon() - 1); ++t) s += g.at(t, col);
  return s;
}

/// Number of positive cells in frame t.
inline int positive_cells(const AllocationGrid& g, int t) {
  int n = 0;
  for (int c = 0; c < g.flow_count(); ++c) n += g.at(t, c).positive() ? 1 : 0;
  return n;
}

/// Last frame (exclusive) in which a flow may hold allocations; the horizon
/// unless it left earlier.
struct FlowLifetime {
  FlowSpec flow;
  int until = 0;
};

/// Checks capacity, non-negativity, causality, and conservation of every
/// complete window. Returns one message per violation; empty means valid.
inline std::vector<std::string> check_grid(const AllocationGrid& g, std::span<const FlowLifetime> flows) {
  std::vector<std::string> errs;
  auto where = [](int t, int id) { return "frame " + std::to_string(t) + ", flow " + std::to_string(id); };
  for (int t = 0; t < g.horizon(); ++t) {
    auto sum = grid_frame_sum(g, t);
    if (sum > g.capacity())
      errs.push_back("frame " + std::to_string(t) + ": sum " + sum.to_string() + " exceeds capacity " +
                     g.capacity().to_string());
    for (int c = 0; c < g.flow_count(); ++c) {
      if (g.at(t, c) < ResourceAmount{}) errs.push_back(where(t, g.flow_ids()[c]) + ": negative cell");
    }
  }
  for (const auto& [f, until] : flows) {
    if (!g.has_flow(f.id)) {
      errs.push_back("flow " + std::to_string(f.id) + " missing from grid");
      continue;
    }
    int col = g.column_of(f.id);
    int end = std::min(until, g.horizon());
    for (int t = 0; t < g.horizon(); ++t) {
      if (!g.at(t, col).positive()) continue;
      if (t < f.join_frame || t >= end) errs.push_back(where(t, f.id) + ": allocation outside the flow's lifetime");
    }
    if (f.join_frame >= end) continue;
    for (const auto& w : windows_of(f, end)) {
      if (!w.complete) continue;
      auto s = grid_window_sum(g, w);
      if (s != w.demand)
        errs.push_back("flow " + std::to_string(f.id) + " window at " + std::to_string(w.arrival_frame) +
                       ": allocated " + s.to_string() + " of " + w.demand.to_string());
    }
  }
  return errs;
}

}  // namespace ugs
