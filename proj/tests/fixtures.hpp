#pragma once

#include <array>
#include <vector>

#include "ugs/dynamics.hpp"
#include "ugs/flow.hpp"
#include "ugs/grid.hpp"

namespace ugs::testing {

inline ResourceAmount u(std::int64_t units) { return ResourceAmount::units(units); }

// Five static connections, capacity 420 bytes/frame, cycle 12.
inline std::vector<FlowSpec> example1() {
  return {FlowSpec::make(1, u(540), 3), FlowSpec::make(2, u(80), 4), FlowSpec::make(3, u(900), 6),
          FlowSpec::make(4, u(120), 6), FlowSpec::make(5, u(600), 12)};
}

// Example 1 with fractional per-frame shares (C1 = 500, C4 = 200).
inline std::vector<FlowSpec> example2() {
  auto f = example1();
  f[0].data_size = u(500);
  f[3].data_size = u(200);
  return f;
}

// Example 1 plus C6 (500 every 4 frames) joining at frame 15.
inline std::vector<FlowSpec> example3() {
  auto f = example1();
  f.push_back(FlowSpec::make(6, u(500), 4, 4, 15));
  return f;
}

// Example 1 with deadlines shorter than periods.
inline std::vector<FlowSpec> example4() {
  auto f = example1();
  const int deadlines[] = {2, 4, 4, 4, 6};
  for (std::size_t i = 0; i < f.size(); ++i) f[i].deadline = deadlines[i];
  return f;
}

inline SchedulerConfig config(Algorithm a, int horizon = 12, std::int64_t capacity = 420) {
  SchedulerConfig c;
  c.algorithm = a;
  c.capacity = u(capacity);
  c.horizon = horizon;
  return c;
}

using Row = std::array<int, 5>;

// EDF allocations, frames 0..11.
inline const std::array<Row, 12> kEdfRows = {{
    {420, 0, 0, 0, 0},
    {120, 80, 220, 0, 0},
    {0, 0, 420, 0, 0},
    {420, 0, 0, 0, 0},
    {120, 0, 260, 40, 0},
    {0, 80, 0, 80, 260},
    {420, 0, 0, 0, 0},
    {120, 0, 300, 0, 0},
    {0, 0, 420, 0, 0},
    {420, 0, 0, 0, 0},
    {0, 0, 80, 0, 340},
    {120, 80, 100, 120, 0},
}};

// SWIM frame-0 trace, frames 0..2 after each of the four swaps.
inline const std::array<std::array<Row, 3>, 4> kSwimTrace = {{
    {{{200, 0, 150, 20, 50}, {160, 40, 150, 20, 50}, {180, 20, 150, 20, 50}}},
    {{{220, 0, 150, 0, 50}, {140, 40, 150, 40, 50}, {180, 20, 150, 20, 50}}},
    {{{270, 0, 150, 0, 0}, {90, 40, 150, 40, 100}, {180, 20, 150, 20, 50}}},
    {{{420, 0, 0, 0, 0}, {0, 40, 240, 40, 100}, {120, 20, 210, 20, 50}}},
}};

// SWIM final allocations, frames 0..11.
inline const std::array<Row, 12> kSwimRows = {{
    {420, 0, 0, 0, 0},
    {0, 0, 420, 0, 0},
    {120, 20, 0, 0, 280},
    {360, 60, 0, 0, 0},
    {0, 0, 420, 0, 0},
    {180, 60, 60, 120, 0},
    {420, 0, 0, 0, 0},
    {0, 20, 400, 0, 0},
    {120, 0, 0, 0, 300},
    {420, 0, 0, 0, 0},
    {0, 0, 420, 0, 0},
    {120, 80, 80, 120, 20},
}};

inline bool row_equals(const AllocationGrid& g, int t, const Row& row) {
  for (int c = 0; c < 5; ++c) {
    if (g.cell(t, c + 1) != u(row[c])) return false;
  }
  return true;
}

inline std::vector<FlowLifetime> lifetimes(std::span<const FlowSpec> flows, int horizon) {
  std::vector<FlowLifetime> out;
  for (const auto& f : flows) out.push_back({f, horizon});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.flow.id < b.flow.id; });
  return out;
}

}  // namespace ugs::testing
