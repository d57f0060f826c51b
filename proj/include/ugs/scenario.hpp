#pragma once

#include <charconv>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ugs/capacity.hpp"
#include "ugs/dynamics.hpp"
#include "ugs/metrics.hpp"

namespace ugs {

struct Scenario {
  std::vector<FlowSpec> flows;
  std::vector<LeaveEvent> leaves;
  PhyProfile phy;
  std::optional<ResourceAmount> capacity;  // overrides the profile's downlink slots
  std::optional<int> horizon;

  ResourceAmount effective_capacity() const {
    return capacity ? *capacity : ResourceAmount::units(dl_slots_per_frame(phy));
  }

  /// Explicit horizon, else the smallest whole number of cycles that reaches
  /// past every join.
  int effective_horizon() const {
    if (horizon) return *horizon;
    auto cycle = lcm_cycle(flows);
    std::int64_t last_join = 0;
    for (const auto& f : flows) last_join = std::max<std::int64_t>(last_join, f.join_frame);
    auto h = (last_join / cycle + 1) * cycle;
    if (h > 1'000'000) throw ScenarioError("cycle of " + std::to_string(cycle) + " frames is too long; set horizon=");
    return static_cast<int>(h);
  }
};

namespace scenario_detail {

inline std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <class T>
T number(std::string_view s, const std::string& where) {
  T v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size())
    throw ScenarioError(where + ": expected a number, got '" + std::string(s) + "'");
  return v;
}

inline void set_phy(PhyProfile& p, std::string_view key, std::string_view value, const std::string& where) {
  using Setter = std::function<void(PhyProfile&, std::string_view)>;
  auto i = [&](int PhyProfile::*m) -> Setter {
    return [m, where](PhyProfile& p, std::string_view v) { p.*m = number<int>(v, where); };
  };
  auto d = [&](double PhyProfile::*m) -> Setter {
    return [m, where](PhyProfile& p, std::string_view v) { p.*m = number<double>(v, where); };
  };
  const std::map<std::string_view, Setter> keys{
      {"frame_length_ms", d(&PhyProfile::frame_length_ms)},
      {"system_bandwidth_mhz", d(&PhyProfile::system_bandwidth_mhz)},
      {"fft_size", i(&PhyProfile::fft_size)},
      {"cyclic_prefix", d(&PhyProfile::cyclic_prefix)},
      {"dl_symbol_columns", i(&PhyProfile::dl_symbol_columns)},
      {"ul_symbol_columns", i(&PhyProfile::ul_symbol_columns)},
      {"preamble_columns", i(&PhyProfile::preamble_columns)},
      {"map_columns", i(&PhyProfile::map_columns)},
      {"dl_subchannels", i(&PhyProfile::dl_subchannels)},
      {"dl_symbols_per_slot", i(&PhyProfile::dl_symbols_per_slot)},
      {"ul_subchannels", i(&PhyProfile::ul_subchannels)},
      {"ul_tile_symbols", i(&PhyProfile::ul_tile_symbols)},
      {"ul_overhead_columns", i(&PhyProfile::ul_overhead_columns)},
  };
  auto it = keys.find(key);
  if (it == keys.end()) throw ScenarioError(where + ": unknown profile key '" + std::string(key) + "'");
  it->second(p, value);
}

inline ResourceAmount amount(std::string_view s, const std::string& where) {
  try {
    return ResourceAmount::parse(s);
  } catch (const ScenarioError& e) {
    throw ScenarioError(where + ": " + e.what());
  }
}

}  // namespace scenario_detail

/// Reads the scenario text format:
///
///   capacity=420            optional, either before or among the flow rows
///   horizon=24              optional
///   id,data_size,period,deadline,join_frame
///   1,540,3,,0              blank deadline means period, blank join means 0
///   [leave]
///   id,at_frame
///   5,6
///   [phy]
///   dl_subchannels=30
///
/// Blank lines and lines starting with '#' are ignored.
inline Scenario parse_scenario(std::istream& in, const std::string& name = "scenario") {
  using namespace scenario_detail;
  enum class Section { Flows, Leave, Phy };
  Scenario s;
  Section section = Section::Flows;
  bool flow_header = false, leave_header = false;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string where = name + ":" + std::to_string(line_no);
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (line.front() == '[') {
      if (line == "[leave]") {
        section = Section::Leave;
      } else if (line == "[phy]") {
        section = Section::Phy;
      } else {
        throw ScenarioError(where + ": unknown section " + std::string(line));
      }
      continue;
    }

    auto eq = line.find('=');
    if (eq != std::string_view::npos) {
      auto key = trim(line.substr(0, eq));
      auto value = trim(line.substr(eq + 1));
      if (section == Section::Phy) {
        set_phy(s.phy, key, value, where);
      } else if (section == Section::Flows && key == "capacity") {
        s.capacity = amount(value, where);
      } else if (section == Section::Flows && key == "horizon") {
        s.horizon = number<int>(value, where);
        if (*s.horizon < 1) throw ScenarioError(where + ": horizon must be at least 1 frame");
      } else {
        throw ScenarioError(where + ": unexpected setting '" + std::string(key) + "'");
      }
      continue;
    }
    if (section == Section::Phy) throw ScenarioError(where + ": expected key=value");

    auto cells = split(line);
    if (section == Section::Flows) {
      if (!flow_header) {
        if (line != "id,data_size,period,deadline,join_frame")
          throw ScenarioError(where + ": expected header id,data_size,period,deadline,join_frame");
        flow_header = true;
        continue;
      }
      if (cells.size() != 5) throw ScenarioError(where + ": expected 5 fields, got " + std::to_string(cells.size()));
      FlowSpec f{number<int>(cells[0], where), amount(cells[1], where), number<int>(cells[2], where), 0,
                 cells[4].empty() ? 0 : number<int>(cells[4], where)};
      f.deadline = cells[3].empty() ? f.period : number<int>(cells[3], where);
      try {
        validate(f);
      } catch (const ScenarioError& e) {
        throw ScenarioError(where + ": " + e.what());
      }
      s.flows.push_back(f);
    } else {
      if (!leave_header) {
        if (line != "id,at_frame") throw ScenarioError(where + ": expected header id,at_frame");
        leave_header = true;
        continue;
      }
      if (cells.size() != 2) throw ScenarioError(where + ": expected 2 fields, got " + std::to_string(cells.size()));
      s.leaves.push_back({number<int>(cells[0], where), number<int>(cells[1], where)});
    }
  }
  if (s.flows.empty()) throw ScenarioError(name + ": no flows");
  validate(s.flows);
  return s;
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open " + path);
  return parse_scenario(in, path);
}

/// Dense long form: every frame, every flow column, zeros included.
inline void write_allocation(std::ostream& out, const AllocationGrid& g) {
  out << "frame,flow_id,amount\n";
  for (int t = 0; t < g.horizon(); ++t) {
    for (int c = 0; c < g.flow_count(); ++c) out << t << ',' << g.flow_ids()[c] << ',' << g.at(t, c) << '\n';
  }
}

inline AllocationGrid read_allocation(std::istream& in, ResourceAmount capacity) {
  using namespace scenario_detail;
  struct Cell {
    int t, id;
    ResourceAmount v;
  };
  std::vector<Cell> cells;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = trim(raw);
    if (line.empty()) continue;
    const std::string where = "allocation:" + std::to_string(line_no);
    if (line_no == 1) {
      if (line != "frame,flow_id,amount") throw ScenarioError(where + ": expected header frame,flow_id,amount");
      continue;
    }
    auto f = split(line);
    if (f.size() != 3) throw ScenarioError(where + ": expected 3 fields");
    cells.push_back({number<int>(f[0], where), number<int>(f[1], where), amount(f[2], where)});
  }
  int horizon = 0;
  for (const auto& c : cells) {
    if (c.t < 0) throw ScenarioError("negative frame in allocation");
    horizon = std::max(horizon, c.t + 1);
  }
  AllocationGrid g(horizon, capacity);
  for (const auto& c : cells) {
    if (!g.has_flow(c.id)) g.add_flow(c.id);
  }
  for (const auto& c : cells) g.set(c.t, c.id, c.v);
  return g;
}

inline void write_metrics(std::ostream& out, const ScheduleMetrics& m) {
  out << "flow_id,mean_delay,jitter,sdu_count\n";
  for (const auto& f : m.per_flow) {
    out << f.flow_id << ',';
    if (f.mean_delay) out << *f.mean_delay;
    out << ',';
    if (f.jitter) out << *f.jitter;
    out << ',' << f.sdu_delays.size() << '\n';
  }
  out << "[totals]\n"
      << "total_bursts=" << m.bursts.total << '\n'
      << "throughput=" << m.throughput.achieved << '\n'
      << "optimal_throughput=" << m.throughput.optimal << '\n'
      << "unused_capacity=" << m.throughput.leftover << '\n';
}

}  // namespace ugs
