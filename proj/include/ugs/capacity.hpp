#pragma once

#include <string>

#include "ugs/errors.hpp"

namespace ugs {

// OFDMA TDD frame parameters. Defaults: 10 MHz, 1024-FFT, 5 ms frame,
// DL:UL 29:18 symbol columns, PUSC.
struct PhyProfile {
  double frame_length_ms = 5.0;
  double system_bandwidth_mhz = 10.0;
  int fft_size = 1024;
  double cyclic_prefix = 0.125;
  int dl_symbol_columns = 29;
  int ul_symbol_columns = 18;
  int preamble_columns = 1;
  int map_columns = 4;
  int dl_subchannels = 30;
  int dl_symbols_per_slot = 2;
  int ul_subchannels = 35;
  int ul_tile_symbols = 5;
  int ul_overhead_columns = 3;
};

inline int dl_data_columns(const PhyProfile& p) {
  int cols = p.dl_symbol_columns - p.preamble_columns - p.map_columns;
  if (cols < 0) throw ConfigError("preamble and MAP columns exceed the downlink subframe");
  return cols;
}

inline int dl_slots_per_frame(const PhyProfile& p) {
  if (p.dl_subchannels < 0) throw ConfigError("negative downlink subchannel count");
  if (p.dl_symbols_per_slot <= 0) throw ConfigError("dl_symbols_per_slot must be positive");
  int cols = dl_data_columns(p);
  if (cols % p.dl_symbols_per_slot != 0)
    throw ConfigError(std::to_string(cols) + " downlink data columns do not divide into " +
                      std::to_string(p.dl_symbols_per_slot) + "-symbol slots");
  return p.dl_subchannels * (cols / p.dl_symbols_per_slot);
}

// The tile-symbol count is taken from the profile as given; only the
// overhead bookkeeping is checked.
inline int ul_slots_per_frame(const PhyProfile& p) {
  if (p.ul_subchannels < 0 || p.ul_tile_symbols < 0) throw ConfigError("negative uplink slot parameters");
  if (p.ul_overhead_columns < 0 || p.ul_overhead_columns > p.ul_symbol_columns)
    throw ConfigError("uplink overhead exceeds the uplink subframe");
  return p.ul_tile_symbols * p.ul_subchannels;
}

}  // namespace ugs
