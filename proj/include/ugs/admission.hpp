#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <span>

#include "ugs/flow.hpp"
#include "ugs/resource.hpp"

namespace ugs {

/// Per-frame share a flow reserves: data_size / deadline, rounded up to the
/// hundredth.
inline ResourceAmount demand_share(const FlowSpec& f) {
  auto h = f.data_size.raw();
  return ResourceAmount::hundredths((h + f.deadline - 1) / f.deadline);
}

/// Exact sum of data_size / deadline over a flow set, in hundredths. The
/// rounded-up sum is tracked alongside and used if the fraction overflows.
class ExactLoad {
 public:
  void add(const FlowSpec& f) { accumulate(f, +1); }
  void remove(const FlowSpec& f) { accumulate(f, -1); }

  bool fits(ResourceAmount capacity) const {
    if (overflow_) return ceil_sum_ <= capacity.raw();
    return num_ <= static_cast<__int128>(capacity.raw()) * den_;
  }

  /// Load rounded up to the hundredth.
  ResourceAmount rounded_up() const {
    if (overflow_) return ResourceAmount::hundredths(ceil_sum_);
    auto q = num_ / den_;
    if (num_ % den_ > 0) ++q;
    return ResourceAmount::hundredths(static_cast<std::int64_t>(q));
  }

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    while (b != 0) {
      auto r = a % b;
      a = b;
      b = r;
    }
    return a;
  }

  void accumulate(const FlowSpec& f, int sign) {
    ceil_sum_ += sign * demand_share(f).raw();
    if (overflow_) return;
    constexpr __int128 kLimit = static_cast<__int128>(1) << 100;
    __int128 n = sign * static_cast<__int128>(f.data_size.raw());
    __int128 d = f.deadline;
    auto g = gcd128(den_, d);
    __int128 den = den_ / g * d;
    if (den > kLimit) {
      overflow_ = true;
      return;
    }
    num_ = num_ * (den / den_) + n * (den / d);
    den_ = den;
    auto r = gcd128(num_, den_);
    if (r > 1) {
      num_ /= r;
      den_ /= r;
    }
  }

  __int128 num_ = 0;
  __int128 den_ = 1;
  std::int64_t ceil_sum_ = 0;
  bool overflow_ = false;
};

struct LoadState {
  ExactLoad load;
  ResourceAmount capacity;

  ResourceAmount per_frame_load() const { return load.rounded_up(); }
};

inline ResourceAmount total_load(std::span<const FlowSpec> flows) {
  ExactLoad l;
  for (const auto& f : flows) l.add(f);
  return l.rounded_up();
}

struct AdmissionDecision {
  bool accepted = false;
  LoadState state;  // unchanged on reject
};

/// Accepts iff the current load plus data_size / deadline still fits the
/// per-frame capacity. Equality is accepted.
inline AdmissionDecision admit(const LoadState& state, const FlowSpec& f) {
  AdmissionDecision d{false, state};
  d.state.load.add(f);
  if (d.state.load.fits(state.capacity)) {
    d.accepted = true;
  } else {
    d.state = state;
  }
  return d;
}

inline LoadState release(LoadState state, const FlowSpec& f) {
  state.load.remove(f);
  return state;
}

/// Admits flows in order; returns the index of the first rejected flow, if any.
inline std::optional<std::size_t> first_rejection(LoadState state, std::span<const FlowSpec> flows) {
  for (std::size_t i = 0; i < flows.size(); ++i) {
    auto d = admit(state, flows[i]);
    if (!d.accepted) return i;
    state = d.state;
  }
  return std::nullopt;
}

}  // namespace ugs
