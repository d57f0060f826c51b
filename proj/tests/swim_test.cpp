#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ugs/metrics.hpp"

namespace ugs {
namespace {

using namespace testing;

std::vector<FlowSpec> sorted(std::vector<FlowSpec> f) {
  std::sort(f.begin(), f.end(), [](auto& a, auto& b) { return a.id < b.id; });
  return f;
}

TEST(Swim, ExampleOne) {
  auto g = swim_schedule(example1(), config(Algorithm::Swim));
  for (int t = 0; t < 12; ++t) {
    EXPECT_TRUE(row_equals(g, t, kSwimRows[t])) << "frame " << t;
    EXPECT_EQ(grid_frame_sum(g, t), u(420));
  }
  EXPECT_EQ(burst_counts(g).total, 24);
}

TEST(Swim, FrameZeroTrace) {
  auto flows = example1();
  SwimTrace trace;
  swim_schedule(flows, config(Algorithm::Swim), &trace);
  auto g = swim_init(flows, config(Algorithm::Swim));

  std::vector<int> givers;
  std::size_t k = 0;
  for (; k < trace.moves.size() && trace.moves[k].frame == 0; ++k) {
    const auto& m = trace.moves[k];
    apply_swap(g, flows, m, u(1));
    EXPECT_EQ(m.receiver, 1);
    bool last_of_giver = k + 1 == trace.moves.size() || trace.moves[k + 1].giver != m.giver ||
                         trace.moves[k + 1].frame != 0;
    if (!last_of_giver) continue;
    givers.push_back(m.giver);
    const auto step = givers.size() - 1;
    ASSERT_LT(step, kSwimTrace.size());
    for (int t = 0; t < 3; ++t) EXPECT_TRUE(row_equals(g, t, kSwimTrace[step][t])) << "step " << step << " frame " << t;
  }
  EXPECT_EQ(givers, (std::vector<int>{2, 4, 5, 3}));
}

TEST(Swim, SelectionOnFlatAllocation) {
  auto flows = sorted(example1());
  auto g = swim_init(flows, config(Algorithm::Swim));
  EXPECT_EQ(select_receiver(g, 0, flows, u(1)), 1);
  EXPECT_EQ(select_giver(g, 0, flows, 1), 2);  // C2 and C4 tie at 20; C2's deadline is earlier
  EXPECT_EQ(select_giver(g, 3, flows, 1), 4);  // frame 3 is C2's deadline frame
  // frame 11 is everyone's deadline frame
  EXPECT_FALSE(select_giver(g, 11, flows, 1));
  EXPECT_FALSE(select_receiver(g, 11, flows, u(1)));
}

TEST(Swim, ApplySwapValidates) {
  auto flows = sorted(example1());
  auto g = swim_init(flows, config(Algorithm::Swim));
  auto before = g;

  apply_swap(g, flows, {0, 2, 1, 1, ResourceAmount{}}, u(1));
  EXPECT_EQ(g, before);

  EXPECT_THROW(apply_swap(g, flows, {0, 1, 1, 1, u(5)}, u(1)), SchedulingError);
  EXPECT_THROW(apply_swap(g, flows, {0, 2, 1, 0, u(5)}, u(1)), SchedulingError);
  EXPECT_THROW(apply_swap(g, flows, {0, 2, 1, 3, u(5)}, u(1)), SchedulingError);   // C1 window ends at 2
  EXPECT_THROW(apply_swap(g, flows, {0, 1, 5, 4, u(5)}, u(1)), SchedulingError);   // C1 deadline 2
  EXPECT_THROW(apply_swap(g, flows, {0, 2, 1, 1, u(21)}, u(1)), SchedulingError);  // C2 holds 20
  EXPECT_THROW(apply_swap(g, flows, {0, 3, 1, 2, u(150)}, u(31)), SchedulingError);  // C1 would keep 30 at its deadline
  EXPECT_THROW(apply_swap(g, flows, {0, 2, 1, 1, u(-1)}, u(1)), SchedulingError);
  EXPECT_EQ(g, before);

  apply_swap(g, flows, {0, 2, 1, 2, u(20)}, u(1));
  EXPECT_EQ(g.cell(0, 1), u(200));
  EXPECT_EQ(g.cell(0, 2), ResourceAmount{});
  EXPECT_EQ(g.cell(2, 1), u(160));
  EXPECT_EQ(g.cell(2, 2), u(40));
  for (int t = 0; t < 12; ++t) EXPECT_EQ(grid_frame_sum(g, t), u(420));
}

TEST(Swim, FractionalExample) {
  auto flows = example2();
  auto g = swim_schedule(flows, config(Algorithm::Swim));
  EXPECT_TRUE(check_grid(g, lifetimes(flows, 12)).empty());
  for (int t = 0; t < 12; ++t) EXPECT_EQ(grid_frame_sum(g, t), u(420));
  EXPECT_LE(burst_counts(g).total, 28);
  for (const auto& fm : compute_metrics(g, lifetimes(flows, 12), 12).per_flow) EXPECT_EQ(fm.jitter, Rational{0});
}

TEST(Swim, ZeroMinBurstCanFinishEarly) {
  std::vector<FlowSpec> f{FlowSpec::make(1, u(10), 2), FlowSpec::make(2, u(10), 2)};
  auto cfg = config(Algorithm::Swim, 2, 20);
  cfg.min_burst_size = ResourceAmount{};
  auto g = swim_schedule(f, cfg);
  EXPECT_EQ(g.cell(0, 1), u(10));
  EXPECT_EQ(g.cell(1, 1), ResourceAmount{});
  EXPECT_EQ(completion_frame(g, windows_of(f[0], 2)[0]), 0);

  cfg.min_burst_size = u(1);
  g = swim_schedule(f, cfg);
  EXPECT_EQ(g.cell(0, 1), u(9));
  EXPECT_EQ(g.cell(1, 1), u(1));
  EXPECT_EQ(completion_frame(g, windows_of(f[0], 2)[0]), 1);
}

TEST(Swim, PairingsBoundedPerFrame) {
  auto flows = example3();
  SwimTrace trace;
  swim_schedule(flows, config(Algorithm::Swim, 24, 545), &trace);
  const long n = static_cast<long>(flows.size());
  EXPECT_LE(trace.counters.max_pairings_in_frame, n * n);
  EXPECT_EQ(trace.counters.swaps, static_cast<long>(trace.moves.size()));
}

}  // namespace
}  // namespace ugs
