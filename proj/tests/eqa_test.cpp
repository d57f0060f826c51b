#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ugs/metrics.hpp"

namespace ugs {
namespace {

using namespace testing;

TEST(Eqa, ExampleOneIsFlat) {
  auto g = eqa_schedule(example1(), config(Algorithm::Eqa));
  const Row flat{180, 20, 150, 20, 50};
  for (int t = 0; t < 12; ++t) {
    EXPECT_TRUE(row_equals(g, t, flat)) << "frame " << t;
    EXPECT_EQ(grid_frame_sum(g, t), u(420));
  }
  EXPECT_EQ(burst_counts(g).total, 60);
}

TEST(Eqa, ResidueGoesToLateFrames) {
  std::vector<FlowSpec> f{FlowSpec::make(1, u(500), 3)};
  auto g = eqa_schedule(f, config(Algorithm::Eqa, 3));
  EXPECT_EQ(g.cell(0, 1).to_string(), "166.66");
  EXPECT_EQ(g.cell(1, 1).to_string(), "166.67");
  EXPECT_EQ(g.cell(2, 1).to_string(), "166.67");
}

TEST(Eqa, ShortDeadlineLeavesTailEmpty) {
  std::vector<FlowSpec> f{FlowSpec::make(1, u(90), 6, 3)};
  auto g = eqa_schedule(f, config(Algorithm::Eqa, 6));
  for (int t = 0; t < 3; ++t) EXPECT_EQ(g.cell(t, 1), u(30));
  for (int t = 3; t < 6; ++t) EXPECT_EQ(g.cell(t, 1), ResourceAmount{});
}

TEST(Eqa, FractionalExampleStaysWithinCapacity) {
  auto flows = example2();
  auto g = eqa_schedule(flows, config(Algorithm::Eqa));
  for (int t = 0; t < 12; ++t) EXPECT_EQ(grid_frame_sum(g, t), u(420)) << t;
  EXPECT_TRUE(check_grid(g, lifetimes(flows, 12)).empty());
}

TEST(Eqa, PlaceSpreadReportsNoRoom) {
  AllocationGrid g(2, ResourceAmount::hundredths(2));
  g.add_flow(1);
  g.add_flow(2);
  std::vector<SpreadJob> jobs{{1, {0, 1}, ResourceAmount::hundredths(3)},
                              {2, {0, 1}, ResourceAmount::hundredths(3)}};
  EXPECT_FALSE(place_spread(g, jobs, true));
  EXPECT_TRUE(place_spread(g, jobs, false));
  EXPECT_EQ(g.cell(1, 1), ResourceAmount::hundredths(2));
}

TEST(Eqa, ResiduesShiftToMakeRoom) {
  // Room per frame is 0,1,2,2. Flow 1 must take frames 1..3; reverse-time
  // greedy hands frame 3 to flows 2 and 3 first and has to undo one of them.
  AllocationGrid g(4, ResourceAmount::hundredths(2));
  for (int id : {1, 2, 3, 4}) g.add_flow(id);
  g.set(0, 4, ResourceAmount::hundredths(2));
  g.set(1, 4, ResourceAmount::hundredths(1));
  std::vector<SpreadJob> jobs{{1, {0, 1, 2, 3}, ResourceAmount::hundredths(3)},
                              {2, {2, 3}, ResourceAmount::hundredths(1)},
                              {3, {2, 3}, ResourceAmount::hundredths(1)}};
  ASSERT_TRUE(place_spread(g, jobs, true));
  for (int t = 0; t < 4; ++t) EXPECT_LE(grid_frame_sum(g, t), g.capacity()) << t;
  EXPECT_EQ(g.cell(0, 1), ResourceAmount{});
  for (int t = 1; t < 4; ++t) EXPECT_EQ(g.cell(t, 1), ResourceAmount::hundredths(1));
  EXPECT_EQ(g.cell(2, 2) + g.cell(3, 2), ResourceAmount::hundredths(1));
  EXPECT_EQ(g.cell(2, 3) + g.cell(3, 3), ResourceAmount::hundredths(1));
}

TEST(Eqa, OverloadNamesFrame) {
  try {
    eqa_schedule(example1(), config(Algorithm::Eqa, 12, 400));
    FAIL() << "expected a scheduling error";
  } catch (const SchedulingError& e) {
    EXPECT_EQ(e.frame(), 0);
  }
}

}  // namespace
}  // namespace ugs
