#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "ugs/scenario.hpp"

namespace ugs {
namespace {

using testing::u;

Scenario parse(const std::string& text) {
  std::istringstream in(text);
  return parse_scenario(in);
}

TEST(Scenario, FlowsAndDefaults) {
  auto s = parse(
      "id,data_size,period,deadline,join_frame\n"
      "1,540,3,,0\n"
      "2,80.5,4,2,\n"
      "# comment\n"
      "\n"
      "6,500,4,4,15\n");
  ASSERT_EQ(s.flows.size(), 3u);
  EXPECT_EQ(s.flows[0], FlowSpec::make(1, u(540), 3));
  EXPECT_EQ(s.flows[1], FlowSpec::make(2, ResourceAmount::parse("80.5"), 4, 2));
  EXPECT_EQ(s.flows[2].join_frame, 15);
  EXPECT_EQ(s.effective_capacity(), u(360));  // downlink slots of the default profile
  EXPECT_EQ(s.effective_horizon(), 24);       // two 12-frame cycles cover the join at 15
  EXPECT_TRUE(s.leaves.empty());
}

TEST(Scenario, Sections) {
  auto s = parse(
      "capacity=420\n"
      "horizon=30\n"
      "id,data_size,period,deadline,join_frame\n"
      "1,540,3,3,0\n"
      "2,80,4,4,0\n"
      "[leave]\n"
      "id,at_frame\n"
      "2,8\n"
      "[phy]\n"
      "dl_subchannels=20\n"
      "ul_tile_symbols=10\n");
  EXPECT_EQ(s.effective_capacity(), u(420));
  EXPECT_EQ(s.effective_horizon(), 30);
  EXPECT_EQ(s.leaves, (std::vector<LeaveEvent>{{2, 8}}));
  EXPECT_EQ(s.phy.dl_subchannels, 20);
  EXPECT_EQ(s.phy.ul_tile_symbols, 10);
}

TEST(Scenario, CapacityFromProfile) {
  auto s = parse(
      "id,data_size,period,deadline,join_frame\n"
      "1,5,3,,0\n"
      "[phy]\n"
      "dl_subchannels=20\n");
  EXPECT_EQ(s.effective_capacity(), u(240));
}

TEST(Scenario, Malformed) {
  const char* bad[] = {
      "",
      "id,size,period,deadline,join_frame\n1,5,3,,0\n",
      "id,data_size,period,deadline,join_frame\n1,5,3,,0,9\n",
      "id,data_size,period,deadline,join_frame\n1,-5,3,,0\n",
      "id,data_size,period,deadline,join_frame\n1,5,three,,0\n",
      "id,data_size,period,deadline,join_frame\n1,5,3,4,0\n",
      "id,data_size,period,deadline,join_frame\n1,5,3,,0\n1,6,3,,0\n",
      "id,data_size,period,deadline,join_frame\n1,5,3,,0\n[phy]\nwarp_factor=9\n",
      "id,data_size,period,deadline,join_frame\n1,5,3,,0\n[leave]\nid,at_frame\n1\n",
      "id,data_size,period,deadline,join_frame\n1,5,3,,0\n[nope]\n",
      "capacity=lots\nid,data_size,period,deadline,join_frame\n1,5,3,,0\n",
      "horizon=0\nid,data_size,period,deadline,join_frame\n1,5,3,,0\n",
  };
  for (const char* text : bad) EXPECT_THROW(parse(text), ScenarioError) << text;
}

TEST(Scenario, AllocationRoundTrip) {
  auto flows = testing::example2();
  auto g = swim_schedule(flows, testing::config(Algorithm::Swim));
  std::ostringstream out;
  write_allocation(out, g);
  auto text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "frame,flow_id,amount");
  EXPECT_NE(text.find("\n2,2,6.66\n"), std::string::npos);

  std::istringstream in(text);
  auto back = read_allocation(in, u(420));
  EXPECT_EQ(back, g);
  EXPECT_TRUE(check_grid(back, testing::lifetimes(flows, 12)).empty());
}

TEST(Scenario, MetricsFile) {
  auto flows = testing::example1();
  auto g = edf_schedule(flows, testing::config(Algorithm::Edf));
  std::ostringstream out;
  write_metrics(out, compute_metrics(g, testing::lifetimes(flows, 12), 12));
  EXPECT_EQ(out.str(),
            "flow_id,mean_delay,jitter,sdu_count\n"
            "1,9/4,1/3,4\n"
            "2,8/3,1,3\n"
            "3,11/2,1,2\n"
            "4,6,0,2\n"
            "5,11,0,1\n"
            "[totals]\n"
            "total_bursts=23\n"
            "throughput=5040.00\n"
            "optimal_throughput=5040.00\n"
            "unused_capacity=0.00\n");
}

TEST(Scenario, ShippedFilesParse) {
  for (const char* name : {"example1.csv", "example2.csv", "example3.csv", "example4.csv"}) {
    auto s = load_scenario(std::string(UGS_SCENARIO_DIR) + "/" + name);
    EXPECT_FALSE(s.flows.empty()) << name;
  }
  EXPECT_EQ(load_scenario(std::string(UGS_SCENARIO_DIR) + "/example1.csv").flows, testing::example1());
  EXPECT_THROW(load_scenario(std::string(UGS_SCENARIO_DIR) + "/missing.csv"), ScenarioError);
}

}  // namespace
}  // namespace ugs
