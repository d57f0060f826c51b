#include <gtest/gtest.h>

#include "property_checks.hpp"

namespace ugs {
namespace {

constexpr int kScenarios = 1000;

TEST(Properties, StaticScenarios) {
  int early = 0;
  for (int k = 0; k < kScenarios; ++k) {
    auto r = testing::check_static_case(k);
    EXPECT_TRUE(r.violations.empty()) << "scenario " << k << ": " << r.violations.front();
    early += r.finished_early ? 1 : 0;
  }
  EXPECT_GT(early, 0);
}

TEST(Properties, JoinsAndLeaves) {
  for (int k = 0; k < kScenarios; ++k) {
    auto v = testing::check_dynamic_case(100000 + k);
    EXPECT_TRUE(v.empty()) << "scenario " << k << ": " << v.front();
  }
}

}  // namespace
}  // namespace ugs
