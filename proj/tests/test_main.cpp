#include <gtest/gtest.h>

#include "lndt/spread.hpp"

namespace {

// Well-formed inputs never reach a Null seed; any test binary that does
// fails here.
class NullSeedQuiescence : public ::testing::Environment {
 public:
  void TearDown() override {
    EXPECT_EQ(lndt::null_seed_invocations(), 0u) << "a Null seed was invoked";
  }
};

}  // namespace

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  ::testing::AddGlobalTestEnvironment(new NullSeedQuiescence);
  return RUN_ALL_TESTS();
}
