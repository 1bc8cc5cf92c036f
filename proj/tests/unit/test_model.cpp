#include "smartmine/model.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace smartmine;

namespace {

bool has_code(const std::vector<Violation>& v, std::string_view code) {
  return std::any_of(v.begin(), v.end(), [&](const auto& x) { return x.code == code; });
}

Scenario simple_scenario() {
  Scenario sc;
  sc.coin = CoinParams{600.0, 0.0, 1.0, std::nullopt};
  sc.miners = {{"a", 60, 0.1, 0.01}, {"b", 40, 0.05, 0.01}};
  sc.coin.w = calibrate_reward(sc.miners, 600.0, 0.0);
  return sc;
}

}  // namespace

TEST_CASE("calibrate_reward for a single miner") {
  const MinerParams miner{"solo", 100, 0.15, 0.0085};
  // 600 * (0.15 + 0.0085 * 100)
  CHECK(calibrate_reward(std::vector{miner}, 600, 0) == doctest::Approx(600.0).epsilon(1e-15));
}

TEST_CASE("calibrate_reward is linear") {
  const MinerParams miner{"a", 100, 0.15, 0.0085};
  const MinerParams twin{"b", 100, 0.15, 0.0085};
  const double one = calibrate_reward(std::vector{miner}, 600, 0.0);
  CHECK(calibrate_reward(std::vector{miner, twin}, 600, 0.0) == doctest::Approx(2 * one));
  // epsilon enters once per miner
  CHECK(calibrate_reward(std::vector{miner, twin}, 600, 0.5) ==
        doctest::Approx(2 * one + 600 * 2 * 0.5));
}

TEST_CASE("calibrate_reward rejects empty and zero-cost miners") {
  CHECK_THROWS_AS(calibrate_reward(std::vector<MinerParams>{}, 600, 0), ConfigError);
  CHECK_THROWS_AS(calibrate_reward(std::vector{MinerParams{"free", 10, 0, 0}}, 600, 0), ConfigError);
}

TEST_CASE("validate_scenario accepts a well-formed scenario") {
  auto sc = simple_scenario();
  sc.schedules.push_back({"a", {0, 60}, 1});
  CHECK(validate_scenario(sc).empty());
}

TEST_CASE("validate_scenario reports every violation") {
  auto sc = simple_scenario();
  SUBCASE("power above capacity") {
    sc.schedules.push_back({"a", {60 * 1.2}, 0});
    CHECK(has_code(validate_scenario(sc), "power_exceeds_capacity"));
  }
  SUBCASE("duplicate id") {
    sc.miners.push_back(sc.miners.front());
    CHECK(has_code(validate_scenario(sc), "duplicate_id"));
  }
  SUBCASE("schedule for unknown miner") {
    sc.schedules.push_back({"ghost", {1}, 0});
    CHECK(has_code(validate_scenario(sc), "unknown_miner"));
  }
  SUBCASE("two schedules for one miner") {
    sc.schedules.push_back({"a", {60}, 0});
    sc.schedules.push_back({"a", {0, 60}, 0});
    CHECK(has_code(validate_scenario(sc), "duplicate_schedule"));
  }
  SUBCASE("empty schedule") {
    sc.schedules.push_back({"a", {}, 0});
    CHECK(has_code(validate_scenario(sc), "empty_schedule"));
  }
  SUBCASE("negative power") {
    sc.schedules.push_back({"b", {-1.0}, 0});
    CHECK(has_code(validate_scenario(sc), "negative_power"));
  }
  SUBCASE("coin constants") {
    sc.coin.tau = 0;
    sc.coin.w = -1;
    sc.coin.epsilon = -0.1;
    sc.coin.clamp = 1.0;
    const auto v = validate_scenario(sc);
    CHECK(has_code(v, "invalid_tau"));
    CHECK(has_code(v, "invalid_reward"));
    CHECK(has_code(v, "invalid_epsilon"));
    CHECK(has_code(v, "invalid_clamp"));
  }
  SUBCASE("miner constants") {
    sc.miners.push_back({"c", 0, -1, 0});
    const auto v = validate_scenario(sc);
    CHECK(has_code(v, "invalid_power"));
    CHECK(has_code(v, "invalid_fixed_cost"));
  }
  SUBCASE("zero total cost") {
    sc.miners.push_back({"free", 5, 0, 0});
    CHECK(has_code(validate_scenario(sc), "zero_cost"));
  }
  SUBCASE("no miners") {
    sc.miners.clear();
    CHECK(has_code(validate_scenario(sc), "empty_miners"));
  }
}

TEST_CASE("ConfigError carries the violation list") {
  auto sc = simple_scenario();
  sc.miners.push_back(sc.miners.front());
  sc.schedules.push_back({"a", {100}, 0});
  try {
    require_valid(sc);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.violations().size() >= 2);
  }
}

TEST_CASE("schedule phase follows (offset + k) mod period") {
  const StrategySchedule s{"a", {1, 2, 3}, 1};
  CHECK(s.power_at(1) == 3);
  CHECK(s.power_at(2) == 1);
  CHECK(s.power_at(3) == 2);
  const MinerParams miner{"a", 5, 1, 0};
  CHECK(smarter_schedule(miner, 2).powers == std::vector<double>{3, 5});
  CHECK(honest_schedule(miner).powers == std::vector<double>{5});
}

TEST_CASE("resolved schedules default to honest") {
  auto sc = simple_scenario();
  sc.schedules.push_back({"b", {0, 40}, 0});
  const auto resolved = sc.resolved_schedules();
  REQUIRE(resolved.size() == 2);
  CHECK(resolved[0].powers == std::vector<double>{60});
  CHECK(resolved[1].powers == std::vector<double>{0, 40});
}
