#include "smartmine/engine.hpp"
#include "smartmine/security.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace smartmine;
using smartmine::testing::hundred_scenario;

TEST_CASE("attack_threshold") {
  CHECK(attack_threshold(100, 20) == 0.40);
  CHECK(0.41 > attack_threshold(100, 20));
  CHECK(attack_threshold(100, 0) == 0.5);
  CHECK(attack_threshold(100, 50) == 0.25);
  CHECK_THROWS_AS(attack_threshold(100, 100), DomainError);
  CHECK_THROWS_AS(attack_threshold(100, -1), DomainError);
  // affine with slope -1/2
  for (double f = 0.0; f < 0.95; f += 0.1)
    CHECK(attack_threshold(1.0, f) == doctest::Approx(0.5 - 0.5 * f).epsilon(1e-15));
}

TEST_CASE("bystander gains from a smart attacker") {
  const auto sc = hundred_scenario(20);
  const auto g = bystander_gain(sc, "bystander");
  // P(LRE) = 0, P(HRE) = 10 * w/(80 tau) - 0.1 = 0.025, t_HRE = 0.8 tau, t_LRE = 1.25 tau
  CHECK(g.utility == doctest::Approx(0.025 * 0.8 / 2.05).epsilon(1e-12));
  CHECK(g.gain > 0.0);
}

TEST_CASE("bystander gain is zero without an attack") {
  const auto g = bystander_gain(hundred_scenario(0), "bystander");
  CHECK(std::abs(g.gain) < 1e-15);
}

TEST_CASE("bystander gain grows with the attacker's idle power") {
  double last = -1.0;
  for (int j = 0; j <= 20; ++j) {
    const double g = bystander_gain(hundred_scenario(j), "bystander").gain;
    CHECK(g >= last);
    if (j > 0) CHECK(g > 0.0);
    last = g;
  }
}

TEST_CASE("bystander_gain rejects deviators and unknown ids") {
  const auto sc = hundred_scenario(10);
  CHECK_THROWS_AS(bystander_gain(sc, "attacker"), DomainError);
  CHECK_THROWS_AS(bystander_gain(sc, "nobody"), ConfigError);
}

TEST_CASE("entry effect of an HRE-only entrant") {
  const auto sc = hundred_scenario(20);
  const auto e = entry_effect(sc, MinerParams{"new", 10, 0.015, 0.0085});
  CHECK(e.H_lre_before == doctest::Approx(100 * 600.0));
  CHECK(e.H_lre_after == doctest::Approx(110 * 600.0));
  CHECK(e.rph_lre_after / e.rph_lre_before == doctest::Approx(100.0 / 110.0).epsilon(1e-12));
  CHECK(e.rph_lre_after < e.rph_lre_before);
  CHECK(e.lre_active_after == e.lre_active_before);
  CHECK(e.lre_active_before == doctest::Approx(80));
  // HRE work is set by the unchanged LRE power, so its RpH stays put
  CHECK(e.rph_hre_before == doctest::Approx(sc.coin.w / (80 * 600.0)).epsilon(1e-14));
  CHECK(e.rph_hre_after == doctest::Approx(e.rph_hre_before).epsilon(1e-14));
}

TEST_CASE("entry effect of a zero-power entrant") {
  const auto sc = hundred_scenario(20);
  const auto e = entry_effect(sc, MinerParams{"new", 0, 0, 0});
  CHECK(e.rph_lre_after == e.rph_lre_before);
  CHECK(e.rph_hre_after == e.rph_hre_before);
}

TEST_CASE("entrant schedule follows the HRE phase") {
  const auto sc = hundred_scenario(20);
  const auto joined = with_entrant(sc, MinerParams{"new", 10, 0.015, 0.0085});
  const auto* s = joined.find_schedule("new");
  REQUIRE(s != nullptr);
  // smarter_schedule idles in even epochs, so the HRE are odd: entry 1
  CHECK(s->powers == std::vector<double>{0, 10});
  const auto period = steady_period(joined);
  for (const auto& rec : period) {
    const bool hre = rec.per_miner[0].active_power == 20;
    CHECK(rec.per_miner.back().active_power == (hre ? 10 : 0));
  }
}

TEST_CASE("security_report") {
  SUBCASE("honest scenario") {
    const auto r = security_report(hundred_scenario(0));
    CHECK(r.idle_fraction == 0.0);
    CHECK(r.attack_threshold == 0.5);
    // a zero-idle schedule is full power: all three miners count as honest
    REQUIRE(r.per_miner_gain.size() == 3);
    for (const auto& g : r.per_miner_gain) CHECK(std::abs(g.gain) < 1e-15);
  }
  SUBCASE("one 20% smart miner") {
    const auto r = security_report(hundred_scenario(20));
    CHECK(r.lre_active_power == doctest::Approx(80));
    CHECK(r.idle_fraction == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(r.attack_threshold == doctest::Approx(0.4).epsilon(1e-15));
    REQUIRE(r.per_miner_gain.size() == 2);
    for (const auto& g : r.per_miner_gain) CHECK(g.gain > 0.0);
  }
  SUBCASE("two aligned smart miners") {
    auto sc = hundred_scenario(20);
    sc.schedules.push_back(smarter_schedule(sc.miners[1], 10));
    const auto r = security_report(sc);
    CHECK(r.idle_fraction == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(r.attack_threshold == doctest::Approx(0.35).epsilon(1e-14));
    REQUIRE(r.per_miner_gain.size() == 1);
    CHECK(r.per_miner_gain[0].miner_id == "others");
  }
  SUBCASE("misaligned deviators use the weakest epoch") {
    auto sc = hundred_scenario(20);
    sc.schedules.push_back({"bystander", {0, 10, 10}, 0});
    const auto r = security_report(sc);
    CHECK(common_period(sc) == 6);
    CHECK(r.idle_fraction == doctest::Approx(0.3).epsilon(1e-14));
  }
}
