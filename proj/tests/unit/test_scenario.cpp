#include "cakecut/simulate.hpp"

#include <doctest.h>

using namespace cakecut;

namespace {

Json minimal() {
  return Json::parse(R"({
    "players": [{"segments": [["1", "1"]]}, {"segments": [["1/2", "3/2"], ["1", "1/2"]]}],
    "protocols": ["endriss", "plaintext"],
    "seed": "s"
  })");
}

std::string error_path(const Json& j) {
  try {
    parse_scenario(j);
  } catch (const ScenarioError& e) {
    return e.path();
  }
  return "<none>";
}

}  // namespace

TEST_CASE("scenario defaults") {
  auto s = parse_scenario(minimal());
  CHECK(s.levels == 1024);
  CHECK(s.group == "test");
  CHECK(s.delivery.mode == DeliverySchedule::Mode::Fifo);
  CHECK_FALSE(s.attack);
  CHECK(s.name == "scenario");
}

TEST_CASE("scenario errors name the offending field") {
  auto j = minimal();
  j["players"][1]["segments"][0][1] = "1";
  CHECK(error_path(j) == "players[1].segments");
  j = minimal();
  j["protocols"].push_back("nope");
  CHECK(error_path(j) == "protocols[2]");
  j = minimal();
  j["grid"] = {{"levels", 8}, {"exponent", 3}};
  CHECK(error_path(j) == "grid");
  j = minimal();
  j["players"].erase(1);
  CHECK(error_path(j) == "players");
  j = minimal();
  j["players"][0]["segments"][0][0] = 1;
  CHECK(error_path(j) == "players[0].segments[0][0]");
  j = minimal();
  j["attack"] = {{"attacker", 3}};
  CHECK(error_path(j) == "attack.attacker");
  j = minimal();
  j.erase("seed");
  CHECK(error_path(j) == "seed");
  CHECK_THROWS_AS(load_scenario("/nonexistent.json"), ScenarioError);
}

TEST_CASE("bundled scenario simulates") {
  auto s = load_scenario(std::string(CAKECUT_SOURCE_DIR) + "/scenarios/paper_sec3.json");
  CHECK(s.levels == 1024);
  CHECK(s.attack->attacker == 1);
  s.protocols = {"endriss", "sgall-woeginger"};
  auto r = simulate(s);
  auto j = to_json(r);
  CHECK(j["protocols"][0]["surplus"]["exact"] == "35/24");
  CHECK(j["protocols"][1]["surplus"]["exact"] == "13/10");
  CHECK(j["attack"]["attack_utility"]["exact"] == "1/2");
  CHECK(j["comparison"]["differences"][0]["difference"]["exact"] == "19/120");
  CHECK_FALSE(r.verification_failed());
}
