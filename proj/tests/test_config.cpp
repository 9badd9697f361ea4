#include <doctest.h>

#include <string>

#include "nfobs/config.hpp"

#ifndef NFOBS_SCENARIO_DIR
#define NFOBS_SCENARIO_DIR "scenarios"
#endif

using namespace nfobs;

namespace {

void same_scenario(const Scenario& a, const Scenario& b) {
  CHECK(a.params.j0 == b.params.j0);
  CHECK(a.params.j1 == b.params.j1);
  CHECK(a.params.tau == b.params.tau);
  CHECK(a.params.theta_nodes == b.params.theta_nodes);
  CHECK(a.params.sigmoid.gain == b.params.sigmoid.gain);
  CHECK(a.params.sigmoid.h0 == b.params.sigmoid.h0);
  CHECK(a.params.dist.nodes == b.params.dist.nodes);
  CHECK(a.input->describe() == b.input->describe());
  CHECK(a.v_init == b.v_init);
  CHECK(a.vhat_init == b.vhat_init);
  CHECK(a.observer.inverse.delta == b.observer.inverse.delta);
  CHECK(a.observer.inverse.eta == b.observer.inverse.eta);
  CHECK(a.observer.inverse.R == b.observer.inverse.R);
  CHECK(a.observer.l == b.observer.l);
  CHECK(a.t_end == b.t_end);
  CHECK(a.dt == b.dt);
  CHECK(a.with_observer == b.with_observer);
}

}  // namespace

TEST_CASE("canonical scenario") {
  const ScenarioConfig c = paper_scenario();
  const Scenario& s = c.scenario;
  CHECK(s.params.j0 == -1.0);
  CHECK(s.params.j1 == 1.5);
  CHECK(s.params.tau == 5.0);
  CHECK(s.params.sigmoid.gain == 10.0);
  CHECK(s.params.sigmoid.h0 == 1.0);
  CHECK(s.observer.inverse.delta == 0.3);
  CHECK(s.observer.inverse.eta == 1e-3);
  CHECK(s.observer.l == 15.0);
  CHECK(s.dt == 1e-5);
  CHECK(s.t_end == 4.0);
  CHECK(s.v_init == Vec3(-3.0, 2.5, -2.0));
  CHECK(s.vhat_init == Vec3(-5.0, 2.0, -1.0));
  CHECK(c.stride == 100);
  CHECK(s.input->certified_c() == doctest::Approx(0.09));

  same_scenario(load_scenario(std::string(NFOBS_SCENARIO_DIR) + "/paper.yaml").scenario, s);
}

TEST_CASE("overrides beat file values") {
  const std::string text = paper_scenario_yaml();
  const ScenarioConfig a = parse_scenario(text, {"l=30", "sigmoid.mu=4", "model.j0=-2", "v_init=[1, 2, 3]"});
  CHECK(a.scenario.observer.l == 30.0);
  CHECK(a.scenario.params.sigmoid.gain == 4.0);
  CHECK(a.scenario.params.j0 == -2.0);
  CHECK(a.scenario.v_init == Vec3(1, 2, 3));

  // Setting a value to what the file already holds is a no-op.
  same_scenario(parse_scenario(text, {"j0=-1"}).scenario, parse_scenario(text).scenario);

  CHECK(parse_scenario(text, {"enabled=false"}).scenario.with_observer == false);
  CHECK(parse_scenario(text, {"stride=7"}).stride == 7);
}

TEST_CASE("key resolution") {
  CHECK(resolve_key("l") == "observer.l");
  CHECK(resolve_key("sigmoid.mu") == "model.sigmoid.mu");
  CHECK(resolve_key("model.tau") == "model.tau");
  CHECK(resolve_key("R") == "observer.R");
  CHECK_THROWS_AS(resolve_key("bogus"), ConfigError);
  // `type` exists under both input and model.dist.
  try {
    (void)resolve_key("type");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("ambiguous") != std::string::npos);
    CHECK(msg.find("input.type") != std::string::npos);
    CHECK(msg.find("model.dist.type") != std::string::npos);
  }
  CHECK(scenario_keys().size() > 30);
}

TEST_CASE("errors name the offending key or path") {
  auto message = [](auto&& fn) -> std::string {
    try {
      fn();
    } catch (const Error& e) {
      return e.what();
    }
    return "";
  };
  const std::string text = paper_scenario_yaml();
  CHECK(message([&] { parse_scenario("model: {j0: -1, jj: 2}\n"); }).find("model.jj") != std::string::npos);
  CHECK(message([&] { parse_scenario("extra: 1\n"); }).find("extra") != std::string::npos);
  CHECK(message([&] { parse_scenario(text, {"wrong=1"}); }).find("wrong") != std::string::npos);
  CHECK(message([&] { parse_scenario(text, {"l"}); }).find("key=value") != std::string::npos);
  CHECK(message([&] { parse_scenario(text, {"tau=abc"}); }).find("model.tau") != std::string::npos);
  CHECK(message([&] { parse_scenario(text, {"v_init=[1,2]"}); }).find("sim.v_init") != std::string::npos);
  CHECK(message([&] { load_scenario("/no/such/file.yaml"); }).find("/no/such/file.yaml") != std::string::npos);

  CHECK_THROWS_AS(parse_scenario(text, {"tau=-1"}), ConfigError);
  CHECK_THROWS_AS(parse_scenario(text, {"input.type=square"}), ConfigError);
  CHECK_THROWS_AS(parse_scenario(text, {"dist.type=gaussian"}), ConfigError);
  CHECK_THROWS_AS(parse_scenario(text, {"stride=0"}), ConfigError);
  CHECK_THROWS_AS(parse_scenario("[1, 2]\n"), ConfigError);
  CHECK_THROWS_AS(parse_scenario("model: {j0: [\n"), ConfigError);
  CHECK_THROWS_AS(load_scenario("/no/such/file.yaml"), IoError);
}

TEST_CASE("input and distribution variants") {
  const ScenarioConfig c = parse_scenario(R"(model:
  j0: 0.5
  j1: 1.0
  dist: {type: nodes, nodes: [0.5, 1.0], weights: [0.25, 0.75]}
input:
  type: sinusoid
  offset: [0.5, 0.0, 0.0]
  amplitude: [0.0, 1.0, 1.0]
  frequency: [0.0, 1.0, 1.0]
  phase: [0.0, 1.5707963267948966, 0.0]
)");
  CHECK(c.scenario.params.dist.nodes.size() == 2);
  CHECK(c.scenario.input->value(0.0).isApprox(Vec3(0.5, 1.0, 0.0)));
  CHECK(c.scenario.input->certified_c() == doctest::Approx(0.5));

  const ScenarioConfig k = parse_scenario("input: {type: constant, value: [0.2, 0.1, 0.0]}\n");
  CHECK(k.scenario.input->value(3.0) == Vec3(0.2, 0.1, 0.0));
  CHECK(k.scenario.input->certified_wedge() == 0.0);
}
