#include <doctest.h>

#include <cstring>

#include "helpers.hpp"
#include "nfobs/kernels.hpp"
#include "nfobs/observability.hpp"

using namespace nfobs;
using namespace nfobs::testing;

namespace {

bool bit_equal(const GammaTable& a, const GammaTable& b) {
  for (int p = 0; p <= 4; ++p) {
    for (int j = 0; j <= 3; ++j) {
      const double x = a(p, j), y = b(p, j);
      if (std::memcmp(&x, &y, sizeof x) != 0) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("gamma_grid: serial and parallel agree bit for bit") {
  const Model m = ring_model();
  std::vector<double> v0s, rhos;
  for (int i = -10; i <= 10; ++i) v0s.push_back(0.2 * i);
  for (int i = 0; i <= 12; ++i) rhos.push_back(0.5 * i);
  const auto s = gamma_grid(m, v0s, rhos, 3, 3, Exec::Serial);
  const auto p = gamma_grid(m, v0s, rhos, 3, 3, Exec::Parallel);
  REQUIRE(s.size() == v0s.size() * rhos.size());
  REQUIRE(p.size() == s.size());
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(bit_equal(s[i], p[i]));
  // Row-major in v0.
  const GammaTable direct = gamma_table(m, v0s[3], rhos[5], 3, 3);
  CHECK(bit_equal(s[3 * rhos.size() + 5], direct));

  CHECK_THROWS_AS(gamma_grid(m, v0s, {1.0, -1.0}, 1, 1, Exec::Parallel), DomainError);
  CHECK_THROWS_AS(gamma_grid(m, v0s, {1.0}, 9, 1, Exec::Parallel), OrderError);
}

TEST_CASE("roundtrip_errors: serial and parallel agree") {
  ModelParams p = ring_params(1.0);
  p.sigmoid.gain = 2.0;
  const Model m(p);
  const auto in = rich_input();
  const InverseConfig cfg;
  std::vector<Vec3> probes;
  for (int i = 0; i < 64; ++i) probes.emplace_back((i % 2 ? 1 : -1) * (0.3 + 0.02 * i), 0.5 - 0.01 * i, 0.3);
  const auto s = roundtrip_errors(cfg, m, *in, probes, 0.4, Exec::Serial);
  const auto q = roundtrip_errors(cfg, m, *in, probes, 0.4, Exec::Parallel);
  REQUIRE(s.size() == probes.size());
  CHECK(s == q);
  for (double e : s) CHECK(e <= 1e-8);
}

TEST_CASE("run_batch: order preserved and identical to single runs") {
  std::vector<Scenario> batch;
  for (int i = 0; i < 5; ++i) {
    Scenario s;
    s.params = ring_params(1.0);
    s.input = rich_input();
    s.with_observer = false;
    s.v_init = {0.2 * i - 0.4, 0.3, -0.1 * i};
    s.t_end = 1.0;
    s.dt = 1e-2;
    batch.push_back(s);
  }
  batch[2].dt = -1.0;  // invalid: surfaces as an exception
  CHECK_THROWS_AS(run_batch(batch, Exec::Parallel), ParameterError);
  batch[2].dt = 1e-2;

  const auto par = run_batch(batch, Exec::Parallel);
  const auto ser = run_batch(batch, Exec::Serial);
  REQUIRE(par.size() == batch.size());
  for (std::size_t i = 0; i < batch.size(); ++i) {
    const TrajectoryRecord one = run_scenario(batch[i]);
    REQUIRE(par[i].rows.size() == one.rows.size());
    CHECK(par[i].rows.front().v == batch[i].v_init);
    CHECK(par[i].rows.back().v == one.rows.back().v);
    CHECK(ser[i].rows.back().v == one.rows.back().v);
  }
}
