#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nfobs/observer.hpp"
#include "nfobs/transform.hpp"

namespace nfobs {

/// A plant/observer experiment. `params` and `input` describe the physical
/// model; the run uses its reduction onto the odd-sigmoid voltage model, and
/// the initial conditions are given in the reduced coordinates.
struct Scenario {
  ModelParams params{};
  InputPtr input;
  bool activity_based = false;
  Vec3 v_init = Vec3::Zero();
  Vec3 vhat_init = Vec3::Zero();
  ObserverConfig observer{};
  bool with_observer = true;
  double t_end = 4.0;
  double dt = 1e-5;

  /// Throws ParameterError on dt ≤ 0, t_end ≤ 0 or a missing input.
  void validate() const;
};

struct TrajectoryRow {
  double t = 0.0;
  Vec3 v = Vec3::Zero();
  double y = 0.0;
  Vec3 v_hat = Vec3::Zero();
  Vec4 z_hat = Vec4::Zero();
  std::optional<Mode> mode;  // empty for plant-only runs
  double err = 0.0;
};

struct TrajectoryRecord {
  std::vector<TrajectoryRow> rows;
  std::vector<SwitchEvent> switches;
  bool with_observer = false;
  /// Set when the run stopped early; `failure_code` is the CLI exit code.
  std::string failure;
  int failure_code = 0;

  [[nodiscard]] bool ok() const { return failure_code == 0; }
  [[nodiscard]] double terminal_error() const;
  /// max |v̂ - v| before the first switch (whole run if none).
  [[nodiscard]] double initial_peak() const;
  /// max |v̂ - v| on [t₀, t₁].
  [[nodiscard]] double max_error(double t0, double t1) const;
};

/// Co-integrates plant and observer with one RK4 scheme on a shared grid;
/// every stage of the observer sees the plant's stage output.
TrajectoryRecord run_scenario(const Scenario& s);

/// The plant model/input a scenario actually integrates.
ReducedModel reduced(const Scenario& s);

inline const char* kCsvHeader = "t,v0,v1,v2,y,vhat0,vhat1,vhat2,zhat0,zhat1,zhat2,zhat3,mode,err";

/// Writes every `stride`-th row (and the last one). IoError names the path.
void write_csv(const TrajectoryRecord& rec, const std::string& path, int stride = 100);

/// Reads back a file produced by write_csv; blank fields become NaN.
std::vector<std::vector<double>> read_csv(const std::string& path);

}  // namespace nfobs
