#pragma once

#include <vector>

#include "nfobs/gamma.hpp"
#include "nfobs/inverse.hpp"
#include "nfobs/sim.hpp"

namespace nfobs {

/// Serial reference or OpenMP-parallel execution of a batch kernel. Both
/// paths produce bit-identical results; the serial one exists for testing.
enum class Exec { Serial, Parallel };

/// Γ tables on the tensor grid v0s × rhos (row-major in v0).
std::vector<GammaTable> gamma_grid(const Model& model, const std::vector<double>& v0s,
                                   const std::vector<double>& rhos, int pmax, int jmax, Exec exec);

/// |𝔗_t(T_t(v)) - v| for each probe, the output sign taken from v₀.
std::vector<double> roundtrip_errors(const InverseConfig& cfg, const Model& model, const InputSignal& input,
                                     const std::vector<Vec3>& probes, double t, Exec exec);

/// Independent scenarios, one record each, in input order.
std::vector<TrajectoryRecord> run_batch(const std::vector<Scenario>& scenarios, Exec exec);

}  // namespace nfobs
