#include "nfobs/kernels.hpp"

#include <exception>

#include "nfobs/observability.hpp"

namespace nfobs {

namespace {

// Runs body(i) for i in [0, n). Exceptions must not escape an OpenMP region,
// so the parallel path stores the first one and rethrows it after the join.
template <class Body>
void for_each_index(long n, Exec exec, int chunk, Body&& body) {
  if (exec == Exec::Serial) {
    for (long i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, chunk)
  for (long i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(nfobs_kernel_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace

std::vector<GammaTable> gamma_grid(const Model& model, const std::vector<double>& v0s,
                                   const std::vector<double>& rhos, int pmax, int jmax, Exec exec) {
  const long nv = static_cast<long>(v0s.size());
  const long nr = static_cast<long>(rhos.size());
  std::vector<GammaTable> out(static_cast<std::size_t>(nv * nr));
  for_each_index(nv * nr, exec, 16, [&](long idx) {
    const auto i = static_cast<std::size_t>(idx / nr);
    const auto j = static_cast<std::size_t>(idx % nr);
    out[static_cast<std::size_t>(idx)] = gamma_table(model, v0s[i], rhos[j], pmax, jmax);
  });
  return out;
}

std::vector<double> roundtrip_errors(const InverseConfig& cfg, const Model& model, const InputSignal& input,
                                     const std::vector<Vec3>& probes, double t, Exec exec) {
  std::vector<double> out(probes.size());
  for_each_index(static_cast<long>(probes.size()), exec, 4, [&](long i) {
    const Vec3& v = probes[static_cast<std::size_t>(i)];
    const Vec4 z = T_map(model, input, v, t);
    out[static_cast<std::size_t>(i)] = (pseudo_inverse(cfg, model, input, z, v.x(), t) - v).norm();
  });
  return out;
}

std::vector<TrajectoryRecord> run_batch(const std::vector<Scenario>& scenarios, Exec exec) {
  std::vector<TrajectoryRecord> out(scenarios.size());
  for_each_index(static_cast<long>(scenarios.size()), exec, 1, [&](long i) {
    out[static_cast<std::size_t>(i)] = run_scenario(scenarios[static_cast<std::size_t>(i)]);
  });
  return out;
}

}  // namespace nfobs
