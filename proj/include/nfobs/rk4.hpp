#pragma once

#include <cmath>
#include <string>

#include "nfobs/types.hpp"

namespace nfobs {

namespace detail {
inline bool all_finite(double x) { return std::isfinite(x); }
template <class Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& x) {
  return x.allFinite();
}
}  // namespace detail

/// Classical four-stage Runge-Kutta step for x' = rhs(t, x). Throws
/// NumericError if any stage is non-finite.
template <class State, class Rhs>
State rk4_step(Rhs&& rhs, const State& x, double t, double dt) {
  auto stage = [&](const State& k, int i) -> const State& {
    if (!detail::all_finite(k)) {
      throw NumericError("rk4: non-finite stage " + std::to_string(i) + " at t=" + std::to_string(t));
    }
    return k;
  };
  const State k1 = stage(rhs(t, x), 1);
  const State k2 = stage(rhs(t + 0.5 * dt, State(x + 0.5 * dt * k1)), 2);
  const State k3 = stage(rhs(t + 0.5 * dt, State(x + 0.5 * dt * k2)), 3);
  const State k4 = stage(rhs(t + dt, State(x + dt * k3)), 4);
  return x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace nfobs
