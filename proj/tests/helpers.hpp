#pragma once

#include <memory>
#include <random>

#include "nfobs/input.hpp"
#include "nfobs/model.hpp"

namespace nfobs::testing {

inline ModelParams ring_params(double tau = 1.0) {
  ModelParams p;
  p.j0 = -1.0;
  p.j1 = 1.5;
  p.tau = tau;
  p.sigmoid.gain = 10.0;
  p.dist = SelectivityDistribution::dirac(1.0);
  return p;
}

inline Model ring_model(double tau = 1.0) { return Model(ring_params(tau)); }

/// The reduced input of the canonical experiment: circular input with the
/// unit threshold folded into I₀.
inline InputPtr paper_input() {
  return std::make_shared<ShiftedInput>(std::make_shared<CircularInput>(0.1, 0.1, 0.6283185307179586), 1.0);
}

/// A stronger, faster input that keeps the inverse well conditioned.
inline InputPtr rich_input() { return std::make_shared<CircularInput>(1.0, 0.5, 2.0); }

}  // namespace nfobs::testing
