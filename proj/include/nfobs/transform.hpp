#pragma once

#include <string>

#include "nfobs/input.hpp"
#include "nfobs/model.hpp"

namespace nfobs {

enum class TransformKind { ActivityToVoltage, PositiveSigmoid, Threshold };

TransformKind parse_transform_kind(const std::string& name);

/// Equivalent voltage-based model with the odd base sigmoid.
struct ReducedModel {
  ModelParams params;
  InputPtr input;
  /// Physical mean potential = reduced v₀ - v0_offset.
  double v0_offset = 0.0;
  /// When set, the physical measurement is the mean activity a₀ with
  /// v₀ = J₀ a₀ + I₀.
  bool activity_output = false;
};

/// Reductions of a physical model onto the odd-sigmoid voltage model:
///  - PositiveSigmoid: σ₊ = s₁σ + s₂ gives J_i ← s₁J_i and I₀ ← I₀ + J₀s₂;
///  - Threshold: firing σ(x + h₀) becomes σ(x) under v₀ ← v₀ + h₀ with
///    I₀ ← I₀ + h₀;
///  - ActivityToVoltage: V = J·A + I gives I ← I + τİ.
ReducedModel appendix_transform(TransformKind kind, const ModelParams& params, InputPtr input);

/// Applies every reduction the sigmoid spec calls for (positive part first,
/// then threshold) and returns a model with an identity transform.
ReducedModel reduce(const ModelParams& params, InputPtr input, bool activity_based = false);

/// Mean activity recovered from the reduced voltage output: a₀ = (v₀ - I₀)/J₀.
double activity_from_voltage(double j0, double v0, double i0);

}  // namespace nfobs
