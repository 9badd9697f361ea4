#include "nfobs/transform.hpp"

#include "nfobs/types.hpp"

namespace nfobs {

TransformKind parse_transform_kind(const std::string& name) {
  if (name == "activity_to_voltage") return TransformKind::ActivityToVoltage;
  if (name == "positive_sigmoid") return TransformKind::PositiveSigmoid;
  if (name == "threshold") return TransformKind::Threshold;
  throw ParameterError("unknown transform kind '" + name + "'");
}

ReducedModel appendix_transform(TransformKind kind, const ModelParams& params, InputPtr input) {
  ReducedModel out{params, input, 0.0, false};
  switch (kind) {
    case TransformKind::PositiveSigmoid: {
      const double s1 = params.sigmoid.s1;
      const double s2 = params.sigmoid.s2;
      if (!(s1 > 0.0)) throw ParameterError("positive sigmoid needs s1 > 0");
      out.params.j0 = s1 * params.j0;
      out.params.j1 = s1 * params.j1;
      out.params.sigmoid.s1 = 1.0;
      out.params.sigmoid.s2 = 0.0;
      // ∫ P dθ/π = 1 and ∫ r cos 2θ dθ = 0: only the mean equation sees s₂.
      if (s2 != 0.0) out.input = std::make_shared<ShiftedInput>(std::move(input), params.j0 * s2);
      break;
    }
    case TransformKind::Threshold: {
      const double h0 = params.sigmoid.h0;
      out.params.sigmoid.h0 = 0.0;
      out.v0_offset = h0;
      if (h0 != 0.0) out.input = std::make_shared<ShiftedInput>(std::move(input), h0);
      break;
    }
    case TransformKind::ActivityToVoltage:
      out.input = std::make_shared<ActivityInput>(std::move(input), params.tau);
      out.activity_output = true;
      break;
  }
  return out;
}

ReducedModel reduce(const ModelParams& params, InputPtr input, bool activity_based) {
  ReducedModel out{params, std::move(input), 0.0, false};
  if (activity_based) {
    out = appendix_transform(TransformKind::ActivityToVoltage, out.params, out.input);
  }
  const bool activity = out.activity_output;
  if (out.params.sigmoid.s1 != 1.0 || out.params.sigmoid.s2 != 0.0) {
    out = appendix_transform(TransformKind::PositiveSigmoid, out.params, out.input);
  }
  double offset = 0.0;
  if (out.params.sigmoid.h0 != 0.0) {
    out = appendix_transform(TransformKind::Threshold, out.params, out.input);
    offset = out.v0_offset;
  }
  out.v0_offset = offset;
  out.activity_output = activity;
  return out;
}

double activity_from_voltage(double j0, double v0, double i0) { return (v0 - i0) / j0; }

}  // namespace nfobs
