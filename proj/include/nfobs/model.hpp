#pragma once

#include <memory>
#include <vector>

#include "nfobs/sigmoid.hpp"

namespace nfobs {

/// Selectivity distribution P(r) stored as nodes/weights on [0, r_max].
/// A Dirac mass is the single-node case.
struct SelectivityDistribution {
  std::vector<double> nodes{1.0};
  std::vector<double> weights{1.0};

  static SelectivityDistribution dirac(double r0) { return {{r0}, {1.0}}; }
  [[nodiscard]] double r_max() const;
  /// ∫ g(r) P(r) dr for the node rule.
  template <class F>
  [[nodiscard]] double expect(F&& g) const {
    double acc = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) acc += weights[k] * g(nodes[k]);
    return acc;
  }
};

struct ModelParams {
  double j0 = -1.0;
  double j1 = 1.5;
  double tau = 1.0;
  SigmoidSpec sigmoid{};
  SelectivityDistribution dist{};
  int theta_nodes = 128;
};

/// Trapezoidal rule over θ ∈ [-π/2, π/2) with N equispaced nodes, stored both
/// in full (cos 2θ, sin 2θ) and folded on the symmetry θ ↦ -θ.
struct ThetaRule {
  int n = 0;
  std::vector<double> cos2;  // full rule
  std::vector<double> sin2;
  std::vector<double> half_cos2;    // distinct cos 2θ values
  std::vector<double> half_sin2;    // sin 2θ of the representative node (≥ 0)
  std::vector<double> half_weight;  // includes the 1/N normalisation
};

/// Validated, immutable model with precomputed quadrature tiers. Cheap to
/// copy (the rules are shared).
class Model {
 public:
  // Quadrature nodes per unit of μ·r_max·ρ, plus kNodesPerOrder for each
  // sigmoid derivative; keeps the trapezoidal error of σ^(p) below 1e-10
  // for p ≤ 4.
  static constexpr double kNodesPerUnit = 16.0;
  static constexpr double kNodesPerOrder = 4.0;
  static constexpr int kMaxTier = 7;

  explicit Model(ModelParams params);

  [[nodiscard]] const ModelParams& params() const { return params_; }
  [[nodiscard]] double j0() const { return params_.j0; }
  [[nodiscard]] double j1() const { return params_.j1; }
  [[nodiscard]] double tau() const { return params_.tau; }
  [[nodiscard]] double mu() const { return params_.sigmoid.gain; }
  [[nodiscard]] double sigma_prime0() const { return params_.sigmoid.gain; }
  [[nodiscard]] const SelectivityDistribution& dist() const { return params_.dist; }

  /// Rule used for radius ρ and highest sigmoid derivative p: the smallest
  /// tier theta_nodes·2^k resolving the transition layer of σ^(p) along the
  /// orientation circle.
  [[nodiscard]] const ThetaRule& rule_for(double rho, int p = 0) const;
  [[nodiscard]] const ThetaRule& tier(int k) const { return (*tiers_)[static_cast<std::size_t>(k)]; }

 private:
  ModelParams params_;
  std::shared_ptr<const std::vector<ThetaRule>> tiers_;
};

ThetaRule make_theta_rule(int n);

}  // namespace nfobs
