#include "nfobs/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "nfobs/types.hpp"

namespace nfobs {

double SelectivityDistribution::r_max() const {
  return nodes.empty() ? 0.0 : *std::max_element(nodes.begin(), nodes.end());
}

ThetaRule make_theta_rule(int n) {
  ThetaRule rule;
  rule.n = n;
  const auto un = static_cast<std::size_t>(n);
  rule.cos2.assign(un, 0.0);
  rule.sin2.assign(un, 0.0);
  // θ_k = -π/2 + πk/n, so 2θ_k = -π + 2πk/n. Mirror k ↔ n-k so the node set
  // is exactly symmetric under θ ↦ -θ, and (for even n) k ↔ n/2-k so that
  // cos 2θ takes exactly opposite values.
  for (int k = 0; k <= n / 2; ++k) {
    const bool flip = n % 2 == 0 && 4 * k > n;
    const int kk = flip ? n / 2 - k : k;
    const double a = 2.0 * std::numbers::pi * kk / n;
    const double c = (4 * k == n) ? 0.0 : (flip ? std::cos(a) : -std::cos(a));
    const double s = -std::sin(a);
    rule.cos2[static_cast<std::size_t>(k)] = c;
    rule.sin2[static_cast<std::size_t>(k)] = (2 * k == n) ? 0.0 : s;
    if (k > 0 && 2 * k != n) {
      rule.cos2[static_cast<std::size_t>(n - k)] = c;
      rule.sin2[static_cast<std::size_t>(n - k)] = -s;
    }
    const bool self_mirrored = (k == 0) || (2 * k == n);
    rule.half_cos2.push_back(c);
    rule.half_sin2.push_back(std::abs(rule.sin2[static_cast<std::size_t>(k)]));
    rule.half_weight.push_back((self_mirrored ? 1.0 : 2.0) / n);
  }
  return rule;
}

Model::Model(ModelParams params) : params_(std::move(params)) {
  const auto& p = params_;
  if (!(p.j0 != 0.0) || !std::isfinite(p.j0)) throw ParameterError("model.j0 must be a nonzero real");
  if (!(p.j1 > 0.0)) throw ParameterError("model.j1 must be > 0");
  if (!(p.tau > 0.0)) throw ParameterError("model.tau must be > 0");
  if (!(p.sigmoid.gain > 0.0)) throw ParameterError("model.sigmoid.mu must be > 0");
  if (p.sigmoid.derivative_order_max < 4) throw ParameterError("sigmoid derivative_order_max must be >= 4");
  if (!(p.sigmoid.s1 > 0.0)) throw ParameterError("model.sigmoid.s1 must be > 0");
  if (p.theta_nodes < 16) throw ParameterError("model.theta_nodes must be >= 16");
  const auto& d = p.dist;
  if (d.nodes.empty() || d.nodes.size() != d.weights.size()) {
    throw ParameterError("selectivity distribution needs matching, non-empty nodes and weights");
  }
  for (std::size_t k = 0; k < d.nodes.size(); ++k) {
    if (!(d.nodes[k] >= 0.0) || !std::isfinite(d.nodes[k])) {
      throw ParameterError("selectivity nodes must be finite and >= 0");
    }
    if (!(d.weights[k] > 0.0)) throw ParameterError("selectivity weights must be > 0");
  }
  const double total = std::accumulate(d.weights.begin(), d.weights.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12) {
    throw ParameterError("selectivity weights sum to " + std::to_string(total) + ", expected 1");
  }

  auto tiers = std::make_shared<std::vector<ThetaRule>>();
  for (int k = 0; k <= kMaxTier; ++k) tiers->push_back(make_theta_rule(p.theta_nodes << k));
  tiers_ = std::move(tiers);
}

const ThetaRule& Model::rule_for(double rho, int p) const {
  const double needed = (kNodesPerUnit + kNodesPerOrder * p) * mu() * dist().r_max() * std::abs(rho);
  int k = 0;
  while (k < kMaxTier && (params_.theta_nodes << k) < needed) ++k;
  return tier(k);
}

}  // namespace nfobs
