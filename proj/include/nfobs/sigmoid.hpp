#pragma once

#include <array>
#include <cmath>

namespace nfobs {

/// Firing-rate function. The dynamics always use the odd base map
/// σ(x) = tanh(μx); `s1`, `s2`, `h0` describe the physical sigmoid
/// s1·σ(x + h0) + s2 that `appendix_transform` folds back into J and I.
struct SigmoidSpec {
  double gain = 10.0;  // μ
  int derivative_order_max = 4;
  double s1 = 1.0;
  double s2 = 0.0;
  double h0 = 0.0;

  [[nodiscard]] bool is_reduced() const { return s1 == 1.0 && s2 == 0.0 && h0 == 0.0; }
};

/// p-th derivative of the base sigmoid at x, 0 ≤ p ≤ derivative_order_max.
double sigma_eval(const SigmoidSpec& s, int p, double x);

/// σ, σ', σ'', σ''', σ'''' of tanh(μx). sech² is built from exp(-2|μx|)
/// instead of 1 - tanh², which keeps full relative precision in the tails.
inline std::array<double, 5> tanh_jet(double mu, double x) {
  const double a = mu * x;
  const double e = std::exp(-2.0 * std::abs(a));
  const double t = std::copysign((1.0 - e) / (1.0 + e), a);
  const double u = 4.0 * e / ((1.0 + e) * (1.0 + e));
  const double mu2 = mu * mu;
  return {t, mu * u, -2.0 * mu2 * t * u, -2.0 * mu2 * mu * u * (1.0 - 3.0 * t * t),
          8.0 * mu2 * mu2 * t * u * (2.0 - 3.0 * t * t)};
}

}  // namespace nfobs
