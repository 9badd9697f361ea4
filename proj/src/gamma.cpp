#include "nfobs/gamma.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "nfobs/types.hpp"

namespace nfobs {

namespace {

// Σ over (r, θ) nodes of r^j cos^j(2θ) σ^(p)(v₀ + rρ cos 2θ), unrolled for
// compile-time orders. The half rule folds the θ ↦ -θ mirror pairs.
template <int P, int J, int RuleOrder = P>
void accumulate(const Model& model, double v0, double rho, GammaTable& out) {
  const double mu = model.mu();
  const double mu2 = mu * mu;
  const ThetaRule& rule = model.rule_for(rho, RuleOrder);
  const auto& dist = model.dist();
  const std::size_t m = rule.half_cos2.size();
  const double* hc = rule.half_cos2.data();
  const double* hw = rule.half_weight.data();

  double acc[P + 1][J + 1] = {};
  for (std::size_t k = 0; k < dist.nodes.size(); ++k) {
    const double r = dist.nodes[k];
    const double wr = dist.weights[k];
    for (std::size_t n = 0; n < m; ++n) {
      const double rc = r * hc[n];
      const double a = mu * (v0 + rho * rc);
      const double e = std::exp(-2.0 * std::abs(a));
      const double t = std::copysign((1.0 - e) / (1.0 + e), a);
      const double u = 4.0 * e / ((1.0 + e) * (1.0 + e));
      double s[5];
      s[0] = t;
      if constexpr (P >= 1) s[1] = mu * u;
      if constexpr (P >= 2) s[2] = -2.0 * mu2 * t * u;
      if constexpr (P >= 3) s[3] = -2.0 * mu2 * mu * u * (1.0 - 3.0 * t * t);
      if constexpr (P >= 4) s[4] = 8.0 * mu2 * mu2 * t * u * (2.0 - 3.0 * t * t);
      double pw[J + 1];
      pw[0] = wr * hw[n];
      for (int j = 1; j <= J; ++j) pw[j] = pw[j - 1] * rc;
      for (int p = 0; p <= P; ++p) {
        for (int j = 0; j <= J; ++j) acc[p][j] += s[p] * pw[j];
      }
    }
  }
  for (int p = 0; p <= P; ++p) {
    for (int j = 0; j <= J; ++j) out.g[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)] = acc[p][j];
  }
}

using Kernel = void (*)(const Model&, double, double, GammaTable&);

template <int P, int... Js>
constexpr std::array<Kernel, sizeof...(Js)> row(std::integer_sequence<int, Js...>) {
  return {&accumulate<P, Js>...};
}

template <int... Ps>
constexpr auto make_table(std::integer_sequence<int, Ps...>) {
  return std::array<std::array<Kernel, GammaTable::kMaxJ + 1>, sizeof...(Ps)>{
      row<Ps>(std::make_integer_sequence<int, GammaTable::kMaxJ + 1>{})...};
}

constexpr auto kKernels = make_table(std::make_integer_sequence<int, GammaTable::kMaxP + 1>{});

}  // namespace

GammaTable gamma_table(const Model& model, double v0, double rho, int pmax, int jmax) {
  if (pmax < 0 || pmax > GammaTable::kMaxP || jmax < 0 || jmax > GammaTable::kMaxJ) {
    throw OrderError("gamma table orders out of range");
  }
  if (!(rho >= 0.0)) throw DomainError("gamma: rho must be >= 0, got " + std::to_string(rho));
  GammaTable out;
  out.pmax = pmax;
  out.jmax = jmax;
  kKernels[static_cast<std::size_t>(pmax)][static_cast<std::size_t>(jmax)](model, v0, rho, out);
  return out;
}

double gamma(const Model& model, int p, int j, double v0, double rho) {
  if (p < 0 || p > 4 || j < 0 || j > 3) {
    throw OrderError("gamma index (p=" + std::to_string(p) + ", j=" + std::to_string(j) +
                     ") outside 0<=p<=4, 0<=j<=3");
  }
  return gamma_table(model, v0, rho, p, j)(p, j);
}

std::array<double, 2> gamma00_with_slope(const Model& model, double v0, double rho) {
  if (!(rho >= 0.0)) throw DomainError("gamma: rho must be >= 0, got " + std::to_string(rho));
  GammaTable g;
  accumulate<1, 1, 0>(model, v0, rho, g);
  return {g(0, 0), g(1, 1)};
}

}  // namespace nfobs
