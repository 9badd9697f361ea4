#pragma once

#include <array>

#include "nfobs/model.hpp"

namespace nfobs {

/// Γ_p^j(v₀, ρ) for 0 ≤ p ≤ pmax, 0 ≤ j ≤ jmax, evaluated in one pass over
/// the quadrature nodes.
///
///   Γ_p^j(v₀, ρ) = ∫ r^j cos^j(2θ) σ^(p)(v₀ + rρ cos 2θ) P(r) dθ dr / π
///
/// with ∂_{v₀} Γ_p^j = Γ_{p+1}^j and ∂_ρ Γ_p^j = Γ_{p+1}^{j+1}.
struct GammaTable {
  static constexpr int kMaxP = 4;
  static constexpr int kMaxJ = 4;

  std::array<std::array<double, kMaxJ + 1>, kMaxP + 1> g{};
  int pmax = 0;
  int jmax = 0;

  [[nodiscard]] double operator()(int p, int j) const {
    return g[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)];
  }
};

GammaTable gamma_table(const Model& model, double v0, double rho, int pmax, int jmax);

/// Single Γ_p^j value; throws OrderError for p ∉ [0,4], j ∉ [0,3] and
/// DomainError for ρ < 0.
double gamma(const Model& model, int p, int j, double v0, double rho);

/// (Γ₀⁰, Γ₁¹) at (v₀, ρ): the value and ρ-slope used by the radial root-find.
/// Both come from the rule sized for Γ₀⁰; the slope only steers Newton.
std::array<double, 2> gamma00_with_slope(const Model& model, double v0, double rho);

}  // namespace nfobs
