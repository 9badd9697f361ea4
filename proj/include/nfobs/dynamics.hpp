#pragma once

#include "nfobs/input.hpp"
#include "nfobs/model.hpp"

namespace nfobs {

/// Extended polar coordinates X = (v₀, ρ, ζ). ζ is not constrained to the
/// unit circle; Cartesian states lift to |ζ| = 1.
struct PolarState {
  double v0 = 0.0;
  double rho = 1.0;
  Vec2 zeta = Vec2::UnitX();

  PolarState() = default;
  /// Throws DomainError unless ρ > 0.
  PolarState(double v0_, double rho_, Vec2 zeta_);

  /// Lift of v with |v₁:₂| > 0; throws DomainError on the axis v₁:₂ = 0.
  static PolarState from_cartesian(const Vec3& v);
  [[nodiscard]] Vec4 as_vector() const { return {v0, rho, zeta.x(), zeta.y()}; }
};

/// Plant right-hand side (1/τ)(-v + Ψ(v) + I(t)). On the axis v₁:₂ = 0 the
/// radial term is the zero vector (its continuous extension).
Vec3 f_cartesian(const Model& model, const InputSignal& input, const Vec3& v, double t);

/// Extended polar dynamics F(X, t); DomainError when ρ ≤ 0.
Vec4 F_polar(const Model& model, const InputSignal& input, const PolarState& x, double t);

/// R* = sqrt(J₀² + 2J₁²)·∫ sqrt(1 + r²) P(r) dr + sup_t ‖I(t)‖.
double invariant_radius(const Model& model, const InputSignal& input);

}  // namespace nfobs
