#pragma once

#include <limits>

#include "nfobs/dynamics.hpp"
#include "nfobs/input.hpp"
#include "nfobs/model.hpp"

namespace nfobs {

struct InverseConfig {
  double delta = 0.3;  // output floor δ
  double eta = 1e-3;   // radial floor η
  double R = 6.0;      // ball radius
  double rho_tol = 1e-12;
  int max_iter = 200;

  /// Throws ParameterError unless 0 < η < R, δ > 0, δ < R and rho_tol > 0.
  void validate() const;
};

/// Quintic smoothstep cut-off: 1 on [0, R-1], 0 on [R, ∞), C² in between.
struct BumpSpec {
  double R = 6.0;
  [[nodiscard]] double operator()(double x) const;
};

/// Π_t: clamps z₀ into [δ, R] (or [-R, -δ] when y < 0) and z₁ into the band
/// swept by ρ ↦ (1/τ)(J₀Γ₀⁰(z₀, ρ) - z₀ + I₀) over [η, R].
Vec4 project_Pi(const InverseConfig& cfg, const Model& model, const InputSignal& input, const Vec4& z,
                double y, double t);

/// Unique ρ ∈ [η, R] with J₀Γ₀⁰(v₀, ρ) = w. Safeguarded Newton on a
/// maintained bracket; `rho_hint` (if finite) seeds the first iterate.
/// Targets outside the band return the nearer endpoint.
double solve_rho(const InverseConfig& cfg, const Model& model, double v0, double w,
                 double rho_hint = std::numeric_limits<double>::quiet_NaN());

/// Constructive inverse of S_t on its image.
PolarState invert_S(const InverseConfig& cfg, const Model& model, const InputSignal& input, const Vec4& z,
                    double t, double rho_hint = std::numeric_limits<double>::quiet_NaN());

/// Scales ζ by p(|ζ|); v₀ and ρ are untouched.
PolarState saturate(const BumpSpec& bump, const PolarState& x);

/// (v₀, ρζ₁, ρζ₂).
Vec3 phi(const PolarState& x);

struct InverseResult {
  Vec3 v = Vec3::Zero();
  Vec4 z_projected = Vec4::Zero();
  PolarState x{};  // S_t⁻¹(Π_t z) before saturation
};

/// 𝔗_t = Φ ∘ Sat ∘ S_t⁻¹ ∘ Π_t.
InverseResult pseudo_inverse_detail(const InverseConfig& cfg, const Model& model, const InputSignal& input,
                                    const Vec4& z, double y, double t,
                                    double rho_hint = std::numeric_limits<double>::quiet_NaN());

Vec3 pseudo_inverse(const InverseConfig& cfg, const Model& model, const InputSignal& input, const Vec4& z,
                    double y, double t);

}  // namespace nfobs
