#pragma once

#include "nfobs/dynamics.hpp"
#include "nfobs/gamma.hpp"
#include "nfobs/input.hpp"
#include "nfobs/model.hpp"

namespace nfobs {

/// Total derivatives of the output along the extended polar flow at one
/// (X, t). S holds ([S_t]₀..[S_t]₃); L4 is 𝓛⁴h.
struct LieStack {
  double F0 = 0.0, F1 = 0.0;    // v̇₀, ρ̇
  double LF0 = 0.0, LF1 = 0.0;  // v̈₀, ρ̈
  double s = 0.0, ds = 0.0;     // I₁:₂ᵀζ and its total derivative
  GammaTable gamma;             // Γ_p^j at (v₀, ρ), p ≤ 3, j ≤ 3
  InputJet jet;
  Vec4 S = Vec4::Zero();
  double L4 = 0.0;
};

LieStack lie_stack(const Model& model, const InputJet& jet, const PolarState& x);

/// Extended observability map S_t(X); DomainError for ρ ≤ 0.
Vec4 S_map(const Model& model, const InputSignal& input, const PolarState& x, double t);

/// 𝓛⁴h at the polar point X (polar route).
double L4_polar(const Model& model, const InputSignal& input, const PolarState& x, double t);

/// (h, 𝓛h, 𝓛²h, 𝓛³h) and 𝓛⁴h at a Cartesian state, computed from the Taylor
/// coefficients of the flow. Smooth through the axis v₁:₂ = 0.
struct Embedding {
  Vec4 T = Vec4::Zero();
  double L4h = 0.0;
};

Embedding embed(const Model& model, const InputJet& jet, const Vec3& v);

Vec4 T_map(const Model& model, const InputSignal& input, const Vec3& v, double t);
double L4h(const Model& model, const InputSignal& input, const Vec3& v, double t);

struct ObservabilityDiagnostics {
  double det_G = 0.0;  // İ₁:₂ ∧ I₁:₂
  double delta_star = 0.0;
  double wedge = 0.0;  // I₁:₂ ∧ İ₁:₂
  double c_effective = 0.0;
};

/// δ* = c / (1 + |J₀| σ'(0)).
double delta_star(double c, double j0, double sigma_prime0);

/// Upper bound on the time spent in {|v₀| ≤ δ}: (δ*/c)·2δ/(δ* - δ).
double t_delta(double delta, double delta_star, double c);

ObservabilityDiagnostics diagnostics(const Model& model, const InputSignal& input, double t);

/// Time-grid scan of the input used by `check-input`.
struct InputScanRow {
  double t, i0, wedge, det_G, delta_star;
};

struct InputScan {
  std::vector<InputScanRow> rows;
  double c_effective = 0.0;
  double min_wedge = 0.0;
  double t_min_i0 = 0.0;
  double t_min_wedge = 0.0;
};

InputScan scan_input(const Model& model, const InputSignal& input, double t0, double t1, int n);

}  // namespace nfobs
