#pragma once

#include <vector>

#include "nfobs/gain.hpp"
#include "nfobs/inverse.hpp"
#include "nfobs/observability.hpp"

namespace nfobs {

enum class Mode { ZMode, VMode };

const char* mode_name(Mode m);

struct ObserverConfig {
  InverseConfig inverse{};
  double l = 15.0;
};

struct SwitchEvent {
  double t = 0.0;
  Mode from = Mode::ZMode;
  Mode to = Mode::VMode;
};

struct ObserverState {
  Mode mode = Mode::ZMode;
  Vec4 z_hat = Vec4::Zero();  // meaningful in ZMode
  Vec3 v_hat = Vec3::Zero();  // 𝔗_t(ẑ) in ZMode
  double rho_hint = 0.0;      // last recovered radius, warm-starts the root-find
  std::vector<SwitchEvent> switches;
};

/// Hybrid high-gain observer. ZMode integrates
///   ż = Aẑ + 𝓛⁴h(𝔗_t(ẑ), t)·W - K(ẑ₀ - y)
/// while |y| ≥ δ; VMode integrates the open-loop copy v̂̇ = f(v̂, t). Mode
/// changes are detected on step boundaries and apply the jump maps
/// v̂ = 𝔗_t(ẑ) and ẑ = T_t(v̂).
class HybridObserver {
 public:
  static constexpr int kMaxSwitches = 2;

  HybridObserver(Model model, InputPtr input, ObserverConfig cfg);

  /// ẑ(t₀) = T_{t₀}(v̂₀); the mode follows |y₀| ≥ δ, or |y_next| when
  /// |y₀| = δ exactly.
  void reset(const Vec3& v_hat0, double y0, double y_next, double t0);

  [[nodiscard]] Vec4 z_mode_rhs(const Vec4& z_hat, double y, double t) const;
  [[nodiscard]] Vec3 v_mode_rhs(const Vec3& v_hat, double t) const;

  /// Commits the state integrated to t with the new measurement y: refreshes
  /// v̂, then switches mode (with the jump map) if |y| crossed δ. Throws
  /// AssumptionError on a third switch.
  void commit(const Vec4& z_hat, const Vec3& v_hat, double y, double t);

  [[nodiscard]] const ObserverState& state() const { return state_; }
  [[nodiscard]] const GainMatrix& gain() const { return gain_; }
  [[nodiscard]] const ObserverConfig& config() const { return cfg_; }
  [[nodiscard]] const Model& model() const { return model_; }
  [[nodiscard]] bool in_z_mode(double y) const { return std::abs(y) >= cfg_.inverse.delta; }

 private:
  Model model_;
  InputPtr input_;
  ObserverConfig cfg_;
  GainMatrix gain_;
  ObserverState state_;
};

}  // namespace nfobs
