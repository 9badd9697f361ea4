#pragma once

#include <array>
#include <memory>
#include <string>

#include "nfobs/types.hpp"

namespace nfobs {

/// (I, İ, Ï, I⃛) at one instant.
struct InputJet {
  std::array<Vec3, 4> d;
  [[nodiscard]] const Vec3& operator[](int k) const { return d[static_cast<std::size_t>(k)]; }
};

/// 2-D wedge a ∧ b = det [a; b].
inline double wedge(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

/// Smooth external input t ↦ I(t) ∈ ℝ³ with analytic derivatives and the
/// lower bounds c (on I₀) and μ (on |I₁:₂ ∧ İ₁:₂|) used by the observer.
class InputSignal {
 public:
  virtual ~InputSignal() = default;

  /// k-th time derivative of I at t; k ≤ max_order().
  [[nodiscard]] virtual Vec3 derivative(double t, int k) const = 0;
  [[nodiscard]] virtual int max_order() const { return 6; }
  [[nodiscard]] virtual double certified_c() const = 0;
  [[nodiscard]] virtual double certified_wedge() const = 0;
  [[nodiscard]] virtual double sup_norm() const = 0;
  [[nodiscard]] virtual std::string describe() const = 0;

  [[nodiscard]] Vec3 value(double t) const { return derivative(t, 0); }
  [[nodiscard]] InputJet jet(double t) const;
  /// I₁:₂(t) ∧ İ₁:₂(t).
  [[nodiscard]] double wedge_at(double t) const;

 protected:
  void check_order(int k) const;
};

using InputPtr = std::shared_ptr<const InputSignal>;

/// I₀ = ε(1-β), I₁:₂ = βε (cos ωt, sin ωt).
class CircularInput final : public InputSignal {
 public:
  CircularInput(double epsilon, double beta, double omega);
  [[nodiscard]] Vec3 derivative(double t, int k) const override;
  [[nodiscard]] double certified_c() const override { return eps_ * (1.0 - beta_); }
  [[nodiscard]] double certified_wedge() const override;
  [[nodiscard]] double sup_norm() const override;
  [[nodiscard]] std::string describe() const override;

  [[nodiscard]] double epsilon() const { return eps_; }
  [[nodiscard]] double beta() const { return beta_; }
  [[nodiscard]] double omega() const { return omega_; }

 private:
  double eps_, beta_, omega_;
};

class ConstantInput final : public InputSignal {
 public:
  explicit ConstantInput(Vec3 value) : value_(std::move(value)) {}
  [[nodiscard]] Vec3 derivative(double t, int k) const override;
  [[nodiscard]] double certified_c() const override { return value_.x(); }
  [[nodiscard]] double certified_wedge() const override { return 0.0; }
  [[nodiscard]] double sup_norm() const override { return value_.norm(); }
  [[nodiscard]] std::string describe() const override;

 private:
  Vec3 value_;
};

/// Componentwise I_i(t) = a_i + b_i sin(ω_i t + φ_i).
class SinusoidInput final : public InputSignal {
 public:
  SinusoidInput(Vec3 offset, Vec3 amplitude, Vec3 omega, Vec3 phase);
  [[nodiscard]] Vec3 derivative(double t, int k) const override;
  [[nodiscard]] double certified_c() const override;
  /// Sampled over the common period (or [0, 100] if incommensurate).
  [[nodiscard]] double certified_wedge() const override { return wedge_lb_; }
  [[nodiscard]] double sup_norm() const override;
  [[nodiscard]] std::string describe() const override;

 private:
  Vec3 a_, b_, w_, ph_;
  double wedge_lb_ = 0.0;
};

/// base(t) + (shift, 0, 0). Used by the sigmoid reductions.
class ShiftedInput final : public InputSignal {
 public:
  ShiftedInput(InputPtr base, double shift0) : base_(std::move(base)), shift_(shift0) {}
  [[nodiscard]] Vec3 derivative(double t, int k) const override;
  [[nodiscard]] int max_order() const override { return base_->max_order(); }
  [[nodiscard]] double certified_c() const override { return base_->certified_c() + shift_; }
  [[nodiscard]] double certified_wedge() const override { return base_->certified_wedge(); }
  [[nodiscard]] double sup_norm() const override { return base_->sup_norm() + std::abs(shift_); }
  [[nodiscard]] std::string describe() const override;
  [[nodiscard]] double shift() const { return shift_; }

 private:
  InputPtr base_;
  double shift_;
};

/// base(t) + τ·base'(t): the voltage-model input of an activity-based model.
class ActivityInput final : public InputSignal {
 public:
  ActivityInput(InputPtr base, double tau);
  [[nodiscard]] Vec3 derivative(double t, int k) const override;
  [[nodiscard]] int max_order() const override { return base_->max_order() - 1; }
  [[nodiscard]] double certified_c() const override { return c_lb_; }
  [[nodiscard]] double certified_wedge() const override { return wedge_lb_; }
  [[nodiscard]] double sup_norm() const override { return sup_; }
  [[nodiscard]] std::string describe() const override;

 private:
  InputPtr base_;
  double tau_;
  double c_lb_ = 0.0, wedge_lb_ = 0.0, sup_ = 0.0;
};

}  // namespace nfobs
