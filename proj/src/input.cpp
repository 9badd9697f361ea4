#include "nfobs/input.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace nfobs {

namespace {

// d^k/dt^k sin(ωt + φ) = ω^k sin(ωt + φ + kπ/2)
double sin_derivative(double omega, double phase, double t, int k) {
  return std::pow(omega, k) * std::sin(omega * t + phase + k * std::numbers::pi / 2.0);
}

struct SampledBounds {
  double min_i0 = std::numeric_limits<double>::infinity();
  double min_wedge = std::numeric_limits<double>::infinity();
  double sup = 0.0;
};

SampledBounds sample_bounds(const InputSignal& in, double t1, int n) {
  SampledBounds b;
  for (int i = 0; i <= n; ++i) {
    const double t = t1 * i / n;
    const Vec3 v = in.value(t);
    b.min_i0 = std::min(b.min_i0, v.x());
    b.min_wedge = std::min(b.min_wedge, std::abs(in.wedge_at(t)));
    b.sup = std::max(b.sup, v.norm());
  }
  return b;
}

}  // namespace

void InputSignal::check_order(int k) const {
  if (k < 0 || k > max_order()) {
    throw OrderError("input derivative order " + std::to_string(k) + " outside [0, " +
                     std::to_string(max_order()) + "]");
  }
}

InputJet InputSignal::jet(double t) const {
  return {{derivative(t, 0), derivative(t, 1), derivative(t, 2), derivative(t, 3)}};
}

double InputSignal::wedge_at(double t) const {
  const Vec3 i = derivative(t, 0);
  const Vec3 di = derivative(t, 1);
  return wedge(i.tail<2>(), di.tail<2>());
}

CircularInput::CircularInput(double epsilon, double beta, double omega)
    : eps_(epsilon), beta_(beta), omega_(omega) {
  if (!std::isfinite(epsilon) || !std::isfinite(beta) || !std::isfinite(omega)) {
    throw ParameterError("circular input parameters must be finite");
  }
}

Vec3 CircularInput::derivative(double t, int k) const {
  check_order(k);
  const double amp = beta_ * eps_;
  const double i0 = (k == 0) ? eps_ * (1.0 - beta_) : 0.0;
  // cos(ωt) = sin(ωt + π/2)
  return {i0, amp * sin_derivative(omega_, std::numbers::pi / 2.0, t, k),
          amp * sin_derivative(omega_, 0.0, t, k)};
}

double CircularInput::certified_wedge() const {
  const double amp = beta_ * eps_;
  return amp * amp * std::abs(omega_);
}

double CircularInput::sup_norm() const { return std::hypot(eps_ * (1.0 - beta_), beta_ * eps_); }

std::string CircularInput::describe() const {
  std::ostringstream os;
  os << "circular(epsilon=" << eps_ << ", beta=" << beta_ << ", omega=" << omega_ << ")";
  return os.str();
}

Vec3 ConstantInput::derivative(double /*t*/, int k) const {
  check_order(k);
  return k == 0 ? value_ : Vec3::Zero();
}

std::string ConstantInput::describe() const {
  std::ostringstream os;
  os << "constant(" << value_.x() << ", " << value_.y() << ", " << value_.z() << ")";
  return os.str();
}

SinusoidInput::SinusoidInput(Vec3 offset, Vec3 amplitude, Vec3 omega, Vec3 phase)
    : a_(std::move(offset)), b_(std::move(amplitude)), w_(std::move(omega)), ph_(std::move(phase)) {
  // Common period when the two planar frequencies agree; otherwise a long window.
  double horizon = 100.0;
  if (w_.y() == w_.z() && w_.y() != 0.0) horizon = 2.0 * std::numbers::pi / std::abs(w_.y());
  wedge_lb_ = sample_bounds(*this, horizon, 4096).min_wedge;
}

Vec3 SinusoidInput::derivative(double t, int k) const {
  check_order(k);
  Vec3 out;
  for (int i = 0; i < 3; ++i) {
    out[i] = ((k == 0) ? a_[i] : 0.0) + b_[i] * sin_derivative(w_[i], ph_[i], t, k);
  }
  return out;
}

double SinusoidInput::certified_c() const { return a_.x() - std::abs(b_.x()); }

double SinusoidInput::sup_norm() const { return (a_.cwiseAbs() + b_.cwiseAbs()).norm(); }

std::string SinusoidInput::describe() const {
  std::ostringstream os;
  os << "sinusoid(offset=[" << a_.transpose() << "], amplitude=[" << b_.transpose() << "])";
  return os.str();
}

Vec3 ShiftedInput::derivative(double t, int k) const {
  Vec3 out = base_->derivative(t, k);
  if (k == 0) out.x() += shift_;
  return out;
}

std::string ShiftedInput::describe() const {
  std::ostringstream os;
  os << base_->describe() << " + I0 shift " << shift_;
  return os.str();
}

ActivityInput::ActivityInput(InputPtr base, double tau) : base_(std::move(base)), tau_(tau) {
  const SampledBounds b = sample_bounds(*this, 100.0, 20000);
  c_lb_ = b.min_i0;
  wedge_lb_ = b.min_wedge;
  sup_ = b.sup;
}

Vec3 ActivityInput::derivative(double t, int k) const {
  check_order(k);
  return base_->derivative(t, k) + tau_ * base_->derivative(t, k + 1);
}

std::string ActivityInput::describe() const {
  std::ostringstream os;
  os << base_->describe() << " (activity-to-voltage, tau=" << tau_ << ")";
  return os.str();
}

}  // namespace nfobs
