#include "nfobs/observer.hpp"

#include <cmath>
#include <string>

namespace nfobs {

const char* mode_name(Mode m) { return m == Mode::ZMode ? "Z" : "V"; }

HybridObserver::HybridObserver(Model model, InputPtr input, ObserverConfig cfg)
    : model_(std::move(model)), input_(std::move(input)), cfg_(cfg), gain_(gain_matrix(cfg.l)) {
  cfg_.inverse.validate();
}

void HybridObserver::reset(const Vec3& v_hat0, double y0, double y_next, double t0) {
  state_ = ObserverState{};
  const double y_mode = (std::abs(y0) == cfg_.inverse.delta) ? y_next : y0;
  state_.mode = in_z_mode(y_mode) ? Mode::ZMode : Mode::VMode;
  state_.v_hat = v_hat0;
  state_.rho_hint = std::max(v_hat0.tail<2>().norm(), cfg_.inverse.eta);
  if (state_.mode == Mode::ZMode) {
    state_.z_hat = T_map(model_, *input_, v_hat0, t0);
    const InverseResult r = pseudo_inverse_detail(cfg_.inverse, model_, *input_, state_.z_hat, y0, t0);
    state_.v_hat = r.v;
    state_.rho_hint = r.x.rho;
  }
}

Vec4 HybridObserver::z_mode_rhs(const Vec4& z_hat, double y, double t) const {
  const InverseResult r =
      pseudo_inverse_detail(cfg_.inverse, model_, *input_, z_hat, y, t, state_.rho_hint);
  const double l4 = L4h(model_, *input_, r.v, t);
  Vec4 out;
  out << z_hat[1], z_hat[2], z_hat[3], l4;
  out -= gain_.K * (z_hat[0] - y);
  return out;
}

Vec3 HybridObserver::v_mode_rhs(const Vec3& v_hat, double t) const {
  return f_cartesian(model_, *input_, v_hat, t);
}

void HybridObserver::commit(const Vec4& z_hat, const Vec3& v_hat, double y, double t) {
  const Mode next = in_z_mode(y) ? Mode::ZMode : Mode::VMode;
  if (state_.mode == Mode::ZMode) {
    state_.z_hat = z_hat;
    const InverseResult r =
        pseudo_inverse_detail(cfg_.inverse, model_, *input_, z_hat, y, t, state_.rho_hint);
    state_.v_hat = r.v;
    state_.rho_hint = r.x.rho;
  } else {
    state_.v_hat = v_hat;
  }
  if (next == state_.mode) return;

  if (static_cast<int>(state_.switches.size()) >= kMaxSwitches) {
    throw AssumptionError("observer: third mode switch at t=" + std::to_string(t) +
                          "; the output crossed the delta band more than once");
  }
  state_.switches.push_back({t, state_.mode, next});
  if (next == Mode::ZMode) {
    state_.z_hat = T_map(model_, *input_, state_.v_hat, t);
    state_.rho_hint = std::max(state_.v_hat.tail<2>().norm(), cfg_.inverse.eta);
    const InverseResult r = pseudo_inverse_detail(cfg_.inverse, model_, *input_, state_.z_hat, y, t);
    state_.v_hat = r.v;
    state_.rho_hint = r.x.rho;
  }
  state_.mode = next;
}

}  // namespace nfobs
