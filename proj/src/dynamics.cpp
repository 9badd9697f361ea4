#include "nfobs/dynamics.hpp"

#include <cmath>
#include <string>

#include "nfobs/gamma.hpp"

namespace nfobs {

PolarState::PolarState(double v0_, double rho_, Vec2 zeta_) : v0(v0_), rho(rho_), zeta(std::move(zeta_)) {
  if (!(rho > 0.0)) throw DomainError("polar state needs rho > 0, got " + std::to_string(rho));
}

PolarState PolarState::from_cartesian(const Vec3& v) {
  const double rho = v.tail<2>().norm();
  if (!(rho > 0.0)) throw DomainError("polar lift undefined on the axis v1 = v2 = 0");
  return {v.x(), rho, v.tail<2>() / rho};
}

Vec3 f_cartesian(const Model& model, const InputSignal& input, const Vec3& v, double t) {
  const double rho = v.tail<2>().norm();
  const GammaTable g = gamma_table(model, v.x(), rho, 0, 1);
  const Vec3 in = input.value(t);
  Vec3 psi;
  psi.x() = model.j0() * g(0, 0);
  if (rho > 0.0) {
    psi.tail<2>() = model.j1() * g(0, 1) * v.tail<2>() / rho;
  } else {
    psi.tail<2>().setZero();
  }
  return (-v + psi + in) / model.tau();
}

Vec4 F_polar(const Model& model, const InputSignal& input, const PolarState& x, double t) {
  if (!(x.rho > 0.0)) throw DomainError("F_polar needs rho > 0");
  const GammaTable g = gamma_table(model, x.v0, x.rho, 0, 1);
  const Vec3 in = input.value(t);
  const Vec2 i12 = in.tail<2>();
  const double s = i12.dot(x.zeta);
  const double k = 1.0 / model.tau();
  Vec4 out;
  out[0] = k * (-x.v0 + model.j0() * g(0, 0) + in.x());
  out[1] = k * (-x.rho + model.j1() * g(0, 1) + s);
  out.tail<2>() = k * (i12 - s * x.zeta) / x.rho;
  return out;
}

double invariant_radius(const Model& model, const InputSignal& input) {
  const double moment = model.dist().expect([](double r) { return std::sqrt(1.0 + r * r); });
  return std::sqrt(model.j0() * model.j0() + 2.0 * model.j1() * model.j1()) * moment + input.sup_norm();
}

}  // namespace nfobs
