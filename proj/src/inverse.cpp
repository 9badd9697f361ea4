#include "nfobs/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nfobs/gamma.hpp"

namespace nfobs {

void InverseConfig::validate() const {
  if (!(delta > 0.0)) throw ParameterError("observer.delta must be > 0");
  if (!(eta > 0.0)) throw ParameterError("observer.eta must be > 0");
  if (!(R > eta)) throw ParameterError("observer.R must exceed observer.eta");
  if (!(R > delta)) throw ParameterError("observer.R must exceed observer.delta");
  if (!(rho_tol > 0.0)) throw ParameterError("observer.rho_tol must be > 0");
  if (max_iter < 1) throw ParameterError("observer.max_iter must be >= 1");
}

double BumpSpec::operator()(double x) const {
  const double a = std::abs(x);
  if (a <= R - 1.0) return 1.0;
  if (a >= R) return 0.0;
  const double u = R - a;  // in (0, 1)
  return u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}

namespace {

// J₀Γ₀⁰(v₀, ·) at the two ends of the radial range [η, R].
struct Band {
  double at_eta;
  double at_R;
};

Band band(const InverseConfig& cfg, const Model& model, double v0) {
  return {model.j0() * gamma_table(model, v0, cfg.eta, 0, 0)(0, 0),
          model.j0() * gamma_table(model, v0, cfg.R, 0, 0)(0, 0)};
}

Vec4 project_v0(const InverseConfig& cfg, const Vec4& z, double y) {
  Vec4 out = z;
  out[0] = (y >= 0.0) ? std::clamp(z[0], cfg.delta, cfg.R) : std::clamp(z[0], -cfg.R, -cfg.delta);
  return out;
}

Vec4 project_with(const InverseConfig& cfg, const Model& model, double i0, const Vec4& z, double y, Band& b) {
  Vec4 out = project_v0(cfg, z, y);
  const double v0 = out[0];
  b = band(cfg, model, v0);
  const double k = 1.0 / model.tau();
  const double lo = k * (b.at_eta - v0 + i0);
  const double hi = k * (b.at_R - v0 + i0);
  out[1] = std::clamp(z[1], std::min(lo, hi), std::max(lo, hi));
  return out;
}

double solve_in_band(const InverseConfig& cfg, const Model& model, double v0, double w, double rho_hint,
                     const Band& b) {
  const double j0 = model.j0();
  double lo = cfg.eta, hi = cfg.R;
  const double f_lo = b.at_eta - w;
  const double f_hi = b.at_R - w;
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) return std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
  const bool rising = f_hi > 0.0;

  double x = (std::isfinite(rho_hint) && rho_hint > lo && rho_hint < hi) ? rho_hint : 0.5 * (lo + hi);
  for (int it = 0; it < cfg.max_iter; ++it) {
    const auto g = gamma00_with_slope(model, v0, x);
    const double f = j0 * g[0] - w;
    if (f == 0.0) return x;
    if ((f > 0.0) == rising) {
      hi = x;
    } else {
      lo = x;
    }
    double next = x - f / (j0 * g[1]);
    if (!std::isfinite(next) || next <= lo || next >= hi) next = 0.5 * (lo + hi);
    const double step = std::abs(next - x);
    x = next;
    if (step <= cfg.rho_tol || hi - lo <= cfg.rho_tol) return x;
  }
  throw NumericError("solve_rho: no convergence in " + std::to_string(cfg.max_iter) +
                     " iterations (v0=" + std::to_string(v0) + ", w=" + std::to_string(w) + ")");
}

// Plain Newton from the hint, accepted only if it converges without leaving
// [η, R]. Γ₀⁰ is strictly monotone in ρ, so success also certifies that z₁
// lies inside the band and the bracketed solve would find the same root.
bool newton_from_hint(const InverseConfig& cfg, const Model& model, double v0, double w, double rho_hint,
                      double& rho) {
  constexpr int kTries = 8;
  if (!(std::isfinite(rho_hint) && rho_hint > cfg.eta && rho_hint < cfg.R)) return false;
  const double j0 = model.j0();
  double x = rho_hint;
  for (int it = 0; it < kTries; ++it) {
    const auto g = gamma00_with_slope(model, v0, x);
    const double next = x - (j0 * g[0] - w) / (j0 * g[1]);
    if (!(next > cfg.eta && next < cfg.R)) return false;
    const double step = std::abs(next - x);
    x = next;
    if (step <= cfg.rho_tol) {
      rho = x;
      return true;
    }
  }
  return false;
}

PolarState invert_at(const Model& model, const InputSignal& input, const Vec4& z,
                     double t, double rho) {
  const double tau = model.tau();
  const double k = 1.0 / tau;
  const double j0 = model.j0();
  const double j1 = model.j1();
  const InputJet jet = input.jet(t);

  const double v0 = z[0];
  const double F0 = z[1];
  const GammaTable G = gamma_table(model, v0, rho, 2, 2);
  if (!(std::abs(G(1, 1)) > 1e-300)) {
    throw SingularError("invert_S: Gamma_1^1 vanishes at v0=" + std::to_string(v0) +
                        ", rho=" + std::to_string(rho));
  }

  const double F1 = (tau * z[2] + F0 - j0 * G(1, 0) * F0 - jet[1].x()) / (j0 * G(1, 1));
  const double s = tau * F1 + rho - j1 * G(0, 1);
  const double D1 = ((tau * z[3] + z[2] - jet[2].x()) / j0 - G(1, 0) * z[2] - G(2, 0) * F0 * F0 -
                     2.0 * G(2, 1) * F0 * F1 - G(2, 2) * F1 * F1) /
                    G(1, 1);
  const Vec2 i = jet[0].tail<2>();
  const Vec2 di = jet[1].tail<2>();
  const double ds = tau * D1 + F1 - j1 * G(1, 1) * F0 - j1 * G(1, 2) * F1;
  const double a1 = ds - k * (i.squaredNorm() - s * s) / rho;

  const double det = wedge(i, di);
  const double floor = 0.5 * input.certified_wedge();
  if (!(std::abs(det) > floor) || det == 0.0) {
    throw SingularError("invert_S: |I ^ dI| = " + std::to_string(std::abs(det)) + " at t=" +
                        std::to_string(t) + " is below the certified floor");
  }
  const Vec2 zeta{(s * di.y() - i.y() * a1) / det, (i.x() * a1 - di.x() * s) / det};
  return {v0, rho, zeta};
}

}  // namespace

Vec4 project_Pi(const InverseConfig& cfg, const Model& model, const InputSignal& input, const Vec4& z,
                double y, double t) {
  Band b{};
  return project_with(cfg, model, input.value(t).x(), z, y, b);
}

double solve_rho(const InverseConfig& cfg, const Model& model, double v0, double w, double rho_hint) {
  return solve_in_band(cfg, model, v0, w, rho_hint, band(cfg, model, v0));
}

PolarState invert_S(const InverseConfig& cfg, const Model& model, const InputSignal& input, const Vec4& z,
                    double t, double rho_hint) {
  const double i0 = input.value(t).x();
  const double w = model.tau() * z[1] + z[0] - i0;
  double rho = 0.0;
  if (!newton_from_hint(cfg, model, z[0], w, rho_hint, rho)) {
    rho = solve_in_band(cfg, model, z[0], w, rho_hint, band(cfg, model, z[0]));
  }
  return invert_at(model, input, z, t, rho);
}

PolarState saturate(const BumpSpec& bump, const PolarState& x) {
  PolarState out = x;
  out.zeta = bump(x.zeta.norm()) * x.zeta;
  return out;
}

Vec3 phi(const PolarState& x) { return {x.v0, x.rho * x.zeta.x(), x.rho * x.zeta.y()}; }

InverseResult pseudo_inverse_detail(const InverseConfig& cfg, const Model& model, const InputSignal& input,
                                    const Vec4& z, double y, double t, double rho_hint) {
  InverseResult r;
  const double i0 = input.value(t).x();
  double rho = 0.0;
  r.z_projected = project_v0(cfg, z, y);
  const double w = model.tau() * z[1] + r.z_projected[0] - i0;
  if (!newton_from_hint(cfg, model, r.z_projected[0], w, rho_hint, rho)) {
    Band b{};
    r.z_projected = project_with(cfg, model, i0, z, y, b);
    rho = solve_in_band(cfg, model, r.z_projected[0], model.tau() * r.z_projected[1] + r.z_projected[0] - i0,
                        rho_hint, b);
  }
  r.x = invert_at(model, input, r.z_projected, t, rho);
  r.v = phi(saturate(BumpSpec{cfg.R}, r.x));
  return r;
}

Vec3 pseudo_inverse(const InverseConfig& cfg, const Model& model, const InputSignal& input, const Vec4& z,
                    double y, double t) {
  return pseudo_inverse_detail(cfg, model, input, z, y, t).v;
}

}  // namespace nfobs
