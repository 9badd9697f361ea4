#include "nfobs/observability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nfobs/sigmoid.hpp"

namespace nfobs {

LieStack lie_stack(const Model& model, const InputJet& jet, const PolarState& x) {
  if (!(x.rho > 0.0)) throw DomainError("Lie stack needs rho > 0");
  LieStack st;
  st.jet = jet;
  st.gamma = gamma_table(model, x.v0, x.rho, 3, 3);
  const GammaTable& G = st.gamma;
  const double k = 1.0 / model.tau();
  const double j0 = model.j0();
  const double j1 = model.j1();
  const double rho = x.rho;
  const Vec2& z = x.zeta;

  const Vec2 i0 = jet[0].tail<2>();
  const Vec2 i1 = jet[1].tail<2>();
  const Vec2 i2 = jet[2].tail<2>();
  const double s = i0.dot(z);
  const double a1 = i1.dot(z);
  const double a2 = i2.dot(z);
  const double b00 = i0.dot(i0);
  const double b01 = i0.dot(i1);

  const double F0 = k * (-x.v0 + j0 * G(0, 0) + jet[0].x());
  const double F1 = k * (-rho + j1 * G(0, 1) + s);
  const double D0 = k * (-F0 + j0 * (G(1, 0) * F0 + G(1, 1) * F1) + jet[1].x());
  const double ds = a1 + k * (b00 - s * s) / rho;
  const double D1 = k * (-F1 + j1 * (G(1, 1) * F0 + G(1, 2) * F1) + ds);

  const double E = G(1, 0) * D0 + G(2, 0) * F0 * F0 + 2.0 * G(2, 1) * F0 * F1 + G(1, 1) * D1 +
                   G(2, 2) * F1 * F1;
  const double S3 = k * (-D0 + j0 * E + jet[2].x());

  const double dds = a2 + k * (b01 - s * a1) / rho +
                     k * ((2.0 * b01 - 2.0 * s * ds) / rho - (b00 - s * s) * F1 / (rho * rho));
  const double dD1 = k * (-D1 +
                          j1 * ((G(2, 1) * F0 + G(2, 2) * F1) * F0 + G(1, 1) * D0 +
                                (G(2, 2) * F0 + G(2, 3) * F1) * F1 + G(1, 2) * D1) +
                          dds);
  const double dE = (G(2, 0) * F0 + G(2, 1) * F1) * D0 + G(1, 0) * S3 +
                    (G(3, 0) * F0 + G(3, 1) * F1) * F0 * F0 + 2.0 * G(2, 0) * F0 * D0 +
                    2.0 * (G(3, 1) * F0 + G(3, 2) * F1) * F0 * F1 +
                    2.0 * G(2, 1) * (D0 * F1 + F0 * D1) + (G(2, 1) * F0 + G(2, 2) * F1) * D1 +
                    G(1, 1) * dD1 + (G(3, 2) * F0 + G(3, 3) * F1) * F1 * F1 +
                    2.0 * G(2, 2) * F1 * D1;

  st.F0 = F0;
  st.F1 = F1;
  st.LF0 = D0;
  st.LF1 = D1;
  st.s = s;
  st.ds = ds;
  st.S = {x.v0, F0, D0, S3};
  st.L4 = k * (-S3 + j0 * dE + jet[3].x());
  return st;
}

Vec4 S_map(const Model& model, const InputSignal& input, const PolarState& x, double t) {
  return lie_stack(model, input.jet(t), x).S;
}

double L4_polar(const Model& model, const InputSignal& input, const PolarState& x, double t) {
  return lie_stack(model, input.jet(t), x).L4;
}

namespace {

struct Series4 {
  // Taylor coefficients c[0..4] of each state component.
  std::array<double, 5> c{};
};

}  // namespace

Embedding embed(const Model& model, const InputJet& jet, const Vec3& v) {
  // Work in the frame where v₁:₂ lies on the positive first axis: the node set
  // is symmetric there, so mirrored node pairs share one tanh evaluation.
  const double rho = v.tail<2>().norm();
  double cr = 1.0, sr = 0.0;
  if (rho > 0.0) {
    cr = v.y() / rho;
    sr = v.z() / rho;
  }
  auto rotate = [&](const Vec3& a) -> Vec3 {
    return {a.x(), cr * a.y() + sr * a.z(), -sr * a.y() + cr * a.z()};
  };

  std::array<Series4, 3> x;
  x[0].c[0] = v.x();
  x[1].c[0] = rho;
  x[2].c[0] = 0.0;
  std::array<Vec3, 4> in;
  constexpr std::array<double, 4> kFact{1.0, 1.0, 2.0, 6.0};
  for (int k = 0; k < 4; ++k) in[static_cast<std::size_t>(k)] = rotate(jet[k]) / kFact[static_cast<std::size_t>(k)];

  const double kappa = 1.0 / model.tau();
  const double mu = model.mu();
  const double j0 = model.j0();
  const double j1 = model.j1();
  const ThetaRule& rule = model.rule_for(rho, 4);
  const auto& dist = model.dist();
  const std::size_t m = rule.half_cos2.size();
  const std::size_t nr = dist.nodes.size();

  // σ derivatives at the base point depend only on (r, cos 2θ).
  std::vector<std::array<double, 4>> sig(nr * m);
  for (std::size_t q = 0; q < nr; ++q) {
    const double r = dist.nodes[q];
    for (std::size_t n = 0; n < m; ++n) {
      const auto d = tanh_jet(mu, v.x() + r * rho * rule.half_cos2[n]);
      sig[q * m + n] = {d[0], d[1], d[2], d[3]};
    }
  }

  // Coefficient k of σ(V(t)) given V's coefficients V[0..k].
  auto compose = [](const std::array<double, 4>& s, const std::array<double, 4>& V, int k) {
    switch (k) {
      case 0: return s[0];
      case 1: return s[1] * V[1];
      case 2: return s[1] * V[2] + 0.5 * s[2] * V[1] * V[1];
      default: return s[1] * V[3] + s[2] * V[1] * V[2] + s[3] * V[1] * V[1] * V[1] / 6.0;
    }
  };

  for (int k = 0; k < 4; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    double p0 = 0.0, p1 = 0.0, p2 = 0.0;
    for (std::size_t q = 0; q < nr; ++q) {
      const double r = dist.nodes[q];
      const double wr = dist.weights[q];
      for (std::size_t n = 0; n < m; ++n) {
        const double c = rule.half_cos2[n];
        const double sn = rule.half_sin2[n];
        const double w = wr * rule.half_weight[n];
        const auto& s = sig[q * m + n];
        std::array<double, 4> vp{}, vm{};
        for (std::size_t i = 1; i <= uk; ++i) {
          const double base = x[0].c[i] + r * c * x[1].c[i];
          const double side = r * sn * x[2].c[i];
          vp[i] = base + side;
          vm[i] = base - side;
        }
        if (sn == 0.0) {
          const double g = compose(s, vp, k);
          p0 += w * g;
          p1 += w * r * c * g;
        } else {
          // Weight w covers the node pair (c, ±s); each carries w/2.
          const double gp = compose(s, vp, k);
          const double gm = compose(s, vm, k);
          p0 += 0.5 * w * (gp + gm);
          p1 += 0.5 * w * r * c * (gp + gm);
          p2 += 0.5 * w * r * sn * (gp - gm);
        }
      }
    }
    const double psi[3] = {j0 * p0, j1 * p1, j1 * p2};
    for (int i = 0; i < 3; ++i) {
      auto& xi = x[static_cast<std::size_t>(i)].c;
      xi[uk + 1] = kappa * (-xi[uk] + psi[i] + in[uk][i]) / (k + 1.0);
    }
  }

  Embedding out;
  out.T = {x[0].c[0], x[0].c[1], 2.0 * x[0].c[2], 6.0 * x[0].c[3]};
  out.L4h = 24.0 * x[0].c[4];
  return out;
}

Vec4 T_map(const Model& model, const InputSignal& input, const Vec3& v, double t) {
  return embed(model, input.jet(t), v).T;
}

double L4h(const Model& model, const InputSignal& input, const Vec3& v, double t) {
  return embed(model, input.jet(t), v).L4h;
}

double delta_star(double c, double j0, double sigma_prime0) {
  return c / (1.0 + std::abs(j0) * sigma_prime0);
}

double t_delta(double delta, double dstar, double c) {
  if (!(delta > 0.0) || !(delta < dstar)) {
    throw DomainError("t_delta needs 0 < delta < delta_star");
  }
  return (dstar / c) * 2.0 * delta / (dstar - delta);
}

ObservabilityDiagnostics diagnostics(const Model& model, const InputSignal& input, double t) {
  ObservabilityDiagnostics d;
  d.wedge = input.wedge_at(t);
  d.det_G = -d.wedge;
  d.c_effective = input.certified_c();
  d.delta_star = delta_star(d.c_effective, model.j0(), model.sigma_prime0());
  return d;
}

InputScan scan_input(const Model& model, const InputSignal& input, double t0, double t1, int n) {
  if (n < 1 || !(t1 >= t0)) throw ParameterError("scan_input needs n >= 1 and t1 >= t0");
  InputScan out;
  out.c_effective = std::numeric_limits<double>::infinity();
  out.min_wedge = std::numeric_limits<double>::infinity();
  out.rows.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const double t = t0 + (t1 - t0) * i / n;
    const double i0 = input.value(t).x();
    const double w = input.wedge_at(t);
    out.rows.push_back({t, i0, w, -w, delta_star(i0, model.j0(), model.sigma_prime0())});
    if (i0 < out.c_effective) {
      out.c_effective = i0;
      out.t_min_i0 = t;
    }
    if (std::abs(w) < out.min_wedge) {
      out.min_wedge = std::abs(w);
      out.t_min_wedge = t;
    }
  }
  return out;
}

}  // namespace nfobs
