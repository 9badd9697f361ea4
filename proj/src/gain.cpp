#include "nfobs/gain.hpp"

#include <cmath>
#include <utility>

namespace nfobs {

namespace {

double binomial(int n, int k) {
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

Mat4 chain_A() {
  Mat4 a = Mat4::Zero();
  for (int i = 0; i < 3; ++i) a(i, i + 1) = 1.0;
  return a;
}

Vec4 output_C() { return Vec4::UnitX(); }
Vec4 nonlinearity_W() { return Vec4::UnitW(); }

Mat4 invert4(const Mat4& m) {
  Mat4 a = m;
  Mat4 inv = Mat4::Identity();
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r) {
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    }
    if (a(piv, col) == 0.0) throw SingularError("invert4: matrix is singular");
    if (piv != col) {
      a.row(piv).swap(a.row(col));
      inv.row(piv).swap(inv.row(col));
    }
    const double d = a(col, col);
    a.row(col) /= d;
    inv.row(col) /= d;
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const double f = a(r, col);
      if (f == 0.0) continue;
      a.row(r) -= f * a.row(col);
      inv.row(r) -= f * inv.row(col);
    }
  }
  return inv;
}

GainMatrix gain_matrix(double l) {
  if (!(l >= 1.0)) throw ParameterError("observer.l must be >= 1");
  GainMatrix g;
  g.l = l;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
      g.P(i - 1, j - 1) = sign / std::pow(l, i + j - 1) * binomial(i + j - 2, j - 1);
    }
  }
  g.P_inv = invert4(g.P);
  g.K = g.P_inv * output_C();
  return g;
}

double lyapunov_residual(const GainMatrix& g) {
  const Mat4 A = chain_A();
  const Vec4 C = output_C();
  const Mat4 res = g.P * A + A.transpose() * g.P - C * C.transpose() + g.l * g.P;
  return res.norm() / (g.l * g.P).norm();
}

}  // namespace nfobs
