#pragma once

#include "nfobs/types.hpp"

namespace nfobs {

/// High-gain weighting P_l(i,j) = (-1)^{i+j} / l^{i+j-1} · C(i+j-2, j-1)
/// (1-based), its inverse, and the correction gain K = P_l⁻¹Cᵀ.
struct GainMatrix {
  double l = 1.0;
  Mat4 P = Mat4::Zero();
  Mat4 P_inv = Mat4::Zero();
  Vec4 K = Vec4::Zero();
};

/// Throws ParameterError for l < 1.
GainMatrix gain_matrix(double l);

/// Brunovsky chain: A(i, i+1) = 1.
Mat4 chain_A();
/// C = (1, 0, 0, 0) as a row; W = (0, 0, 0, 1).
Vec4 output_C();
Vec4 nonlinearity_W();

/// Gauss-Jordan inverse with partial pivoting; SingularError on a zero pivot.
Mat4 invert4(const Mat4& m);

/// ‖P A + Aᵀ P - CᵀC + l P‖_F / ‖l P‖_F.
double lyapunov_residual(const GainMatrix& g);

}  // namespace nfobs
