// Trigonometric approximants of the centered sawtooth psi(w) = w - [w] - 1/2:
//
//   psi_H (w) = - Sum_{0<h<H} alpha_{h,H} sin(2 pi h w)
//   psi*_H(w) =   Sum_{0<h<H} beta_{h,H}  cos(2 pi h w)
//   alpha_{h,H} = rho(h/H) / (pi h),  rho(xi) = pi xi (1-xi) cot(pi xi) + xi
//   beta_{h,H}  = (1/H) (1 - h/H)
//
// with the majorant property |psi(w) - psi_H(w)| <= psi*_H(w) + 1/(2H)
// holding pointwise for every real w and every integer H >= 2.

#pragma once

#include <vector>

namespace lamelat {

enum class CoefKind { alpha, beta };

// psi(w) = w - floor(w) - 1/2, values in [-1/2, 1/2).
double sawtooth(double w);

// rho on [0,1]; continuous extensions rho(0) = 1, rho(1) = 0.  Near the
// endpoints the cotangent is evaluated through its Laurent series to avoid
// cancellation against the (1-xi) factor.
double vaaler_rho(double xi);

// Coefficient vector [gamma_{1,H}, ..., gamma_{H-1,H}] for H >= 2.
std::vector<double> build_vaaler(int H, CoefKind kind);

// psi_H(w) (alpha) or psi*_H(w) (beta).
double vaaler_eval(double w, int H, CoefKind kind);

}  // namespace lamelat
