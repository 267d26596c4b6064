// Closed-form constants and special functions for the body family
//
//     x B_{m,k} = { u : |u1|^{mk} + (|u2|^k + |u3|^k)^m <= x^{mk} },
//
// whose planar sections are Lame discs |u2|^k + |u3|^k <= W.  Provides the
// disc area constant, the body volume, a generalized Bessel function defined
// by a cosine integral, the oscillatory series built from it, and the two
// closed main terms of the lattice-count asymptotics (each available either
// in its exact integral/series form or as a truncated sine series).

#pragma once

#include <stdexcept>

namespace lamelat {

// Area of the unit Lame disc |u|^k + |v|^k <= 1:  2 Gamma(1/k)^2 / (k Gamma(2/k)).
double lame_area(double k);

// Volume of B_{m,k} (unit scale):
//   lame_area(k) * 2 Gamma(1+2/(mk)) Gamma(1/(mk)) / (mk Gamma(1+3/(mk))).
double body_volume(double m, double k);

struct BesselParams {
    double eta;  // >= 1
    double nu;   // >= 1/eta
    BesselParams(double eta_, double nu_) : eta(eta_), nu(nu_) {
        if (!(eta >= 1.0))
            throw std::domain_error("BesselParams: eta must be >= 1");
        if (!(nu >= 1.0 / eta))
            throw std::domain_error("BesselParams: nu must be >= 1/eta");
    }
};

struct SeriesConfig {
    int n_max = 200;              // series truncation
    double quad_tol = 1e-10;      // quadrature tolerance
    double asym_threshold = 20.0; // arguments above: asymptotic Bessel form
};

// J_nu^(eta)(x) = [2 / (sqrt(pi) Gamma(nu+1-1/eta))] (x/2)^{eta nu / 2}
//                 * Int_0^1 (1 - t^eta)^{nu - 1/eta} cos(x t) dt.
// Evaluated by panel quadrature split at the zeros of cos(x t); the right
// endpoint's algebraic factor is absorbed into a Gauss-Jacobi rule.
double gen_bessel(const BesselParams& bp, double x,
                  const SeriesConfig& cfg = {});

// Leading large-argument form
//   (2/sqrt(pi)) eta^mu 2^{-eta nu/2} y^{eta nu/2 - mu - 1} sin(y - pi mu/2),
// mu = nu - 1/eta; error O(y^{-1}) relative to the enclosed sine amplitude.
double gen_bessel_asym(const BesselParams& bp, double y);

// psi_nu^(eta)(x) = 2 sqrt(pi) Gamma(nu+1-1/eta)
//                   * Sum_{n>=1} (x/(pi n))^{eta nu / 2} J_nu^(eta)(2 pi n x),
// truncated at cfg.n_max; terms whose Bessel argument exceeds
// cfg.asym_threshold use the asymptotic form.  If tail_bound is non-null it
// receives a bound on the omitted tail (amplitude-sum estimate).
double psi_eta_series(const BesselParams& bp, double x, const SeriesConfig& cfg,
                      double* tail_bound = nullptr);

struct MainTermParams {
    double a;  // outer exponent, a = m k in applications
    double b;  // inner exponent, b = k
    MainTermParams(double a_, double b_) : a(a_), b(b_) {
        if (!(b >= 2.0) || !(a >= b))
            throw std::domain_error("MainTermParams: need a >= b >= 2");
    }
};

enum class MainTermKind { one = 1, two = 2 };
enum class MainTermMode { exact, asymptotic };

// Coefficients of the truncated sine-series forms.
double main_term_c1(double a, double b);
double main_term_c2(double a, double b);

// Main terms of the lattice-count asymptotics.
//   kind one, exact:       (2 Gamma(1/b)^2 / (b Gamma(2/b))) psi_{3/a}^{(a)}(x)
//   kind two, exact:       8x Int_0^1 t^{a-1} (1-t^a)^{1/a-1} psi_{2/b}^{(b)}(x t) dt
//   kind one, asymptotic:  C1(a,b) x^{2-2/a}     Sum sin(2 pi n x - pi/a) / n^{1+2/a}
//   kind two, asymptotic:  C2(a,b) x^{2-1/a-1/b} Sum sin(2 pi n x - pi/(2a) - pi/(2b))
//                                                    / n^{1+1/a+1/b}
double main_term(const MainTermParams& p, double x, MainTermKind kind,
                 MainTermMode mode, const SeriesConfig& cfg = {});

}  // namespace lamelat
