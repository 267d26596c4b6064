#include "lamelat/special_fn.hpp"

#include <cmath>
#include <vector>

#include "lamelat/numeric.hpp"
#include "lamelat/quadrature.hpp"

namespace lamelat {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrtPi = 1.772453850905516027298167483341145183;

// (1 - t^eta) / (1 - t), stable up to t = 1 (limit eta).
double one_minus_pow_ratio(double t, double eta) {
    double omt = 1.0 - t;
    if (omt < 1e-8) return eta * (1.0 - 0.5 * (eta - 1.0) * omt);
    return -std::expm1(eta * std::log(t)) / omt;
}

// Zeros of sin(2 pi omega t + phase) inside (lo, hi), ascending.
std::vector<double> oscillation_breaks(double omega, double phase, double lo,
                                       double hi) {
    std::vector<double> br;
    if (omega <= 0.0) return br;
    // t_j = (j pi - phase) / (2 pi omega)
    double j = std::floor((2.0 * kPi * omega * lo + phase) / kPi) + 1.0;
    for (;; j += 1.0) {
        double t = (j * kPi - phase) / (2.0 * kPi * omega);
        if (t >= hi - 1e-14) break;
        if (t > lo + 1e-14) br.push_back(t);
    }
    return br;
}

}  // namespace

double lame_area(double k) {
    if (!(k > 0.0)) throw std::domain_error("lame_area: k must be positive");
    return 2.0 * std::tgamma(1.0 / k) * std::tgamma(1.0 / k) /
           (k * std::tgamma(2.0 / k));
}

double body_volume(double m, double k) {
    if (!(m > 0.0) || !(k > 0.0))
        throw std::domain_error("body_volume: m, k must be positive");
    double a = m * k;
    return lame_area(k) * 2.0 * std::tgamma(1.0 + 2.0 / a) *
           std::tgamma(1.0 / a) / (a * std::tgamma(1.0 + 3.0 / a));
}

double gen_bessel(const BesselParams& bp, double x, const SeriesConfig& cfg) {
    if (!(x >= 0.0)) throw std::domain_error("gen_bessel: x must be >= 0");
    const double eta = bp.eta, nu = bp.nu;
    const double mu = nu - 1.0 / eta;  // weight exponent, >= 0
    if (x == 0.0) return 0.0;

    // I(x) = Int_0^1 (1-t^eta)^mu cos(x t) dt, panels at the cosine zeros.
    std::vector<double> breaks = oscillation_breaks(x / (2.0 * kPi), kPi / 2.0,
                                                    0.0, 1.0);
    auto regular = [&](double t) {
        return std::pow(1.0 - std::pow(t, eta), mu) * std::cos(x * t);
    };
    auto singular_reg = [&](double t) {  // divided by (1-t)^mu
        return std::pow(one_minus_pow_ratio(t, eta), mu) * std::cos(x * t);
    };
    double integral = 0.0;
    double lo = 0.0;
    double panel_tol =
        cfg.quad_tol / std::max<std::size_t>(1, breaks.size() + 1);
    for (double b : breaks) {
        integral += integrate_adaptive(regular, lo, b, panel_tol, 16);
        lo = b;
    }
    integral += integrate_right_singular(singular_reg, lo, 1.0, mu, 32);

    double pref = 2.0 / (kSqrtPi * std::tgamma(nu + 1.0 - 1.0 / eta)) *
                  std::pow(0.5 * x, eta * nu / 2.0);
    return pref * integral;
}

double gen_bessel_asym(const BesselParams& bp, double y) {
    if (!(y > 0.0)) throw std::domain_error("gen_bessel_asym: y must be > 0");
    const double eta = bp.eta, nu = bp.nu;
    const double mu = nu - 1.0 / eta;
    double amp = 2.0 / kSqrtPi * std::pow(eta, mu) *
                 std::pow(2.0, -eta * nu / 2.0) *
                 std::pow(y, eta * nu / 2.0 - mu - 1.0);
    return amp * std::sin(y - 0.5 * kPi * mu);
}

namespace {

// Amplitude envelope of the n-th psi-series term: min of the asymptotic
// amplitude (1.5 safety for the O(1/y) correction) and the rigorous
// small-argument bound |I| <= Int (1-t^eta)^mu dt = B(1/eta, mu+1)/eta.
double psi_term_envelope(const BesselParams& bp, double x, double n) {
    const double eta = bp.eta, nu = bp.nu, mu = nu - 1.0 / eta;
    double pref = 2.0 * kSqrtPi * std::tgamma(mu + 1.0) *
                  std::pow(x / (kPi * n), eta * nu / 2.0);
    double y = 2.0 * kPi * n * x;
    double asym_amp = 1.5 * 2.0 / kSqrtPi * std::pow(eta, mu) *
                      std::pow(2.0, -eta * nu / 2.0) *
                      std::pow(y, eta * nu / 2.0 - mu - 1.0);
    double beta_int =
        std::exp(std::lgamma(1.0 / eta) + std::lgamma(mu + 1.0) -
                 std::lgamma(mu + 1.0 + 1.0 / eta)) / eta;
    double small_amp = 2.0 / (kSqrtPi * std::tgamma(mu + 1.0)) *
                       std::pow(0.5 * y, eta * nu / 2.0) * beta_int;
    return pref * std::min(asym_amp, small_amp);
}

}  // namespace

double psi_eta_series(const BesselParams& bp, double x, const SeriesConfig& cfg,
                      double* tail_bound) {
    if (!(x >= 0.0)) throw std::domain_error("psi_eta_series: x must be >= 0");
    const double eta = bp.eta, nu = bp.nu, mu = nu - 1.0 / eta;
    if (!(mu > 0.0))
        throw std::domain_error(
            "psi_eta_series: needs nu > 1/eta for absolute convergence");
    double pref = 2.0 * kSqrtPi * std::tgamma(mu + 1.0);
    Kahan<double> acc;
    if (x > 0.0) {
        for (int n = 1; n <= cfg.n_max; ++n) {
            double scale = pref * std::pow(x / (kPi * n), eta * nu / 2.0);
            double y = 2.0 * kPi * n * x;
            double Jval;
            if (y <= cfg.asym_threshold) {
                Jval = gen_bessel(bp, y, cfg);
            } else {
                // amplitude * sin(y - pi mu / 2), phase reduced in cycles
                double amp = 2.0 / kSqrtPi * std::pow(eta, mu) *
                             std::pow(2.0, -eta * nu / 2.0) *
                             std::pow(y, eta * nu / 2.0 - mu - 1.0);
                Jval = amp * sin_cycles((long double)n * (long double)x,
                                        -0.5 * kPi * mu);
            }
            acc.add(scale * Jval);
        }
    }
    if (tail_bound) {
        if (x == 0.0) {
            *tail_bound = 0.0;
        } else {
            // 512 explicit envelope terms, then an integral bound c n^{-mu}/mu.
            double t = 0.0;
            int N = cfg.n_max + 512;
            for (int n = cfg.n_max + 1; n <= N; ++n)
                t += psi_term_envelope(bp, x, n);
            double c = psi_term_envelope(bp, x, N) * std::pow((double)N, mu + 1.0);
            t += c * std::pow((double)N, -mu) / mu;
            *tail_bound = t;
        }
    }
    return acc.value();
}

double main_term_c1(double a, double b) {
    return lame_area(b) * 2.0 / kPi * std::pow(a / (2.0 * kPi), 2.0 / a) *
           std::tgamma(1.0 + 2.0 / a);
}

double main_term_c2(double a, double b) {
    return 16.0 / kPi * std::pow(a, 1.0 / a) * std::pow(b, 1.0 / b) /
           std::pow(2.0 * kPi, 1.0 / a + 1.0 / b) * std::tgamma(1.0 + 1.0 / a) *
           std::tgamma(1.0 + 1.0 / b);
}

namespace {

// Int_0^1 t^a (1-t^a)^{1/a - 1} J_{2/b}^{(b)}(2 pi n x t) dt: panels at the
// zeros of the Bessel asymptotic's sine, Gauss-Jacobi on the final panel.
double kind_two_column(double a, double b, double nx, const SeriesConfig& cfg) {
    BesselParams bp(b, 2.0 / b);
    const double alpha = 1.0 / a - 1.0;  // in (-1, 0)
    double omega = nx;                   // cycles per unit t of J's sine
    double phase = -kPi / (2.0 * b);
    auto Jat = [&](double t) {
        double y = 2.0 * kPi * nx * t;
        if (y <= cfg.asym_threshold) return gen_bessel(bp, y, cfg);
        return gen_bessel_asym(bp, y);
    };
    auto regular = [&](double t) {
        return std::pow(t, a) * std::pow(1.0 - std::pow(t, a), alpha) * Jat(t);
    };
    auto singular_reg = [&](double t) {  // divided by (1-t)^alpha
        return std::pow(t, a) * std::pow(one_minus_pow_ratio(t, a), alpha) *
               Jat(t);
    };
    std::vector<double> breaks = oscillation_breaks(omega, phase, 0.0, 1.0);
    double integral = 0.0, lo = 0.0;
    for (double brk : breaks) {
        integral += integrate_gl(regular, lo, brk, 16);
        lo = brk;
    }
    integral += integrate_right_singular(singular_reg, lo, 1.0, alpha, 24);
    return integral;
}

}  // namespace

double main_term(const MainTermParams& p, double x, MainTermKind kind,
                 MainTermMode mode, const SeriesConfig& cfg) {
    if (!(x >= 0.0)) throw std::domain_error("main_term: x must be >= 0");
    const double a = p.a, b = p.b;
    if (x == 0.0) return 0.0;
    if (kind == MainTermKind::one) {
        if (mode == MainTermMode::exact) {
            BesselParams bp(a, 3.0 / a);
            return lame_area(b) * psi_eta_series(bp, x, cfg);
        }
        double c = main_term_c1(a, b) * std::pow(x, 2.0 - 2.0 / a);
        Kahan<double> s;
        for (int n = 1; n <= cfg.n_max; ++n)
            s.add(sin_cycles((long double)n * (long double)x, -kPi / a) /
                  std::pow((double)n, 1.0 + 2.0 / a));
        return c * s.value();
    }
    if (mode == MainTermMode::exact) {
        // 8x Int t^{a-1} (1-t^a)^{1/a-1} psi_{2/b}^{(b)}(x t) dt with the
        // series expanded and integrated term by term (finite sum).
        double pref = 8.0 * x * 2.0 * kSqrtPi * std::tgamma(1.0 + 1.0 / b);
        Kahan<double> s;
        for (int n = 1; n <= cfg.n_max; ++n) {
            double col = kind_two_column(a, b, (double)n * x, cfg);
            s.add(x / (kPi * n) * col);
        }
        return pref * s.value();
    }
    double c = main_term_c2(a, b) * std::pow(x, 2.0 - 1.0 / a - 1.0 / b);
    double shift = -kPi / (2.0 * a) - kPi / (2.0 * b);
    Kahan<double> s;
    for (int n = 1; n <= cfg.n_max; ++n)
        s.add(sin_cycles((long double)n * (long double)x, shift) /
              std::pow((double)n, 1.0 + 1.0 / a + 1.0 / b));
    return c * s.value();
}

}  // namespace lamelat
