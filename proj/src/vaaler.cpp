#include "lamelat/vaaler.hpp"

#include <cmath>
#include <stdexcept>

#include "lamelat/numeric.hpp"

namespace lamelat {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

// z cot z = 1 - z^2/3 - z^4/45 - 2 z^6/945 - z^8/4725 - ..., |z| < pi.
double zcot(double z) {
    double z2 = z * z;
    return 1.0 - z2 / 3.0 - z2 * z2 / 45.0 - 2.0 * z2 * z2 * z2 / 945.0 -
           z2 * z2 * z2 * z2 / 4725.0;
}
}  // namespace

double sawtooth(double w) { return w - std::floor(w) - 0.5; }

double vaaler_rho(double xi) {
    if (!(xi >= 0.0 && xi <= 1.0))
        throw std::domain_error("vaaler_rho: xi must lie in [0,1]");
    if (xi == 0.0) return 1.0;
    if (xi == 1.0) return 0.0;
    if (xi < 1e-3) {
        // rho = (1-xi) * (pi xi cot(pi xi)) + xi
        return (1.0 - xi) * zcot(kPi * xi) + xi;
    }
    if (xi > 1.0 - 1e-3) {
        // with eps = 1-xi: rho = (1-eps)(1 - pi eps cot(pi eps))
        double eps = 1.0 - xi;
        return (1.0 - eps) * (1.0 - zcot(kPi * eps));
    }
    return kPi * xi * (1.0 - xi) * std::cos(kPi * xi) / std::sin(kPi * xi) + xi;
}

std::vector<double> build_vaaler(int H, CoefKind kind) {
    if (H < 2) throw std::invalid_argument("build_vaaler: H must be >= 2");
    std::vector<double> c(H - 1);
    for (int h = 1; h < H; ++h) {
        if (kind == CoefKind::alpha)
            c[h - 1] = vaaler_rho((double)h / H) / (kPi * h);
        else
            c[h - 1] = (1.0 - (double)h / H) / H;
    }
    return c;
}

double vaaler_eval(double w, int H, CoefKind kind) {
    std::vector<double> c = build_vaaler(H, kind);
    Kahan<double> s;
    for (int h = 1; h < H; ++h) {
        long double cyc = (long double)h * (long double)w;
        if (kind == CoefKind::alpha)
            s.add(-c[h - 1] * sin_cycles(cyc, 0.0));
        else
            s.add(c[h - 1] * cos_cycles(cyc, 0.0));
    }
    return s.value();
}

}  // namespace lamelat
