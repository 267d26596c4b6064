// Dyadic blocks, the transformed partial sums, and the empirical constant of
// the sawtooth-sum bound.  Phases are assembled in long double and reduced
// mod 1 before any trig call; block sums use compensated accumulation so that
// the per-block defects, which sit orders of magnitude below the partial
// sums, are measured and not manufactured.

#include "lamelat/hardy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lamelat/numeric.hpp"

namespace lamelat {

namespace {

void check_block(const DyadicScheme& ds, int j, const char* fn) {
    if (j < 0 || j >= ds.J)
        throw std::out_of_range(std::string(fn) + ": block index out of range");
}

}  // namespace

double preset_h_decay(double k) {
    if (!(k > 1.0)) throw std::domain_error("preset_h_decay: need k > 1");
    return (18.0 * k - 11.0) / (25.0 * (k - 1.0));
}

DyadicScheme build_scheme(double k, double W, const SchemeParams& sp) {
    if (!(k > 1.0)) throw std::invalid_argument("build_scheme: need k > 1");
    if (!(W >= 8.0)) throw std::invalid_argument("build_scheme: need W >= 8");
    if (!(sp.lambda >= 0.0) || !(sp.lambda < 1.0))
        throw std::invalid_argument("build_scheme: need 0 <= lambda < 1");
    if (!(sp.c0 > 0.0)) throw std::invalid_argument("build_scheme: need c0 > 0");
    if (!(sp.h_decay >= 0.0))
        throw std::invalid_argument("build_scheme: need h_decay >= 0");
    DyadicScheme ds;
    ds.k = k;
    ds.W = W;
    ds.q = k / (k - 1.0);
    // Deepest level: 2^{Jq} must reach (W/c0)^{(1-lambda)/k} so that the
    // uncovered tail ]N_J, W^{1/k}] has length O(W^{lambda/k}).
    double t = ((1.0 - sp.lambda) / k) * std::log(W / sp.c0);
    int J = (int)std::ceil(t / (ds.q * std::log(2.0))) + 1;
    ds.J = std::max(J, 1);
    const long double Wl = (long double)W;
    const long double kl = (long double)k;
    const long double ql = (long double)ds.q;
    const long double root = powl(Wl, 1.0L / kl);
    ds.N.resize((std::size_t)ds.J + 1);
    for (int j = 0; j <= ds.J; ++j)
        ds.N[(std::size_t)j] = (double)(root *
            powl(1.0L + powl(2.0L, -(long double)j * ql), -1.0L / kl));
    ds.H.resize((std::size_t)ds.J);
    const double h0 = std::pow(W, 0.25);
    for (int j = 0; j < ds.J; ++j) {
        double hj = std::ceil(h0 * std::pow(2.0, -sp.h_decay * (double)j));
        ds.H[(std::size_t)j] = std::max(2, (int)hj);
    }
    for (int j = 0; j < ds.J; ++j) {
        if (!(ds.N[(std::size_t)j] < ds.N[(std::size_t)j + 1]))
            throw std::invalid_argument("build_scheme: cut points not increasing");
        if (ds.H[(std::size_t)j] < 2 || (double)ds.H[(std::size_t)j] > W)
            throw std::invalid_argument("build_scheme: depth H_j out of range");
    }
    ds.tail_ratio =
        ((double)root - ds.N[(std::size_t)ds.J]) / std::pow(W, sp.lambda / k);
    return ds;
}

std::complex<double> direct_exp_sum(const DyadicScheme& ds, int j, int h) {
    check_block(ds, j, "direct_exp_sum");
    if (h < 1) throw std::domain_error("direct_exp_sum: need h >= 1");
    const long double Wl = (long double)ds.W;
    const long double kl = (long double)ds.k;
    const std::int64_t lo =
        (std::int64_t)std::floor(ds.N[(std::size_t)j]) + 1;
    const std::int64_t hi = (std::int64_t)std::floor(ds.N[(std::size_t)j + 1]);
    Kahan<double> re, im;
    for (std::int64_t n = lo; n <= hi; ++n) {
        long double rad = Wl - powl((long double)n, kl);
        long double t = powl(std::max(rad, 0.0L), 1.0L / kl);
        auto z = unit_phase(-(long double)h * t);
        re.add(z.real());
        im.add(z.imag());
    }
    return {re.value(), im.value()};
}

std::int64_t block_lattice_count(const DyadicScheme& ds, int j) {
    check_block(ds, j, "block_lattice_count");
    const std::int64_t lo =
        (std::int64_t)std::floor(ds.N[(std::size_t)j]) + 1;
    const std::int64_t hi = (std::int64_t)std::floor(ds.N[(std::size_t)j + 1]);
    return hi >= lo ? hi - lo + 1 : 0;
}

std::complex<double> dyadic_weighted_sum(const DyadicScheme& ds, int j,
                                         CoefKind kind) {
    check_block(ds, j, "dyadic_weighted_sum");
    const int H = ds.H[(std::size_t)j];
    const std::vector<double> g = build_vaaler(H, kind);
    Kahan<double> re, im;
    for (int h = 1; h < H; ++h) {
        std::complex<double> z = direct_exp_sum(ds, j, h);
        re.add(g[(std::size_t)h - 1] * z.real());
        im.add(g[(std::size_t)h - 1] * z.imag());
    }
    return {re.value(), im.value()};
}

std::complex<double> hardy_partial_sum(const DyadicScheme& ds, int j,
                                       CoefKind kind, bool full_weights) {
    check_block(ds, j, "hardy_partial_sum");
    const int H = ds.H[(std::size_t)j];
    const std::vector<double> g = build_vaaler(H, kind);
    const long double Wl = (long double)ds.W;
    const long double kl = (long double)ds.k;
    const long double ql = (long double)ds.q;
    const long double root = powl(Wl, 1.0L / kl);
    const long double pref = powl(Wl, 0.5L / kl) / sqrtl(kl - 1.0L);
    Kahan<double> re, im;
    for (int h = 1; h < H; ++h) {
        const std::int64_t lo = ((std::int64_t)1 << j) * h;
        const std::int64_t hi = 2 * lo;
        const long double hq = powl((long double)h, ql);
        Kahan<double> bre, bim;
        for (std::int64_t l = lo; l <= hi; ++l) {
            const long double lq = powl((long double)l, ql);
            const long double sq = hq + lq;
            const double amp = (double)(
                powl((long double)h * (long double)l, 0.5L * ql - 1.0L) *
                powl(sq, -1.0L + 0.5L / ql));
            const long double cyc = root * powl(sq, 1.0L / ql) - 0.125L;
            const double w =
                (!full_weights && (l == lo || l == hi)) ? 0.5 : 1.0;
            const std::complex<double> z = unit_phase(cyc);
            bre.add(w * amp * z.real());
            bim.add(w * amp * z.imag());
        }
        re.add(g[(std::size_t)h - 1] * (double)h * bre.value());
        im.add(g[(std::size_t)h - 1] * (double)h * bim.value());
    }
    return {(double)((long double)re.value() * pref),
            (double)((long double)im.value() * pref)};
}

TransformCheck transform_check(const DyadicScheme& ds, int j, CoefKind kind) {
    TransformCheck tc;
    tc.lhs = dyadic_weighted_sum(ds, j, kind);
    tc.rhs = std::conj(hardy_partial_sum(ds, j, kind));
    tc.abs_diff = std::abs(tc.lhs - tc.rhs);
    return tc;
}

TransformDefect transform_defect(const DyadicScheme& ds, CoefKind kind) {
    TransformDefect td;
    Kahan<double> raw;
    for (int j = 0; j < ds.J; ++j) {
        const double d = transform_check(ds, j, kind).abs_diff;
        raw.add(d);
        td.max_abs = std::max(td.max_abs, d);
    }
    td.sum_abs = raw.value();
    const double lw = std::log(ds.W);
    td.normalized_sum = td.sum_abs / (lw * lw);
    td.normalized_max = td.max_abs / (lw * lw);
    return td;
}

double apply_part(std::complex<double> z, PartSelector sel) {
    switch (sel) {
        case PartSelector::imag: return z.imag();
        case PartSelector::real: return z.real();
        case PartSelector::neg_imag: return -z.imag();
        case PartSelector::neg_real: return -z.real();
    }
    return 0.0;  // unreachable
}

HardyEvaluation hardy_identity_check(double k, double W,
                                     const HardyOptions& opt) {
    const DyadicScheme ds = build_scheme(k, W, opt.scheme);
    HardyEvaluation ev;
    ev.J = ds.J;
    ev.direct = delta_k(k, W, opt.policy);
    Kahan<double> main, maj, lat;
    for (int j = 0; j < ds.J; ++j) {
        main.add(apply_part(hardy_partial_sum(ds, j, CoefKind::alpha,
                                              opt.full_weights),
                            opt.alpha_part));
        maj.add(std::fabs(apply_part(hardy_partial_sum(ds, j, CoefKind::beta,
                                                       opt.full_weights),
                                     opt.beta_part)));
        lat.add((double)block_lattice_count(ds, j) /
                (double)ds.H[(std::size_t)j]);
    }
    ev.main = main.value();
    ev.majorant = maj.value();
    ev.lattice_term = lat.value();
    const double lw = std::log(W);
    ev.tail_term = std::pow(W, opt.scheme.lambda / k) + lw * lw * lw;
    ev.defect = std::fabs(ev.direct - ev.main);
    ev.c_emp = std::max(
        0.0, (ev.defect - ev.majorant - ev.lattice_term) / ev.tail_term);
    return ev;
}

}  // namespace lamelat
