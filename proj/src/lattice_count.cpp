// Counting kernels.  Every membership condition is closed (<=), every
// boundary tie resolves to "inside", and every decision that a guard band
// could have flipped bumps the ambiguity counter.  The exact-integer regime
// reduces all *decisions* to __int128 comparisons; real-valued summands
// (psi arguments, fractional powers) still evaluate in long double, which is
// harmless because the identities are continuous there.

#include "lamelat/lattice_count.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "lamelat/numeric.hpp"
#include "lamelat/vaaler.hpp"

namespace lamelat {
namespace {

bool is_integral_value(double v) {
    return std::floor(v) == v && std::fabs(v) < 9.007199254740992e15;
}

bool decide_exact(ScalarMode mode, bool integral, const char* fn) {
    switch (mode) {
        case ScalarMode::automatic:
            return integral;
        case ScalarMode::exact_int:
            if (!integral)
                throw std::invalid_argument(
                    std::string(fn) + ": exact_int requires integral exponents");
            return true;
        case ScalarMode::guarded_float:
            return false;
    }
    return integral;  // unreachable
}

std::int64_t narrow_count(i128 total, const char* fn) {
    if (total > (i128)std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error(std::string(fn) + ": count exceeds int64");
    return (std::int64_t)total;
}

// Integer threshold floor(v) for membership "integer <= v", v computed in
// long double.  The guard band covers only the rounding error of v itself
// (a few ulps), not the caller's guard_eps: at v ~ 1e19 a relative 1e-9 band
// would swallow ~1e10 consecutive integers and mean nothing.
i128 int_threshold(long double v, std::int64_t& ambiguous) {
    constexpr long double kEps = 1.0842021724855044e-19L;
    if (v < 0.0L) {
        if (-v <= 64.0L * kEps) {  // negative only by rounding noise
            ++ambiguous;
            return 0;
        }
        return -1;
    }
    long double band = 64.0L * kEps * v + 1e-18L;
    long double nearest = nearbyintl(v);
    if (fabsl(v - nearest) <= band) {
        if (v != nearest) ++ambiguous;
        return (i128)nearest;
    }
    return (i128)floorl(v);
}

// ---------------------------------------------------- Lame disc, exact path

// #{(n2,n3) : |n2|^k + |n3|^k <= T} by columns; the n3 cap is monotone
// nonincreasing in |n2|, so a single two-pointer sweep costs O(T^{1/k}).
i128 lame_count_int(i128 T, unsigned k) {
    if (T < 0) return 0;
    i128 R = ifloor_root(T, k);
    i128 cap = R;
    i128 total = 0;
    for (i128 n2 = 0; n2 <= R; ++n2) {
        i128 rem = T - ipow_checked(n2, k);
        while (cap > 0 && ipow_checked(cap, k) > rem) --cap;
        i128 col = 2 * cap + 1;
        total += (n2 == 0) ? col : 2 * col;
    }
    return total;
}

// -------------------------------------------------- Lame disc, guarded path

CountResult lame_count_float(long double W, double k, double eps) {
    CountResult res;
    {
        auto g0 = guarded_leq(0.0L, W, eps);
        if (!g0.leq) return res;
        if (g0.ambiguous) ++res.ambiguous;
    }
    const long double kl = (long double)k;
    long double Wc = std::max(W, 0.0L);
    std::int64_t cap = (std::int64_t)floorl(powl(Wc, 1.0L / kl)) + 2;
    i128 total = 0;
    for (std::int64_t n2 = 0;; ++n2) {
        long double p2 = powl((long double)n2, kl);
        auto gin = guarded_leq(p2, W, eps);
        if (!gin.leq) break;
        if (gin.ambiguous) ++res.ambiguous;
        long double rem = W - p2;
        while (cap > 0) {
            auto g = guarded_leq(powl((long double)cap, kl), rem, eps);
            if (g.leq) {
                if (g.ambiguous) ++res.ambiguous;
                break;
            }
            --cap;
        }
        i128 col = 2 * (i128)cap + 1;
        total += (n2 == 0) ? col : 2 * col;
    }
    res.count = narrow_count(total, "lame_count");
    return res;
}

}  // namespace

bool BodyParams::integral() const {
    return is_integral_value(m) && is_integral_value(k);
}

CountResult lame_count(double k, double W, const ScalarPolicy& policy) {
    if (!(k >= 1.0)) throw std::domain_error("lame_count: need k >= 1");
    if (!std::isfinite(W)) throw std::domain_error("lame_count: W not finite");
    if (decide_exact(policy.mode, is_integral_value(k), "lame_count")) {
        CountResult res;
        GuardedFloor gf = guarded_floor((long double)W, policy.guard_eps);
        if (gf.ambiguous) ++res.ambiguous;
        res.count =
            narrow_count(lame_count_int(gf.value, (unsigned)llround(k)), "lame_count");
        return res;
    }
    return lame_count_float((long double)W, k, policy.guard_eps);
}

// -------------------------------------------------------------- Delta_k(W)

double delta_k(double k, double W, const ScalarPolicy& policy,
               std::int64_t* ambiguous) {
    if (!(k >= 1.0) || !(W > 0.0))
        throw std::domain_error("delta_k: need k >= 1 and W > 0");
    std::int64_t amb = 0;
    const long double kl = (long double)k;
    long double Wl = (long double)W;
    Kahan<long double> acc;
    if (decide_exact(policy.mode, is_integral_value(k), "delta_k")) {
        const unsigned ku = (unsigned)llround(k);
        GuardedFloor gf = guarded_floor(Wl, policy.guard_eps);
        if (gf.ambiguous) ++amb;
        const i128 T = gf.value;
        if ((long double)T == Wl || gf.ambiguous) Wl = (long double)T;
        const bool w_integral = ((long double)T == Wl);
        const i128 R = ifloor_root(T, ku);
        for (i128 n = 1; n <= R; ++n) {
            i128 nk = ipow_checked(n, ku);
            if (2 * nk <= T) continue;  // need n^k > W/2, ties excluded
            long double t;
            if (w_integral) {
                i128 rad = T - nk;
                i128 r = ifloor_root(rad, ku);
                if (ipow_checked(r, ku) == rad)
                    t = (long double)r;  // psi lands exactly on a jump: -1/2
                else
                    t = powl((long double)rad, 1.0L / kl);
            } else {
                t = powl(Wl - (long double)nk, 1.0L / kl);
            }
            acc.add((long double)sawtooth((double)t));
        }
    } else {
        const double eps = policy.guard_eps;
        std::int64_t nmax = (std::int64_t)floorl(powl(Wl, 1.0L / kl)) + 2;
        for (std::int64_t n = 1; n <= nmax; ++n) {
            long double nk = powl((long double)n, kl);
            auto up = guarded_leq(nk, Wl, eps);
            if (!up.leq) break;
            auto lo = guarded_leq(nk, Wl / 2.0L, eps);
            if (lo.leq) {  // n^k <= W/2 (ties resolve downward): excluded
                if (lo.ambiguous) ++amb;
                continue;
            }
            if (up.ambiguous) ++amb;
            long double t = powl(std::max(Wl - nk, 0.0L), 1.0L / kl);
            // psi jumps at integers; flag arguments inside the guard band
            if (fabsl(t - nearbyintl(t)) <=
                (long double)eps * std::max<long double>(1.0L, t))
                ++amb;
            acc.add((long double)sawtooth((double)t));
        }
    }
    if (ambiguous) *ambiguous = amb;
    return (double)acc.value();
}

// ------------------------------------------------------------------ I_k(W)

double i_k(double k, double W, const ScalarPolicy& policy,
           const SeriesConfig& cfg, EulerMode mode, std::int64_t* ambiguous) {
    if (!(k >= 1.0) || !(W > 0.0))
        throw std::domain_error("i_k: need k >= 1 and W > 0");
    std::int64_t amb = 0;
    const long double kl = (long double)k;
    const long double Wl = (long double)W;
    double result;
    if (mode == EulerMode::series) {
        // one-line oscillatory form: amplitude * Sum j^{-1-1/k} sin(...)
        const double pi = 3.14159265358979323846;
        double pref = (1.0 / pi) * std::pow(k / (2.0 * pi), 1.0 / k) *
                      std::tgamma(1.0 + 1.0 / k) *
                      std::pow(W, 1.0 / k - 1.0 / (k * k));
        const long double u = powl(Wl, 1.0L / kl);  // cycles per index step
        const double shift = -pi / (2.0 * k);
        Kahan<double> s;
        for (int j = 1; j <= cfg.n_max; ++j)
            s.add(std::pow((double)j, -1.0 - 1.0 / k) *
                  sin_cycles((long double)j * u, shift));
        result = pref * s.value();
    } else {
        Kahan<long double> acc;
        acc.add(powl(Wl, 1.0L / kl));  // n = 0 term
        if (decide_exact(policy.mode, is_integral_value(k), "i_k")) {
            const unsigned ku = (unsigned)llround(k);
            GuardedFloor gf = guarded_floor(Wl, policy.guard_eps);
            if (gf.ambiguous) ++amb;
            const i128 R = ifloor_root(gf.value, ku);
            for (i128 n = 1; n <= R; ++n) {
                long double nk = (long double)ipow_checked(n, ku);
                acc.add(2.0L * powl(std::max(Wl - nk, 0.0L), 1.0L / kl));
            }
        } else {
            const double eps = policy.guard_eps;
            std::int64_t nmax = (std::int64_t)floorl(powl(Wl, 1.0L / kl)) + 2;
            for (std::int64_t n = 1; n <= nmax; ++n) {
                long double nk = powl((long double)n, kl);
                auto g = guarded_leq(nk, Wl, eps);
                if (!g.leq) break;
                if (g.ambiguous) ++amb;  // harmless: the boundary term is ~0
                acc.add(2.0L * powl(std::max(Wl - nk, 0.0L), 1.0L / kl));
            }
        }
        long double main =
            0.25L * (long double)lame_area(k) * powl(Wl, 2.0L / kl);
        result = (double)(0.5L * acc.value() - main);
    }
    if (ambiguous) *ambiguous = amb;
    return result;
}

// -------------------------------------------------------------------- A(x)

namespace {

// Exact bruteforce: nested loops over the positive octant, each level
// breaking where even the all-zeros completion fails.
i128 count_a_brute_int(i128 T, unsigned mu, unsigned ku) {
    if (T < 0) return 0;
    const unsigned mk = mu * ku;
    i128 total = 0;
    for (i128 a1 = 0;; ++a1) {
        i128 v1 = ipow_checked(a1, mk);
        if (v1 > T) break;
        i128 rem = T - v1;
        for (i128 a2 = 0;; ++a2) {
            i128 p2 = ipow_checked(a2, ku);
            if (ipow_checked(p2, mu) > rem) break;
            for (i128 a3 = 0;; ++a3) {
                i128 s = p2 + ipow_checked(a3, ku);
                if (ipow_checked(s, mu) > rem) break;
                total += (i128)((a1 ? 2 : 1) * (a2 ? 2 : 1) * (a3 ? 2 : 1));
            }
        }
    }
    return total;
}

CountResult count_a_brute_float(long double xmk, double m, double k,
                                double eps) {
    CountResult res;
    const long double ml = (long double)m, kl = (long double)k;
    const double mk = m * k;
    i128 total = 0;
    for (std::int64_t a1 = 0;; ++a1) {
        long double v1 = powl((long double)a1, (long double)mk);
        if (!guarded_leq(v1, xmk, eps).leq) break;
        for (std::int64_t a2 = 0;; ++a2) {
            long double p2 = powl((long double)a2, kl);
            if (!guarded_leq(v1 + powl(p2, ml), xmk, eps).leq) break;
            for (std::int64_t a3 = 0;; ++a3) {
                long double s = p2 + powl((long double)a3, kl);
                auto g = guarded_leq(v1 + powl(s, ml), xmk, eps);
                if (!g.leq) break;
                if (g.ambiguous) ++res.ambiguous;
                total += (i128)((a1 ? 2 : 1) * (a2 ? 2 : 1) * (a3 ? 2 : 1));
            }
        }
    }
    res.count = narrow_count(total, "count_A");
    return res;
}

}  // namespace

CountResult count_A(const BodyParams& p, double x, const ScalarPolicy& policy,
                    CountMethod method, unsigned workers) {
    if (!(x >= 0.0) || !std::isfinite(x))
        throw std::domain_error("count_A: need finite x >= 0");
    CountResult res;
    const bool exact = decide_exact(policy.mode, p.integral(), "count_A");
    if (exact) {
        const unsigned mu = (unsigned)llround(p.m);
        const unsigned ku = (unsigned)llround(p.k);
        const unsigned mk = mu * ku;
        i128 T;
        if (is_integral_value(x)) {
            T = ipow_checked((i128)llround(x), mk);
        } else {
            std::int64_t amb = 0;
            T = int_threshold(powl((long double)x, (long double)mk), amb);
            res.ambiguous += amb;
        }
        if (method == CountMethod::bruteforce) {
            res.count = narrow_count(count_a_brute_int(T, mu, ku), "count_A");
            return res;
        }
        const i128 B1 = ifloor_root(T < 0 ? 0 : T, mu * ku);
        if (T < 0) return res;
        const std::size_t nsl = (std::size_t)B1 + 1;
        std::vector<i128> slice(nsl);
        parallel_for_indexed(nsl, workers, [&](std::size_t i) {
            i128 X = T - ipow_checked((i128)i, mk);
            i128 W2 = ifloor_root(X, mu);
            i128 c = lame_count_int(W2, ku);
            slice[i] = (i == 0) ? c : 2 * c;
        });
        i128 total = 0;
        for (std::size_t i = 0; i < nsl; ++i) total += slice[i];
        res.count = narrow_count(total, "count_A");
        return res;
    }
    const double eps = policy.guard_eps;
    const long double xmk =
        powl((long double)x, (long double)(p.m * p.k));
    if (method == CountMethod::bruteforce)
        return count_a_brute_float(xmk, p.m, p.k, eps);
    const std::size_t nsl = (std::size_t)floorl((long double)x) + 2;
    std::vector<i128> slice(nsl);
    std::vector<std::int64_t> amb(nsl);
    const double mkd = p.m * p.k;
    const long double ml = (long double)p.m;
    parallel_for_indexed(nsl, workers, [&](std::size_t i) {
        long double p1 = powl((long double)i, (long double)mkd);
        auto g = guarded_leq(p1, xmk, eps);
        if (!g.leq) {
            slice[i] = 0;
            amb[i] = 0;
            return;
        }
        long double Ws = powl(std::max(xmk - p1, 0.0L), 1.0L / ml);
        CountResult c = lame_count_float(Ws, p.k, eps);
        slice[i] = (i == 0) ? (i128)c.count : 2 * (i128)c.count;
        amb[i] = c.ambiguous + (g.ambiguous ? 1 : 0);
    });
    i128 total = 0;
    for (std::size_t i = 0; i < nsl; ++i) {
        total += slice[i];
        res.ambiguous += amb[i];
    }
    res.count = narrow_count(total, "count_A");
    return res;
}

// --------------------------------------------------------------- r(n)

std::int64_t r_count(const BodyParams& p, std::int64_t n) {
    if (!p.integral())
        throw std::invalid_argument("r_count: integral exponents required");
    if (n < 0) return 0;
    const unsigned mu = (unsigned)llround(p.m);
    const unsigned ku = (unsigned)llround(p.k);
    const unsigned mk = mu * ku;
    const i128 N = n;
    i128 total = 0;
    for (i128 a1 = 0;; ++a1) {
        i128 v1 = ipow_checked(a1, mk);
        if (v1 > N) break;
        i128 rem = N - v1;
        for (i128 a2 = 0;; ++a2) {
            i128 p2 = ipow_checked(a2, ku);
            if (ipow_checked(p2, mu) > rem) break;
            for (i128 a3 = 0;; ++a3) {
                i128 s = p2 + ipow_checked(a3, ku);
                i128 sm = ipow_checked(s, mu);
                if (sm > rem) break;
                if (sm == rem)
                    total += (i128)((a1 ? 2 : 1) * (a2 ? 2 : 1) * (a3 ? 2 : 1));
            }
        }
    }
    return narrow_count(total, "r_count");
}

// -------------------------------------------------------------------- S(x)

double s_sum(const BodyParams& p, double x, const ScalarPolicy& policy,
             std::int64_t* ambiguous, unsigned workers) {
    if (!(x >= 0.0) || !std::isfinite(x))
        throw std::domain_error("s_sum: need finite x >= 0");
    std::int64_t amb = 0;
    const long double ml = (long double)p.m, kl = (long double)p.k;
    const long double mkl = ml * kl;
    const bool exact = decide_exact(policy.mode, p.integral(), "s_sum");
    std::size_t n3n;
    std::vector<long double> partial;
    std::vector<std::int64_t> pamb;
    if (exact) {
        const unsigned mu = (unsigned)llround(p.m);
        const unsigned ku = (unsigned)llround(p.k);
        const unsigned mk = mu * ku;
        i128 T;
        long double xmk;
        if (is_integral_value(x)) {
            T = ipow_checked((i128)llround(x), mk);
            xmk = (long double)T;
        } else {
            T = int_threshold(powl((long double)x, mkl), amb);
            xmk = powl((long double)x, mkl);
        }
        if (T < 0) {
            if (ambiguous) *ambiguous = amb;
            return 0.0;
        }
        const i128 B3 = ifloor_root(T, mk);
        n3n = (std::size_t)B3 + 1;
        partial.resize(n3n);
        parallel_for_indexed(n3n, workers, [&](std::size_t i) {
            i128 v3 = ipow_checked((i128)i, mk);
            i128 B2 = ifloor_root(T - v3, mk);
            long double w = powl(xmk - (long double)v3, 1.0L / ml);
            Kahan<long double> acc;
            for (i128 n2 = 0; n2 <= B2; ++n2) {
                long double base = w - powl((long double)n2, kl);
                long double term = powl(std::max(base, 0.0L), 1.0L / kl);
                acc.add((n2 == 0) ? term : 2.0L * term);
            }
            partial[i] = (i == 0) ? acc.value() : 2.0L * acc.value();
        });
    } else {
        const double eps = policy.guard_eps;
        const long double xmk = powl((long double)x, mkl);
        n3n = (std::size_t)floorl((long double)x) + 2;
        partial.resize(n3n);
        pamb.assign(n3n, 0);
        parallel_for_indexed(n3n, workers, [&](std::size_t i) {
            long double v3 = powl((long double)i, mkl);
            auto g3 = guarded_leq(v3, xmk, eps);
            if (!g3.leq) {
                partial[i] = 0.0L;
                return;
            }
            std::int64_t a = g3.ambiguous ? 1 : 0;
            long double w = powl(std::max(xmk - v3, 0.0L), 1.0L / ml);
            Kahan<long double> acc;
            for (std::int64_t n2 = 0;; ++n2) {
                long double v2 = powl((long double)n2, mkl);
                auto g = guarded_leq(v2 + v3, xmk, eps);
                if (!g.leq) break;
                if (g.ambiguous) ++a;
                long double base = w - powl((long double)n2, kl);
                long double term = powl(std::max(base, 0.0L), 1.0L / kl);
                acc.add((n2 == 0) ? term : 2.0L * term);
            }
            partial[i] = (i == 0) ? acc.value() : 2.0L * acc.value();
            pamb[i] = a;
        });
        for (std::size_t i = 0; i < n3n; ++i) amb += pamb[i];
    }
    Kahan<long double> total;
    for (std::size_t i = 0; i < n3n; ++i) total.add(partial[i]);
    if (ambiguous) *ambiguous = amb;
    return (double)total.value();
}

// ------------------------------------------------------- section identity

double slice_identity_residual(double k, double W, const ScalarPolicy& policy,
                               const SeriesConfig& cfg,
                               std::int64_t* ambiguous) {
    CountResult L = lame_count(k, W, policy);
    std::int64_t amb = L.ambiguous, a1 = 0, a2 = 0;
    double ik = i_k(k, W, policy, cfg, EulerMode::sum, &a1);
    double dk = delta_k(k, W, policy, &a2);
    amb += a1 + a2;
    if (ambiguous) *ambiguous = amb;
    double main = lame_area(k) * std::pow(W, 2.0 / k);
    return (double)L.count - main - 8.0 * ik + 8.0 * dk;
}

}  // namespace lamelat
