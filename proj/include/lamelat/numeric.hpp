// Low-level numeric helpers shared across the library: 128-bit integer
// powers and roots for exact lattice membership tests, guarded floating
// comparisons for the non-integer-exponent paths, phase reduction for large
// oscillatory arguments, compensated accumulation, and locale-free output
// formatting.
//
// Precision notes.  Exact membership tests never leave integer arithmetic:
// the largest quantities handled are x^{mk} with x <= a few thousand and
// mk <= 15, far inside the __int128 range.  Guarded-float comparisons carry a
// relative guard band; a comparison landing inside the band is counted as
// ambiguous and decided towards inclusion (matching the closed "<=" in every
// membership condition).  Oscillatory phases are reduced mod 1 in long double
// (64-bit mantissa on x86) *before* the trig call, so a phase of magnitude
// ~1e6 cycles still yields ~1e-12 absolute accuracy in the unit circle value.

#pragma once

#include <atomic>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace lamelat {

using i128 = __int128_t;
using u128 = __uint128_t;

// ------------------------------------------------------------------ integers

// base^exp in __int128 with overflow detection.
inline i128 ipow_checked(i128 base, unsigned exp) {
    i128 r = 1;
    while (exp) {
        if (exp & 1u) {
            if (__builtin_mul_overflow(r, base, &r))
                throw std::overflow_error("ipow_checked: 128-bit overflow");
        }
        exp >>= 1u;
        if (exp) {
            if (__builtin_mul_overflow(base, base, &base))
                throw std::overflow_error("ipow_checked: 128-bit overflow");
        }
    }
    return r;
}

// floor(v^{1/p}) for v >= 0, exact.  Seeds from long double and corrects.
inline i128 ifloor_root(i128 v, unsigned p) {
    if (v < 0) throw std::domain_error("ifloor_root: negative radicand");
    if (p == 0) throw std::domain_error("ifloor_root: zeroth root");
    if (v == 0) return 0;
    if (p == 1) return v;
    long double approx = powl((long double)v, 1.0L / (long double)p);
    i128 r = (i128)llroundl(approx);
    if (r < 1) r = 1;
    while (ipow_checked(r, p) > v) --r;
    while (ipow_checked(r + 1, p) <= v) ++r;
    return r;
}

// floor(x) of a long double as __int128; caller guarantees |x| < 2^100.
inline i128 ifloor_ld(long double x) { return (i128)floorl(x); }

// ------------------------------------------------------- guarded comparisons

// Result of a guarded comparison of a computed value against a threshold.
struct GuardedLeq {
    bool leq;        // decision: value <= threshold
    bool ambiguous;  // |value - threshold| fell inside the guard band
};

// value <= threshold with a relative guard band.  Ties inside the band are
// decided as "<=" (all membership conditions in the library are closed).
inline GuardedLeq guarded_leq(long double value, long double threshold,
                              double guard_eps) {
    long double band = (long double)guard_eps *
                       std::max<long double>(1.0L, fabsl(threshold));
    if (value <= threshold - band) return {true, false};
    if (value > threshold + band) return {false, false};
    return {true, true};
}

// floor with a guard band: values within band of an integer are snapped to
// it, and the snap is reported.  Used when the true quantity is known to be
// integral whenever it is near-integral (e.g. x^{mk} for integral exponents).
struct GuardedFloor {
    i128 value;
    bool ambiguous;
};

inline GuardedFloor guarded_floor(long double x, double guard_eps) {
    long double band =
        (long double)guard_eps * std::max<long double>(1.0L, fabsl(x));
    long double nearest = nearbyintl(x);
    if (fabsl(x - nearest) <= band)
        return {(i128)nearest, fabsl(x - nearest) > 0.0L};
    return {(i128)floorl(x), false};
}

// --------------------------------------------------------------------- phase

constexpr long double kTwoPiL = 6.283185307179586476925286766559005768L;

// e(cycles) = exp(2 pi i cycles), with the cycle count reduced mod 1 in long
// double before the trig evaluation.
inline std::complex<double> unit_phase(long double cycles) {
    long double f = cycles - floorl(cycles);
    double th = (double)(kTwoPiL * f);
    return {std::cos(th), std::sin(th)};
}

// sin(2 pi cycles + shift) with the same reduction.
inline double sin_cycles(long double cycles, double shift) {
    long double f = cycles - floorl(cycles);
    return std::sin((double)(kTwoPiL * f) + shift);
}

inline double cos_cycles(long double cycles, double shift) {
    long double f = cycles - floorl(cycles);
    return std::cos((double)(kTwoPiL * f) + shift);
}

// --------------------------------------------------------------- compensated

// Kahan-Neumaier accumulator.
template <typename T>
struct Kahan {
    T sum{};
    T comp{};
    void add(T v) {
        T t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    T value() const { return sum + comp; }
};

// ---------------------------------------------------------------- formatting

// Locale-free float with 15 significant digits (output contract).
inline std::string format_g15(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v,
                             std::chars_format::general, 15);
    return std::string(buf, res.ptr);
}

inline std::string format_int(long long v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

// ------------------------------------------------------------------ parallel

// Deterministic chunked parallel map: work item i writes slot i, chunk
// boundaries depend only on n (never on the worker count), so any reduction
// that combines chunks in ascending order is bit-identical for 1..N workers.
constexpr std::size_t kParallelChunk = 64;

template <typename Fn>
void parallel_for_indexed(std::size_t n, unsigned workers, Fn&& fn) {
    if (n == 0) return;
    std::size_t nchunks = (n + kParallelChunk - 1) / kParallelChunk;
    unsigned nthreads = workers == 0 ? 1u : workers;
    nthreads = (unsigned)std::min<std::size_t>(nthreads, nchunks);
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        for (;;) {
            std::size_t c = next.fetch_add(1);
            if (c >= nchunks) return;
            std::size_t lo = c * kParallelChunk;
            std::size_t hi = std::min(n, lo + kParallelChunk);
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
}

inline unsigned default_workers() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : hw;
}

}  // namespace lamelat
