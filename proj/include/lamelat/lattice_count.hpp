// Exact lattice-point counting for the body family and its Lame-disc
// sections, plus the Euler-summation and sawtooth boundary sums entering the
// section identity
//
//   L_k(W) = a_k W^{2/k} + 8 I_k(W) - 8 Delta_k(W) + O(1),
//   a_k = 2 Gamma(1/k)^2 / (k Gamma(2/k)).
//
// Counting runs in one of two scalar regimes:
//   * exact-integer: all exponents integral.  Membership tests compare
//     __int128 powers; the only floating step is extracting the integer
//     threshold floor(x^{mk}) from a real x, which carries a guard band
//     sized by the long-double rounding error (not by guard_eps, whose
//     relative scale would be meaningless at ~1e19).
//   * guarded-float: any non-integral exponent.  Comparisons happen in long
//     double with a relative guard band guard_eps; a comparison falling
//     inside the band counts as "<=" (every membership condition is closed)
//     and increments the ambiguity counter.
// A nonzero `ambiguous` means the reported count is trustworthy only up to
// that many boundary decisions; callers wanting certainty must tighten
// guard_eps or move to integer parameters.

#pragma once

#include <cstdint>
#include <stdexcept>

#include "lamelat/special_fn.hpp"

namespace lamelat {

struct BodyParams {
    double m;  // outer exponent factor
    double k;  // inner exponent
    // Strict domain is m > 1, k > 2 (the regime of the asymptotic theory);
    // counting also accepts the closure m >= 1, k >= 2 so that oracle grids
    // can include balls and cylinder-like degenerate cases.
    BodyParams(double m_, double k_) : m(m_), k(k_) {
        if (!(m >= 1.0) || !(k >= 2.0))
            throw std::domain_error("BodyParams: need m >= 1 and k >= 2");
    }
    bool integral() const;
    // Guard for operations that live in the asymptotic regime.
    void require_strict() const {
        if (!(m > 1.0) || !(k > 2.0) || !(m * k >= 7.0 / 3.0))
            throw std::domain_error(
                "BodyParams: asymptotic operations need m > 1, k > 2, mk >= 7/3");
    }
};

enum class ScalarMode { automatic, exact_int, guarded_float };

struct ScalarPolicy {
    ScalarMode mode = ScalarMode::automatic;
    double guard_eps = 1e-9;  // relative guard band, guarded-float regime
};

struct CountResult {
    std::int64_t count = 0;
    std::int64_t ambiguous = 0;
};

// #{(n2,n3) in Z^2 : |n2|^k + |n3|^k <= W}.  Columns are scanned with a
// monotone two-pointer on the n3 bound, O(W^{1/k}) per call.
CountResult lame_count(double k, double W, const ScalarPolicy& policy = {});

// Delta_k(W) = Sum_{(W/2)^{1/k} < n <= W^{1/k}} psi((W - n^k)^{1/k}).
double delta_k(double k, double W, const ScalarPolicy& policy = {},
               std::int64_t* ambiguous = nullptr);

enum class EulerMode { sum, series };

// I_k(W), either the closed Euler-summation form
//   1/2 Sum_{|n|^k <= W} (W - |n|^k)^{1/k} - (a_k/4) W^{2/k}
// or its one-line oscillatory series truncated at cfg.n_max.
double i_k(double k, double W, const ScalarPolicy& policy = {},
           const SeriesConfig& cfg = {}, EulerMode mode = EulerMode::sum,
           std::int64_t* ambiguous = nullptr);

enum class CountMethod { sliced, bruteforce };

// A(x) = #{n in Z^3 : |n1|^{mk} + (|n2|^k + |n3|^k)^m <= x^{mk}}.
// sliced: per-|n1| Lame-disc counts (production path).  bruteforce: plain
// triple loop, the oracle.  Parallel slices use fixed-size chunks combined in
// ascending order, so results are identical across worker counts.
CountResult count_A(const BodyParams& p, double x,
                    const ScalarPolicy& policy = {},
                    CountMethod method = CountMethod::sliced,
                    unsigned workers = 1);

// #{n in Z^3 : |n1|^{mk} + (|n2|^k + |n3|^k)^m = n}; integral exponents only.
std::int64_t r_count(const BodyParams& p, std::int64_t n);

// S(x) = Sum over |n2|^{mk} + |n3|^{mk} <= x^{mk} of
//        ((x^{mk} - |n3|^{mk})^{1/m} - |n2|^k)^{1/k}.
double s_sum(const BodyParams& p, double x, const ScalarPolicy& policy = {},
             std::int64_t* ambiguous = nullptr, unsigned workers = 1);

// L_k(W) - a_k W^{2/k} - 8 I_k(W) + 8 Delta_k(W); O(1) when the identity holds.
double slice_identity_residual(double k, double W,
                               const ScalarPolicy& policy = {},
                               const SeriesConfig& cfg = {},
                               std::int64_t* ambiguous = nullptr);

}  // namespace lamelat
