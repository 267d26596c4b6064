// Dyadic decomposition of the boundary sawtooth sum Delta_k(W) and the
// van der Corput-type transform of its exponential sums.
//
// The range (W/2)^{1/k} < n <= W^{1/k} splits at N_j = W^{1/k}(1+2^{-jq})^{-1/k}
// (q = k/(k-1), j = 0..J), so block j = ]N_j, N_{j+1}] collects the n whose
// saddle parameter lies in the dyadic window [2^j h, 2^{j+1} h].  Over block j
// the weighted exponential sum
//
//   LHS_j = Sum_{0<h<H_j} g_h Sum_{N_j<n<=N_{j+1}} e(-h (W - n^k)^{1/k})
//
// transforms, up to O((log W)^2), into the conjugate of
//
//   S_j = W^{1/(2k)}/sqrt(k-1) * Sum_{0<h<H_j} g_h h
//         * Sum*_{l=2^j h}^{2^{j+1} h} (hl)^{q/2-1} (h^q+l^q)^{-1+1/(2q)}
//           e(W^{1/k}(h^q+l^q)^{1/q} - 1/8),
//
// where Sum* gives the (always integral) endpoints half weight and g is a
// finite sine/cosine approximation to the sawtooth (alpha: odd approximant;
// beta: cosine majorant of the approximation error).  Summing the blocks
// yields a computable upper bound for |Delta_k(W) - main|; the empirical
// constant of that bound is what the identity check reports.

#pragma once

#include <complex>
#include <vector>

#include "lamelat/lattice_count.hpp"
#include "lamelat/vaaler.hpp"

namespace lamelat {

struct SchemeParams {
    double lambda = 0.0;  // tail exponent: blocks stop ~ W^{lambda/k} short
    double c0 = 1.0;      // tail cutoff scale
    double h_decay = 0.0; // per-level decay d in H_j = max(2, ceil(W^{1/4} 2^{-jd}))
};

struct DyadicScheme {
    double k = 0.0;
    double W = 0.0;
    double q = 0.0;            // k/(k-1)
    int J = 0;                 // number of blocks
    std::vector<double> N;     // cut points N_0..N_J (size J+1)
    std::vector<int> H;        // trigonometric depth per block (size J)
    double tail_ratio = 0.0;   // (W^{1/k} - N_J) / W^{lambda/k}
};

// Depth-decay exponent tuned to the remainder optimization,
// d = (18k - 11) / (25(k - 1)).
double preset_h_decay(double k);

// Builds the scheme; throws std::invalid_argument unless the result is
// well-formed (J >= 1, N strictly increasing, 2 <= H_j <= W).
DyadicScheme build_scheme(double k, double W, const SchemeParams& sp = {});

// Sum_{N_j < n <= N_{j+1}} e(-h (W - n^k)^{1/k}),  0 <= j < J.
std::complex<double> direct_exp_sum(const DyadicScheme& ds, int j, int h);

// Number of integers in block j.
std::int64_t block_lattice_count(const DyadicScheme& ds, int j);

// LHS_j above with g = Vaaler coefficients of the given kind at depth H_j.
std::complex<double> dyadic_weighted_sum(const DyadicScheme& ds, int j,
                                         CoefKind kind);

// S_j above.  full_weights replaces the half-weighted endpoints by weight 1
// (degrades the match; kept for experiments).
std::complex<double> hardy_partial_sum(const DyadicScheme& ds, int j,
                                       CoefKind kind,
                                       bool full_weights = false);

struct TransformCheck {
    std::complex<double> lhs;  // direct weighted block sum
    std::complex<double> rhs;  // conj(hardy_partial_sum)
    double abs_diff = 0.0;
};

TransformCheck transform_check(const DyadicScheme& ds, int j, CoefKind kind);

// Block defects |LHS_j - conj(S_j)| aggregated two ways (sum over blocks and
// worst block), each also divided by the (log W)^2 envelope.
struct TransformDefect {
    double sum_abs = 0.0;
    double max_abs = 0.0;
    double normalized_sum = 0.0;
    double normalized_max = 0.0;
};

TransformDefect transform_defect(const DyadicScheme& ds, CoefKind kind);

// Which real part of S_j feeds the sawtooth reconstruction.  The odd
// approximant enters through -Im (the direct sum is the conjugate of S_j);
// the cosine majorant through +Re.
enum class PartSelector { imag, real, neg_imag, neg_real };

double apply_part(std::complex<double> z, PartSelector sel);

struct HardyOptions {
    SchemeParams scheme{0.47, 1.0, 0.0};
    PartSelector alpha_part = PartSelector::neg_imag;
    PartSelector beta_part = PartSelector::real;
    ScalarPolicy policy{};
    bool full_weights = false;
};

// Decomposition of the bound
//   |Delta_k(W) - main| <= majorant + lattice_term + C * tail_term,
// main         = Sum_j alpha_part(S_j^{(alpha)}),
// majorant     = Sum_j |beta_part(S_j^{(beta)})|,
// lattice_term = Sum_j #(]N_j,N_{j+1}] cap Z) / H_j,
// tail_term    = W^{lambda/k} + (log W)^3,
// c_emp        = max(0, (|direct - main| - majorant - lattice_term) / tail_term):
// the smallest constant C making the inequality hold at this W.
struct HardyEvaluation {
    double direct = 0.0;   // Delta_k(W), summed literally
    double main = 0.0;
    double majorant = 0.0;
    double lattice_term = 0.0;
    double tail_term = 0.0;
    double defect = 0.0;   // |direct - main|
    double c_emp = 0.0;
    int J = 0;
};

HardyEvaluation hardy_identity_check(double k, double W,
                                     const HardyOptions& opt = {});

}  // namespace lamelat
