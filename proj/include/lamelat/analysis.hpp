// Discrepancy analysis: assembling the count, the volume term, the two
// oscillating main terms and the residual into per-x records, sweeping them
// over a grid, fitting growth exponents, and classifying the proven
// remainder exponent of the (m,k) family.

#pragma once

#include <cstdint>
#include <vector>

#include "lamelat/lattice_count.hpp"
#include "lamelat/special_fn.hpp"

namespace lamelat {

struct AnalysisConfig {
    SeriesConfig series{};                         // truncations, tolerances
    MainTermMode mode = MainTermMode::asymptotic;  // main-term evaluation
    ScalarPolicy policy{};
    unsigned workers = 1;
};

// One row of a sweep.  By construction A = vol_term + H1 + H2 + R + (P - P),
// i.e. P = A - vol_term and R = P - H1 - H2 exactly as stored.
struct DiscrepancyRecord {
    double x = 0.0;
    std::int64_t A = 0;          // lattice count
    double vol_term = 0.0;       // vol(B) x^3
    double H1 = 0.0;             // first oscillating main term
    double H2 = 0.0;             // second oscillating main term
    double P = 0.0;              // A - vol_term
    double R = 0.0;              // P - H1 - H2
    std::int64_t ambiguous = 0;  // guarded boundary decisions in A
    double tail_bound = 0.0;     // series tail bound (exact mode only)
};

DiscrepancyRecord evaluate_discrepancy(const BodyParams& p, double x,
                                       const AnalysisConfig& cfg = {});

// Rows for a strictly increasing positive grid; rows are computed in
// parallel (each row serially), so output is identical for any worker count.
std::vector<DiscrepancyRecord> sweep(const BodyParams& p,
                                     const std::vector<double>& grid,
                                     const AnalysisConfig& cfg = {});

// Log-spaced grid helper: n points from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int n);

enum class SweepField { P, R };

double rms(const std::vector<DiscrepancyRecord>& rows, SweepField field);

// Least-squares slope of log|field| against log x.  Rows with |field| < 1e-9
// are dropped; requires >= 10 usable rows spanning at least a decade in x.
struct FitResult {
    double slope = 0.0;
    int used = 0;
    int dropped = 0;
};

FitResult fit_exponent(const std::vector<DiscrepancyRecord>& rows,
                       SweepField field);

// S(x) - vol x^3 / 2 - H1/2 - H2/4; the one-sided-sum analogue of R.
double s_sum_residual(const BodyParams& p, double x,
                      const AnalysisConfig& cfg = {});

// Proven remainder exponent theta and log power gamma in
// R = O(x^theta (log x)^gamma), by exact rational case distinction:
//   case 1:  k < 5875/779 and mk < 6550/779:   theta = 37/25, gamma = 0
//   case 2:  otherwise, m >= 262/235:          theta = 339/208 - 131/(104 mk),
//                                              gamma = (18627 mk - 20614)/(8320 mk)
//   case 3:  otherwise:                        theta = 339/208 - 235/(208 k),
//                                              gamma = (18627/8320)(1 - 1/k)
// theta is continuous across both case boundaries.
struct ExponentClass {
    int case_id = 0;
    double exponent = 0.0;
    double log_power = 0.0;
};

ExponentClass classify_exponent(const BodyParams& p);

}  // namespace lamelat
