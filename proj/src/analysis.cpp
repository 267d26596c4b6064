// Sweep machinery: records are independent per x, so the sweep parallelizes
// across rows (each row computed serially) and the output cannot depend on
// the worker count.

#include "lamelat/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "lamelat/numeric.hpp"

namespace lamelat {

namespace {

// Truncation tail of a sine series with coefficient envelope c n^{-1-s}:
// |Sum_{n>N}| <= c Integral_N^inf t^{-1-s} dt = c N^{-s} / s.
double sine_series_tail(double coeff, double s, int n_max) {
    return std::fabs(coeff) * std::pow((double)n_max, -s) / s;
}

}  // namespace

DiscrepancyRecord evaluate_discrepancy(const BodyParams& p, double x,
                                       const AnalysisConfig& cfg) {
    if (!(x > 0.0)) throw std::domain_error("evaluate_discrepancy: need x > 0");
    const MainTermParams mt(p.m * p.k, p.k);
    DiscrepancyRecord rec;
    rec.x = x;
    CountResult c = count_A(p, x, cfg.policy, CountMethod::sliced, cfg.workers);
    rec.A = c.count;
    rec.ambiguous = c.ambiguous;
    rec.vol_term = body_volume(p.m, p.k) * x * x * x;
    rec.H1 = main_term(mt, x, MainTermKind::one, cfg.mode, cfg.series);
    rec.H2 = main_term(mt, x, MainTermKind::two, cfg.mode, cfg.series);
    rec.P = (double)rec.A - rec.vol_term;
    rec.R = rec.P - rec.H1 - rec.H2;
    const double a = p.m * p.k, b = p.k;
    rec.tail_bound =
        sine_series_tail(main_term_c1(a, b) * std::pow(x, 2.0 - 2.0 / a),
                         2.0 / a, cfg.series.n_max) +
        sine_series_tail(
            main_term_c2(a, b) * std::pow(x, 2.0 - 1.0 / a - 1.0 / b),
            1.0 / a + 1.0 / b, cfg.series.n_max);
    return rec;
}

std::vector<DiscrepancyRecord> sweep(const BodyParams& p,
                                     const std::vector<double>& grid,
                                     const AnalysisConfig& cfg) {
    if (grid.empty()) throw std::invalid_argument("sweep: empty grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0))
            throw std::invalid_argument("sweep: grid values must be positive");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw std::invalid_argument("sweep: grid must be strictly increasing");
    }
    AnalysisConfig row_cfg = cfg;
    row_cfg.workers = 1;  // parallelism lives across rows, not inside them
    std::vector<DiscrepancyRecord> rows(grid.size());
    parallel_for_indexed(grid.size(), cfg.workers, [&](std::size_t i) {
        rows[i] = evaluate_discrepancy(p, grid[i], row_cfg);
    });
    return rows;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2)
        throw std::invalid_argument("log_grid: need 0 < lo < hi and n >= 2");
    std::vector<double> g((std::size_t)n);
    const double r = hi / lo;
    for (int i = 0; i < n; ++i)
        g[(std::size_t)i] = lo * std::pow(r, (double)i / (double)(n - 1));
    g.back() = hi;
    return g;
}

namespace {

double field_of(const DiscrepancyRecord& rec, SweepField field) {
    return field == SweepField::P ? rec.P : rec.R;
}

}  // namespace

double rms(const std::vector<DiscrepancyRecord>& rows, SweepField field) {
    if (rows.empty()) throw std::invalid_argument("rms: no rows");
    Kahan<double> acc;
    for (const auto& r : rows) {
        const double v = field_of(r, field);
        acc.add(v * v);
    }
    return std::sqrt(acc.value() / (double)rows.size());
}

FitResult fit_exponent(const std::vector<DiscrepancyRecord>& rows,
                       SweepField field) {
    FitResult fr;
    Kahan<double> sx, sy, sxx, sxy;
    double xmin = 0.0, xmax = 0.0;
    for (const auto& r : rows) {
        const double v = std::fabs(field_of(r, field));
        if (v < 1e-9) {
            ++fr.dropped;
            continue;
        }
        const double lx = std::log(r.x);
        const double ly = std::log(v);
        sx.add(lx);
        sy.add(ly);
        sxx.add(lx * lx);
        sxy.add(lx * ly);
        if (fr.used == 0 || r.x < xmin) xmin = r.x;
        if (fr.used == 0 || r.x > xmax) xmax = r.x;
        ++fr.used;
    }
    if (fr.used < 10)
        throw std::invalid_argument("fit_exponent: fewer than 10 usable rows");
    if (!(xmax >= 10.0 * xmin))
        throw std::invalid_argument("fit_exponent: x-range spans less than a decade");
    const double n = (double)fr.used;
    const double det = n * sxx.value() - sx.value() * sx.value();
    fr.slope = (n * sxy.value() - sx.value() * sy.value()) / det;
    return fr;
}

double s_sum_residual(const BodyParams& p, double x, const AnalysisConfig& cfg) {
    if (!(x > 0.0)) throw std::domain_error("s_sum_residual: need x > 0");
    const MainTermParams mt(p.m * p.k, p.k);
    const double S = s_sum(p, x, cfg.policy, nullptr, cfg.workers);
    const double vol = body_volume(p.m, p.k);
    const double H1 = main_term(mt, x, MainTermKind::one, cfg.mode, cfg.series);
    const double H2 = main_term(mt, x, MainTermKind::two, cfg.mode, cfg.series);
    return S - 0.5 * vol * x * x * x - 0.5 * H1 - 0.25 * H2;
}

ExponentClass classify_exponent(const BodyParams& p) {
    p.require_strict();
    const double m = p.m, k = p.k, mk = m * k;
    ExponentClass ec;
    if (779.0 * k < 5875.0 && 779.0 * mk < 6550.0) {
        ec.case_id = 1;
        ec.exponent = 37.0 / 25.0;
        ec.log_power = 0.0;
    } else if (235.0 * m >= 262.0) {
        ec.case_id = 2;
        ec.exponent = 339.0 / 208.0 - 131.0 / (104.0 * mk);
        ec.log_power = (18627.0 * mk - 20614.0) / (8320.0 * mk);
    } else {
        ec.case_id = 3;
        ec.exponent = 339.0 / 208.0 - 235.0 / (208.0 * k);
        ec.log_power = (18627.0 / 8320.0) * (1.0 - 1.0 / k);
    }
    return ec;
}

}  // namespace lamelat
