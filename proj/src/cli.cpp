#include "lamelat/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "lamelat/analysis.hpp"
#include "lamelat/hardy.hpp"
#include "lamelat/lattice_count.hpp"
#include "lamelat/numeric.hpp"
#include "lamelat/vaaler.hpp"

namespace lamelat::cli {

namespace {

// --workers beats LAMELAT_WORKERS beats 1.
unsigned resolve_workers(int cli_value) {
    if (cli_value > 0) return (unsigned)cli_value;
    if (const char* env = std::getenv("LAMELAT_WORKERS")) {
        const int v = std::atoi(env);
        if (v > 0) return (unsigned)v;
    }
    return 1;
}

// Tiny JSON assembler: fields print in insertion order, numbers via the
// 15-digit locale-free formatter.  (A general JSON library would round-trip
// through its own double formatting and lose the output contract.)
struct JsonObject {
    std::string body;
    void raw(const std::string& key, const std::string& v) {
        body += body.empty() ? "" : ",";
        body += "\"" + key + "\":" + v;
    }
    void num(const std::string& key, double v) { raw(key, format_g15(v)); }
    void integer(const std::string& key, long long v) { raw(key, format_int(v)); }
    void str(const std::string& key, const std::string& v) {
        raw(key, "\"" + v + "\"");
    }
    void boolean(const std::string& key, bool v) { raw(key, v ? "true" : "false"); }
    std::string render() const { return "{" + body + "}"; }
};

std::string json_complex_fields(const char* prefix, std::complex<double> z) {
    return std::string("\"") + prefix + "_re\":" + format_g15(z.real()) +
           ",\"" + prefix + "_im\":" + format_g15(z.imag());
}

struct CountArgs {
    double m = 2, k = 3, x = 10;
    CountMethod method = CountMethod::sliced;
    ScalarPolicy policy;
    int workers = 0;
};

struct DiscArgs {
    double m = 2, k = 3, x = 10;
    AnalysisConfig cfg;
    int workers = 0;
};

struct SweepArgs {
    double m = 2, k = 3, x_min = 50, x_max = 800;
    int points = 40;
    AnalysisConfig cfg;
    int workers = 0;
};

struct HardyArgs {
    double k = 3, W = 1000;
    HardyOptions opt;
    bool preset_decay = false;
};

struct VaalerArgs {
    int depth = 16;
    double w = 0.3;
};

struct TransformArgs {
    double k = 3, W = 1000;
    SchemeParams sp;  // lambda 0, c0 1, flat depth: the transform defaults
    CoefKind kind = CoefKind::alpha;
    bool preset_decay = false;
};

struct ClassifyArgs {
    double m = 2, k = 3;
};

void run_count(const CountArgs& a) {
    const BodyParams p(a.m, a.k);
    const CountResult c =
        count_A(p, a.x, a.policy, a.method, resolve_workers(a.workers));
    JsonObject j;
    j.num("m", a.m);
    j.num("k", a.k);
    j.num("x", a.x);
    j.str("method", a.method == CountMethod::sliced ? "sliced" : "bruteforce");
    j.integer("count", c.count);
    j.integer("ambiguous", c.ambiguous);
    std::cout << j.render() << "\n";
}

void run_disc(const DiscArgs& a) {
    const BodyParams p(a.m, a.k);
    AnalysisConfig cfg = a.cfg;
    cfg.workers = resolve_workers(a.workers);
    const DiscrepancyRecord r = evaluate_discrepancy(p, a.x, cfg);
    JsonObject j;
    j.num("x", r.x);
    j.integer("A", r.A);
    j.num("vol_term", r.vol_term);
    j.num("H1", r.H1);
    j.num("H2", r.H2);
    j.num("P", r.P);
    j.num("R", r.R);
    j.integer("ambiguous", r.ambiguous);
    j.num("tail_bound", r.tail_bound);
    std::cout << j.render() << "\n";
}

void run_sweep(const SweepArgs& a) {
    const BodyParams p(a.m, a.k);
    AnalysisConfig cfg = a.cfg;
    cfg.workers = resolve_workers(a.workers);
    const std::vector<double> grid = log_grid(a.x_min, a.x_max, a.points);
    const std::vector<DiscrepancyRecord> rows = sweep(p, grid, cfg);
    std::string out = "x,A,vol_term,H1,H2,P,R\n";
    for (const auto& r : rows) {
        out += format_g15(r.x);
        out += ",";
        out += format_int(r.A);
        out += ",";
        out += format_g15(r.vol_term);
        out += ",";
        out += format_g15(r.H1);
        out += ",";
        out += format_g15(r.H2);
        out += ",";
        out += format_g15(r.P);
        out += ",";
        out += format_g15(r.R);
        out += "\n";
    }
    std::cout << out;
}

void run_hardy(const HardyArgs& a) {
    HardyOptions opt = a.opt;
    if (a.preset_decay) opt.scheme.h_decay = preset_h_decay(a.k);
    const HardyEvaluation ev = hardy_identity_check(a.k, a.W, opt);
    JsonObject j;
    j.num("k", a.k);
    j.num("W", a.W);
    j.integer("J", ev.J);
    j.num("direct", ev.direct);
    j.num("main", ev.main);
    j.num("majorant", ev.majorant);
    j.num("lattice_term", ev.lattice_term);
    j.num("tail_term", ev.tail_term);
    j.num("defect", ev.defect);
    j.num("c_emp", ev.c_emp);
    std::cout << j.render() << "\n";
}

void run_vaaler(const VaalerArgs& a) {
    const double saw = sawtooth(a.w);
    const double approx = vaaler_eval(a.w, a.depth, CoefKind::alpha);
    const double maj = vaaler_eval(a.w, a.depth, CoefKind::beta);
    const double err = std::fabs(saw - approx);
    const double bound = maj + 0.5 / (double)a.depth;
    JsonObject j;
    j.integer("H", a.depth);
    j.num("w", a.w);
    j.num("sawtooth", saw);
    j.num("approx", approx);
    j.num("majorant", maj);
    j.num("abs_err", err);
    j.num("bound", bound);
    j.boolean("bound_ok", err <= bound + 1e-12);
    std::cout << j.render() << "\n";
}

void run_transform(const TransformArgs& a) {
    SchemeParams sp = a.sp;
    if (a.preset_decay) sp.h_decay = preset_h_decay(a.k);
    const DyadicScheme ds = build_scheme(a.k, a.W, sp);
    std::string blocks = "[";
    for (int j = 0; j < ds.J; ++j) {
        const TransformCheck tc = transform_check(ds, j, a.kind);
        if (j) blocks += ",";
        blocks += "{\"j\":" + format_int(j) + "," +
                  json_complex_fields("lhs", tc.lhs) + "," +
                  json_complex_fields("rhs", tc.rhs) +
                  ",\"abs_diff\":" + format_g15(tc.abs_diff) + "}";
    }
    blocks += "]";
    const TransformDefect td = transform_defect(ds, a.kind);
    JsonObject j;
    j.num("k", a.k);
    j.num("W", a.W);
    j.str("kind", a.kind == CoefKind::alpha ? "alpha" : "beta");
    j.integer("J", ds.J);
    j.num("tail_ratio", ds.tail_ratio);
    j.raw("blocks", blocks);
    j.num("defect_sum", td.sum_abs);
    j.num("defect_max", td.max_abs);
    j.num("normalized_sum", td.normalized_sum);
    j.num("normalized_max", td.normalized_max);
    std::cout << j.render() << "\n";
}

void run_classify(const ClassifyArgs& a) {
    const ExponentClass ec = classify_exponent(BodyParams(a.m, a.k));
    JsonObject j;
    j.num("m", a.m);
    j.num("k", a.k);
    j.integer("case", ec.case_id);
    j.num("exponent", ec.exponent);
    j.num("log_power", ec.log_power);
    std::cout << j.render() << "\n";
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"lattice counts, main terms and identity checks for the "
                 "|u1|^{mk} + (|u2|^k + |u3|^k)^m <= x^{mk} body family"};
    app.require_subcommand(1);

    const std::map<std::string, ScalarMode> scalar_modes{
        {"auto", ScalarMode::automatic},
        {"exact", ScalarMode::exact_int},
        {"float", ScalarMode::guarded_float}};
    const std::map<std::string, MainTermMode> term_modes{
        {"asym", MainTermMode::asymptotic}, {"exact", MainTermMode::exact}};
    const std::map<std::string, PartSelector> parts{
        {"imag", PartSelector::imag},
        {"real", PartSelector::real},
        {"neg-imag", PartSelector::neg_imag},
        {"neg-real", PartSelector::neg_real}};
    const std::map<std::string, CoefKind> coef_kinds{
        {"alpha", CoefKind::alpha}, {"beta", CoefKind::beta}};
    const std::map<std::string, CountMethod> methods{
        {"sliced", CountMethod::sliced}, {"bruteforce", CountMethod::bruteforce}};

    CountArgs ca;
    auto* count = app.add_subcommand("count", "lattice point count A(x)");
    count->add_option("--m", ca.m, "outer exponent factor m")->required();
    count->add_option("--k", ca.k, "inner exponent k")->required();
    count->add_option("--x", ca.x, "scale x >= 0")->required();
    count->add_option("--method", ca.method, "sliced|bruteforce")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    count->add_option("--scalar-mode", ca.policy.mode, "auto|exact|float")
        ->transform(CLI::CheckedTransformer(scalar_modes, CLI::ignore_case));
    count->add_option("--guard-eps", ca.policy.guard_eps,
                      "relative guard band, float regime");
    count->add_option("--workers", ca.workers, "worker threads");
    count->callback([&ca] { run_count(ca); });

    DiscArgs da;
    auto* disc = app.add_subcommand(
        "disc", "count, volume term, main terms and residual at one x");
    disc->add_option("--m", da.m)->required();
    disc->add_option("--k", da.k)->required();
    disc->add_option("--x", da.x)->required();
    disc->add_option("--n-max", da.cfg.series.n_max, "main-term series length");
    disc->add_option("--term-mode", da.cfg.mode, "asym|exact")
        ->transform(CLI::CheckedTransformer(term_modes, CLI::ignore_case));
    disc->add_option("--workers", da.workers);
    disc->callback([&da] { run_disc(da); });

    SweepArgs sa;
    auto* sw = app.add_subcommand("sweep",
                                  "CSV discrepancy sweep over a log grid");
    sw->add_option("--m", sa.m)->required();
    sw->add_option("--k", sa.k)->required();
    sw->add_option("--x-min", sa.x_min)->required();
    sw->add_option("--x-max", sa.x_max)->required();
    sw->add_option("--points", sa.points)->required();
    sw->add_option("--n-max", sa.cfg.series.n_max);
    sw->add_option("--term-mode", sa.cfg.mode, "asym|exact")
        ->transform(CLI::CheckedTransformer(term_modes, CLI::ignore_case));
    sw->add_option("--workers", sa.workers);
    sw->callback([&sa] { run_sweep(sa); });

    HardyArgs ha;
    auto* hd = app.add_subcommand(
        "hardy", "sawtooth-sum bound decomposition and empirical constant");
    hd->add_option("--k", ha.k)->required();
    hd->add_option("--w", ha.W, "section parameter W")->required();
    hd->add_option("--lambda", ha.opt.scheme.lambda, "tail exponent");
    hd->add_option("--c0", ha.opt.scheme.c0, "tail cutoff scale");
    hd->add_option("--h-decay", ha.opt.scheme.h_decay, "depth decay d");
    hd->add_flag("--preset-decay", ha.preset_decay,
                 "use the tuned depth decay for this k");
    hd->add_option("--alpha-part", ha.opt.alpha_part,
                   "imag|real|neg-imag|neg-real")
        ->transform(CLI::CheckedTransformer(parts, CLI::ignore_case));
    hd->add_option("--beta-part", ha.opt.beta_part,
                   "imag|real|neg-imag|neg-real")
        ->transform(CLI::CheckedTransformer(parts, CLI::ignore_case));
    hd->add_flag("--full-weights", ha.opt.full_weights,
                 "weight the transformed endpoints fully");
    hd->callback([&ha] { run_hardy(ha); });

    VaalerArgs va;
    auto* vl = app.add_subcommand(
        "vaaler", "sawtooth approximation, majorant and pointwise bound");
    vl->add_option("--depth", va.depth, "trigonometric depth H >= 2")->required();
    vl->add_option("--w", va.w, "evaluation point")->required();
    vl->callback([&va] { run_vaaler(va); });

    TransformArgs ta;
    auto* tr = app.add_subcommand(
        "transform", "per-block exponential sums vs their transformed form");
    tr->add_option("--k", ta.k)->required();
    tr->add_option("--w", ta.W, "section parameter W")->required();
    tr->add_option("--kind", ta.kind, "alpha|beta")
        ->transform(CLI::CheckedTransformer(coef_kinds, CLI::ignore_case));
    tr->add_option("--lambda", ta.sp.lambda);
    tr->add_option("--c0", ta.sp.c0);
    tr->add_option("--h-decay", ta.sp.h_decay);
    tr->add_flag("--preset-decay", ta.preset_decay);
    tr->callback([&ta] { run_transform(ta); });

    ClassifyArgs cla;
    auto* cl = app.add_subcommand(
        "classify", "proven remainder exponent for the (m,k) family");
    cl->add_option("--m", cla.m)->required();
    cl->add_option("--k", cla.k)->required();
    cl->callback([&cla] { run_classify(cla); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace lamelat::cli
