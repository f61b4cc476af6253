// connmass command-line front end. Reproduces the library's sweep tables and
// design reports as self-describing CSV/text with reproducible seeds. Talks
// to the library exclusively through the public C interface.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "connmass.h"
#include "config.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitUsage = 2;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

[[noreturn]] void fail_config(const cli::Config& cfg, int line, const std::string& msg) {
    const std::string where = cfg.source_path().empty() ? "<cmdline>" : cfg.source_path();
    throw cli::ConfigError(line, where + ":" + std::to_string(line) + ": " + msg);
}

void check_capi(cm_status status, const std::string& what) {
    if (status != CM_OK) {
        throw std::runtime_error(what + ": " + cm_last_error());
    }
}

struct DomainHandle {
    cm_domain* ptr = nullptr;
    ~DomainHandle() { cm_domain_free(ptr); }
};

struct ParamsHandle {
    cm_params* ptr = nullptr;
    ~ParamsHandle() { cm_params_free(ptr); }
};

struct ConnHandle {
    cm_conn* ptr = nullptr;
    ~ConnHandle() { cm_conn_free(ptr); }
};

// Everything a subcommand needs, resolved from the config file with
// command-line overrides already applied.
struct Run {
    cli::Config cfg;

    DomainHandle domain;
    int dim = 2;
    std::string domain_desc;

    ParamsHandle params;
    double eta = 2.0;
    double epsilon = 1e-6;
    double beta = 1.0;
    double threshold = 1.0;

    cm_metric metric = CM_METRIC_SNR;
    double rate = 1.0;

    cm_scheme_kind scheme = CM_SCHEME_SISO;
    int m = 1;
    int n = 1;
    double y = -1.0;  // >= 0 switches mass-curve into the fixed-ratio panel

    uint64_t seed = 1;
    long long samples = 1000000;
    long long trials = 1000;
    long long cdf_samples = 100000;
    long long outer_samples = 10000;
    long long inner_samples = 10000;
    double quad_tol = 1e-9;
    std::string out;

    double c_exp() const { return static_cast<double>(dim) / eta; }

    // One-line canonical parameter echo for CSV headers and reports.
    std::string describe() const {
        std::ostringstream os;
        os << "seed=" << seed << " domain=" << domain_desc << " eta=" << fmt(eta)
           << " epsilon=" << fmt(epsilon) << " beta=" << fmt(beta)
           << " threshold=" << fmt(threshold)
           << " metric=" << (metric == CM_METRIC_RATE ? "rate" : "snr");
        if (metric == CM_METRIC_RATE) os << " rate=" << fmt(rate);
        os << " scheme=";
        switch (scheme) {
            case CM_SCHEME_SISO: os << "siso"; break;
            case CM_SCHEME_DIVERSITY: os << "dc"; break;
            case CM_SCHEME_BEAMFORMING: os << "bf"; break;
        }
        os << " m=" << m << " n=" << n;
        if (y >= 0.0) os << " y=" << fmt(y);
        os << " samples=" << samples << " trials=" << trials
           << " cdf_samples=" << cdf_samples << " outer=" << outer_samples
           << " inner=" << inner_samples << " quad_tol=" << fmt(quad_tol);
        return os.str();
    }
};

void resolve_domain(Run& run) {
    const std::string kind = run.cfg.get_string("domain.kind", "box");
    if (kind == "box") {
        std::vector<double> sides = run.cfg.get_list("domain.sides");
        if (sides.empty()) sides = {1.0, 1.0, 1.0};
        if (sides.size() > 3) {
            fail_config(run.cfg, run.cfg.line_of("domain.sides"),
                        "domain.sides: dimension must be 1..3");
        }
        const cm_status s = cm_domain_create_box(sides.data(), static_cast<int>(sides.size()),
                                                 &run.domain.ptr);
        if (s != CM_OK) {
            fail_config(run.cfg, run.cfg.line_of("domain.sides"), cm_last_error());
        }
        std::string desc = "box:";
        for (std::size_t i = 0; i < sides.size(); ++i) {
            desc += (i ? "," : "") + fmt(sides[i]);
        }
        run.domain_desc = desc;
        run.dim = static_cast<int>(sides.size());
        return;
    }
    if (kind == "ball") {
        const double radius = run.cfg.get_double("domain.radius", 1.0);
        const int dim = static_cast<int>(run.cfg.get_long("domain.dim", 3));
        const cm_status s = cm_domain_create_ball(radius, dim, &run.domain.ptr);
        if (s != CM_OK) fail_config(run.cfg, run.cfg.line_of("domain.radius"), cm_last_error());
        run.domain_desc = "ball:" + fmt(radius) + ":" + std::to_string(dim);
        run.dim = dim;
        return;
    }
    if (kind == "wedge") {
        const double omega = run.cfg.get_double("domain.omega", 1.0);
        const int dim = static_cast<int>(run.cfg.get_long("domain.dim", 2));
        const cm_status s = cm_domain_create_wedge(dim, omega, &run.domain.ptr);
        if (s != CM_OK) fail_config(run.cfg, run.cfg.line_of("domain.omega"), cm_last_error());
        run.domain_desc = "wedge:" + fmt(omega) + ":" + std::to_string(dim);
        run.dim = dim;
        return;
    }
    fail_config(run.cfg, run.cfg.line_of("domain.kind"),
                "domain.kind must be box, ball or wedge (got '" + kind + "')");
}

void resolve_channel(Run& run) {
    run.eta = run.cfg.get_double("channel.eta", 2.0);
    if (run.eta < 2.0) {
        fail_config(run.cfg, run.cfg.line_of("channel.eta"),
                    "channel.eta: path loss exponent must satisfy eta >= 2 (got " +
                        fmt(run.eta) + ")");
    }
    run.epsilon = run.cfg.get_double("channel.epsilon", 1e-6);
    if (run.epsilon < 0.0) {
        fail_config(run.cfg, run.cfg.line_of("channel.epsilon"),
                    "channel.epsilon: regularizer must satisfy epsilon >= 0");
    }
    if (run.cfg.has("channel.beta") && run.cfg.has("channel.pt")) {
        fail_config(run.cfg, run.cfg.line_of("channel.pt"),
                    "channel.pt and channel.beta are alternatives; give one");
    }
    if (run.cfg.has("channel.pt")) {
        const double pt = run.cfg.get_double("channel.pt", 1.0);
        if (pt <= 0.0) {
            fail_config(run.cfg, run.cfg.line_of("channel.pt"),
                        "channel.pt: transmit power must be positive");
        }
        run.beta = 1.0 / pt;
    } else {
        run.beta = run.cfg.get_double("channel.beta", 1.0);
        if (run.beta <= 0.0) {
            fail_config(run.cfg, run.cfg.line_of("channel.beta"),
                        "channel.beta: must satisfy beta > 0");
        }
    }
    run.threshold = run.cfg.get_double("channel.threshold", 1.0);
    if (run.threshold <= 0.0) {
        fail_config(run.cfg, run.cfg.line_of("channel.threshold"),
                    "channel.threshold: must satisfy threshold > 0");
    }
    const std::string metric = run.cfg.get_string("channel.metric", "snr");
    if (metric == "snr") {
        run.metric = CM_METRIC_SNR;
    } else if (metric == "rate") {
        run.metric = CM_METRIC_RATE;
    } else {
        fail_config(run.cfg, run.cfg.line_of("channel.metric"),
                    "channel.metric must be snr or rate (got '" + metric + "')");
    }
    run.rate = run.cfg.get_double("channel.rate", 1.0);
    if (run.metric == CM_METRIC_RATE && run.rate <= 0.0) {
        fail_config(run.cfg, run.cfg.line_of("channel.rate"),
                    "channel.rate: target rate must satisfy R > 0");
    }
    const cm_status s = cm_params_create(run.eta, run.epsilon, run.beta, run.threshold, run.dim,
                                         &run.params.ptr);
    if (s != CM_OK) fail_config(run.cfg, run.cfg.line_of("channel.eta"), cm_last_error());
}

void resolve_scheme(Run& run) {
    const std::string kind = run.cfg.get_string("scheme.kind", "siso");
    if (kind == "siso") {
        run.scheme = CM_SCHEME_SISO;
    } else if (kind == "dc") {
        run.scheme = CM_SCHEME_DIVERSITY;
    } else if (kind == "bf") {
        run.scheme = CM_SCHEME_BEAMFORMING;
    } else {
        fail_config(run.cfg, run.cfg.line_of("scheme.kind"),
                    "scheme.kind must be siso, dc or bf (got '" + kind + "')");
    }
    run.m = static_cast<int>(run.cfg.get_long("scheme.m", 1));
    run.n = static_cast<int>(run.cfg.get_long("scheme.n", 1));
    if (run.m < 1 || run.n < 1) {
        fail_config(run.cfg, run.cfg.line_of(run.m < 1 ? "scheme.m" : "scheme.n"),
                    "antenna counts must satisfy m, n >= 1");
    }
    if (run.cfg.has("scheme.y")) {
        run.y = run.cfg.get_double("scheme.y", -1.0);
        if (run.y < 0.0) {
            fail_config(run.cfg, run.cfg.line_of("scheme.y"),
                        "scheme.y: antenna ratio must satisfy y >= 0");
        }
    }
}

void resolve_budgets(Run& run) {
    run.seed = static_cast<uint64_t>(run.cfg.get_long("run.seed", 1));
    run.samples = run.cfg.get_long("run.samples", 1000000);
    run.trials = run.cfg.get_long("run.trials", 1000);
    run.cdf_samples = run.cfg.get_long("run.cdf_samples", 100000);
    run.outer_samples = run.cfg.get_long("run.outer_samples", 10000);
    run.inner_samples = run.cfg.get_long("run.inner_samples", 10000);
    run.quad_tol = run.cfg.get_double("run.quad_tol", 1e-9);
    run.out = run.cfg.get_string("run.out", "");
    for (const char* key : {"run.samples", "run.trials", "run.cdf_samples",
                            "run.outer_samples", "run.inner_samples"}) {
        if (run.cfg.get_long(key, 1) < 1) {
            fail_config(run.cfg, run.cfg.line_of(key), std::string(key) + ": must be >= 1");
        }
    }
}

Run resolve(const cli::Config& cfg) {
    Run run;
    run.cfg = cfg;
    resolve_domain(run);
    resolve_channel(run);
    resolve_scheme(run);
    resolve_budgets(run);
    return run;
}

std::ofstream open_output(const Run& run, const std::string& fallback) {
    const std::string path = run.out.empty() ? fallback : run.out;
    std::ofstream os(path);
    if (!os.good()) throw std::runtime_error("cannot open output file '" + path + "'");
    return os;
}

ConnHandle make_conn(const Run& run, cm_scheme_kind kind, int m, int n) {
    ConnHandle conn;
    check_capi(cm_conn_create(kind, m, n, run.params.ptr, run.metric, run.rate,
                              run.cdf_samples, run.seed, &conn.ptr),
               "building connection function");
    return conn;
}

// threshold actually applied for a diversity-coding row under the current
// metric (zeta depends on the row's m)
double dc_threshold(const Run& run, int m) {
    if (run.metric == CM_METRIC_SNR) return run.threshold;
    const double zeta = m > 2 ? 2.0 : 1.0;
    return std::exp2(zeta * run.rate) - 1.0;
}

double bf_threshold(const Run& run) {
    if (run.metric == CM_METRIC_SNR) return run.threshold;
    return std::exp2(run.rate) - 1.0;
}

/* ---- subcommands ---- */

int cmd_conn_curve(const Run& run) {
    const double r_max = run.cfg.get_double("run.r_max", 4.0);
    const long long points = run.cfg.get_long("run.points", 512);
    if (r_max <= 0.0 || points < 2) {
        throw std::runtime_error("conn-curve needs r_max > 0 and points >= 2");
    }
    ConnHandle conn = make_conn(run, run.scheme, run.m, run.n);
    std::ofstream os = open_output(run, "conn_curve.csv");
    os << "# connmass " << cm_version() << " conn-curve " << run.describe()
       << " r_max=" << fmt(r_max) << " points=" << points << "\n";
    os << "r,H\n";
    for (long long i = 0; i < points; ++i) {
        const double r = r_max * static_cast<double>(i) / static_cast<double>(points - 1);
        double h = 0.0;
        check_capi(cm_conn_eval(conn.ptr, r, &h), "evaluating connection function");
        os << fmt(r) << "," << fmt(h) << "\n";
    }
    return kExitOk;
}

int cmd_mass_curve(const Run& run) {
    const int n_min = static_cast<int>(run.cfg.get_long("run.n_min", 2));
    const int n_max = static_cast<int>(run.cfg.get_long("run.n_max", 16));
    if (n_min < 1 || n_max < n_min) {
        throw std::runtime_error("mass-curve needs 1 <= n_min <= n_max");
    }
    std::vector<double> eta_list = run.cfg.get_list("run.eta_list");
    if (eta_list.empty()) eta_list = {2.0, 3.0, 4.0, 5.0};

    double omega = 0.0;
    check_capi(cm_full_solid_angle(run.dim, &omega), "solid angle");

    std::ofstream os = open_output(run, "mass_curve.csv");
    os << "# connmass " << cm_version() << " mass-curve " << run.describe() << " n_min=" << n_min
       << " n_max=" << n_max << " eta_list=";
    for (std::size_t i = 0; i < eta_list.size(); ++i) os << (i ? "," : "") << fmt(eta_list[i]);
    os << "\n";
    os << "n,eta,C,m,mass_dc_closed,mass_dc_asym,mass_bf_numeric,mass_bf_asym,bf_std_err\n";

    const bool ratio_panel = run.y >= 0.0;
    for (double eta : eta_list) {
        if (eta < 2.0) throw std::runtime_error("eta_list entries must satisfy eta >= 2");
        ParamsHandle row_params;
        check_capi(cm_params_create(eta, run.epsilon, run.beta, run.threshold, run.dim,
                                    &row_params.ptr),
                   "row parameters");
        const double c_exp = static_cast<double>(run.dim) / eta;
        for (int n = n_min; n <= n_max; ++n) {
            const int m = ratio_panel
                              ? std::max(1, static_cast<int>(std::lround(run.y * n)))
                              : run.m;
            const double tb_dc = dc_threshold(run, m) * run.beta;
            const double tb_bf = bf_threshold(run) * run.beta;

            cm_mass_result dc_closed, dc_asym, bf_asym;
            check_capi(cm_mass_dc_closed(omega, run.dim, eta, tb_dc, m, n, &dc_closed),
                       "dc closed-form mass");
            check_capi(cm_mass_dc_asymptotic(omega, run.dim, eta, tb_dc, m, n, &dc_asym),
                       "dc asymptotic mass");
            // fixed-m panels approach the y = 0 law; ratio panels keep y
            const double y_lead = ratio_panel ? run.y : 0.0;
            check_capi(cm_mass_bf_asymptotic(omega, run.dim, eta, tb_bf, n, y_lead, &bf_asym),
                       "bf asymptotic mass");

            ConnHandle bf_conn;
            check_capi(cm_conn_create(CM_SCHEME_BEAMFORMING, m, n, row_params.ptr, run.metric,
                                      run.rate, run.cdf_samples, run.seed, &bf_conn.ptr),
                       "bf connection function");
            cm_mass_result bf_num;
            check_capi(cm_mass_radial(bf_conn.ptr, omega, run.dim, run.quad_tol, &bf_num),
                       "bf numeric mass");

            os << n << "," << fmt(eta) << "," << fmt(c_exp) << "," << m << ","
               << fmt(dc_closed.value) << "," << fmt(dc_asym.value) << "," << fmt(bf_num.value)
               << "," << fmt(bf_asym.value) << "," << fmt(bf_num.error_estimate) << "\n";
        }
    }
    return kExitOk;
}

int cmd_pfc_sweep(const Run& run) {
    std::vector<double> n_list = run.cfg.get_list("run.n_list");
    if (n_list.empty()) n_list = {100, 150, 220, 300};
    double volume = 0.0;
    check_capi(cm_domain_volume(run.domain.ptr, &volume), "domain volume");
    ConnHandle conn = make_conn(run, run.scheme, run.m, run.n);

    std::ofstream os = open_output(run, "pfc_sweep.csv");
    os << "# connmass " << cm_version() << " pfc-sweep " << run.describe() << " n_list=";
    for (std::size_t i = 0; i < n_list.size(); ++i) os << (i ? "," : "") << fmt(n_list[i]);
    os << "\n";
    os << "rho,N,pfc_analytic,pfc_sim,sim_std_err\n";
    for (double n_real : n_list) {
        const int n_nodes = static_cast<int>(std::lround(n_real));
        if (n_nodes < 2) throw std::runtime_error("n_list entries must be >= 2");
        const double rho = n_nodes / volume;
        cm_pfc_estimate analytic, sim;
        check_capi(cm_pfc_analytic(rho, run.domain.ptr, conn.ptr, run.outer_samples,
                                   run.inner_samples, run.seed, &analytic),
                   "analytic full connectivity");
        check_capi(cm_simulate_pfc(n_nodes, run.domain.ptr, conn.ptr, run.trials, run.seed,
                                   &sim),
                   "simulated full connectivity");
        os << fmt(rho) << "," << n_nodes << "," << fmt(analytic.value) << "," << fmt(sim.value)
           << "," << fmt(sim.std_error) << "\n";
    }
    return kExitOk;
}

int cmd_design(const Run& run) {
    const std::string feature = run.cfg.get_string("run.feature", "corner");
    const double pt0 = run.cfg.get_double("run.pt0", 1.0);
    double omega_full = 0.0;
    check_capi(cm_full_solid_angle(run.dim, &omega_full), "solid angle");

    double omega = 0.0;
    if (feature == "interior") {
        omega = omega_full;
    } else if (feature == "face") {
        omega = omega_full / 2.0;
    } else if (feature == "edge") {
        if (run.dim < 2) throw std::runtime_error("edge feature needs dim >= 2");
        omega = omega_full / 4.0;
    } else if (feature == "corner") {
        omega = omega_full / static_cast<double>(1 << run.dim);
    } else if (feature.rfind("ngon:", 0) == 0) {
        if (run.dim != 2) throw std::runtime_error("ngon features live in dim = 2");
        const int sides = std::atoi(feature.c_str() + 5);
        check_capi(cm_corner_solid_angle_ngon(sides, &omega), "n-gon corner");
    } else {
        throw std::runtime_error(
            "run.feature must be interior, face, edge, corner or ngon:K (got '" + feature +
            "')");
    }

    const double c_exp = run.c_exp();
    double power = 0.0;
    check_capi(cm_power_for_boundary(omega, run.dim, c_exp, pt0, &power), "power rule");
    double n_dc1 = 0.0, n_dc2 = 0.0, n_bf = 0.0;
    check_capi(cm_antennas_for_boundary(omega, run.dim, c_exp, CM_SCHEME_DIVERSITY, 1.0, &n_dc1),
               "antenna rule dc zeta=1");
    check_capi(cm_antennas_for_boundary(omega, run.dim, c_exp, CM_SCHEME_DIVERSITY, 2.0, &n_dc2),
               "antenna rule dc zeta=2");
    const double y_used = run.y >= 0.0 ? run.y : 1.0;
    check_capi(cm_antennas_for_boundary(omega, run.dim, c_exp, CM_SCHEME_BEAMFORMING, y_used,
                                        &n_bf),
               "antenna rule bf");

    std::ostringstream report;
    report << "# connmass " << cm_version() << " design " << run.describe()
           << " feature=" << feature << " pt0=" << fmt(pt0) << "\n";
    report << "feature=" << feature << "\n";
    report << "dim=" << run.dim << "\n";
    report << "C=" << fmt(c_exp) << "\n";
    report << "omega=" << fmt(omega) << "\n";
    report << "omega_full=" << fmt(omega_full) << "\n";
    report << "power_multiplier=" << fmt(power / pt0) << "\n";
    report << "power=" << fmt(power) << "\n";
    report << "n_dc_zeta1=" << fmt(n_dc1) << "\n";
    report << "n_dc_zeta1_ceil=" << static_cast<long long>(std::ceil(n_dc1 - 1e-12)) << "\n";
    report << "n_dc_zeta2=" << fmt(n_dc2) << "\n";
    report << "n_dc_zeta2_ceil=" << static_cast<long long>(std::ceil(n_dc2 - 1e-12)) << "\n";
    report << "n_bf_y=" << fmt(y_used) << "\n";
    report << "n_bf=" << fmt(n_bf) << "\n";
    report << "n_bf_ceil=" << static_cast<long long>(std::ceil(n_bf - 1e-12)) << "\n";
    report << "# scheme comparison: leading orders tie at y_c = 3 - 2 sqrt(2) = "
           << fmt(cm_critical_ratio()) << "; diversity coding leads below, beamforming above\n";

    if (run.out.empty()) {
        std::cout << report.str();
    } else {
        std::ofstream os = open_output(run, "design.txt");
        os << report.str();
    }
    return kExitOk;
}

struct CheckReporter {
    int failures = 0;
    void operator()(const std::string& name, bool ok, const std::string& detail) {
        std::cout << (ok ? "[ ok ] " : "[FAIL] ") << name;
        if (!detail.empty()) std::cout << ": " << detail;
        std::cout << "\n";
        if (!ok) ++failures;
    }
};

int cmd_validate(const Run& run) {
    std::cout << "# connmass " << cm_version() << " validate " << run.describe() << "\n";
    CheckReporter check;

    // power-law ratios for the closed forms and the quadrature route
    {
        bool ok = true;
        std::string detail;
        for (double c_exp : {0.6, 0.75, 1.0, 1.5}) {
            const double eta = 3.0 / c_exp;
            cm_mass_result base, boosted;
            check_capi(cm_mass_leading_siso(1.0, 3, eta, 1.0, &base), "leading mass");
            check_capi(cm_mass_leading_siso(1.0, 3, eta, 0.5, &boosted), "leading mass");
            const double want = std::pow(2.0, c_exp);
            if (std::fabs(boosted.value / base.value / want - 1.0) > 1e-12) ok = false;

            ParamsHandle p1, p2;
            check_capi(cm_params_create(eta, 1e-6, 1.0, 1.0, 3, &p1.ptr), "params");
            check_capi(cm_params_create(eta, 1e-6, 0.5, 1.0, 3, &p2.ptr), "params");
            ConnHandle h1, h2;
            check_capi(cm_conn_create(CM_SCHEME_SISO, 1, 1, p1.ptr, CM_METRIC_SNR, 0.0, 0, 0,
                                      &h1.ptr), "conn");
            check_capi(cm_conn_create(CM_SCHEME_SISO, 1, 1, p2.ptr, CM_METRIC_SNR, 0.0, 0, 0,
                                      &h2.ptr), "conn");
            cm_mass_result r1, r2;
            check_capi(cm_mass_radial(h1.ptr, 1.0, 3, 1e-10, &r1), "radial");
            check_capi(cm_mass_radial(h2.ptr, 1.0, 3, 1e-10, &r2), "radial");
            const double rel = std::fabs(r2.value / r1.value / want - 1.0);
            if (rel > 1e-3) {
                ok = false;
                detail = "radial ratio off by " + fmt(rel) + " at C=" + fmt(c_exp);
            }
        }
        check("power-law scaling (halving beta multiplies mass by 2^C)", ok, detail);
    }

    // SISO closed form against quadrature at eps = 0
    {
        bool ok = true;
        std::string detail;
        for (double c_exp : {0.6, 0.75, 1.0, 1.5}) {
            const double eta = 3.0 / c_exp;
            ParamsHandle p;
            check_capi(cm_params_create(eta, 0.0, 1.0, 1.0, 3, &p.ptr), "params");
            ConnHandle h;
            check_capi(cm_conn_create(CM_SCHEME_SISO, 1, 1, p.ptr, CM_METRIC_SNR, 0.0, 0, 0,
                                      &h.ptr), "conn");
            cm_mass_result quad, closed;
            check_capi(cm_mass_radial(h.ptr, 1.0, 3, 1e-10, &quad), "radial");
            check_capi(cm_mass_leading_siso(1.0, 3, eta, 1.0, &closed), "leading");
            const double rel = std::fabs(quad.value / closed.value - 1.0);
            if (rel > 1e-6) {
                ok = false;
                detail = "relative gap " + fmt(rel) + " at C=" + fmt(c_exp);
            }
        }
        check("SISO mass: quadrature matches omega Gamma(C)/(eta (tb)^C)", ok, detail);
    }

    // STBC radial integral against the closed form
    {
        bool ok = true;
        std::string detail;
        for (int mn : {2, 3}) {
            const int m = mn, n = mn + 1;
            ParamsHandle p;
            check_capi(cm_params_create(3.0, 1e-8, 1.0, 1.0, 3, &p.ptr), "params");
            ConnHandle h;
            check_capi(cm_conn_create(CM_SCHEME_DIVERSITY, m, n, p.ptr, CM_METRIC_SNR, 0.0, 0,
                                      0, &h.ptr), "conn");
            cm_mass_result quad, closed;
            check_capi(cm_mass_radial(h.ptr, 1.0, 3, 1e-10, &quad), "radial");
            check_capi(cm_mass_dc_closed(1.0, 3, 3.0, 1.0, m, n, &closed), "closed");
            const double rel = std::fabs(quad.value / closed.value - 1.0);
            if (rel > 1e-4) {
                ok = false;
                detail = "relative gap " + fmt(rel) + " at m=" + std::to_string(m);
            }
        }
        check("STBC mass: radial quadrature matches the closed form", ok, detail);
    }

    // Stirling convergence of the dc mass
    {
        cm_mass_result c16, a16, c4096, a4096;
        check_capi(cm_mass_dc_closed(1.0, 3, 2.0, 1.0, 4, 4, &c16), "closed");
        check_capi(cm_mass_dc_asymptotic(1.0, 3, 2.0, 1.0, 4, 4, &a16), "asym");
        check_capi(cm_mass_dc_closed(1.0, 3, 2.0, 1.0, 64, 64, &c4096), "closed");
        check_capi(cm_mass_dc_asymptotic(1.0, 3, 2.0, 1.0, 64, 64, &a4096), "asym");
        const double base = std::fabs(c16.value / a16.value - 1.0) * 16.0;
        const double far = std::fabs(c4096.value / a4096.value - 1.0) * 4096.0;
        const bool ok = far < 3.0 * base && base < 3.0 * far;
        check("Stirling convergence: |closed/asym - 1| * mn stays bounded", ok,
              "16 -> " + fmt(base) + ", 4096 -> " + fmt(far));
    }

    // concentration of lambda_max/n
    {
        auto spread = [](int s, int draws) {
            std::vector<double> v(static_cast<std::size_t>(draws));
            check_capi(cm_sample_lambda_max(s, s, 4321, draws, v.data()), "lambda sampling");
            double mean = 0.0, sq = 0.0;
            for (double x : v) {
                mean += x;
                sq += x * x;
            }
            mean /= draws;
            return std::sqrt(std::max(0.0, sq / draws - mean * mean)) / s;
        };
        const double s16 = spread(16, 400);
        const double s64 = spread(64, 200);
        check("lambda_max concentration: sd of lambda/n shrinks with n", s64 < s16,
              fmt(s16) + " -> " + fmt(s64));
    }

    // isolated-node approximation against brute force in its regime
    {
        ParamsHandle p;
        check_capi(cm_params_create(2.0, 1e-6, 1.0, 40.0, 2, &p.ptr), "params");
        const double sides[2] = {1.0, 1.0};
        DomainHandle square;
        check_capi(cm_domain_create_box(sides, 2, &square.ptr), "domain");
        ConnHandle h;
        check_capi(cm_conn_create(CM_SCHEME_SISO, 1, 1, p.ptr, CM_METRIC_SNR, 0.0, 0, 0,
                                  &h.ptr), "conn");
        cm_pfc_estimate analytic, sim;
        check_capi(cm_pfc_analytic(150.0, square.ptr, h.ptr, 6000, 4000, run.seed, &analytic),
                   "analytic pfc");
        check_capi(cm_simulate_pfc(150, square.ptr, h.ptr, 300, run.seed, &sim), "simulated pfc");
        const double gap = std::fabs(analytic.value - sim.value);
        const double tol = std::max(0.05, 4.0 * std::hypot(analytic.std_error, sim.std_error));
        check("isolated-node approximation matches simulation at high density", gap <= tol,
              "analytic " + fmt(analytic.value) + " vs sim " + fmt(sim.value));
    }

    // scheme-comparison identities
    {
        const double y_c = cm_critical_ratio();
        cm_mass_result dc, bf;
        check_capi(cm_mass_dc_asymptotic(1.0, 3, 2.0, 1.0, 5, 24.0, &dc), "asym dc");
        check_capi(cm_mass_bf_asymptotic(1.0, 3, 2.0, 1.0, 24.0, y_c, &bf), "asym bf");
        const bool ok = std::fabs(dc.value / bf.value - 1.0) < 1e-12;
        check("critical ratio: leading orders tie at y_c", ok,
              "ratio - 1 = " + fmt(dc.value / bf.value - 1.0));
    }

    // design rules restore the reference mass
    {
        bool ok = true;
        for (double omega_frac : {0.5, 0.25, 0.125}) {
            const int d = 3;
            const double eta = 2.0;
            const double c_exp = 1.5;
            double omega_full = 0.0;
            check_capi(cm_full_solid_angle(d, &omega_full), "solid angle");
            const double omega = omega_full * omega_frac;
            double mult = 0.0;
            check_capi(cm_power_for_boundary(omega, d, c_exp, 1.0, &mult), "power rule");
            cm_mass_result restored, reference;
            check_capi(cm_mass_leading_siso(omega, d, eta, 1.0 / mult, &restored), "mass");
            check_capi(cm_mass_leading_siso(omega_full, d, eta, 1.0, &reference), "mass");
            if (std::fabs(restored.value / reference.value - 1.0) > 1e-12) ok = false;

            double n_req = 0.0;
            check_capi(cm_antennas_for_boundary(omega, d, c_exp, CM_SCHEME_BEAMFORMING, 0.4,
                                                &n_req), "antenna rule");
            cm_mass_result via_bf;
            check_capi(cm_mass_bf_asymptotic(omega, d, eta, 1.0, n_req, 0.4, &via_bf), "mass");
            const double want = omega_full * std::tgamma(1.0 + c_exp) / 3.0;
            if (std::fabs(via_bf.value / want - 1.0) > 1e-12) ok = false;
        }
        check("design rules restore the homogeneous reference mass", ok, "");
    }

    std::cout << (check.failures == 0 ? "VALIDATE PASS" : "VALIDATE FAIL") << " ("
              << check.failures << " failing checks)\n";
    return check.failures == 0 ? kExitOk : kExitValidationFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"connectivity scaling laws for bounded wireless networks"};
    app.require_subcommand(1);
    app.fallthrough(true);

    std::string config_path;
    app.add_option("--config", config_path, "key = value config file with [sections]");

    // every override maps onto a config key; command line wins
    std::map<std::string, std::string> overrides;
    auto add_override = [&](const char* flag, const char* key, const char* help) {
        app.add_option_function<std::string>(
               flag, [&overrides, key](const std::string& v) { overrides[key] = v; }, help)
            ->take_last();
    };
    add_override("--seed", "run.seed", "root seed for every stochastic step");
    add_override("--out", "run.out", "output path (CSV or report)");
    add_override("--samples", "run.samples", "spatial Monte Carlo samples");
    add_override("--trials", "run.trials", "full-connectivity trials");
    add_override("--cdf-samples", "run.cdf_samples", "lambda_max tabulation samples");
    add_override("--outer-samples", "run.outer_samples", "outer samples for analytic pfc");
    add_override("--inner-samples", "run.inner_samples", "inner samples for analytic pfc");
    add_override("--quad-tol", "run.quad_tol", "radial quadrature relative tolerance");
    add_override("--eta", "channel.eta", "path loss exponent (>= 2)");
    add_override("--epsilon", "channel.epsilon", "near-field regularizer");
    add_override("--beta", "channel.beta", "inverse-power SNR scale");
    add_override("--pt", "channel.pt", "transmit power (sets beta = 1/pt)");
    add_override("--threshold", "channel.threshold", "SNR outage threshold");
    add_override("--rate", "channel.rate", "target rate for the rate metric");
    add_override("--metric", "channel.metric", "snr or rate");
    add_override("--m", "scheme.m", "transmit antennas");
    add_override("--n", "scheme.n", "receive antennas");
    add_override("--y", "scheme.y", "antenna ratio m/n for ratio panels");
    add_override("--scheme", "scheme.kind", "siso, dc or bf");
    add_override("--n-min", "run.n_min", "mass-curve: smallest n");
    add_override("--n-max", "run.n_max", "mass-curve: largest n");
    add_override("--eta-list", "run.eta_list", "mass-curve: eta values, e.g. [2,3,4,5]");
    add_override("--n-list", "run.n_list", "pfc-sweep: node counts");
    add_override("--r-max", "run.r_max", "conn-curve: largest radius");
    add_override("--points", "run.points", "conn-curve: sample count");
    add_override("--feature", "run.feature",
                 "design: interior, face, edge, corner or ngon:K");
    add_override("--pt0", "run.pt0", "design: homogeneous reference power");

    // domain override uses the compact box:…/ball:…/wedge:… syntax
    std::string domain_spec;
    app.add_option("--domain", domain_spec,
                   "domain spec: box:s1,s2[,s3] | ball:R:dim | wedge:omega:dim");

    CLI::App* sub_conn = app.add_subcommand("conn-curve", "dump (r, H(r)) samples as CSV");
    CLI::App* sub_mass = app.add_subcommand("mass-curve",
                                            "connectivity-mass sweep over n and eta as CSV");
    CLI::App* sub_pfc = app.add_subcommand("pfc-sweep",
                                           "analytic vs simulated full connectivity as CSV");
    CLI::App* sub_design = app.add_subcommand("design", "boundary mitigation design report");
    CLI::App* sub_validate = app.add_subcommand("validate", "run cross-module property checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        cli::Config cfg;
        if (!config_path.empty()) cfg.load_file(config_path);
        for (const auto& [key, value] : overrides) cfg.set(key, value);
        if (!domain_spec.empty()) {
            // translate the compact syntax into domain.* keys
            const auto colon = domain_spec.find(':');
            const std::string kind = domain_spec.substr(0, colon);
            const std::string rest =
                colon == std::string::npos ? "" : domain_spec.substr(colon + 1);
            cfg.set("domain.kind", kind);
            if (kind == "box") {
                cfg.set("domain.sides", rest);
            } else {
                const auto second = rest.find(':');
                if (second == std::string::npos) {
                    throw cli::ConfigError(0, "--domain " + kind + " needs value:dim");
                }
                cfg.set(kind == "ball" ? "domain.radius" : "domain.omega",
                        rest.substr(0, second));
                cfg.set("domain.dim", rest.substr(second + 1));
            }
        }

        Run run = resolve(cfg);
        if (sub_conn->parsed()) return cmd_conn_curve(run);
        if (sub_mass->parsed()) return cmd_mass_curve(run);
        if (sub_pfc->parsed()) return cmd_pfc_sweep(run);
        if (sub_design->parsed()) return cmd_design(run);
        if (sub_validate->parsed()) return cmd_validate(run);
        std::cerr << "no subcommand selected\n";
        return kExitUsage;
    } catch (const cli::ConfigError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
