// extern-C surface of the shared library: opaque handles around the core
// types, exceptions mapped onto cm_status codes, message text parked in a
// thread-local slot for cm_last_error().

#include "connmass.h"

#include <cstring>
#include <exception>
#include <fstream>
#include <memory>
#include <new>
#include <string>

#include "core/channel.hpp"
#include "core/connectivity.hpp"
#include "core/design.hpp"
#include "core/errors.hpp"
#include "core/geometry.hpp"
#include "core/mass.hpp"
#include "core/network.hpp"
#include "core/specfun.hpp"

using namespace connmass;

struct cm_domain {
    Domain impl;
};
struct cm_params {
    ChannelParams impl;
};
struct cm_conn {
    ConnectionFunction impl;
};
struct cm_network {
    NetworkRealization impl;
};

namespace {

thread_local std::string t_last_error;

cm_status set_error(cm_status code, const char* what) {
    t_last_error = what != nullptr ? what : "";
    return code;
}

cm_status map_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return CM_ERR_INVALID;
        case ErrorCode::OutOfDomain: return CM_ERR_OUT_OF_DOMAIN;
        case ErrorCode::UnsupportedDomain: return CM_ERR_UNSUPPORTED_DOMAIN;
        case ErrorCode::NumericalFailure: return CM_ERR_NUMERIC;
        case ErrorCode::IoFailure: return CM_ERR_IO;
    }
    return CM_ERR_INTERNAL;
}

// Runs fn(), translating exceptions into status codes.
template <class Fn>
cm_status guarded(Fn&& fn) {
    try {
        fn();
        t_last_error.clear();
        return CM_OK;
    } catch (const Error& e) {
        return set_error(map_code(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(CM_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return set_error(CM_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error(CM_ERR_INTERNAL, "unknown failure");
    }
}

cm_status require_c(bool cond, const char* msg) {
    return cond ? CM_OK : set_error(CM_ERR_INVALID, msg);
}

int method_code(MassMethod m) {
    switch (m) {
        case MassMethod::SpatialMc: return CM_MASS_SPATIAL_MC;
        case MassMethod::RadialQuadrature: return CM_MASS_RADIAL_QUAD;
        case MassMethod::ClosedFormDc: return CM_MASS_CLOSED_FORM_DC;
        case MassMethod::AsymptoticDc: return CM_MASS_ASYMPTOTIC_DC;
        case MassMethod::AsymptoticBf: return CM_MASS_ASYMPTOTIC_BF;
        case MassMethod::LeadingPower: return CM_MASS_LEADING_POWER;
    }
    return CM_MASS_LEADING_POWER;
}

cm_mass_result to_c(const MassResult& m) {
    return {m.value, method_code(m.method), m.error_estimate};
}

cm_pfc_estimate to_c(const PfcEstimate& p) {
    return {p.value, p.raw_value,
            p.method == PfcMethod::Analytic ? CM_PFC_ANALYTIC : CM_PFC_SIMULATION, p.trials,
            p.std_error};
}

int scheme_code(SchemeKind k) {
    switch (k) {
        case SchemeKind::Siso: return CM_SCHEME_SISO;
        case SchemeKind::DiversityCoding: return CM_SCHEME_DIVERSITY;
        case SchemeKind::Beamforming: return CM_SCHEME_BEAMFORMING;
    }
    return CM_SCHEME_SISO;
}

Point to_point(const double* coords, int dim) {
    Point p;
    for (int i = 0; i < dim; ++i) p[i] = coords[i];
    return p;
}

} // namespace

extern "C" {

const char* cm_version(void) { return CM_VERSION_STRING; }

const char* cm_last_error(void) { return t_last_error.c_str(); }

/* ---- geometry ---- */

cm_status cm_domain_create_box(const double* side_lengths, int dim, cm_domain** out) {
    if (cm_status s = require_c(side_lengths && out && dim >= 1 && dim <= 3,
                                "cm_domain_create_box: bad arguments"))
        return s;
    return guarded([&] {
        std::vector<double> sides(side_lengths, side_lengths + dim);
        *out = new cm_domain{Domain::hyperrectangle(sides)};
    });
}

cm_status cm_domain_create_ball(double radius, int dim, cm_domain** out) {
    if (cm_status s = require_c(out != nullptr, "cm_domain_create_ball: bad arguments")) return s;
    return guarded([&] { *out = new cm_domain{Domain::ball(radius, dim)}; });
}

cm_status cm_domain_create_wedge(int dim, double omega, cm_domain** out) {
    if (cm_status s = require_c(out != nullptr, "cm_domain_create_wedge: bad arguments")) return s;
    return guarded([&] { *out = new cm_domain{Domain::wedge(dim, omega)}; });
}

void cm_domain_free(cm_domain* domain) { delete domain; }

cm_status cm_domain_dim(const cm_domain* domain, int* out) {
    if (cm_status s = require_c(domain && out, "cm_domain_dim: bad arguments")) return s;
    *out = domain->impl.dim();
    return CM_OK;
}

cm_status cm_domain_volume(const cm_domain* domain, double* out) {
    if (cm_status s = require_c(domain && out, "cm_domain_volume: bad arguments")) return s;
    return guarded([&] { *out = domain->impl.volume(); });
}

cm_status cm_full_solid_angle(int dim, double* out) {
    if (cm_status s = require_c(out != nullptr, "cm_full_solid_angle: bad arguments")) return s;
    return guarded([&] { *out = full_solid_angle(dim); });
}

cm_status cm_corner_solid_angle_ngon(int n_sides, double* out) {
    if (cm_status s = require_c(out != nullptr, "cm_corner_solid_angle_ngon: bad arguments"))
        return s;
    return guarded([&] { *out = corner_solid_angle_ngon(n_sides); });
}

cm_status cm_boundary_solid_angle(const cm_domain* domain, const double* point, int dim,
                                  double* out) {
    if (cm_status s = require_c(domain && point && out, "cm_boundary_solid_angle: bad arguments"))
        return s;
    if (cm_status s = require_c(dim == domain->impl.dim(),
                                "cm_boundary_solid_angle: point dimension mismatch"))
        return s;
    return guarded([&] { *out = domain->impl.boundary_solid_angle(to_point(point, dim)); });
}

cm_status cm_sample_uniform(const cm_domain* domain, long long count, uint64_t seed,
                            double* out_coords) {
    if (cm_status s = require_c(domain && (out_coords || count == 0),
                                "cm_sample_uniform: bad arguments"))
        return s;
    return guarded([&] {
        auto pts = domain->impl.sample_uniform(static_cast<long>(count), seed);
        const int dim = domain->impl.dim();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (int k = 0; k < dim; ++k) out_coords[i * dim + k] = pts[i][k];
        }
    });
}

/* ---- channel ---- */

cm_status cm_params_create(double eta, double epsilon, double beta, double threshold, int dim,
                           cm_params** out) {
    if (cm_status s = require_c(out != nullptr, "cm_params_create: bad arguments")) return s;
    return guarded([&] { *out = new cm_params{ChannelParams(eta, epsilon, beta, threshold, dim)}; });
}

void cm_params_free(cm_params* params) { delete params; }

cm_status cm_connectivity_exponent(const cm_params* params, double* out) {
    if (cm_status s = require_c(params && out, "cm_connectivity_exponent: bad arguments"))
        return s;
    *out = params->impl.connectivity_exponent();
    return CM_OK;
}

cm_status cm_path_gain(double r, const cm_params* params, double* out) {
    if (cm_status s = require_c(params && out, "cm_path_gain: bad arguments")) return s;
    return guarded([&] { *out = path_gain(r, params->impl); });
}

cm_status cm_reg_lower_gamma(double a, double x, double* out) {
    if (cm_status s = require_c(out != nullptr, "cm_reg_lower_gamma: bad arguments")) return s;
    return guarded([&] { *out = reg_lower_gamma(a, x); });
}

cm_status cm_gain_cdf_stbc(double x, int m, int n, double* out) {
    if (cm_status s = require_c(out != nullptr, "cm_gain_cdf_stbc: bad arguments")) return s;
    return guarded([&] { *out = gain_cdf_stbc(x, m, n); });
}

cm_status cm_sample_lambda_max(int m, int n, uint64_t seed, long long count,
                               double* out_values) {
    if (cm_status s = require_c(out_values != nullptr, "cm_sample_lambda_max: bad arguments"))
        return s;
    return guarded([&] {
        auto values = sample_lambda_max(m, n, seed, static_cast<long>(count));
        std::memcpy(out_values, values.data(), values.size() * sizeof(double));
    });
}

cm_status cm_mrc_cdf_write_csv(int m, int n, long long samples, uint64_t seed,
                               const char* path) {
    if (cm_status s = require_c(path != nullptr, "cm_mrc_cdf_write_csv: bad arguments")) return s;
    return guarded([&] {
        auto cdf = gain_cdf_mrc(m, n, static_cast<long>(samples), seed);
        std::ofstream os(path);
        require(os.good(), ErrorCode::IoFailure,
                std::string("cm_mrc_cdf_write_csv: cannot open ") + path);
        cdf->write_csv(os);
        os.flush();
        require(os.good(), ErrorCode::IoFailure,
                std::string("cm_mrc_cdf_write_csv: write failed for ") + path);
    });
}

/* ---- pairwise connectivity ---- */

cm_status cm_conn_create(cm_scheme_kind kind, int m, int n, const cm_params* params,
                         cm_metric metric, double rate, long long mrc_cdf_samples,
                         uint64_t mrc_seed, cm_conn** out) {
    if (cm_status s = require_c(params && out, "cm_conn_create: bad arguments")) return s;
    return guarded([&] {
        AntennaScheme scheme;
        switch (kind) {
            case CM_SCHEME_SISO: scheme = AntennaScheme::siso(); break;
            case CM_SCHEME_DIVERSITY: scheme = AntennaScheme::diversity_coding(m, n); break;
            case CM_SCHEME_BEAMFORMING: scheme = AntennaScheme::beamforming(m, n); break;
            default:
                throw Error(ErrorCode::InvalidArgument, "cm_conn_create: unknown scheme kind");
        }
        std::shared_ptr<const EmpiricalCdf> cdf;
        if (kind == CM_SCHEME_BEAMFORMING) {
            cdf = gain_cdf_mrc(m, n, static_cast<long>(mrc_cdf_samples), mrc_seed);
        }
        const Metric mt = metric == CM_METRIC_RATE ? Metric::RateOutage : Metric::SnrOutage;
        *out = new cm_conn{ConnectionFunction(scheme, params->impl, mt, rate, std::move(cdf))};
    });
}

void cm_conn_free(cm_conn* conn) { delete conn; }

cm_status cm_conn_eval(const cm_conn* conn, double r, double* out) {
    if (cm_status s = require_c(conn && out, "cm_conn_eval: bad arguments")) return s;
    return guarded([&] { *out = conn->impl(r); });
}

cm_status cm_conn_effective_threshold(const cm_conn* conn, double* out) {
    if (cm_status s = require_c(conn && out, "cm_conn_effective_threshold: bad arguments"))
        return s;
    *out = conn->impl.effective_threshold();
    return CM_OK;
}

cm_status cm_conn_step_eval(double r, int m, int n, const cm_params* params, double* out) {
    if (cm_status s = require_c(params && out, "cm_conn_step_eval: bad arguments")) return s;
    return guarded([&] { *out = pair_conn_mrc_step(r, m, n, params->impl); });
}

/* ---- connectivity mass ---- */

cm_status cm_mass_spatial(const cm_conn* conn, const cm_domain* domain, const double* origin,
                          int dim, long long samples, uint64_t seed, cm_mass_result* out) {
    if (cm_status s = require_c(conn && domain && origin && out,
                                "cm_mass_spatial: bad arguments"))
        return s;
    if (cm_status s = require_c(dim == domain->impl.dim(),
                                "cm_mass_spatial: origin dimension mismatch"))
        return s;
    return guarded([&] {
        const auto& h = conn->impl;
        *out = to_c(mass_spatial([&h](double r) { return h(r); }, domain->impl,
                                 to_point(origin, dim), static_cast<long>(samples), seed));
    });
}

cm_status cm_mass_radial(const cm_conn* conn, double omega, int d, double rel_tol,
                         cm_mass_result* out) {
    if (cm_status s = require_c(conn && out, "cm_mass_radial: bad arguments")) return s;
    try {
        *out = to_c(mass_radial(conn->impl, omega, d, rel_tol));
        t_last_error.clear();
        return CM_OK;
    } catch (const NumericalError& e) {
        out->value = e.partial_value();
        out->method = CM_MASS_RADIAL_QUAD;
        out->error_estimate = e.error_estimate();
        return set_error(CM_ERR_NUMERIC, e.what());
    } catch (const Error& e) {
        return set_error(map_code(e.code()), e.what());
    } catch (const std::exception& e) {
        return set_error(CM_ERR_INTERNAL, e.what());
    }
}

cm_status cm_mass_leading_siso(double omega, int d, double eta, double threshold_beta,
                               cm_mass_result* out) {
    if (cm_status s = require_c(out != nullptr, "cm_mass_leading_siso: bad arguments")) return s;
    return guarded([&] { *out = to_c(mass_leading_siso(omega, d, eta, threshold_beta)); });
}

cm_status cm_mass_dc_closed(double omega, int d, double eta, double threshold_beta, int m,
                            int n, cm_mass_result* out) {
    if (cm_status s = require_c(out != nullptr, "cm_mass_dc_closed: bad arguments")) return s;
    return guarded([&] { *out = to_c(mass_dc_closed(omega, d, eta, threshold_beta, m, n)); });
}

cm_status cm_mass_dc_asymptotic(double omega, int d, double eta, double threshold_beta, int m,
                                double n, cm_mass_result* out) {
    if (cm_status s = require_c(out != nullptr, "cm_mass_dc_asymptotic: bad arguments")) return s;
    return guarded([&] { *out = to_c(mass_dc_asymptotic(omega, d, eta, threshold_beta, m, n)); });
}

cm_status cm_mass_bf_asymptotic(double omega, int d, double eta, double threshold_beta,
                                double n, double y, cm_mass_result* out) {
    if (cm_status s = require_c(out != nullptr, "cm_mass_bf_asymptotic: bad arguments")) return s;
    return guarded([&] { *out = to_c(mass_bf_asymptotic(omega, d, eta, threshold_beta, n, y)); });
}

cm_status cm_mass_bf_error_term(int n, int m, const cm_params* params, double omega, int d,
                                long long cdf_samples, uint64_t seed, cm_mass_result* out) {
    if (cm_status s = require_c(params && out, "cm_mass_bf_error_term: bad arguments")) return s;
    return guarded([&] {
        *out = to_c(mass_bf_error_term(n, m, params->impl, omega, d,
                                       static_cast<long>(cdf_samples), seed));
    });
}

/* ---- global connectivity ---- */

cm_status cm_pfc_analytic(double rho, const cm_domain* domain, const cm_conn* conn,
                          long long outer_samples, long long inner_samples, uint64_t seed,
                          cm_pfc_estimate* out) {
    if (cm_status s = require_c(domain && conn && out, "cm_pfc_analytic: bad arguments"))
        return s;
    return guarded([&] {
        const auto& h = conn->impl;
        *out = to_c(pfc_analytic(rho, domain->impl, [&h](double r) { return h(r); },
                                 static_cast<long>(outer_samples),
                                 static_cast<long>(inner_samples), seed));
    });
}

cm_status cm_simulate_pfc(int n_nodes, const cm_domain* domain, const cm_conn* conn,
                          long long trials, uint64_t seed, cm_pfc_estimate* out) {
    if (cm_status s = require_c(domain && conn && out, "cm_simulate_pfc: bad arguments"))
        return s;
    return guarded([&] {
        const auto& h = conn->impl;
        *out = to_c(simulate_pfc(n_nodes, domain->impl, [&h](double r) { return h(r); },
                                 static_cast<long>(trials), seed));
    });
}

cm_status cm_isolation_probability(int n_nodes, const cm_domain* domain, const cm_conn* conn,
                                   long long trials, uint64_t seed, cm_pfc_estimate* out) {
    if (cm_status s = require_c(domain && conn && out, "cm_isolation_probability: bad arguments"))
        return s;
    return guarded([&] {
        const auto& h = conn->impl;
        *out = to_c(isolation_probability(n_nodes, domain->impl,
                                          [&h](double r) { return h(r); },
                                          static_cast<long>(trials), seed));
    });
}

cm_status cm_network_create(int n_nodes, const cm_domain* domain, const cm_conn* conn,
                            uint64_t seed, cm_network** out) {
    if (cm_status s = require_c(domain && conn && out, "cm_network_create: bad arguments"))
        return s;
    return guarded([&] {
        const auto& h = conn->impl;
        *out = new cm_network{simulate_realization(n_nodes, domain->impl,
                                                   [&h](double r) { return h(r); }, seed)};
    });
}

void cm_network_free(cm_network* net) { delete net; }

cm_status cm_network_node_count(const cm_network* net, int* out) {
    if (cm_status s = require_c(net && out, "cm_network_node_count: bad arguments")) return s;
    *out = net->impl.node_count();
    return CM_OK;
}

cm_status cm_network_edge_count(const cm_network* net, long long* out) {
    if (cm_status s = require_c(net && out, "cm_network_edge_count: bad arguments")) return s;
    *out = net->impl.edge_count();
    return CM_OK;
}

cm_status cm_network_degree(const cm_network* net, int node, int* out) {
    if (cm_status s = require_c(net && out, "cm_network_degree: bad arguments")) return s;
    if (cm_status s = require_c(node >= 0 && node < net->impl.node_count(),
                                "cm_network_degree: node index out of range"))
        return s;
    *out = net->impl.degree(node);
    return CM_OK;
}

cm_status cm_network_mean_degree(const cm_network* net, double* out) {
    if (cm_status s = require_c(net && out, "cm_network_mean_degree: bad arguments")) return s;
    *out = net->impl.mean_degree();
    return CM_OK;
}

cm_status cm_network_node_position(const cm_network* net, int node, double* coords, int dim) {
    if (cm_status s = require_c(net && coords, "cm_network_node_position: bad arguments"))
        return s;
    if (cm_status s = require_c(node >= 0 && node < net->impl.node_count() &&
                                    dim == net->impl.dim,
                                "cm_network_node_position: bad node or dimension"))
        return s;
    for (int k = 0; k < dim; ++k) {
        coords[k] = net->impl.points[static_cast<std::size_t>(node)][k];
    }
    return CM_OK;
}

cm_status cm_network_is_fully_connected(const cm_network* net, int* out) {
    if (cm_status s = require_c(net && out, "cm_network_is_fully_connected: bad arguments"))
        return s;
    return guarded([&] { *out = is_fully_connected(net->impl) ? 1 : 0; });
}

/* ---- design rules ---- */

cm_status cm_power_for_boundary(double omega, int d, double c_exp, double p_t0, double* out) {
    if (cm_status s = require_c(out != nullptr, "cm_power_for_boundary: bad arguments")) return s;
    return guarded([&] { *out = power_for_boundary(omega, d, c_exp, p_t0); });
}

cm_status cm_antennas_for_boundary(double omega, int d, double c_exp, cm_scheme_kind kind,
                                   double y_or_zeta, double* out) {
    if (cm_status s = require_c(out != nullptr, "cm_antennas_for_boundary: bad arguments"))
        return s;
    return guarded([&] {
        const SchemeKind k = kind == CM_SCHEME_BEAMFORMING ? SchemeKind::Beamforming
                                                           : SchemeKind::DiversityCoding;
        *out = antennas_for_boundary(omega, d, c_exp, k, y_or_zeta);
    });
}

double cm_critical_ratio(void) { return critical_ratio(); }

cm_status cm_compare_schemes(int m, int n, const cm_params* params, cm_metric metric,
                             double rate, long long cdf_samples, double quad_tol, uint64_t seed,
                             double y_leading, cm_compare_report* out) {
    if (cm_status s = require_c(params && out, "cm_compare_schemes: bad arguments")) return s;
    return guarded([&] {
        CompareBudget budget{static_cast<long>(cdf_samples), quad_tol, seed};
        const Metric mt = metric == CM_METRIC_RATE ? Metric::RateOutage : Metric::SnrOutage;
        CompareReport rep = compare_schemes(m, n, params->impl, mt, rate, budget, y_leading);
        out->dc_mass = to_c(rep.dc_mass);
        out->bf_mass = to_c(rep.bf_mass);
        out->preferred = scheme_code(rep.preferred);
        out->margin_sigmas = rep.margin_sigmas;
        out->leading_order_ratio = rep.leading_order_ratio;
        out->preferred_leading = scheme_code(rep.preferred_leading);
    });
}

} // extern "C"
