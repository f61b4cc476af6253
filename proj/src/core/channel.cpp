#include "core/channel.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <mutex>
#include <tuple>

#include <Eigen/Dense>

#include "core/errors.hpp"
#include "core/parallel.hpp"
#include "core/rng.hpp"
#include "core/specfun.hpp"

namespace connmass {

ChannelParams::ChannelParams(double eta_, double epsilon_, double beta_, double threshold_,
                             int dim_)
    : eta(eta_), epsilon(epsilon_), beta(beta_), threshold(threshold_), dim(dim_) {
    require(eta >= 2.0, ErrorCode::InvalidArgument, "ChannelParams: eta must be >= 2");
    require(epsilon >= 0.0, ErrorCode::InvalidArgument, "ChannelParams: epsilon must be >= 0");
    require(beta > 0.0, ErrorCode::InvalidArgument, "ChannelParams: beta must be > 0");
    require(threshold > 0.0, ErrorCode::InvalidArgument, "ChannelParams: threshold must be > 0");
    require(dim >= 1 && dim <= 3, ErrorCode::InvalidArgument, "ChannelParams: dim must be 1..3");
}

AntennaScheme AntennaScheme::diversity_coding(int m, int n) {
    require(m >= 1 && n >= 1, ErrorCode::InvalidArgument,
            "diversity_coding: antenna counts must be >= 1");
    return {SchemeKind::DiversityCoding, m, n};
}

AntennaScheme AntennaScheme::beamforming(int m, int n) {
    require(m >= 1 && n >= 1, ErrorCode::InvalidArgument,
            "beamforming: antenna counts must be >= 1");
    return {SchemeKind::Beamforming, m, n};
}

double path_gain(double r, const ChannelParams& params) {
    require(r >= 0.0, ErrorCode::InvalidArgument, "path_gain: r must be >= 0");
    return 1.0 / (params.epsilon + std::pow(r, params.eta));
}

double gain_cdf_stbc(double x, int m, int n) {
    require(m >= 1 && n >= 1, ErrorCode::InvalidArgument,
            "gain_cdf_stbc: antenna counts must be >= 1");
    require(x >= 0.0, ErrorCode::InvalidArgument, "gain_cdf_stbc: x must be >= 0");
    return reg_lower_gamma(static_cast<double>(m) * n, x);
}

namespace {

using ComplexMat = Eigen::MatrixXcd;

// Chunk size shrinks with the Gram dimension so big matrices still spread
// across workers; a pure function of (m, n) to keep streams reproducible.
long lambda_chunk_size(int m, int n) {
    const long k = std::min(m, n);
    return std::clamp<long>(262144 / (k * k), 1, 1024);
}

double one_lambda_max(Rng& rng, int m, int n, ComplexMat& h, ComplexMat& gram,
                      Eigen::SelfAdjointEigenSolver<ComplexMat>& solver) {
    constexpr double kInvSqrt2 = 0.70710678118654752440;
    for (int col = 0; col < m; ++col) {
        for (int row = 0; row < n; ++row) {
            const double re = rng.normal();
            const double im = rng.normal();
            h(row, col) = std::complex<double>(re * kInvSqrt2, im * kInvSqrt2);
        }
    }
    const int k = std::min(m, n);
    if (k == 1) {
        return h.squaredNorm();
    }
    if (m <= n) {
        gram.noalias() = h.adjoint() * h;
    } else {
        gram.noalias() = h * h.adjoint();
    }
    solver.compute(gram, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(k - 1);
}

} // namespace

std::vector<double> sample_lambda_max(int m, int n, uint64_t seed, long count) {
    require(m >= 1 && n >= 1, ErrorCode::InvalidArgument,
            "sample_lambda_max: antenna counts must be >= 1");
    require(count >= 1, ErrorCode::InvalidArgument, "sample_lambda_max: count must be >= 1");

    std::vector<double> out(static_cast<std::size_t>(count));
    const long chunk = lambda_chunk_size(m, n);
    const std::size_t chunks = static_cast<std::size_t>((count + chunk - 1) / chunk);
    parallel_chunks(chunks, [&](std::size_t c) {
        Rng rng(derive_seed(seed, c));
        const int k = std::min(m, n);
        ComplexMat h(n, m);
        ComplexMat gram(k, k);
        Eigen::SelfAdjointEigenSolver<ComplexMat> solver;
        const long lo = static_cast<long>(c) * chunk;
        const long hi = std::min(count, lo + chunk);
        for (long i = lo; i < hi; ++i) {
            out[static_cast<std::size_t>(i)] = one_lambda_max(rng, m, n, h, gram, solver);
        }
    });
    return out;
}

EmpiricalCdf::EmpiricalCdf(int m, int n, long sample_count, uint64_t seed)
    : m_(m), n_(n), samples_(sample_count), seed_(seed) {
    require(sample_count >= 10000, ErrorCode::InvalidArgument,
            "EmpiricalCdf: at least 1e4 samples required");
    std::vector<double> s = sample_lambda_max(m, n, seed, sample_count);
    std::sort(s.begin(), s.end());

    grid_.reserve(kGridPoints);
    values_.reserve(kGridPoints);
    const double count = static_cast<double>(sample_count);
    for (int k = 1; k <= kGridPoints; ++k) {
        const double p = kTopQuantile * static_cast<double>(k) / kGridPoints;
        std::size_t idx = static_cast<std::size_t>(std::ceil(p * count)) - 1;
        idx = std::min(idx, s.size() - 1);
        const double x = s[idx];
        if (!grid_.empty() && x <= grid_.back()) {
            values_.back() = p;  // tie: keep the highest quantile at this x
            continue;
        }
        grid_.push_back(x);
        values_.push_back(p);
    }
}

double EmpiricalCdf::eval(double x) const {
    if (x < grid_.front()) return 0.0;
    if (x >= grid_.back()) return 1.0;
    const auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
    const std::size_t j = static_cast<std::size_t>(it - grid_.begin());
    const double x0 = grid_[j - 1], x1 = grid_[j];
    const double f0 = values_[j - 1], f1 = values_[j];
    return f0 + (f1 - f0) * (x - x0) / (x1 - x0);
}

double EmpiricalCdf::moment_shifted_pow(double shift, double p) const {
    // g(x) = ((x - shift)_+)^p integrated against the tabulated law:
    // point mass values_[0] at grid_[0], linear segments in between, and the
    // untabulated top tail (1 - values_.back()) placed at grid_.back().
    auto g = [&](double x) {
        const double u = x - shift;
        return u > 0.0 ? std::pow(u, p) : 0.0;
    };
    // Exact segment average of g against the uniform density on [x0, x1].
    auto seg_mean = [&](double x0, double x1) {
        const double u0 = std::max(0.0, x0 - shift);
        const double u1 = std::max(0.0, x1 - shift);
        if (u1 <= 0.0) return 0.0;
        const double integral = (std::pow(u1, p + 1.0) - std::pow(u0, p + 1.0)) / (p + 1.0);
        return integral / (x1 - x0);
    };
    double acc = values_[0] * g(grid_[0]);
    for (std::size_t j = 1; j < grid_.size(); ++j) {
        const double df = values_[j] - values_[j - 1];
        acc += df * seg_mean(grid_[j - 1], grid_[j]);
    }
    acc += (1.0 - values_.back()) * g(grid_.back());
    return acc;
}

void EmpiricalCdf::write_csv(std::ostream& os) const {
    char buf[64];
    os << "x,cdf\n";
    for (std::size_t i = 0; i < grid_.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", grid_[i], values_[i]);
        os << buf;
    }
}

namespace {
std::mutex g_cdf_mutex;
std::map<std::tuple<int, int, long, uint64_t>, std::shared_ptr<const EmpiricalCdf>> g_cdf_cache;
} // namespace

std::shared_ptr<const EmpiricalCdf> gain_cdf_mrc(int m, int n, long sample_count, uint64_t seed) {
    const auto key = std::make_tuple(m, n, sample_count, seed);
    {
        std::lock_guard<std::mutex> lock(g_cdf_mutex);
        auto it = g_cdf_cache.find(key);
        if (it != g_cdf_cache.end()) return it->second;
    }
    auto cdf = std::make_shared<const EmpiricalCdf>(m, n, sample_count, seed);
    std::lock_guard<std::mutex> lock(g_cdf_mutex);
    auto [it, inserted] = g_cdf_cache.emplace(key, std::move(cdf));
    return it->second;
}

} // namespace connmass
