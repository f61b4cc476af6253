#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <vector>

namespace connmass {

// Path-loss / fading / threshold parameters. beta scales inversely with
// transmit power and fixes the length scale; C = dim/eta is the connectivity
// exponent that governs every scaling law in the library.
struct ChannelParams {
    double eta;        // path loss exponent, >= 2
    double epsilon;    // near-field regularizer (length^eta), >= 0
    double beta;       // inverse-power SNR scale, > 0
    double threshold;  // SNR threshold, > 0
    int dim;           // domain dimension, 1..3

    ChannelParams(double eta_, double epsilon_, double beta_, double threshold_, int dim_);

    double connectivity_exponent() const noexcept { return static_cast<double>(dim) / eta; }
    double threshold_beta() const noexcept { return threshold * beta; }

    ChannelParams with_threshold(double new_threshold) const {
        return ChannelParams(eta, epsilon, beta, new_threshold, dim);
    }
};

enum class SchemeKind { Siso, DiversityCoding, Beamforming };

// Antenna configuration. SISO behaves exactly like DiversityCoding(1,1) for
// every distribution query; the zeta() rate factor is 2 only for STBC with
// more than two transmit antennas (half-rate orthogonal designs).
struct AntennaScheme {
    SchemeKind kind = SchemeKind::Siso;
    int m = 1;  // transmit antennas
    int n = 1;  // receive antennas

    static AntennaScheme siso() { return {SchemeKind::Siso, 1, 1}; }
    static AntennaScheme diversity_coding(int m, int n);
    static AntennaScheme beamforming(int m, int n);

    int zeta() const noexcept {
        return (kind == SchemeKind::DiversityCoding && m > 2) ? 2 : 1;
    }
    double antenna_ratio() const noexcept {
        return static_cast<double>(m) / static_cast<double>(n);
    }
};

// Attenuation g(r) = 1/(epsilon + r^eta).
double path_gain(double r, const ChannelParams& params);

// CDF of the squared Frobenius norm of the n x m complex Gaussian channel
// matrix (entries of unit total variance): regularized gamma P(mn, x).
double gain_cdf_stbc(double x, int m, int n);

// Draws of the largest eigenvalue of H^dagger H, H an n x m matrix of iid
// circularly symmetric complex Gaussians with unit total variance per entry.
// Deterministic for a given seed regardless of thread count.
std::vector<double> sample_lambda_max(int m, int n, uint64_t seed, long count);

// Monte Carlo tabulation of the lambda_max distribution on a quantile grid
// covering [0, q_0.9999]; linear interpolation between grid points, clamped
// outside.
class EmpiricalCdf {
public:
    EmpiricalCdf(int m, int n, long sample_count, uint64_t seed);

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    long sample_count() const noexcept { return samples_; }
    uint64_t seed() const noexcept { return seed_; }
    const std::vector<double>& grid() const noexcept { return grid_; }
    const std::vector<double>& values() const noexcept { return values_; }

    double eval(double x) const;

    // E[((X - shift)_+)^p] under the tabulated distribution; exact integral
    // of the piecewise-linear CDF. Powers the mass standard-error estimate.
    double moment_shifted_pow(double shift, double p) const;

    void write_csv(std::ostream& os) const;

    static constexpr int kGridPoints = 2048;
    static constexpr double kTopQuantile = 0.9999;

private:
    int m_, n_;
    long samples_;
    uint64_t seed_;
    std::vector<double> grid_;
    std::vector<double> values_;
};

// Process-wide cache keyed by (m, n, sample_count, seed); concurrent readers,
// serialized insertion.
std::shared_ptr<const EmpiricalCdf> gain_cdf_mrc(int m, int n, long sample_count, uint64_t seed);

} // namespace connmass
