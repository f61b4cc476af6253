#pragma once

// Independent oracles used by the test suites. Everything here deliberately
// avoids the library's own code paths: plain composite Simpson instead of
// adaptive Gauss-Kronrod, Erlang sums instead of the series/continued
// fraction, power iteration and the 2x2 closed form instead of the packaged
// eigensolver, std::mt19937 + std::normal_distribution instead of the
// library generator.

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

// e^{-x} * sum_{k<n} x^k/k!  == Q(n, x) for integer n.
double erlang_tail(int n, double x);

// Composite Simpson with 2*halves+1 nodes.
double simpson(const std::function<double(double)>& f, double a, double b, int halves);

// Radial mass integral omega * int_0^rmax r^(d-1) H(r) dr in the raw r
// variable.
double radial_mass(const std::function<double(double)>& h, double omega, int d, double r_max,
                   int halves);

// Tensor-grid Simpson of H(|r - origin|) over an axis-aligned rectangle
// [0,sx] x [0,sy].
double square_mass(const std::function<double(double)>& h, double sx, double sy, double ox,
                   double oy, int halves);

// Largest eigenvalue of a Hermitian PSD matrix by power iteration.
double power_iteration_lambda_max(const std::vector<std::complex<double>>& a, int n,
                                  int iterations = 2000);

// Largest eigenvalue of a 2x2 Hermitian matrix in closed form.
double lambda_max_2x2(std::complex<double> a11, std::complex<double> a12,
                      std::complex<double> a22);

// Least-squares slope of y against x.
double regression_slope(const std::vector<double>& x, const std::vector<double>& y);

// Independent Monte Carlo of E[lambda_max] for the n x m complex Gaussian
// channel (unit total variance per entry), using its own generator and the
// power-iteration / closed-form eigenvalue routes. Returns {mean, std_error}.
struct MeanEstimate {
    double mean;
    double std_error;
};
MeanEstimate wishart_lambda_max_mean(int m, int n, int draws, uint32_t seed);

// Tracy-Widom corrected expectation of lambda_max for the complex Wishart
// ensemble: (sqrt n + sqrt m)^2 + E[TW2] * (sqrt n + sqrt m)(1/sqrt n +
// 1/sqrt m)^(1/3).
double wishart_lambda_max_tw_mean(int m, int n);

} // namespace oracle
