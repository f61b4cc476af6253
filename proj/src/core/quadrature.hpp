#pragma once

#include <functional>
#include <vector>

namespace connmass {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;     // absolute error estimate
    int evaluations = 0;
};

// Globally adaptive Gauss-Kronrod 15(7) on [a, b]. Starts from a mild
// uniform segmentation (so off-center features register an error signal),
// then subdivides the segment with the largest error estimate until the
// summed estimate meets max(rel_tol * |integral|, abs_tol). Throws
// NumericalError (carrying the partial value) if the budget of subdivisions
// is exhausted first.
QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double a, double b,
                              double rel_tol = 1e-10,
                              double abs_tol = 0.0,
                              int max_segments = 4000);

// Variant seeded with interior breakpoints (sorted or not, clipped to
// (a, b)); ideal for piecewise integrands whose kink locations are known.
QuadResult integrate_adaptive_breaks(const std::function<double(double)>& f,
                                     double a, double b,
                                     std::vector<double> breakpoints,
                                     double rel_tol = 1e-10,
                                     double abs_tol = 0.0,
                                     int max_segments = 4000);

} // namespace connmass
