#include "core/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "core/errors.hpp"

namespace connmass {
namespace {

// Kronrod abscissae/weights for the 15-point rule, Gauss weights for the
// embedded 7-point rule (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double res_g = fc * kWg[3];
    double res_k = fc * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        res_k += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) res_g += kWg[j / 2] * (f1 + f2);
    }
    res_k *= h;
    res_g *= h;
    // |K - G| estimates the embedded Gauss rule's error, which upper-bounds
    // the Kronrod error on anything smooth; safe if pessimistic.
    return {a, b, res_k, std::fabs(res_k - res_g)};
}

} // namespace

QuadResult integrate_adaptive_breaks(const std::function<double(double)>& f,
                                     double a, double b,
                                     std::vector<double> breakpoints,
                                     double rel_tol, double abs_tol,
                                     int max_segments) {
    require(b >= a, ErrorCode::InvalidArgument, "integrate_adaptive: b < a");
    QuadResult out;
    if (a == b) return out;

    std::vector<double> edges;
    edges.push_back(a);
    std::sort(breakpoints.begin(), breakpoints.end());
    for (double x : breakpoints) {
        if (x > edges.back() && x < b) edges.push_back(x);
    }
    edges.push_back(b);

    std::priority_queue<Segment> heap;
    double total = 0.0;
    double total_err = 0.0;
    for (std::size_t i = 1; i < edges.size(); ++i) {
        Segment s = gk15(f, edges[i - 1], edges[i]);
        out.evaluations += 15;
        total += s.value;
        total_err += s.error;
        heap.push(s);
    }

    int segments = static_cast<int>(edges.size()) - 1;
    if (max_segments < segments + 8) max_segments = segments + 8;
    while (total_err > std::max(rel_tol * std::fabs(total), abs_tol)) {
        if (segments >= max_segments) {
            throw NumericalError("adaptive quadrature did not converge", total, total_err);
        }
        Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval at floating-point resolution; accept what we have
            heap.push({worst.a, worst.b, worst.value, 0.0});
            total_err -= worst.error;
            continue;
        }
        Segment left = gk15(f, worst.a, mid);
        Segment right = gk15(f, mid, worst.b);
        out.evaluations += 30;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++segments;
    }
    out.value = total;
    out.error = total_err;
    return out;
}

QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double a, double b,
                              double rel_tol, double abs_tol,
                              int max_segments) {
    // sixteen uniform starter segments
    std::vector<double> breaks;
    for (int i = 1; i < 16; ++i) breaks.push_back(a + (b - a) * i / 16.0);
    return integrate_adaptive_breaks(f, a, b, std::move(breaks), rel_tol, abs_tol, max_segments);
}

} // namespace connmass
