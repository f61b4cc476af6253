#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace connmass {

// Network domains live in d = 1, 2 or 3 dimensions. Points always carry
// three coordinates; entries beyond the owning domain's dimension are zero.
struct Point {
    std::array<double, 3> c{0.0, 0.0, 0.0};

    double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
};

double distance(const Point& a, const Point& b, int dim);

// Full solid angle in d dimensions, 2*pi^(d/2)/Gamma(d/2).
double full_solid_angle(int dim);

// Available angle at the corner of a regular n-gon in the plane, pi*(1-2/n).
double corner_solid_angle_ngon(int n_sides);

enum class DomainKind { Hyperrectangle, Ball, Wedge };

// Convex deployment region. The wedge kind models an infinite cone of
// opening solid angle omega; it owns radial-mass computations only and
// rejects volume/sampling queries.
class Domain {
public:
    static Domain hyperrectangle(const std::vector<double>& sides);
    static Domain ball(double radius, int dim);
    static Domain wedge(int dim, double omega);

    DomainKind kind() const noexcept { return kind_; }
    int dim() const noexcept { return dim_; }
    const std::array<double, 3>& sides() const noexcept { return sides_; }
    double radius() const noexcept { return radius_; }
    double wedge_omega() const noexcept { return wedge_omega_; }

    bool finite() const noexcept { return kind_ != DomainKind::Wedge; }
    double volume() const;
    double diameter() const;

    bool contains(const Point& p) const;

    // Solid angle available to a node at p: the full angle for interior
    // points, Omega/2^k on k orthogonal hyperrectangle faces, Omega/2 on the
    // sphere surface, and the wedge's own omega at its apex.
    double boundary_solid_angle(const Point& p) const;

    std::vector<Point> sample_uniform(long count, uint64_t seed) const;

    // One uniform draw from the supplied generator; the primitive both
    // sample_uniform and the Monte Carlo mass kernels are built on.
    Point sample_one(class Rng& rng) const;

    // Boundary classification tolerance in length units.
    static constexpr double kBoundaryTol = 1e-12;

private:
    Domain() = default;
    DomainKind kind_ = DomainKind::Hyperrectangle;
    int dim_ = 0;
    std::array<double, 3> sides_{0.0, 0.0, 0.0};
    double radius_ = 0.0;
    double wedge_omega_ = 0.0;
};

} // namespace connmass
