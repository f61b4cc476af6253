#include "core/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/errors.hpp"
#include "core/parallel.hpp"
#include "core/rng.hpp"

namespace connmass {

namespace {
constexpr double kPi = std::numbers::pi_v<double>;
}

double distance(const Point& a, const Point& b, int dim) {
    double s = 0.0;
    for (int i = 0; i < dim; ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

double full_solid_angle(int dim) {
    require(dim >= 1, ErrorCode::InvalidArgument, "full_solid_angle: dimension must be >= 1");
    return 2.0 * std::pow(kPi, 0.5 * dim) / std::tgamma(0.5 * dim);
}

double corner_solid_angle_ngon(int n_sides) {
    require(n_sides >= 3, ErrorCode::InvalidArgument,
            "corner_solid_angle_ngon: a polygon needs at least 3 sides");
    return kPi * (1.0 - 2.0 / n_sides);
}

Domain Domain::hyperrectangle(const std::vector<double>& sides) {
    require(!sides.empty() && sides.size() <= 3, ErrorCode::InvalidArgument,
            "hyperrectangle: dimension must be 1, 2 or 3");
    Domain d;
    d.kind_ = DomainKind::Hyperrectangle;
    d.dim_ = static_cast<int>(sides.size());
    for (std::size_t i = 0; i < sides.size(); ++i) {
        require(sides[i] > 0.0, ErrorCode::InvalidArgument,
                "hyperrectangle: side lengths must be positive");
        d.sides_[i] = sides[i];
    }
    return d;
}

Domain Domain::ball(double radius, int dim) {
    require(dim >= 1 && dim <= 3, ErrorCode::InvalidArgument, "ball: dimension must be 1, 2 or 3");
    require(radius > 0.0, ErrorCode::InvalidArgument, "ball: radius must be positive");
    Domain d;
    d.kind_ = DomainKind::Ball;
    d.dim_ = dim;
    d.radius_ = radius;
    return d;
}

Domain Domain::wedge(int dim, double omega) {
    require(dim >= 1 && dim <= 3, ErrorCode::InvalidArgument, "wedge: dimension must be 1, 2 or 3");
    require(omega > 0.0 && omega <= full_solid_angle(dim), ErrorCode::InvalidArgument,
            "wedge: omega must lie in (0, full solid angle]");
    Domain d;
    d.kind_ = DomainKind::Wedge;
    d.dim_ = dim;
    d.wedge_omega_ = omega;
    return d;
}

double Domain::volume() const {
    switch (kind_) {
        case DomainKind::Hyperrectangle: {
            double v = 1.0;
            for (int i = 0; i < dim_; ++i) v *= sides_[i];
            return v;
        }
        case DomainKind::Ball:
            return full_solid_angle(dim_) * std::pow(radius_, dim_) / dim_;
        case DomainKind::Wedge:
            throw Error(ErrorCode::UnsupportedDomain, "wedge domain has infinite volume");
    }
    return 0.0;
}

double Domain::diameter() const {
    switch (kind_) {
        case DomainKind::Hyperrectangle: {
            double s = 0.0;
            for (int i = 0; i < dim_; ++i) s += sides_[i] * sides_[i];
            return std::sqrt(s);
        }
        case DomainKind::Ball:
            return 2.0 * radius_;
        case DomainKind::Wedge:
            throw Error(ErrorCode::UnsupportedDomain, "wedge domain is unbounded");
    }
    return 0.0;
}

bool Domain::contains(const Point& p) const {
    switch (kind_) {
        case DomainKind::Hyperrectangle:
            for (int i = 0; i < dim_; ++i) {
                if (p[i] < -kBoundaryTol || p[i] > sides_[i] + kBoundaryTol) return false;
            }
            return true;
        case DomainKind::Ball:
            return distance(p, Point{}, dim_) <= radius_ + kBoundaryTol;
        case DomainKind::Wedge:
            throw Error(ErrorCode::UnsupportedDomain, "wedge domain has no membership test");
    }
    return false;
}

double Domain::boundary_solid_angle(const Point& p) const {
    require(kind_ != DomainKind::Wedge || distance(p, Point{}, dim_) <= kBoundaryTol,
            ErrorCode::UnsupportedDomain,
            "wedge: boundary solid angle is defined only at the apex");
    if (kind_ == DomainKind::Wedge) return wedge_omega_;

    require(contains(p), ErrorCode::OutOfDomain, "boundary_solid_angle: point outside domain");
    const double omega_full = full_solid_angle(dim_);
    if (kind_ == DomainKind::Ball) {
        const double r = distance(p, Point{}, dim_);
        return (r >= radius_ - kBoundaryTol) ? 0.5 * omega_full : omega_full;
    }
    int on_faces = 0;
    for (int i = 0; i < dim_; ++i) {
        if (p[i] <= kBoundaryTol || p[i] >= sides_[i] - kBoundaryTol) ++on_faces;
    }
    return omega_full / static_cast<double>(1 << on_faces);
}

Point Domain::sample_one(Rng& rng) const {
    Point p;
    if (kind_ == DomainKind::Hyperrectangle) {
        for (int k = 0; k < dim_; ++k) p[k] = rng.uniform(0.0, sides_[k]);
        return p;
    }
    if (kind_ == DomainKind::Ball) {
        // rejection from the bounding cube
        for (;;) {
            double s = 0.0;
            for (int k = 0; k < dim_; ++k) {
                p[k] = rng.uniform(-radius_, radius_);
                s += p[k] * p[k];
            }
            if (s <= radius_ * radius_) return p;
        }
    }
    throw Error(ErrorCode::UnsupportedDomain, "sample_one: domain cannot be sampled");
}

std::vector<Point> Domain::sample_uniform(long count, uint64_t seed) const {
    require(finite(), ErrorCode::UnsupportedDomain,
            "sample_uniform: domain with infinite volume cannot be sampled");
    require(count >= 0, ErrorCode::InvalidArgument, "sample_uniform: count must be >= 0");
    std::vector<Point> pts(static_cast<std::size_t>(count));
    if (count == 0) return pts;

    constexpr long kChunk = 1 << 16;
    const std::size_t chunks = static_cast<std::size_t>((count + kChunk - 1) / kChunk);
    parallel_chunks(chunks, [&](std::size_t c) {
        Rng rng(derive_seed(seed, c));
        const long lo = static_cast<long>(c) * kChunk;
        const long hi = std::min(count, lo + kChunk);
        for (long i = lo; i < hi; ++i) {
            pts[static_cast<std::size_t>(i)] = sample_one(rng);
        }
    });
    return pts;
}

} // namespace connmass
