#include "blochbohr/domains.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace bloch {

DomainSpec DomainSpec::unit() { return DomainSpec{}; }

DomainSpec DomainSpec::shifted(double gamma) {
    if (!(gamma >= 0.0 && gamma < 1.0)) throw std::invalid_argument("shifted disk: gamma must lie in [0,1)");
    DomainSpec d;
    d.kind = DomainKind::shifted_disk;
    d.gamma = gamma;
    return d;
}

DomainSpec DomainSpec::conformal(PowerSeries phi) {
    phi.check_finite();
    DomainSpec d;
    d.kind = DomainKind::conformal;
    d.map = std::move(phi);
    return d;
}

cx DomainSpec::center() const {
    switch (kind) {
    case DomainKind::unit_disk: return cx(0.0);
    case DomainKind::shifted_disk: return cx(-gamma / (1.0 - gamma), 0.0);
    default: throw std::invalid_argument("conformal domain has no disk geometry");
    }
}

double DomainSpec::radius() const {
    switch (kind) {
    case DomainKind::unit_disk: return 1.0;
    case DomainKind::shifted_disk: return 1.0 / (1.0 - gamma);
    default: throw std::invalid_argument("conformal domain has no disk geometry");
    }
}

std::string DomainSpec::describe() const {
    switch (kind) {
    case DomainKind::unit_disk: return "unit disk";
    case DomainKind::shifted_disk: return "shifted disk gamma=" + std::to_string(gamma);
    default: return "conformal domain";
    }
}

static constexpr double kBoundaryGuard = 1e-12;

double hyperbolic_density(const DomainSpec& domain, cx z) {
    switch (domain.kind) {
    case DomainKind::unit_disk: {
        const double a = std::abs(z);
        if (1.0 - a < kBoundaryGuard) throw std::domain_error("density: point too close to the unit circle");
        return 1.0 / ((1.0 - a) * (1.0 + a));
    }
    case DomainKind::shifted_disk: {
        const double g = domain.gamma;
        const double dist = 1.0 / (1.0 - g) - std::abs(z + cx(g / (1.0 - g), 0.0));
        if (dist < kBoundaryGuard) throw std::domain_error("density: point too close to the boundary circle");
        const double a = std::abs((1.0 - g) * z + g); // |phi(z)| < 1 inside
        return (1.0 - g) / ((1.0 - a) * (1.0 + a));
    }
    case DomainKind::conformal: {
        const cx w = domain.map.eval(z);
        const double a = std::abs(w);
        if (1.0 - a < kBoundaryGuard)
            throw std::domain_error("density: conformal image on or outside the unit circle");
        const double dp = std::abs(series_derivative(domain.map).eval(z));
        if (!(dp > 0.0)) throw std::domain_error("density: conformal map has vanishing derivative at the point");
        return dp / ((1.0 - a) * (1.0 + a));
    }
    }
    throw std::logic_error("unreachable");
}

double circle_integral_I(const DomainSpec& domain, double r, double alpha, double tol) {
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("circle integral: r must lie in (0,1)");
    if (!(alpha > 0.0)) throw std::invalid_argument("circle integral: alpha must be positive");
    if (!(tol > 0.0)) throw std::invalid_argument("circle integral: tol must be positive");

    // derivative series reused across nodes for conformal domains
    PowerSeries dmap;
    if (domain.kind == DomainKind::conformal) dmap = series_derivative(domain.map);

    auto integrand = [&](double theta) {
        const cx z = std::polar(r, theta);
        double lam;
        if (domain.kind == DomainKind::conformal) {
            const cx w = domain.map.eval(z);
            const double a = std::abs(w);
            if (1.0 - a < kBoundaryGuard)
                throw std::domain_error("circle integral: conformal image reaches the unit circle");
            const double dp = std::abs(dmap.eval(z));
            if (!(dp > 0.0)) throw std::domain_error("circle integral: vanishing map derivative on the circle");
            lam = dp / ((1.0 - a) * (1.0 + a));
        } else {
            lam = hyperbolic_density(domain, z);
        }
        return std::pow(lam, 2.0 * alpha);
    };

    // pairwise sum for order-independent, bit-stable accumulation
    auto pairwise = [](const std::vector<double>& v) {
        std::vector<double> work = v;
        std::size_t n = work.size();
        while (n > 1) {
            std::size_t half = (n + 1) / 2;
            for (std::size_t i = 0; i < n / 2; ++i) work[i] = work[2 * i] + work[2 * i + 1];
            if (n % 2) work[n / 2] = work[n - 1];
            n = half;
        }
        return work[0];
    };

    const double two_pi = 2.0 * M_PI;
    std::size_t nodes = 64;
    std::vector<double> vals(nodes);
    for (std::size_t i = 0; i < nodes; ++i) vals[i] = integrand(two_pi * double(i) / double(nodes));
    double prev = r * r * pairwise(vals) / double(nodes);

    while (nodes < (1u << 20)) {
        // trapezoid refinement: old nodes stay, add the midpoints
        std::vector<double> next(2 * nodes);
        for (std::size_t i = 0; i < nodes; ++i) {
            next[2 * i] = vals[i];
            next[2 * i + 1] = integrand(two_pi * (2.0 * double(i) + 1.0) / double(2 * nodes));
        }
        vals.swap(next);
        nodes *= 2;
        const double cur = r * r * pairwise(vals) / double(nodes);
        if (std::abs(cur - prev) <= tol * std::max(std::abs(cur), 1e-300)) return cur;
        prev = cur;
    }
    throw quadrature_error("circle integral: no convergence by 2^20 nodes", prev, prev);
}

ComparisonReport comparison_check(const DomainSpec& inner, const DomainSpec& outer, int samples) {
    if (samples < 1) throw std::invalid_argument("comparison_check: samples must be positive");

    auto disk_like = [](const DomainSpec& d) {
        return d.kind == DomainKind::unit_disk || d.kind == DomainKind::shifted_disk;
    };
    if (!disk_like(inner) || !disk_like(outer))
        throw unsupported_comparison("comparison_check: only disk/shifted-disk pairs are supported");
    const double gi = inner.kind == DomainKind::unit_disk ? 0.0 : inner.gamma;
    const double go = outer.kind == DomainKind::unit_disk ? 0.0 : outer.gamma;
    if (gi > go)
        throw unsupported_comparison("comparison_check: inner domain is not contained in outer");

    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    ComparisonReport rep;
    rep.samples = samples;
    rep.max_violation = -std::numeric_limits<double>::infinity();
    const cx c = inner.center();
    const double R = inner.radius();
    for (int i = 0; i < samples; ++i) {
        const double s = std::sqrt(uni(rng)) * (1.0 - 1e-6); // area-uniform, off the boundary
        const double th = 2.0 * M_PI * uni(rng);
        const cx z = c + std::polar(s * R, th);
        const double v = hyperbolic_density(outer, z) - hyperbolic_density(inner, z);
        if (v > rep.max_violation) {
            rep.max_violation = v;
            rep.worst_point = z;
        }
    }
    return rep;
}

} // namespace bloch
