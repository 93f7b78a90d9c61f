#ifndef BLOCHBOHR_DOMAINS_HPP
#define BLOCHBOHR_DOMAINS_HPP

#include <stdexcept>
#include <string>

#include "blochbohr/series.hpp"

namespace bloch {

// Simply connected domain given as the unit disk D, the shifted disk
// O_g = { |z + g/(1-g)| < 1/(1-g) } (contains D, grows with g), or a
// truncated series for a conformal map of the domain onto D.
enum class DomainKind { unit_disk, shifted_disk, conformal };

struct DomainSpec {
    DomainKind kind = DomainKind::unit_disk;
    double gamma = 0.0;
    PowerSeries map; // conformal only

    static DomainSpec unit();
    static DomainSpec shifted(double gamma);
    static DomainSpec conformal(PowerSeries phi);

    // disk geometry; throws for conformal domains (shape unknown)
    cx center() const;
    double radius() const;

    std::string describe() const;
};

struct quadrature_error : std::runtime_error {
    double last_value, previous_value;
    quadrature_error(const std::string& msg, double last, double prev)
        : std::runtime_error(msg), last_value(last), previous_value(prev) {}
};

struct unsupported_comparison : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Hyperbolic density: 1/(1-|z|^2) on D, (1-g)/(1-|(1-g)z+g|^2) on O_g,
// |phi'(z)|/(1-|phi(z)|^2) for a conformal map phi onto D.  Points within
// 1e-12 of the boundary are rejected (the density blows up there).
double hyperbolic_density(const DomainSpec& domain, cx z);

// I(r) = (r/2pi) * integral over |z|=r of lambda^{2 alpha} |dz|, by
// trapezoid quadrature on the periodic integrand with node doubling from 64
// until the relative change is below tol; gives up past 2^20 nodes.
double circle_integral_I(const DomainSpec& domain, double r, double alpha, double tol = 1e-10);

struct ComparisonReport {
    double max_violation = 0.0; // max of lambda_outer - lambda_inner (<= 0 expected)
    cx worst_point;
    int samples = 0;
};

// Samples random interior points of `inner` and checks the density ordering
// lambda_outer <= lambda_inner.  Supported pairs: equal domains, D inside a
// shifted disk, and shifted disks with nondecreasing gamma.
ComparisonReport comparison_check(const DomainSpec& inner, const DomainSpec& outer, int samples);

} // namespace bloch

#endif
