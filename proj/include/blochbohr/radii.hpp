#ifndef BLOCHBOHR_RADII_HPP
#define BLOCHBOHR_RADII_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "blochbohr/domains.hpp"

namespace bloch {

struct RadiusResult {
    double radius = 0.0;
    double bracket_lo = 0.0, bracket_hi = 0.0;
    double residual = 0.0; // defining function at radius (normalized form)
    int iterations = 0;
    int sign_changes = 0; // sign changes seen on the scan grid
    std::string equation_tag;
};

// Scans (eps, 1-eps) uniformly for the first sign change, bisects the bracket
// to width 1e-14.  Empty optional = no sign change anywhere (not an error).
// Non-finite values inside the scan throw.
std::optional<RadiusResult> find_smallest_root(const std::function<double(double)>& f,
                                               int scan_points = 4096,
                                               const std::string& tag = "");

// K_p = max{ 2^{(2/p)-1}, 1 }: 2 at p=1, 1 for p >= 2.
double kp_constant(double p);

// (1+g)/(3+g)
double classical_bohr_radius(double gamma);

struct IntegralRadiusResult {
    std::optional<RadiusResult> root;
    double limit_proxy = 0.0; // I(1 - 1e-4), stands in for lim I(r) as r -> 1
    bool hypothesis_ok = false;
};

// Smallest root of I(r) = 6/pi^2 with I the circle integral of the squared
// density power.  The limit hypothesis is checked first via I(1-1e-4); if the
// proxy fails the result carries no root.
IntegralRadiusResult bloch_bohr_radius_integral(const DomainSpec& domain, double alpha);

// Raw (unnormalized) defining-function values, used for curve exports.
double shifted_defining_value(double gamma, double alpha, double r);
double p_defining_value(double gamma, double alpha, double p, double r);
double sense_preserving_defining_value(double gamma, double alpha, double p, double d1, double r);

// Root of 6(1-((1-g)r+g)^2)^{2a} - pi^2 (1-g)^{2a} r^2.  alpha = 0 is the
// limiting equation 6 - pi^2 r^2 with root sqrt(6)/pi.
RadiusResult bloch_bohr_radius_shifted(double gamma, double alpha);

// Closed form R_g(a) for a > 1; the sharp upper bound companion to the
// shifted-disk radius.
double upper_bound_R(double gamma, double alpha);

// Root of 6(1-((1-g)r+g)^2)^{2a} - K_p pi^2 (1-g)^{2a} r^2.
RadiusResult p_bloch_bohr_radius(double gamma, double alpha, double p);

// Root of 6(...)^{2a}((1+dr)^2 - k^2(r+d)^2) - K_p(1+k^2) pi^2 (1+d)^2 (1-g)^{2a} r^2,
// the bounded-dilatation variant; requires 0 < k < 1 (k = 1 is the
// sense-preserving case below).
RadiusResult bloch_type_radius(double gamma, double alpha, double p, double k, double d);

// Root of 6(...)^{2a}((1+d1 r)^2 - (r+d1)^2) - 2 K_p pi^2 (1+d1)^2 (1-g)^{2a} r^2.
// For p >= 2 the leading constant degenerates to 2 (K_p = 1).
RadiusResult sense_preserving_radius(double gamma, double alpha, double p, double d1);

struct SweepReport {
    std::vector<double> radii;
    bool nondecreasing = false;
};

// Solves the tagged equation over increasing gammas and reports whether the
// radii are nondecreasing.  Tags: classical, shifted, p_radius, bloch_type,
// sense_preserving.
SweepReport monotonicity_sweep(const std::string& equation_tag, const std::vector<double>& gammas,
                               double alpha, double p = 1.0, double k = 0.5, double d = 0.0);

} // namespace bloch

#endif
