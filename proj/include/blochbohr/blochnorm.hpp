#ifndef BLOCHBOHR_BLOCHNORM_HPP
#define BLOCHBOHR_BLOCHNORM_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "blochbohr/domains.hpp"
#include "blochbohr/series.hpp"

namespace bloch {

// f = h + conj(g) given by closed-form derivative evaluators; the handles
// are pure closures over immutable parameters, safe to share across workers.
struct HarmonicFunctionHandle {
    std::function<cx(cx)> h_prime;
    std::function<cx(cx)> g_prime;
    cx value_at_origin = cx(0.0);
    std::string label;
};

// Grid supremum of a seminorm integrand. The value is a lower bound for the
// true supremum by construction; it equals the integrand at argmax_point.
struct SupEstimate {
    double value = 0.0;
    cx argmax_point = cx(0.0);
    int grid_radii = 0;
    int grid_angles = 0;
};

// sup over a polar grid of (|h'| + |g'|) / lambda^alpha. Radial levels are
// pushed geometrically toward the boundary, the outermost sitting at the
// given absolute boundary distance. Disk-like domains only.
SupEstimate estimate_bloch_seminorm(const HarmonicFunctionHandle& f, const DomainSpec& domain,
                                    double alpha, int radial_levels = 128,
                                    int angular_nodes = 256, double boundary_distance = 1e-6);

// same grid, integrand sqrt(| |h'|^2 - |g'|^2 |) / lambda^alpha
SupEstimate estimate_bloch_type_seminorm(const HarmonicFunctionHandle& f, const DomainSpec& domain,
                                         double alpha, int radial_levels = 128,
                                         int angular_nodes = 256, double boundary_distance = 1e-6);

// Named example functions with closed-form derivatives.
// Names: F_alpha_t (params alpha, t, gamma), f_gamma_alpha (gamma, alpha),
// F_lambda (lambda), example_2_2 (gamma, beta, alpha), example_2_7 (gamma),
// f_gamma_geometric (gamma).
HarmonicFunctionHandle catalog_function(const std::string& name,
                                        const std::map<std::string, double>& params);

// Truncated coefficient expansions for the entries with usable series
// (f_gamma_alpha, F_lambda, f_gamma_geometric); others are rejected.
HarmonicMapSeries catalog_series(const std::string& name,
                                 const std::map<std::string, double>& params, std::size_t order);

// Upper bound on the majorant mass dropped by truncating at the given order,
// evaluated at |z| = r. Infinite when the geometric bound does not close.
double catalog_majorant_tail(const std::string& name,
                             const std::map<std::string, double>& params, std::size_t order,
                             double r);

struct BlowupReport {
    std::vector<double> values;
    bool rejected = false; // growth verdict: last > 10x first and rising tail
};

// Integrand values along a real segment approaching the boundary point 1.
// The rejection verdict is heuristic: last value above 10 times the first
// with the final five samples monotonically increasing.
BlowupReport blowup_probe(const HarmonicFunctionHandle& f, const DomainSpec& domain, double alpha,
                          const std::vector<double>& approach_radii, bool type_integrand = false);

struct AffineReport {
    double max_inequality_gap = 0.0; // max of lhs - (|a|+|b|) rhs, expected <= 0
    double max_type_mismatch = 0.0;  // relative error in the Jacobian scaling identity
    int samples = 0;
};

// F = a f + b conj(f): checks the seminorm integrand inequality and the
// type-integrand identity sqrt(|J_F|) = sqrt(| |a|^2-|b|^2 |) sqrt(|J_f|)
// at random interior points.
AffineReport affine_invariance_check(const HarmonicFunctionHandle& f, cx a, cx b,
                                     const DomainSpec& domain, double alpha);

} // namespace bloch

#endif
