#ifndef BLOCHBOHR_COEFFS_HPP
#define BLOCHBOHR_COEFFS_HPP

#include <optional>
#include <vector>

#include "blochbohr/domains.hpp"

namespace bloch {

struct CoeffBoundQuery {
    int n = 2;
    double M = 1.0;      // norm bound (M or L depending on the path)
    double lambda = 0.5; // ||a_1|-|b_1|| at the relevant center
    double gamma = 0.0;
    double alpha = 1.0;
};

// raised when a requested truncation never controls its tail bound
struct tail_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// raised when the closed-form minimizer disagrees with its scan cross-check
struct consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InfimumResult {
    double value = 0.0;
    double minimizer = 0.0;
};

// inf over (0,1) of (m^2 - beta^2) / (n r^{n-1} (1-g)^{n-1} (1-g^2) m),
// m(r,g) = M (1-g)^a / (1-(1-g)^2 r^2)^a.  Requires n >= 2 and that the
// numerator is positive at the minimizer (otherwise the bound degenerates).
InfimumResult mu_infimum(const CoeffBoundQuery& q);

// inf over (0,1) of (m^2 - lambda^2/(1-g)^2) / (n r^{n-1} (1+g) m),
// m(r,g) = (L/(1-g)) (1-g)^a / (1-(1-g)^2 r^2)^a; M plays the role of L.
InfimumResult coeff_bound_C(const CoeffBoundQuery& q);

struct LandauResult {
    double rho0 = 0.0;
    double rho = 0.0;
    int truncation = 0;
    double tail_bound = 0.0;
};

// Univalence radius rho0 solving lambda = sum_{n>=2} C_n n r^{n-1} (series
// truncated, tail certified by a geometric bound <= 1e-8 * lambda, doubling
// the truncation up to 4096 if needed) and the covered-disk radius
// rho = lambda rho0 - sum C_n rho0^n.  Empty optional = the truncated series
// never reaches lambda on (0,1), i.e. no univalence radius was certified.
std::optional<LandauResult> landau_radius(double alpha, double lambda, double gamma, double M,
                                          int truncation = 256);

// (M^2/n^2) inf_t Psi_1(t) with Psi_1 the normalized circle integral of the
// squared density power; quadrature at every scanned t.  n = 1 scans from
// 1e-6 since Psi_1 stays finite toward 0 there.
InfimumResult an_bound(const DomainSpec& domain, double M, double alpha, int n);

// closed-form critical point of the shifted-disk coefficient bound
double cn_minimizer_t1(double alpha, double gamma, int n);

// (M^2/n^2) inf_t (1-g)^{2a} / (t^{2(n-1)} (1-((1-g)t+g)^2)^{2a}) evaluated at
// the closed-form minimizer t1 and cross-checked against a 1e5-point scan
// (must agree to 1e-8 relative, else consistency_error).  n = 1 returns the
// direct bound M^2/(1+g)^{2a}.
double cn_closed(double alpha, double gamma, double M, int n);

struct AsymptoticReport {
    std::vector<double> ratios; // C_n(alpha,0,M) / n^{2 alpha - 2} for n = 2..n_max
    double sup_ratio = 0.0;
    double last_ratio = 0.0;
    bool plateau_ok = false; // max over [n/2,n] within 5% of max over [n/4,n/2]
};

// Growth check of the unit-disk coefficient bound: the ratio sequence
// C_n / n^{2 alpha - 2} must level off (alpha >= 1).
AsymptoticReport asymptotic_check(double alpha, double M, int n_max);

} // namespace bloch

#endif
