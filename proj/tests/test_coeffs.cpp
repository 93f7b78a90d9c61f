#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "blochbohr/coeffs.hpp"
#include "blochbohr/domains.hpp"

using bloch::CoeffBoundQuery;
using bloch::DomainSpec;

namespace {

// the quotient behind mu_infimum, written out independently of the library
double mu_quotient(int n, double M, double beta, double g, double a, double r) {
    const double m = M * std::pow(1.0 - g, a) / std::pow(1.0 - (1.0 - g) * (1.0 - g) * r * r, a);
    return (m * m - beta * beta) /
           (n * std::pow(r, n - 1.0) * std::pow(1.0 - g, n - 1.0) * (1.0 - g * g) * m);
}

// dense scan stand-in for the infimum
double mu_scan_min(int n, double M, double beta, double g, double a, int points) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 1; i < points; ++i) {
        const double r = double(i) / points;
        best = std::min(best, mu_quotient(n, M, beta, g, a, r));
    }
    return best;
}

} // namespace

TEST_CASE("mu infimum agrees with a dense independent scan") {
    const CoeffBoundQuery q{2, 1.0, 0.5, 0.0, 1.0};
    const auto res = bloch::mu_infimum(q);
    const double scan = mu_scan_min(2, 1.0, 0.5, 0.0, 1.0, 1000000);
    CHECK(std::abs(res.value - scan) < 1e-9 * scan);
    CHECK(res.minimizer > 0.0);
    CHECK(res.minimizer < 1.0);
    // the scan minimizer sits where the quotient can't be improved locally
    const double h = 1e-4;
    CHECK(mu_quotient(2, 1.0, 0.5, 0.0, 1.0, res.minimizer) <=
          mu_quotient(2, 1.0, 0.5, 0.0, 1.0, res.minimizer + h));
    CHECK(mu_quotient(2, 1.0, 0.5, 0.0, 1.0, res.minimizer) <=
          mu_quotient(2, 1.0, 0.5, 0.0, 1.0, res.minimizer - h));
}

TEST_CASE("mu quotient blows up toward both endpoints") {
    const auto res = bloch::mu_infimum({2, 1.0, 0.5, 0.0, 1.0});
    CHECK(mu_quotient(2, 1.0, 0.5, 0.0, 1.0, 1e-6) > 1e3 * res.value);
    CHECK(mu_quotient(2, 1.0, 0.5, 0.0, 1.0, 1.0 - 1e-6) > 1e3 * res.value);
}

TEST_CASE("mu infimum decreases in beta and survives beta near the cap") {
    const double lo = bloch::mu_infimum({3, 1.0, 0.2, 0.1, 1.0}).value;
    const double hi = bloch::mu_infimum({3, 1.0, 0.8, 0.1, 1.0}).value;
    CHECK(hi < lo);
    // beta just below the smallest modulus m(0+) keeps the numerator positive
    const auto tight = bloch::mu_infimum({2, 1.0, 0.999, 0.0, 1.0});
    CHECK(tight.value > 0.0);
}

TEST_CASE("mu infimum validation and degeneracy") {
    CHECK_THROWS_AS(bloch::mu_infimum({1, 1.0, 0.5, 0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(bloch::mu_infimum({2, -1.0, 0.5, 0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(bloch::mu_infimum({2, 1.0, -0.5, 0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(bloch::mu_infimum({2, 1.0, 0.5, 1.0, 1.0}), std::invalid_argument);
    // beta far above every modulus value makes the numerator nonpositive
    CHECK_THROWS_AS(bloch::mu_infimum({2, 1.0, 5.0, 0.0, 1.0}), std::domain_error);
}

TEST_CASE("coefficient bound C against frozen reference values") {
    // verified against high-precision evaluation of the defining infimum
    const double frozen[] = {1.142271, 1.244017, 1.288120, 1.310992,
                             1.324343, 1.332811, 1.338519};
    for (int n = 2; n <= 8; ++n) {
        const auto res = bloch::coeff_bound_C({n, 1.0, 0.5, 0.0, 1.0});
        CHECK(std::abs(res.value - frozen[n - 2]) < 1e-5);
        CHECK(res.minimizer > 0.0);
        CHECK(res.minimizer < 1.0);
    }
    const auto far = bloch::coeff_bound_C({256, 1.0, 0.5, 0.0, 1.0});
    CHECK(std::abs(far.value - 1.359117) < 1e-5);
    // the minimizer drifts toward the boundary as n grows
    CHECK(far.minimizer > 0.99);
}

TEST_CASE("coefficient bound C basic behavior") {
    // for gamma > 0 the modulus stays bounded on (0,1), so the bound decays
    // roughly like 1/n instead of leveling off the way the gamma = 0 one does
    double prev = std::numeric_limits<double>::infinity();
    for (int n = 2; n <= 10; ++n) {
        const auto res = bloch::coeff_bound_C({n, 1.0, 0.5, 0.2, 1.0});
        CHECK(res.value > 0.0);
        CHECK(res.value < prev);
        prev = res.value;
    }
    // doubling the norm bound raises the bound
    CHECK(bloch::coeff_bound_C({3, 2.0, 0.5, 0.2, 1.0}).value >
          bloch::coeff_bound_C({3, 1.0, 0.5, 0.2, 1.0}).value);
    CHECK_THROWS_AS(bloch::coeff_bound_C({2, 1.0, 5.0, 0.2, 1.0}), std::domain_error);
}

TEST_CASE("C and mu coincide at gamma = 0") {
    for (int n : {2, 5, 11}) {
        for (double a : {0.5, 1.0, 2.0}) {
            const double c = bloch::coeff_bound_C({n, 1.0, 0.4, 0.0, a}).value;
            const double m = bloch::mu_infimum({n, 1.0, 0.4, 0.0, a}).value;
            CHECK(std::abs(c - m) < 1e-12 * c);
        }
    }
}

TEST_CASE("landau radius reproduces its frozen values and is truncation stable") {
    const auto res = bloch::landau_radius(1.0, 0.5, 0.0, 1.0);
    REQUIRE(res.has_value());
    CHECK(std::abs(res->rho0 - 0.16309648369973906) < 1e-9);
    CHECK(std::abs(res->rho - 0.044673628914956354) < 1e-9);
    CHECK(res->truncation == 256);
    CHECK(res->tail_bound <= 1e-8 * 0.5);

    const auto wide = bloch::landau_radius(1.0, 0.5, 0.0, 1.0, 512);
    REQUIRE(wide.has_value());
    CHECK(std::abs(wide->rho0 - res->rho0) < 1e-9);
    CHECK(std::abs(wide->rho - res->rho) < 1e-9);
}

TEST_CASE("landau radius satisfies its defining identities") {
    const double alpha = 1.0, lambda = 0.5, gamma = 0.2, M = 1.0;
    const auto res = bloch::landau_radius(alpha, lambda, gamma, M);
    REQUIRE(res.has_value());
    CHECK(res->rho0 > 0.0);
    CHECK(res->rho0 < 1.0);
    CHECK(res->rho > 0.0);
    CHECK(res->rho < lambda * res->rho0);

    // rebuild both sides from the coefficient bounds
    double deriv_sum = 0.0, sum = 0.0;
    for (int n = 2; n <= res->truncation; ++n) {
        const double cn = bloch::coeff_bound_C({n, M, lambda, gamma, alpha}).value;
        deriv_sum += cn * n * std::pow(res->rho0, n - 1.0);
        sum += cn * std::pow(res->rho0, double(n));
    }
    CHECK(std::abs(deriv_sum - lambda) < res->tail_bound + 1e-10);
    CHECK(std::abs(res->rho - (lambda * res->rho0 - sum)) < 1e-12);

    // the truncated derivative series decreases strictly along (0, rho0]:
    // its value at smaller radii stays above lambda's crossing level
    double prev = lambda;
    for (int i = 9; i >= 1; --i) {
        const double r = res->rho0 * i / 10.0;
        double s = 0.0;
        for (int n = 2; n <= res->truncation; ++n)
            s += bloch::coeff_bound_C({n, M, lambda, gamma, alpha}).value * n *
                 std::pow(r, n - 1.0);
        CHECK(s < prev);
        prev = s;
    }
}

TEST_CASE("landau radius validation") {
    CHECK_THROWS_AS(bloch::landau_radius(1.0, 0.5, 0.0, 1.0, 8), std::invalid_argument);
    CHECK_THROWS_AS(bloch::landau_radius(1.0, 0.0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(bloch::landau_radius(1.0, -0.5, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("integral coefficient bound on the unit disk hits the closed forms") {
    // n = 2, alpha = 1: infimum of 1/(t^2 (1-t^2)^2) is 27/4 at t^2 = 1/3
    const auto a2 = bloch::an_bound(DomainSpec::unit(), 1.0, 1.0, 2);
    CHECK(std::abs(a2.value - 27.0 / 16.0) < 1e-8 * (27.0 / 16.0));
    CHECK(std::abs(a2.minimizer - std::sqrt(1.0 / 3.0)) < 1e-5);

    // n = 3, alpha = 0.5: infimum of 1/(t^4 (1-t^2)) is 27/4 at t^2 = 2/3
    const auto a3 = bloch::an_bound(DomainSpec::unit(), 1.0, 0.5, 3);
    CHECK(std::abs(a3.value - 0.75) < 1e-8);

    // n = 1: the infimum is approached at t -> 0 where the ratio tends to 1
    const auto a1 = bloch::an_bound(DomainSpec::unit(), 2.0, 1.0, 1);
    CHECK(std::abs(a1.value - 4.0) < 1e-6);

    CHECK_THROWS_AS(bloch::an_bound(DomainSpec::unit(), 1.0, 1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(bloch::an_bound(DomainSpec::unit(), 0.0, 1.0, 2), std::invalid_argument);
}

TEST_CASE("integral bound on a shifted disk stays below the pointwise-peak bound") {
    for (int n : {2, 4}) {
        const double via_integral = bloch::an_bound(DomainSpec::shifted(0.3), 1.0, 1.0, n).value;
        const double via_peak = bloch::cn_closed(1.0, 0.3, 1.0, n);
        CHECK(via_integral > 0.0);
        CHECK(via_integral <= via_peak * (1.0 + 1e-9));
    }
}

TEST_CASE("closed-form minimizer t1") {
    CHECK(std::abs(bloch::cn_minimizer_t1(2.0, 0.7, 5) - 0.6781337) < 1e-6);
    // gamma = 0 reduces to sqrt((n-1)/(n-1+2a))
    for (int n : {2, 5, 20}) {
        for (double a : {0.5, 1.0, 2.0}) {
            const double want = std::sqrt((n - 1.0) / (n - 1.0 + 2.0 * a));
            CHECK(std::abs(bloch::cn_minimizer_t1(a, 0.0, n) - want) < 1e-14);
        }
    }
    // always an interior point
    for (int n : {2, 7, 50}) {
        for (double g : {0.0, 0.3, 0.6, 0.9}) {
            for (double a : {0.5, 1.0, 3.0}) {
                const double t1 = bloch::cn_minimizer_t1(a, g, n);
                CHECK(t1 > 0.0);
                CHECK(t1 < 1.0);
            }
        }
    }
    // local minimality of the underlying ratio
    const double a = 1.5, g = 0.4;
    const int n = 6;
    auto ratio = [&](double t) {
        const double u = (1.0 - g) * t + g;
        return std::pow(1.0 - g, 2.0 * a) /
               (std::pow(t, 2.0 * (n - 1.0)) * std::pow(1.0 - u * u, 2.0 * a));
    };
    const double t1 = bloch::cn_minimizer_t1(a, g, n);
    CHECK(ratio(t1) <= ratio(t1 + 1e-3));
    CHECK(ratio(t1) <= ratio(t1 - 1e-3));
}

TEST_CASE("closed-form coefficient bound at alpha = 1") {
    for (int n : {2, 3, 5, 10, 50}) {
        for (double M : {1.0, 1.3}) {
            const double want = (M * M / 4.0) * std::pow(1.0 + 2.0 / (n - 1.0), n - 1.0) *
                                std::pow((n + 1.0) / n, 2.0);
            const double got = bloch::cn_closed(1.0, 0.0, M, n);
            CHECK(std::abs(got - want) < 1e-10 * want);
        }
    }
    CHECK(std::abs(bloch::cn_closed(1.0, 0.0, 1.0, 2) - 27.0 / 16.0) < 1e-12);
}

TEST_CASE("closed-form coefficient bound at alpha = 2") {
    for (int n : {2, 5, 16, 64}) {
        const double want = (1.0 / 256.0) * std::pow(1.0 + 4.0 / (n - 1.0), n - 1.0) *
                            std::pow(n + 3.0, 4.0) / (double(n) * n);
        const double got = bloch::cn_closed(2.0, 0.0, 1.0, n);
        CHECK(std::abs(got - want) < 1e-10 * want);
    }
}

TEST_CASE("alpha = 0.5 bounds decay like 1/n") {
    // exact value (1/n)(n/(n-1))^{n-1}; the n = 1000 to n = 10 ratio is about
    // 0.0105, definitely below 2e-2 but not below 1e-2
    auto exact = [](int n) { return (1.0 / n) * std::pow(double(n) / (n - 1.0), n - 1.0); };
    const double c10 = bloch::cn_closed(0.5, 0.0, 1.0, 10);
    const double c1000 = bloch::cn_closed(0.5, 0.0, 1.0, 1000);
    CHECK(std::abs(c10 - exact(10)) < 1e-10 * c10);
    CHECK(std::abs(c1000 - exact(1000)) < 1e-10 * c1000);
    const double ratio = c1000 / c10;
    CHECK(std::abs(ratio - 0.010526) < 1e-4);
    CHECK(ratio < 2e-2);
}

TEST_CASE("n = 1 bound is direct") {
    for (double g : {0.0, 0.4, 0.8}) {
        for (double a : {0.5, 1.0, 2.0}) {
            const double want = 1.69 / std::pow(1.0 + g, 2.0 * a);
            CHECK(std::abs(bloch::cn_closed(a, g, 1.3, 1) - want) < 1e-14 * want);
        }
    }
}

TEST_CASE("closed-form bound validation") {
    CHECK_THROWS_AS(bloch::cn_closed(0.0, 0.0, 1.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(bloch::cn_closed(1.0, 1.0, 1.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(bloch::cn_closed(1.0, 0.0, 0.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(bloch::cn_closed(1.0, 0.0, 1.0, 0), std::invalid_argument);
}

TEST_CASE("growth ratios level off for alpha >= 1") {
    const auto rep = bloch::asymptotic_check(1.0, 1.0, 256);
    CHECK(rep.ratios.size() == 255);
    // C_n -> (M^2/4) e^2 at alpha = 1, and the ratio normalization is n^0
    const double limit = std::exp(2.0) / 4.0;
    CHECK(std::abs(rep.last_ratio - limit) < 0.01 * limit);
    CHECK(rep.sup_ratio >= rep.last_ratio);
    CHECK(rep.plateau_ok);

    const auto rep2 = bloch::asymptotic_check(2.0, 1.0, 256);
    CHECK(rep2.plateau_ok);

    CHECK_THROWS_AS(bloch::asymptotic_check(0.5, 1.0, 256), std::invalid_argument);
    CHECK_THROWS_AS(bloch::asymptotic_check(1.0, 1.0, 4), std::invalid_argument);
}
