#ifndef BLOCHBOHR_SERIES_HPP
#define BLOCHBOHR_SERIES_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace bloch {

using cx = std::complex<double>;

// Truncated Taylor expansion about 0; c[n] multiplies z^n.
struct PowerSeries {
    std::vector<cx> c;

    PowerSeries() : c(1, cx(0.0)) {}
    explicit PowerSeries(std::size_t order) : c(order + 1, cx(0.0)) {}
    explicit PowerSeries(std::vector<cx> coeffs);

    std::size_t order() const { return c.size() - 1; }
    cx at(std::size_t n) const { return n < c.size() ? c[n] : cx(0.0); }

    // Horner evaluation of the truncated polynomial.
    cx eval(cx z) const;

    // throws std::invalid_argument if any coefficient is NaN/Inf
    void check_finite() const;
};

PowerSeries series_add(const PowerSeries& f, const PowerSeries& g);
PowerSeries series_mul(const PowerSeries& f, const PowerSeries& g, std::size_t out_order);

// Order drops by one; order-0 input yields the zero series of order 0.
PowerSeries series_derivative(const PowerSeries& f);

// Expansion of (1-z)^c via the ratio recurrence; c may be any real.
PowerSeries binomial_power_series(double c, std::size_t out_order);

// Expansion of -log(1-z): coefficient n is 1/n for n >= 1.
PowerSeries log_one_minus_series(std::size_t out_order);

// Coefficients of z -> f(a z + b), truncated at out_order.  Powers of
// (a z + b) are built by the two-term recurrence, so no explicit binomial
// coefficients appear (they overflow for large orders); O(order^2) work.
PowerSeries compose_affine(const PowerSeries& f, cx a, cx b, std::size_t out_order);

// f = h + conj(g) with the canonical normalization g(0) = 0.
struct HarmonicMapSeries {
    PowerSeries h, g;
    HarmonicMapSeries(PowerSeries h_, PowerSeries g_);
};

// sum_n (|a_n| + |b_n|) r^n over the retained coefficients
double majorant_sum(const HarmonicMapSeries& f, double r);

// |a_0| + sum_{n>=1} (|a_n|^p + |b_n|^p)^{1/p} r^n
double p_majorant_sum(const HarmonicMapSeries& f, double r, double p);

} // namespace bloch

#endif
