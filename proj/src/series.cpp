#include "blochbohr/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bloch {

static bool finite_cx(cx v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

PowerSeries::PowerSeries(std::vector<cx> coeffs) : c(std::move(coeffs)) {
    if (c.empty()) c.assign(1, cx(0.0));
    check_finite();
}

void PowerSeries::check_finite() const {
    for (const cx& v : c)
        if (!finite_cx(v)) throw std::invalid_argument("power series: non-finite coefficient");
}

cx PowerSeries::eval(cx z) const {
    cx acc(0.0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

PowerSeries series_add(const PowerSeries& f, const PowerSeries& g) {
    PowerSeries out(std::max(f.order(), g.order()));
    for (std::size_t n = 0; n < out.c.size(); ++n) out.c[n] = f.at(n) + g.at(n);
    return out;
}

PowerSeries series_mul(const PowerSeries& f, const PowerSeries& g, std::size_t out_order) {
    PowerSeries out(out_order);
    const std::size_t nf = f.c.size(), ng = g.c.size();
    for (std::size_t i = 0; i < nf && i <= out_order; ++i) {
        if (f.c[i] == cx(0.0)) continue;
        const std::size_t jmax = std::min(ng, out_order - i + 1);
        for (std::size_t j = 0; j < jmax; ++j) out.c[i + j] += f.c[i] * g.c[j];
    }
    return out;
}

PowerSeries series_derivative(const PowerSeries& f) {
    if (f.order() == 0) return PowerSeries(0);
    PowerSeries out(f.order() - 1);
    for (std::size_t n = 0; n + 1 < f.c.size(); ++n) out.c[n] = double(n + 1) * f.c[n + 1];
    return out;
}

PowerSeries binomial_power_series(double c, std::size_t out_order) {
    PowerSeries out(out_order);
    // (1-z)^c = sum_k (-1)^k C(c,k) z^k; ratio of consecutive terms is
    // -(c-k+1)/k, stable for any real c.
    double coeff = 1.0;
    out.c[0] = coeff;
    for (std::size_t k = 1; k <= out_order; ++k) {
        coeff *= -(c - double(k) + 1.0) / double(k);
        out.c[k] = coeff;
    }
    return out;
}

PowerSeries log_one_minus_series(std::size_t out_order) {
    if (out_order < 1) throw std::invalid_argument("log series: order must be >= 1");
    PowerSeries out(out_order);
    for (std::size_t n = 1; n <= out_order; ++n) out.c[n] = 1.0 / double(n);
    return out;
}

PowerSeries compose_affine(const PowerSeries& f, cx a, cx b, std::size_t out_order) {
    PowerSeries out(out_order);
    // pw holds the coefficients of (a z + b)^n, updated in place:
    // p_{n,k} = b p_{n-1,k} + a p_{n-1,k-1}
    std::vector<cx> pw(out_order + 1, cx(0.0));
    pw[0] = cx(1.0);
    std::size_t top = 0;
    out.c[0] = f.at(0);
    const std::size_t nmax = f.order();
    for (std::size_t n = 1; n <= nmax; ++n) {
        const std::size_t newtop = std::min(n, out_order);
        for (std::size_t k = newtop; k-- > 0;) pw[k + 1] = b * pw[k + 1] + a * pw[k];
        pw[0] *= b;
        top = newtop;
        const cx fn = f.at(n);
        if (fn == cx(0.0)) continue;
        for (std::size_t k = 0; k <= top; ++k) out.c[k] += fn * pw[k];
    }
    out.check_finite();
    return out;
}

HarmonicMapSeries::HarmonicMapSeries(PowerSeries h_, PowerSeries g_) : h(std::move(h_)), g(std::move(g_)) {
    if (g.c[0] != cx(0.0))
        throw std::invalid_argument("harmonic map series: g(0) must be 0 (canonical decomposition)");
    const std::size_t ord = std::max(h.order(), g.order());
    h.c.resize(ord + 1, cx(0.0));
    g.c.resize(ord + 1, cx(0.0));
}

double majorant_sum(const HarmonicMapSeries& f, double r) {
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("majorant_sum: r must lie in [0,1)");
    double acc = 0.0, rn = 1.0;
    for (std::size_t n = 0; n < f.h.c.size(); ++n) {
        acc += (std::abs(f.h.c[n]) + std::abs(f.g.c[n])) * rn;
        rn *= r;
    }
    return acc;
}

double p_majorant_sum(const HarmonicMapSeries& f, double r, double p) {
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("p_majorant_sum: r must lie in [0,1)");
    if (!(p >= 1.0)) throw std::domain_error("p_majorant_sum: p must be >= 1");
    double acc = std::abs(f.h.c[0]), rn = 1.0;
    for (std::size_t n = 1; n < f.h.c.size(); ++n) {
        rn *= r;
        const double ha = std::abs(f.h.c[n]), ga = std::abs(f.g.c[n]);
        double term;
        if (ga == 0.0) term = ha;
        else if (ha == 0.0) term = ga;
        else term = std::pow(std::pow(ha, p) + std::pow(ga, p), 1.0 / p);
        acc += term * rn;
    }
    return acc;
}

} // namespace bloch
