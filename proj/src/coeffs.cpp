#include "blochbohr/coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "blochbohr/minimize.hpp"
#include "blochbohr/parallel.hpp"
#include "blochbohr/radii.hpp"

namespace bloch {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double finite_or_inf(double v) { return std::isfinite(v) ? v : kInf; }

void check_query(const CoeffBoundQuery& q, int min_n) {
    if (q.n < min_n) throw std::invalid_argument("coefficient index n too small");
    if (!(q.M > 0.0)) throw std::invalid_argument("norm bound M must be positive");
    if (!(q.lambda >= 0.0)) throw std::invalid_argument("lambda must be nonnegative");
    if (!(q.gamma >= 0.0 && q.gamma < 1.0)) throw std::invalid_argument("gamma must lie in [0,1)");
    if (!(q.alpha >= 0.0)) throw std::invalid_argument("alpha must be nonnegative");
}

// m(r,g) = M (1-g)^a / (1 - (1-g)^2 r^2)^a, written so 1-(1-g)^2 r^2 never
// cancels: 1 - u^2 = (1-u)(1+u) with 1-u = (1-r) + g r for u = (1-g) r.
double envelope_m(double M, double gamma, double alpha, double r) {
    const double u = (1.0 - gamma) * r;
    const double one_minus_u2 = ((1.0 - r) + gamma * r) * (1.0 + u);
    return M * std::pow(1.0 - gamma, alpha) / std::pow(one_minus_u2, alpha);
}

} // namespace

MinimizeResult minimize_scan_golden(const std::function<double(double)>& f, double lo, double hi,
                                    int scan_points, double xtol) {
    if (!(hi > lo)) throw std::invalid_argument("minimize_scan_golden: empty interval");
    if (scan_points < 8) scan_points = 8;

    // midpoint sampling keeps the endpoints unevaluated (integrands may
    // blow up there); non-finite samples lose every comparison
    double best_x = 0.0, best_v = kInf;
    int best_i = -1;
    const double h = (hi - lo) / scan_points;
    std::vector<double> xs(scan_points);
    for (int i = 0; i < scan_points; ++i) {
        xs[i] = lo + h * (i + 0.5);
        const double v = finite_or_inf(f(xs[i]));
        if (v < best_v) {
            best_v = v;
            best_x = xs[i];
            best_i = i;
        }
    }
    if (best_i < 0) throw std::runtime_error("minimize_scan_golden: no finite sample");

    // bracket around the best sample; at the ends extend to the domain edge
    double a = (best_i > 0) ? xs[best_i - 1] : lo;
    double b = (best_i + 1 < scan_points) ? xs[best_i + 1] : hi;

    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1 = finite_or_inf(f(x1));
    double f2 = finite_or_inf(f(x2));
    int guard = 0;
    while (b - a > xtol && guard++ < 400) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = finite_or_inf(f(x1));
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = finite_or_inf(f(x2));
        }
    }

    MinimizeResult out;
    out.x = 0.5 * (a + b);
    out.value = finite_or_inf(f(out.x));
    if (f1 < out.value) out = {x1, f1};
    if (f2 < out.value) out = {x2, f2};
    if (best_v < out.value) out = {best_x, best_v};
    return out;
}

InfimumResult mu_infimum(const CoeffBoundQuery& q) {
    check_query(q, 2);
    const double beta2 = q.lambda * q.lambda;
    auto quotient = [&](double r) {
        const double m = envelope_m(q.M, q.gamma, q.alpha, r);
        const double den = q.n * std::pow(r, q.n - 1) * std::pow(1.0 - q.gamma, q.n - 1) *
                           (1.0 - q.gamma * q.gamma) * m;
        return (m * m - beta2) / den;
    };
    const MinimizeResult min = minimize_scan_golden(quotient, 0.0, 1.0, 1024, 1e-12);
    const double m_at = envelope_m(q.M, q.gamma, q.alpha, min.x);
    if (!(m_at * m_at - beta2 > 0.0))
        throw std::domain_error("coefficient bound degenerates: numerator nonpositive at the minimizer");
    return {min.value, min.x};
}

InfimumResult coeff_bound_C(const CoeffBoundQuery& q) {
    check_query(q, 2);
    // here M plays the role of the norm bound L; m carries an extra 1/(1-g)
    const double lam2 = (q.lambda / (1.0 - q.gamma)) * (q.lambda / (1.0 - q.gamma));
    auto quotient = [&](double r) {
        const double m = envelope_m(q.M, q.gamma, q.alpha, r) / (1.0 - q.gamma);
        const double den = q.n * std::pow(r, q.n - 1) * (1.0 + q.gamma) * m;
        return (m * m - lam2) / den;
    };
    const MinimizeResult min = minimize_scan_golden(quotient, 0.0, 1.0, 1024, 1e-12);
    const double m_at = envelope_m(q.M, q.gamma, q.alpha, min.x) / (1.0 - q.gamma);
    if (!(m_at * m_at - lam2 > 0.0))
        throw std::domain_error("coefficient bound degenerates: numerator nonpositive at the minimizer");
    return {min.value, min.x};
}

std::optional<LandauResult> landau_radius(double alpha, double lambda, double gamma, double M,
                                          int truncation) {
    if (truncation < 16) throw std::invalid_argument("landau truncation must be at least 16");
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
    check_query({2, M, lambda, gamma, alpha}, 2);

    const int cap = std::max(truncation, 4096);
    std::vector<double> cs; // cs[i] = C_{i+2}
    int n_terms = truncation;
    for (;;) {
        const int have = static_cast<int>(cs.size());
        cs.resize(n_terms - 1);
        parallel_for(have, n_terms - 1, 0, [&](int i) {
            cs[i] = coeff_bound_C({i + 2, M, lambda, gamma, alpha}).value;
        });

        // Psi(r) = lambda - sum_{n=2}^{N} C_n n r^{n-1}, Horner from the top
        auto psi = [&](double r) {
            double acc = 0.0;
            for (int i = static_cast<int>(cs.size()) - 1; i >= 0; --i)
                acc = acc * r + cs[i] * (i + 2);
            return lambda - acc * r;
        };
        const auto root = find_smallest_root(psi, 4096, "landau_psi");
        if (!root) return std::nullopt;
        const double rho0 = root->radius;

        // geometric tail from the last term ratio: terms T_n = C_n n rho0^{n-1}
        const int N = n_terms;
        const double cN = cs.back();
        const double cPrev = cs[cs.size() - 2];
        const double ratio_c = std::max(cN / cPrev, 1.0);
        const double s = ratio_c * (double(N + 1) / N) * rho0;
        const double tN = cN * N * std::pow(rho0, N - 1);
        const double tail = (s < 1.0) ? tN * s / (1.0 - s) : kInf;
        if (tail <= 1e-8 * lambda) {
            double acc = 0.0; // sum C_n rho0^n
            for (int i = static_cast<int>(cs.size()) - 1; i >= 0; --i) acc = acc * rho0 + cs[i];
            acc *= rho0 * rho0;
            LandauResult out;
            out.rho0 = rho0;
            out.rho = lambda * rho0 - acc;
            out.truncation = N;
            out.tail_bound = tail;
            return out;
        }
        if (n_terms >= cap) throw tail_error("landau tail bound not controlled at maximum truncation");
        n_terms = std::min(2 * n_terms, cap);
    }
}

InfimumResult an_bound(const DomainSpec& domain, double M, double alpha, int n) {
    if (n < 1) throw std::invalid_argument("coefficient index n must be at least 1");
    if (!(M > 0.0)) throw std::invalid_argument("norm bound M must be positive");
    if (!(alpha >= 0.0)) throw std::invalid_argument("alpha must be nonnegative");
    auto psi1 = [&](double t) {
        return circle_integral_I(domain, t, alpha) / std::pow(t, 2 * n);
    };
    // for n = 1 the integrand stays finite toward 0, so the scan starts there
    const double lo = (n == 1) ? 1e-6 : 0.0;
    const MinimizeResult min = minimize_scan_golden(psi1, lo, 1.0, 256, 1e-12);
    return {(M * M) / (double(n) * n) * min.value, min.x};
}

double cn_minimizer_t1(double alpha, double gamma, int n) {
    const double disc = alpha * alpha * gamma * gamma + (n - 1.0) * (n - 1.0 + 2.0 * alpha);
    return (-gamma * (n - 1.0 + alpha) + std::sqrt(disc)) / ((1.0 - gamma) * (n - 1.0 + 2.0 * alpha));
}

namespace {

// log of mu(t) = (1-g)^{2a} / (t^{2(n-1)} (1-((1-g)t+g)^2)^{2a});
// 1-u = (1-g)(1-t) exactly, so pass 1-t to keep the boundary factor clean
double log_mu_shifted(double alpha, double gamma, int n, double t, double one_minus_t) {
    const double u = 1.0 - (1.0 - gamma) * one_minus_t;
    const double one_minus_u2 = (1.0 - gamma) * one_minus_t * (1.0 + u);
    return 2.0 * alpha * std::log(1.0 - gamma) - 2.0 * (n - 1.0) * std::log(t) -
           2.0 * alpha * std::log(one_minus_u2);
}

// closed-form value without the scan cross-check (batch callers)
double cn_value(double alpha, double gamma, double M, int n) {
    if (n == 1) return M * M / std::pow(1.0 + gamma, 2.0 * alpha);
    const double disc = alpha * alpha * gamma * gamma + (n - 1.0) * (n - 1.0 + 2.0 * alpha);
    // 1 - t1 = 2a / (n-1+2a - g a + sqrt(disc)), cancellation-free
    const double one_minus_t1 = 2.0 * alpha / (n - 1.0 + 2.0 * alpha - gamma * alpha + std::sqrt(disc));
    const double t1 = 1.0 - one_minus_t1;
    const double lm = log_mu_shifted(alpha, gamma, n, t1, one_minus_t1);
    return (M * M) / (double(n) * n) * std::exp(lm);
}

} // namespace

double cn_closed(double alpha, double gamma, double M, int n) {
    if (n < 1) throw std::invalid_argument("coefficient index n must be at least 1");
    if (!(M > 0.0)) throw std::invalid_argument("norm bound M must be positive");
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    if (!(gamma >= 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma must lie in [0,1)");
    if (n == 1) return cn_value(alpha, gamma, M, 1);

    const double closed = cn_value(alpha, gamma, M, n);
    // independent scan of log mu over (0,1), then golden polish of the bracket
    auto lm = [&](double t) { return log_mu_shifted(alpha, gamma, n, t, 1.0 - t); };
    const MinimizeResult scan = minimize_scan_golden(lm, 0.0, 1.0, 100000, 1e-12);
    const double scanned = (M * M) / (double(n) * n) * std::exp(scan.value);
    if (std::abs(scanned - closed) > 1e-8 * std::abs(closed))
        throw consistency_error("closed-form coefficient bound disagrees with its scan cross-check");
    return closed;
}

AsymptoticReport asymptotic_check(double alpha, double M, int n_max) {
    if (!(alpha >= 1.0)) throw std::invalid_argument("asymptotic check requires alpha >= 1");
    if (!(M > 0.0)) throw std::invalid_argument("norm bound M must be positive");
    if (n_max < 8) throw std::invalid_argument("n_max too small for a plateau check");

    AsymptoticReport rep;
    rep.ratios.resize(n_max - 1);
    parallel_for(2, n_max + 1, 0, [&](int n) {
        const double cn = cn_value(alpha, 0.0, M, n);
        rep.ratios[n - 2] = cn / std::pow(double(n), 2.0 * alpha - 2.0);
    });
    rep.sup_ratio = *std::max_element(rep.ratios.begin(), rep.ratios.end());
    rep.last_ratio = rep.ratios.back();

    auto window_max = [&](int nlo, int nhi) {
        double m = -kInf;
        for (int n = nlo; n <= nhi; ++n) m = std::max(m, rep.ratios[n - 2]);
        return m;
    };
    const double recent = window_max(n_max / 2, n_max);
    const double earlier = window_max(std::max(2, n_max / 4), n_max / 2);
    rep.plateau_ok = std::abs(recent - earlier) <= 0.05 * earlier;
    return rep;
}

} // namespace bloch
