#include "blochbohr/radii.hpp"

#include <cmath>

namespace bloch {

std::optional<RadiusResult> find_smallest_root(const std::function<double(double)>& f,
                                               int scan_points, const std::string& tag) {
    if (scan_points < 64) throw std::invalid_argument("find_smallest_root: need at least 64 scan points");
    const double eps = 1e-12;

    auto eval = [&](double r) {
        const double v = f(r);
        if (!std::isfinite(v)) throw std::runtime_error("find_smallest_root: non-finite value at r=" + std::to_string(r));
        return v;
    };

    const double lo_end = eps, hi_end = 1.0 - eps;
    const double step = (hi_end - lo_end) / double(scan_points - 1);

    double prev_r = lo_end, prev_v = eval(lo_end);
    int sign_changes = 0;
    double blo = 0.0, bhi = 0.0, vlo = 0.0;
    bool found = false;
    for (int i = 1; i < scan_points; ++i) {
        const double r = (i == scan_points - 1) ? hi_end : lo_end + step * double(i);
        const double v = eval(r);
        if ((prev_v < 0.0 && v >= 0.0) || (prev_v > 0.0 && v <= 0.0) || (prev_v == 0.0 && v != 0.0)) {
            ++sign_changes;
            if (!found) {
                found = true;
                blo = prev_r;
                bhi = r;
                vlo = prev_v;
            }
        }
        prev_r = r;
        prev_v = v;
    }
    if (!found) return std::nullopt;

    RadiusResult res;
    res.equation_tag = tag;
    res.bracket_lo = blo;
    res.bracket_hi = bhi;
    res.sign_changes = sign_changes;
    double a = blo, b = bhi, fa = vlo;
    int iters = 0;
    while (b - a > 1e-14) {
        const double mid = 0.5 * (a + b);
        const double fm = eval(mid);
        ++iters;
        if ((fa <= 0.0 && fm <= 0.0) || (fa > 0.0 && fm > 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
        if (iters > 200) break;
    }
    res.radius = 0.5 * (a + b);
    res.residual = eval(res.radius);
    res.iterations = iters;
    return res;
}

double kp_constant(double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("K_p: p must be >= 1");
    return std::max(std::pow(2.0, 2.0 / p - 1.0), 1.0);
}

double classical_bohr_radius(double gamma) {
    if (!(gamma >= 0.0 && gamma < 1.0)) throw std::invalid_argument("classical radius: gamma must lie in [0,1)");
    return (1.0 + gamma) / (3.0 + gamma);
}

namespace {

constexpr double kPi2 = M_PI * M_PI;

void check_gamma_alpha(double gamma, double alpha) {
    if (!(gamma >= 0.0 && gamma < 1.0)) throw std::invalid_argument("radius: gamma must lie in [0,1)");
    if (!(alpha >= 0.0)) throw std::invalid_argument("radius: alpha must be nonnegative");
}

// (1 - ((1-g)r+g)^2)^(2a), with the cancellation-safe split
// 1-u^2 = (1-u)(1+u), 1-u = (1-g)(1-r).
double density_bound_pow(double gamma, double alpha, double r) {
    const double u = (1.0 - gamma) * r + gamma;
    const double one_minus_u2 = (1.0 - gamma) * (1.0 - r) * (1.0 + u);
    return std::pow(one_minus_u2, 2.0 * alpha);
}

RadiusResult solve_normalized(const std::function<double(double)>& h, double at_zero,
                              const std::string& tag) {
    auto norm = [&](double r) { return h(r) / at_zero; };
    auto res = find_smallest_root(norm, 4096, tag);
    if (!res) throw std::runtime_error("radius: defining function has no sign change (" + tag + ")");
    return *res;
}

} // namespace

IntegralRadiusResult bloch_bohr_radius_integral(const DomainSpec& domain, double alpha) {
    if (!(alpha >= 0.0)) throw std::invalid_argument("integral radius: alpha must be nonnegative");
    const double target = 6.0 / kPi2;

    IntegralRadiusResult out;
    if (alpha == 0.0) {
        // integrand power is 1: I(r) = r^2 exactly
        out.limit_proxy = (1.0 - 1e-4) * (1.0 - 1e-4);
        out.hypothesis_ok = out.limit_proxy > target;
        if (out.hypothesis_ok) {
            auto res = find_smallest_root([&](double r) { return r * r / target - 1.0; }, 4096, "integral");
            out.root = res;
        }
        return out;
    }

    out.limit_proxy = circle_integral_I(domain, 1.0 - 1e-4, alpha);
    out.hypothesis_ok = out.limit_proxy > target;
    if (!out.hypothesis_ok) return out;

    // The proxy already certifies a crossing at or below 1 - 1e-4, and the
    // integral grows with r, so the scan can stop there; points past it would
    // push the quadrature against the boundary guard for nothing.
    auto fn = [&](double r) {
        return circle_integral_I(domain, std::min(r, 1.0 - 1e-4), alpha) / target - 1.0;
    };
    out.root = find_smallest_root(fn, 4096, "integral");
    return out;
}

double shifted_defining_value(double gamma, double alpha, double r) {
    check_gamma_alpha(gamma, alpha);
    const double pref = std::pow(1.0 - gamma, 2.0 * alpha);
    return 6.0 * density_bound_pow(gamma, alpha, r) - kPi2 * pref * r * r;
}

double p_defining_value(double gamma, double alpha, double p, double r) {
    check_gamma_alpha(gamma, alpha);
    const double kp = kp_constant(p);
    const double pref = std::pow(1.0 - gamma, 2.0 * alpha);
    return 6.0 * density_bound_pow(gamma, alpha, r) - kp * kPi2 * pref * r * r;
}

double sense_preserving_defining_value(double gamma, double alpha, double p, double d1, double r) {
    check_gamma_alpha(gamma, alpha);
    if (!(d1 >= 0.0 && d1 < 1.0))
        throw std::invalid_argument("sense preserving radius: d1 must lie in [0,1)");
    const double kp = kp_constant(p);
    const double pref = std::pow(1.0 - gamma, 2.0 * alpha);
    const double mix = (1.0 + d1 * r) * (1.0 + d1 * r) - (r + d1) * (r + d1);
    return 6.0 * density_bound_pow(gamma, alpha, r) * mix -
           2.0 * kp * kPi2 * (1.0 + d1) * (1.0 + d1) * pref * r * r;
}

RadiusResult bloch_bohr_radius_shifted(double gamma, double alpha) {
    check_gamma_alpha(gamma, alpha);
    auto H = [=](double r) { return shifted_defining_value(gamma, alpha, r); };
    return solve_normalized(H, 6.0 * std::pow((1.0 - gamma) * (1.0 + gamma), 2.0 * alpha), "shifted");
}

double upper_bound_R(double gamma, double alpha) {
    if (!(gamma >= 0.0 && gamma < 1.0)) throw std::invalid_argument("upper bound R: gamma must lie in [0,1)");
    if (!(alpha > 1.0)) throw std::invalid_argument("upper bound R: requires alpha > 1");
    const double inner = std::pow(1.0 + gamma, 1.0 - alpha) + 2.0 * (alpha - 1.0);
    const double root = std::sqrt(1.0 - (1.0 - gamma) * std::pow(inner, 1.0 / (1.0 - alpha)));
    return (-gamma + root) / (1.0 - gamma);
}

RadiusResult p_bloch_bohr_radius(double gamma, double alpha, double p) {
    check_gamma_alpha(gamma, alpha);
    auto H1 = [=](double r) { return p_defining_value(gamma, alpha, p, r); };
    return solve_normalized(H1, 6.0 * std::pow((1.0 - gamma) * (1.0 + gamma), 2.0 * alpha), "p_radius");
}

RadiusResult bloch_type_radius(double gamma, double alpha, double p, double k, double d) {
    check_gamma_alpha(gamma, alpha);
    if (!(k > 0.0 && k < 1.0))
        throw std::invalid_argument("bloch type radius: k must lie in (0,1); k=1 is the sense-preserving case");
    if (!(d >= 0.0 && d <= 1.0)) throw std::invalid_argument("bloch type radius: d must lie in [0,1]");
    const double kp = kp_constant(p);
    const double pref = std::pow(1.0 - gamma, 2.0 * alpha);
    auto H2 = [=](double r) {
        const double mix = (1.0 + d * r) * (1.0 + d * r) - k * k * (r + d) * (r + d);
        return 6.0 * density_bound_pow(gamma, alpha, r) * mix -
               kp * (1.0 + k * k) * kPi2 * (1.0 + d) * (1.0 + d) * pref * r * r;
    };
    const double at0 = 6.0 * std::pow((1.0 - gamma) * (1.0 + gamma), 2.0 * alpha) * (1.0 - k * k * d * d);
    return solve_normalized(H2, at0, "bloch_type");
}

RadiusResult sense_preserving_radius(double gamma, double alpha, double p, double d1) {
    check_gamma_alpha(gamma, alpha);
    auto H3 = [=](double r) { return sense_preserving_defining_value(gamma, alpha, p, d1, r); };
    const double at0 = 6.0 * std::pow((1.0 - gamma) * (1.0 + gamma), 2.0 * alpha) * (1.0 - d1 * d1);
    return solve_normalized(H3, at0, "sense_preserving");
}

SweepReport monotonicity_sweep(const std::string& equation_tag, const std::vector<double>& gammas,
                               double alpha, double p, double k, double d) {
    for (std::size_t i = 1; i < gammas.size(); ++i)
        if (!(gammas[i] > gammas[i - 1]))
            throw std::invalid_argument("monotonicity_sweep: gammas must be strictly increasing");

    SweepReport rep;
    for (double g : gammas) {
        double r;
        if (equation_tag == "classical") r = classical_bohr_radius(g);
        else if (equation_tag == "shifted") r = bloch_bohr_radius_shifted(g, alpha).radius;
        else if (equation_tag == "p_radius") r = p_bloch_bohr_radius(g, alpha, p).radius;
        else if (equation_tag == "bloch_type") r = bloch_type_radius(g, alpha, p, k, d).radius;
        else if (equation_tag == "sense_preserving") r = sense_preserving_radius(g, alpha, p, d).radius;
        else throw std::invalid_argument("monotonicity_sweep: unknown equation tag " + equation_tag);
        rep.radii.push_back(r);
    }
    rep.nondecreasing = true;
    for (std::size_t i = 1; i < rep.radii.size(); ++i)
        if (rep.radii[i] < rep.radii[i - 1]) rep.nondecreasing = false;
    return rep;
}

} // namespace bloch
