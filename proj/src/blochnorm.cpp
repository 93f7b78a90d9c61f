#include "blochbohr/blochnorm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "blochbohr/parallel.hpp"

namespace bloch {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void disk_geometry(const DomainSpec& domain, cx& center, double& radius) {
    if (domain.kind == DomainKind::conformal)
        throw std::invalid_argument("grid sampling needs a disk-shaped domain");
    center = domain.center();
    radius = domain.radius();
}

[[noreturn]] void overflow_at(const char* what, cx z) {
    std::ostringstream os;
    os << what << " overflowed at point (" << z.real() << ", " << z.imag() << ")";
    throw std::runtime_error(os.str());
}

double seminorm_integrand(const HarmonicFunctionHandle& f, const DomainSpec& domain, double alpha,
                          cx z) {
    const double hp = std::abs(f.h_prime(z));
    const double gp = std::abs(f.g_prime(z));
    if (!std::isfinite(hp) || !std::isfinite(gp)) overflow_at("seminorm integrand", z);
    return (hp + gp) / std::pow(hyperbolic_density(domain, z), alpha);
}

// sqrt(|J|) with |J| written as ||h'|-|g'|| (|h'|+|g'|); the factored form
// keeps sqrt(|J|) <= |h'|+|g'| under rounding even when the two moduli tie
double type_integrand(const HarmonicFunctionHandle& f, const DomainSpec& domain, double alpha,
                      cx z) {
    const double hp = std::abs(f.h_prime(z));
    const double gp = std::abs(f.g_prime(z));
    if (!std::isfinite(hp) || !std::isfinite(gp)) overflow_at("type integrand", z);
    const double jac = std::abs(hp - gp) * (hp + gp);
    return std::sqrt(jac) / std::pow(hyperbolic_density(domain, z), alpha);
}

using Integrand = std::function<double(cx)>;

SupEstimate sup_over_grid(const Integrand& integrand, const DomainSpec& domain, int radial_levels,
                          int angular_nodes, double boundary_distance) {
    if (radial_levels < 8 || angular_nodes < 8)
        throw std::invalid_argument("grid must have at least 8 radial levels and 8 angles");
    if (!(boundary_distance > 0.0)) throw std::invalid_argument("boundary distance must be positive");

    cx center;
    double radius = 0.0;
    disk_geometry(domain, center, radius);
    if (!(boundary_distance < radius))
        throw std::invalid_argument("boundary distance exceeds the domain radius");

    struct LevelBest {
        double value = -kInf;
        cx point;
    };
    std::vector<LevelBest> best(radial_levels);
    const double ratio = boundary_distance / radius;

    parallel_for(0, radial_levels, 0, [&](int j) {
        // distance to the boundary shrinks geometrically from R (center) down
        // to the requested offset at the outermost level
        const double dist = radius * std::pow(ratio, double(j) / (radial_levels - 1));
        const double s = radius - dist;
        LevelBest lb;
        for (int k = 0; k < angular_nodes; ++k) {
            const double theta = 2.0 * M_PI * k / angular_nodes;
            const cx z = center + s * cx(std::cos(theta), std::sin(theta));
            const double v = integrand(z);
            if (v > lb.value) {
                lb.value = v;
                lb.point = z;
            }
        }
        best[j] = lb;
    });

    SupEstimate est;
    est.grid_radii = radial_levels;
    est.grid_angles = angular_nodes;
    est.value = -kInf;
    for (const auto& lb : best) {
        if (lb.value > est.value) {
            est.value = lb.value;
            est.argmax_point = lb.point;
        }
    }
    // consistency re-check: the reported value must reproduce at the argmax
    const double recheck = integrand(est.argmax_point);
    if (recheck != est.value) throw std::runtime_error("sup estimate failed its argmax re-check");
    return est;
}

double require_param(const std::map<std::string, double>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw std::invalid_argument("missing parameter: " + key);
    return it->second;
}

void require_keys(const std::map<std::string, double>& params,
                  std::initializer_list<const char*> keys) {
    for (const auto& kv : params) {
        bool known = false;
        for (const char* k : keys)
            if (kv.first == k) known = true;
        if (!known) throw std::invalid_argument("unknown parameter: " + kv.first);
    }
}

double check_gamma(double g) {
    if (!(g >= 0.0 && g < 1.0)) throw std::invalid_argument("gamma must lie in [0,1)");
    return g;
}

// ((1-w)^c - 1) evaluated stably for real w < 1 (expm1 keeps small c exact)
double pow_one_minus_m1(double w, double c) { return std::expm1(c * std::log1p(-w)); }

// primitives of the F_{alpha,t} family on the unit disk, real arguments
double f_alpha_t_hprim(double alpha, double w) {
    if (alpha == 0.5) return -std::log1p(-w);
    return pow_one_minus_m1(w, 0.5 - alpha) / (alpha - 0.5);
}

double f_alpha_t_gprim(double alpha, double t, double w) {
    if (alpha == 0.5) return -std::log1p(-w) - (1.0 - t) * w;
    if (alpha == 1.5) return w / (1.0 - w) + (1.0 - t) * std::log1p(-w);
    return f_alpha_t_hprim(alpha, w) - (1.0 - t) * pow_one_minus_m1(w, 1.5 - alpha) / (alpha - 1.5);
}

// w-series of f_alpha(w) = ((1-w^2)^{1-alpha} - 1)/(2(alpha-1)), with the
// log branch at alpha = 1; coefficients are nonnegative for alpha > 0
PowerSeries f_alpha_series(double alpha, std::size_t order) {
    PowerSeries s(order);
    if (alpha == 1.0) {
        for (std::size_t k = 1; 2 * k <= order; ++k) s.c[2 * k] = 1.0 / (2.0 * k);
        return s;
    }
    const PowerSeries u = binomial_power_series(1.0 - alpha, order / 2);
    const double scale = 1.0 / (2.0 * (alpha - 1.0));
    for (std::size_t k = 1; k < u.c.size(); ++k) s.c[2 * k] = scale * u.c[k];
    return s;
}

} // namespace

SupEstimate estimate_bloch_seminorm(const HarmonicFunctionHandle& f, const DomainSpec& domain,
                                    double alpha, int radial_levels, int angular_nodes,
                                    double boundary_distance) {
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    return sup_over_grid([&](cx z) { return seminorm_integrand(f, domain, alpha, z); }, domain,
                         radial_levels, angular_nodes, boundary_distance);
}

SupEstimate estimate_bloch_type_seminorm(const HarmonicFunctionHandle& f, const DomainSpec& domain,
                                         double alpha, int radial_levels, int angular_nodes,
                                         double boundary_distance) {
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    return sup_over_grid([&](cx z) { return type_integrand(f, domain, alpha, z); }, domain,
                         radial_levels, angular_nodes, boundary_distance);
}

HarmonicFunctionHandle catalog_function(const std::string& name,
                                        const std::map<std::string, double>& params) {
    HarmonicFunctionHandle out;
    out.label = name;

    if (name == "F_alpha_t") {
        require_keys(params, {"alpha", "t", "gamma"});
        const double alpha = require_param(params, "alpha");
        const double t = require_param(params, "t");
        const double gamma = check_gamma(require_param(params, "gamma"));
        if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
        if (!(t >= 0.0 && t < 1.0)) throw std::invalid_argument("t must lie in [0,1)");
        out.h_prime = [=](cx z) {
            const cx w = cx(1.0) - ((1.0 - gamma) * z + gamma);
            return (1.0 - gamma) * std::pow(w, cx(-(alpha + 0.5)));
        };
        out.g_prime = [=](cx z) {
            const cx phi = (1.0 - gamma) * z + gamma;
            const cx w = cx(1.0) - phi;
            return (1.0 - gamma) * std::pow(w, cx(-(alpha + 0.5))) * (t + (1.0 - t) * phi);
        };
        out.value_at_origin =
            cx(f_alpha_t_hprim(alpha, gamma) + f_alpha_t_gprim(alpha, t, gamma));
        return out;
    }

    if (name == "f_gamma_alpha") {
        require_keys(params, {"gamma", "alpha"});
        const double gamma = check_gamma(require_param(params, "gamma"));
        const double alpha = require_param(params, "alpha");
        if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
        out.h_prime = [=](cx z) {
            const cx phi = (1.0 - gamma) * z + gamma;
            return std::pow(1.0 - gamma, alpha) * phi / std::pow(cx(1.0) - phi * phi, cx(alpha));
        };
        out.g_prime = [](cx) { return cx(0.0); };
        out.value_at_origin = cx(0.0);
        return out;
    }

    if (name == "F_lambda") {
        require_keys(params, {"lambda"});
        const double lambda = require_param(params, "lambda");
        if (!(lambda >= 0.5 && lambda < 1.0)) throw std::invalid_argument("lambda must lie in [1/2,1)");
        out.h_prime = [](cx z) { return cx(1.0) / (cx(1.0) - z * z); };
        out.g_prime = [=](cx z) { return ((1.0 - lambda) * z + lambda) / (cx(1.0) - z * z); };
        out.value_at_origin = cx(1.0 - 2.0 * std::sqrt(lambda - lambda * lambda));
        return out;
    }

    if (name == "example_2_2") {
        require_keys(params, {"gamma", "beta", "alpha"});
        const double gamma = check_gamma(require_param(params, "gamma"));
        const double beta = require_param(params, "beta");
        const double alpha = require_param(params, "alpha");
        if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
        if (!(beta > 2.0 * alpha + 1.0))
            throw std::invalid_argument("example_2_2 requires beta > 2*alpha + 1");
        auto base = [=](cx z) {
            const cx w = cx(1.0) - ((1.0 - gamma) * z + gamma);
            return (1.0 - gamma) * std::pow(w, cx(-beta));
        };
        out.h_prime = [=](cx z) { return base(z) + cx(1.0); };
        out.g_prime = base;
        out.value_at_origin = cx(2.0 * std::pow(1.0 - gamma, 1.0 - beta) / (beta - 1.0));
        return out;
    }

    if (name == "example_2_7") {
        require_keys(params, {"gamma"});
        const double gamma = check_gamma(require_param(params, "gamma"));
        auto base = [=](cx z) {
            const cx phi = (1.0 - gamma) * z + gamma;
            const cx w = cx(1.0) - phi;
            return 2.0 * (1.0 - gamma) * std::exp((cx(1.0) + phi) / w) / (w * w);
        };
        out.h_prime = base;
        out.g_prime = base;
        out.value_at_origin = cx(2.0 * std::exp((1.0 + gamma) / (1.0 - gamma)));
        return out;
    }

    if (name == "f_gamma_geometric") {
        require_keys(params, {"gamma"});
        const double gamma = check_gamma(require_param(params, "gamma"));
        auto base = [=](cx z) {
            const cx w = cx(1.0) - z;
            return cx(1.0) / ((1.0 - gamma) * w * w);
        };
        out.h_prime = base;
        out.g_prime = base;
        out.value_at_origin = cx(1.0 / (1.0 - gamma));
        return out;
    }

    throw std::invalid_argument(
        "unknown catalog function '" + name +
        "' (expected F_alpha_t, f_gamma_alpha, F_lambda, example_2_2, example_2_7, "
        "f_gamma_geometric)");
}

HarmonicMapSeries catalog_series(const std::string& name,
                                 const std::map<std::string, double>& params, std::size_t order) {
    if (order < 2) throw std::invalid_argument("series order too small");

    if (name == "f_gamma_alpha") {
        require_keys(params, {"gamma", "alpha"});
        const double gamma = check_gamma(require_param(params, "gamma"));
        const double alpha = require_param(params, "alpha");
        if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
        PowerSeries h = compose_affine(f_alpha_series(alpha, order), cx(1.0 - gamma), cx(gamma), order);
        h.c[0] = cx(0.0); // normalization f(0) = 0
        const double scale = std::pow(1.0 - gamma, alpha - 1.0);
        for (auto& c : h.c) c *= scale;
        return HarmonicMapSeries(h, PowerSeries());
    }

    if (name == "F_lambda") {
        require_keys(params, {"lambda"});
        const double lambda = require_param(params, "lambda");
        if (!(lambda >= 0.5 && lambda < 1.0)) throw std::invalid_argument("lambda must lie in [1/2,1)");
        PowerSeries h(order), g(order);
        h.c[0] = cx(1.0 - 2.0 * std::sqrt(lambda - lambda * lambda));
        for (std::size_t n = 1; n <= order; ++n) {
            if (n % 2 == 1) {
                h.c[n] = cx(1.0 / n);
                g.c[n] = cx(lambda / n);
            } else {
                g.c[n] = cx((1.0 - lambda) / n);
            }
        }
        return HarmonicMapSeries(h, g);
    }

    if (name == "f_gamma_geometric") {
        require_keys(params, {"gamma"});
        const double gamma = check_gamma(require_param(params, "gamma"));
        PowerSeries h(order), g(order);
        h.c[0] = cx(1.0 / (1.0 - gamma));
        for (std::size_t n = 1; n <= order; ++n) h.c[n] = g.c[n] = cx(1.0 / (1.0 - gamma));
        return HarmonicMapSeries(h, g);
    }

    throw std::invalid_argument("no closed-form series for catalog function '" + name + "'");
}

double catalog_majorant_tail(const std::string& name,
                             const std::map<std::string, double>& params, std::size_t order,
                             double r) {
    if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("radius must lie in [0,1)");
    if (order < 8) throw std::invalid_argument("series order too small for a tail bound");

    auto geometric_tail = [](double head, double ratio) {
        return (ratio < 1.0) ? head * ratio / (1.0 - ratio) : kInf;
    };

    if (name == "f_gamma_alpha") {
        const double gamma = check_gamma(require_param(params, "gamma"));
        const double alpha = require_param(params, "alpha");
        const double scale = std::pow(1.0 - gamma, alpha - 1.0);
        const double q = (1.0 - gamma) * r + gamma;

        // mass never entering the composition: terms of the w-series beyond
        // order, summed at |w| = q with a geometric majorant on the ratios
        const PowerSeries fa = f_alpha_series(alpha, order + 2);
        const std::size_t K = order / 2;
        const double dK = std::abs(fa.c[2 * K]);
        const double dPrev = std::abs(fa.c[2 * K - 2]);
        const double rho_u = (dPrev > 0.0) ? std::max(dK / dPrev, 1.0) : 1.0;
        const double u_head = dK * std::pow(q, 2.0 * double(K));
        const double u_tail = geometric_tail(u_head, rho_u * q * q);

        // mass cut from the composed z-series beyond the retained order
        PowerSeries h = compose_affine(f_alpha_series(alpha, order), cx(1.0 - gamma), cx(gamma), order);
        const double cN = std::abs(h.c[order]);
        const double cPrev = std::abs(h.c[order - 1]);
        const double rho_z = (cPrev > 0.0) ? std::max(cN / cPrev, 1.0) : 1.0;
        const double z_tail = geometric_tail(cN * std::pow(r, double(order)), rho_z * r);

        return scale * (u_tail + z_tail);
    }

    if (name == "F_lambda") {
        // |a_n| + |b_n| <= 2/n termwise
        return 2.0 * std::pow(r, double(order + 1)) / ((order + 1) * (1.0 - r));
    }

    if (name == "f_gamma_geometric") {
        const double gamma = check_gamma(require_param(params, "gamma"));
        return 2.0 * std::pow(r, double(order + 1)) / ((1.0 - gamma) * (1.0 - r));
    }

    throw std::invalid_argument("no tail bound for catalog function '" + name + "'");
}

BlowupReport blowup_probe(const HarmonicFunctionHandle& f, const DomainSpec& domain, double alpha,
                          const std::vector<double>& approach_radii, bool type_integrand_flag) {
    if (approach_radii.size() < 2) throw std::invalid_argument("need at least two approach radii");
    double prev = 0.0;
    for (std::size_t i = 0; i < approach_radii.size(); ++i) {
        const double x = approach_radii[i];
        if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument("approach radii must lie in (0,1)");
        if (i > 0 && !(x > prev)) throw std::invalid_argument("approach radii must increase");
        prev = x;
    }

    BlowupReport rep;
    rep.values.reserve(approach_radii.size());
    for (double x : approach_radii) {
        const cx z(x, 0.0);
        rep.values.push_back(type_integrand_flag ? type_integrand(f, domain, alpha, z)
                                                 : seminorm_integrand(f, domain, alpha, z));
    }

    const std::size_t n = rep.values.size();
    const std::size_t window = std::min<std::size_t>(5, n);
    bool rising = true;
    for (std::size_t i = n - window + 1; i < n; ++i)
        if (!(rep.values[i] > rep.values[i - 1])) rising = false;
    rep.rejected = rising && rep.values.back() > 10.0 * rep.values.front();
    return rep;
}

AffineReport affine_invariance_check(const HarmonicFunctionHandle& f, cx a, cx b,
                                     const DomainSpec& domain, double alpha) {
    cx center;
    double radius = 0.0;
    disk_geometry(domain, center, radius);

    const double coef_sum = std::abs(a) + std::abs(b);
    const double jac_scale = std::sqrt(std::abs(std::norm(a) - std::norm(b)));

    AffineReport rep;
    rep.samples = 200;
    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < rep.samples; ++i) {
        const double s = std::sqrt(unif(rng)) * (1.0 - 1e-6);
        const double theta = 2.0 * M_PI * unif(rng);
        const cx z = center + radius * s * cx(std::cos(theta), std::sin(theta));

        const cx hp = f.h_prime(z), gp = f.g_prime(z);
        const cx Hp = a * hp + b * gp;
        const cx Gp = std::conj(a) * gp + std::conj(b) * hp;
        const double lam_a = std::pow(hyperbolic_density(domain, z), alpha);

        const double lhs = (std::abs(Hp) + std::abs(Gp)) / lam_a;
        const double rhs = coef_sum * (std::abs(hp) + std::abs(gp)) / lam_a;
        rep.max_inequality_gap = std::max(rep.max_inequality_gap, lhs - rhs);

        const double tf = std::sqrt(std::abs(std::abs(hp) - std::abs(gp)) *
                                    (std::abs(hp) + std::abs(gp))) /
                          lam_a;
        const double tF = std::sqrt(std::abs(std::abs(Hp) - std::abs(Gp)) *
                                    (std::abs(Hp) + std::abs(Gp))) /
                          lam_a;
        // normalize by the seminorm bound (>= expect always); a pure relative
        // error would blow up in the degenerate |a| = |b| case where expect = 0
        const double expect = jac_scale * tf;
        const double denom = std::max(rhs, 1e-300);
        rep.max_type_mismatch = std::max(rep.max_type_mismatch, std::abs(tF - expect) / denom);
    }
    return rep;
}

} // namespace bloch
