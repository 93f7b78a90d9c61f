#include "blochbohr/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "blochbohr/blochnorm.hpp"
#include "blochbohr/coeffs.hpp"
#include "blochbohr/domains.hpp"
#include "blochbohr/radii.hpp"
#include "blochbohr/series.hpp"
#include "blochbohr/tables.hpp"

namespace bloch {

namespace {

using nlohmann::json;

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> v;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const auto next = s.find(',', pos);
        const std::string tok =
            s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (!tok.empty()) {
            std::size_t used = 0;
            double x = 0.0;
            try {
                x = std::stod(tok, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad number in list: " + tok);
            }
            if (used != tok.size()) throw std::invalid_argument("bad number in list: " + tok);
            v.push_back(x);
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return v;
}

void write_payload(const std::string& out_path, std::ostream& fallback,
                   const std::string& payload) {
    if (out_path.empty()) {
        fallback << payload;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output path: " + out_path);
    f << payload;
    if (!f) throw std::runtime_error("failed while writing " + out_path);
}

void merge_radius(json& j, const RadiusResult& r) {
    j["radius"] = r.radius;
    j["residual"] = r.residual;
    j["bracket_lo"] = r.bracket_lo;
    j["bracket_hi"] = r.bracket_hi;
    j["sign_changes"] = r.sign_changes;
    j["iterations"] = r.iterations;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// gathered flag state for the radius subcommand
struct RadiusQuery {
    double gamma = 0.0;
    double alpha = 1.0;
    double p = 1.0;
    double k = 0.5;
    double d = 0.0;
    double d1 = 0.0;
    std::string map_coeffs; // conformal target for the integral equation
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bloch-type seminorms, Bohr radii and coefficient bounds on shifted disks"};
    app.require_subcommand(1);

    std::string out_path;
    std::string format = "csv";
    bool check = false;
    double tol = 1e-5;
    int threads = 0;
    app.add_option("--out", out_path, "write to this path instead of stdout");
    app.add_option("--format", format, "table output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--check", check, "compare against the stored published values");
    app.add_option("--tol", tol, "check tolerance (default 1e-5)");
    app.add_option("--threads", threads, "worker threads, 0 = hardware count");

    // tables ----------------------------------------------------------------
    auto* t_sub = app.add_subcommand("tables", "reproduce a published radius table");
    t_sub->fallthrough();
    std::string table_id;
    std::string t_gammas, t_alphas;
    double t_p = 1.0, t_d1 = 0.0;
    t_sub->add_option("table_id", table_id,
                      "T1_classical | T2_T3_bloch_bohr | T4_upper_R | T5_T6_p_radius | "
                      "T7_sense_preserving")
        ->required();
    auto* t_gopt = t_sub->add_option("--gammas", t_gammas, "comma separated gamma grid");
    auto* t_aopt = t_sub->add_option("--alphas", t_alphas, "comma separated alpha grid");
    auto* t_popt = t_sub->add_option("--p", t_p, "coefficient norm exponent (T5/T6/T7)");
    auto* t_dopt = t_sub->add_option("--d1", t_d1, "dilatation offset (T7)");

    // radius ----------------------------------------------------------------
    auto* r_sub = app.add_subcommand("radius", "solve one radius equation");
    r_sub->fallthrough();
    std::string equation;
    RadiusQuery rq;
    r_sub->add_option("equation", equation,
                      "classical | integral | shifted | upperR | p_radius | bloch_type | "
                      "sense_preserving")
        ->required();
    auto* r_gopt = r_sub->add_option("--gamma", rq.gamma, "shift parameter in [0,1)");
    auto* r_aopt = r_sub->add_option("--alpha", rq.alpha, "density exponent");
    r_sub->add_option("--p", rq.p, "coefficient norm exponent (default 1)");
    r_sub->add_option("--k", rq.k, "dilatation bound in (0,1) (bloch_type)");
    r_sub->add_option("--d", rq.d, "dilatation offset in [0,1] (bloch_type)");
    r_sub->add_option("--d1", rq.d1, "dilatation offset in [0,1) (sense_preserving)");
    auto* r_mopt = r_sub->add_option("--map", rq.map_coeffs,
                                     "comma separated real Taylor coefficients of a conformal "
                                     "map (integral equation only)");

    // verify-majorant ---------------------------------------------------------
    auto* v_sub = app.add_subcommand("verify-majorant",
                                     "evaluate a catalog majorant sum with a tail certificate");
    v_sub->fallthrough();
    std::string v_fn;
    double v_gamma = 0.0, v_alpha = 0.0, v_lambda = 0.0, v_r = 0.0, v_p = 1.0;
    int v_trunc = 2048;
    bool v_at_upper = false, v_expect_one = false;
    v_sub->add_option("function", v_fn, "f_gamma_alpha | f_gamma_geometric | F_lambda")
        ->required();
    auto* v_gopt = v_sub->add_option("--gamma", v_gamma, "shift parameter");
    auto* v_aopt = v_sub->add_option("--alpha", v_alpha, "density exponent");
    auto* v_lopt = v_sub->add_option("--lambda", v_lambda, "dilatation parameter (F_lambda)");
    auto* v_ropt = v_sub->add_option("--r", v_r, "evaluation radius in [0,1)");
    v_sub->add_flag("--at-upper-R", v_at_upper, "evaluate at the closed-form upper bound radius");
    v_sub->add_option("--p", v_p, "majorant exponent (default 1)");
    v_sub->add_option("--truncation", v_trunc, "series truncation order (default 2048)");
    v_sub->add_flag("--expect-one", v_expect_one, "assert |value - 1| <= tail + 1e-6");

    // figure-data -------------------------------------------------------------
    auto* f_sub = app.add_subcommand("figure-data", "emit sampled curves for plotting");
    f_sub->fallthrough();
    std::string figure_id;
    std::string f_alphas;
    FigureSpec fig;
    f_sub->add_option("figure", figure_id, "H_shifted | H1 | H3 | circles_Cgamma | rho_gamma")
        ->required();
    f_sub->add_option("--gamma", fig.gamma, "shift parameter for the H curves (default 0.1)");
    auto* f_aopt = f_sub->add_option("--alphas", f_alphas, "comma separated alpha values");
    f_sub->add_option("--p", fig.p, "coefficient norm exponent (H1, H3)");
    f_sub->add_option("--d1", fig.d1, "dilatation offset (H3)");

    // coeffs ------------------------------------------------------------------
    auto* c_sub = app.add_subcommand("coeffs", "coefficient bounds and Landau quantities");
    c_sub->fallthrough();
    c_sub->require_subcommand(1);

    int cq_n = 2, cq_trunc = 256, cq_nmax = 64;
    double cq_M = 1.0, cq_lambda = 0.5, cq_gamma = 0.0, cq_alpha = 1.0;
    std::string cq_domain = "unit";

    auto* c_mu = c_sub->add_subcommand("mu", "centered coefficient bound infimum");
    auto* c_C = c_sub->add_subcommand("C", "origin coefficient bound infimum");
    for (auto* s : {c_mu, c_C}) {
        s->fallthrough();
        s->add_option("--n", cq_n, "coefficient index")->required();
        s->add_option("--M", cq_M, "norm bound")->required();
        s->add_option("--lambda", cq_lambda, "subtracted first-coefficient bound")->required();
        s->add_option("--gamma", cq_gamma, "shift parameter")->required();
        s->add_option("--alpha", cq_alpha, "density exponent")->required();
    }

    auto* c_landau = c_sub->add_subcommand("landau", "univalence and covering radii");
    c_landau->fallthrough();
    c_landau->add_option("--alpha", cq_alpha, "density exponent")->required();
    c_landau->add_option("--lambda", cq_lambda, "Jacobian root at the center")->required();
    c_landau->add_option("--gamma", cq_gamma, "shift parameter")->required();
    c_landau->add_option("--M", cq_M, "norm bound")->required();
    c_landau->add_option("--truncation", cq_trunc, "initial series truncation (default 256)");

    auto* c_an = c_sub->add_subcommand("an", "integral-form coefficient bound");
    c_an->fallthrough();
    c_an->add_option("--n", cq_n, "coefficient index")->required();
    c_an->add_option("--M", cq_M, "norm bound")->required();
    c_an->add_option("--alpha", cq_alpha, "density exponent")->required();
    c_an->add_option("--domain", cq_domain, "unit | shifted")
        ->check(CLI::IsMember({"unit", "shifted"}));
    c_an->add_option("--gamma", cq_gamma, "shift parameter (shifted domain)");

    auto* c_cn = c_sub->add_subcommand("cn", "closed-form coefficient bound");
    c_cn->fallthrough();
    c_cn->add_option("--n", cq_n, "coefficient index")->required();
    c_cn->add_option("--M", cq_M, "norm bound")->required();
    c_cn->add_option("--gamma", cq_gamma, "shift parameter")->required();
    c_cn->add_option("--alpha", cq_alpha, "density exponent")->required();

    auto* c_asym = c_sub->add_subcommand("asymptotic", "growth-rate plateau check");
    c_asym->fallthrough();
    c_asym->add_option("--alpha", cq_alpha, "density exponent (>= 1)")->required();
    c_asym->add_option("--M", cq_M, "norm bound")->required();
    c_asym->add_option("--n-max", cq_nmax, "largest coefficient index (default 64)");

    // norm-estimate -------------------------------------------------------------
    auto* n_sub = app.add_subcommand("norm-estimate", "grid estimate of a catalog seminorm");
    n_sub->fallthrough();
    std::string n_fn, n_domain = "unit";
    double n_gamma = 0.0, n_alpha = 0.0, n_t = 0.0, n_lambda = 0.0, n_beta = 0.0;
    double n_exponent = 1.0, n_domain_gamma = 0.0, n_bdist = 1e-6;
    int n_radial = 128, n_angular = 256;
    bool n_type = false;
    n_sub->add_option("function", n_fn,
                      "F_alpha_t | f_gamma_alpha | F_lambda | example_2_2 | example_2_7 | "
                      "f_gamma_geometric")
        ->required();
    auto* n_gopt = n_sub->add_option("--gamma", n_gamma, "function parameter gamma");
    auto* n_aopt = n_sub->add_option("--alpha", n_alpha, "function parameter alpha");
    auto* n_topt = n_sub->add_option("--t", n_t, "function parameter t");
    auto* n_lopt = n_sub->add_option("--lambda", n_lambda, "function parameter lambda");
    auto* n_bopt = n_sub->add_option("--beta", n_beta, "function parameter beta");
    n_sub->add_option("--exponent", n_exponent, "seminorm density exponent (default 1)");
    n_sub->add_flag("--type", n_type, "use the Jacobian-root integrand");
    n_sub->add_option("--domain", n_domain, "unit | shifted")
        ->check(CLI::IsMember({"unit", "shifted"}));
    n_sub->add_option("--domain-gamma", n_domain_gamma, "gamma of the shifted domain");
    n_sub->add_option("--radial", n_radial, "radial grid levels (default 128)");
    n_sub->add_option("--angular", n_angular, "angular grid nodes (default 256)");
    n_sub->add_option("--boundary-distance", n_bdist,
                      "absolute distance of the outermost level (default 1e-6)");

    try {
        std::vector<const char*> argv;
        argv.push_back("blochbohr");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());

        // ---- tables
        if (t_sub->parsed()) {
            if (check) {
                if (t_gopt->count() || t_aopt->count() || t_popt->count() || t_dopt->count())
                    throw std::invalid_argument("check mode uses the published grids only");
                const CheckReport rep = check_published(table_id, threads, tol);
                std::string payload = "row,col,expected,computed,diff,status\n";
                char line[160];
                for (const auto& c : rep.cells) {
                    std::snprintf(line, sizeof line, "%s,%s,%.6f,%.6f,%.3g,%s\n",
                                  c.row_label.c_str(), c.col_label.c_str(), c.expected, c.got,
                                  c.diff, c.ok ? "ok" : "MISMATCH");
                    payload += line;
                }
                std::snprintf(line, sizeof line, "# %zu cells, %d mismatches\n", rep.cells.size(),
                              rep.mismatches);
                payload += line;
                write_payload(out_path, out, payload);
                return rep.mismatches == 0 ? 0 : 1;
            }
            TableSpec spec = published_spec(table_id);
            if (t_gopt->count()) spec.gammas = parse_list(t_gammas);
            if (t_aopt->count()) spec.alphas = parse_list(t_alphas);
            if (t_popt->count()) spec.p = t_p;
            if (t_dopt->count()) spec.d1 = t_d1;
            const TableData data = generate_table(spec, threads);
            write_payload(out_path, out, format == "json" ? render_json(data) : render_csv(data));
            return 0;
        }

        // ---- radius
        if (r_sub->parsed()) {
            auto need = [&](const CLI::Option* o, const char* name) {
                if (!o->count())
                    throw std::invalid_argument(std::string("missing required flag --") + name);
            };
            json j{{"equation", equation}};
            if (equation == "classical") {
                need(r_gopt, "gamma");
                j["gamma"] = rq.gamma;
                j["radius"] = classical_bohr_radius(rq.gamma);
                j["closed_form"] = true;
            } else if (equation == "upperR") {
                need(r_gopt, "gamma");
                need(r_aopt, "alpha");
                j["gamma"] = rq.gamma;
                j["alpha"] = rq.alpha;
                j["radius"] = upper_bound_R(rq.gamma, rq.alpha);
                j["closed_form"] = true;
            } else if (equation == "integral") {
                need(r_aopt, "alpha");
                DomainSpec dom = DomainSpec::unit();
                if (r_mopt->count()) {
                    const auto cs = parse_list(rq.map_coeffs);
                    if (cs.empty())
                        throw std::invalid_argument("empty conformal map coefficient list");
                    PowerSeries phi;
                    phi.c.assign(cs.begin(), cs.end());
                    dom = DomainSpec::conformal(phi);
                } else if (r_gopt->count()) {
                    dom = DomainSpec::shifted(rq.gamma);
                }
                j["alpha"] = rq.alpha;
                j["domain"] = dom.describe();
                const IntegralRadiusResult ir = bloch_bohr_radius_integral(dom, rq.alpha);
                j["limit_proxy"] = ir.limit_proxy;
                j["hypothesis_ok"] = ir.hypothesis_ok;
                if (!ir.root) {
                    j["radius"] = nullptr;
                    write_payload(out_path, out, dump(j));
                    err << "no root certified: the boundary-limit hypothesis fails or the "
                           "level is never reached\n";
                    return 3;
                }
                merge_radius(j, *ir.root);
                write_payload(out_path, out, dump(j));
                return 0;
            } else if (equation == "shifted") {
                need(r_gopt, "gamma");
                need(r_aopt, "alpha");
                j["gamma"] = rq.gamma;
                j["alpha"] = rq.alpha;
                merge_radius(j, bloch_bohr_radius_shifted(rq.gamma, rq.alpha));
            } else if (equation == "p_radius") {
                need(r_gopt, "gamma");
                need(r_aopt, "alpha");
                j["gamma"] = rq.gamma;
                j["alpha"] = rq.alpha;
                j["p"] = rq.p;
                merge_radius(j, p_bloch_bohr_radius(rq.gamma, rq.alpha, rq.p));
            } else if (equation == "bloch_type") {
                need(r_gopt, "gamma");
                need(r_aopt, "alpha");
                j["gamma"] = rq.gamma;
                j["alpha"] = rq.alpha;
                j["p"] = rq.p;
                j["k"] = rq.k;
                j["d"] = rq.d;
                merge_radius(j, bloch_type_radius(rq.gamma, rq.alpha, rq.p, rq.k, rq.d));
            } else if (equation == "sense_preserving") {
                need(r_gopt, "gamma");
                need(r_aopt, "alpha");
                j["gamma"] = rq.gamma;
                j["alpha"] = rq.alpha;
                j["p"] = rq.p;
                j["d1"] = rq.d1;
                merge_radius(j, sense_preserving_radius(rq.gamma, rq.alpha, rq.p, rq.d1));
            } else {
                throw std::invalid_argument("unknown radius equation: " + equation);
            }
            write_payload(out_path, out, dump(j));
            return 0;
        }

        // ---- verify-majorant
        if (v_sub->parsed()) {
            std::map<std::string, double> params;
            if (v_gopt->count()) params["gamma"] = v_gamma;
            if (v_aopt->count()) params["alpha"] = v_alpha;
            if (v_lopt->count()) params["lambda"] = v_lambda;
            if (!(v_p >= 1.0)) throw std::invalid_argument("majorant exponent p must be >= 1");
            if (v_trunc < 1) throw std::invalid_argument("truncation must be positive");

            double r = 0.0;
            if (v_at_upper && v_ropt->count())
                throw std::invalid_argument("give either --r or --at-upper-R, not both");
            if (v_at_upper) {
                if (!params.count("gamma") || !params.count("alpha"))
                    throw std::invalid_argument("--at-upper-R needs --gamma and --alpha");
                r = upper_bound_R(params["gamma"], params["alpha"]);
            } else if (v_ropt->count()) {
                r = v_r;
                if (!(r >= 0.0 && r < 1.0))
                    throw std::invalid_argument("radius must lie in [0,1)");
            } else {
                throw std::invalid_argument("missing --r (or --at-upper-R)");
            }

            const HarmonicMapSeries s =
                catalog_series(v_fn, params, static_cast<std::size_t>(v_trunc));
            const double tail =
                catalog_majorant_tail(v_fn, params, static_cast<std::size_t>(v_trunc), r);
            if (!std::isfinite(tail))
                throw tail_error("truncation tail not controlled at r=" + std::to_string(r));
            // the p = 1 tail dominates every p >= 1 term bound, so it certifies all p
            const double value = p_majorant_sum(s, r, v_p);

            json j{{"function", v_fn}, {"radius", r},          {"p", v_p},
                   {"truncation", v_trunc}, {"value", value},  {"tail_bound", tail}};
            for (const auto& [k, v] : params) j[k] = v;
            if (v_expect_one) {
                const bool ok = std::abs(value - 1.0) <= tail + 1e-6;
                j["expect_one_ok"] = ok;
                write_payload(out_path, out, dump(j));
                if (!ok) err << "majorant sum differs from 1 beyond the certified tail\n";
                return ok ? 0 : 1;
            }
            write_payload(out_path, out, dump(j));
            return 0;
        }

        // ---- figure-data
        if (f_sub->parsed()) {
            fig.figure_id = figure_id;
            if (f_aopt->count()) fig.alphas = parse_list(f_alphas);
            const TableData data = figure_data(fig, threads);
            write_payload(out_path, out, format == "json" ? render_json(data) : render_csv(data));
            return 0;
        }

        // ---- coeffs
        if (c_sub->parsed()) {
            json j;
            if (c_mu->parsed() || c_C->parsed()) {
                const CoeffBoundQuery q{cq_n, cq_M, cq_lambda, cq_gamma, cq_alpha};
                const InfimumResult res = c_mu->parsed() ? mu_infimum(q) : coeff_bound_C(q);
                j = json{{"op", c_mu->parsed() ? "mu" : "C"},
                         {"n", cq_n},
                         {"M", cq_M},
                         {"lambda", cq_lambda},
                         {"gamma", cq_gamma},
                         {"alpha", cq_alpha},
                         {"value", res.value},
                         {"minimizer", res.minimizer}};
            } else if (c_landau->parsed()) {
                j = json{{"op", "landau"},       {"alpha", cq_alpha}, {"lambda", cq_lambda},
                         {"gamma", cq_gamma},    {"M", cq_M},         {"truncation_requested", cq_trunc}};
                const auto lr = landau_radius(cq_alpha, cq_lambda, cq_gamma, cq_M, cq_trunc);
                if (!lr) {
                    j["rho0"] = nullptr;
                    j["error"] = "no univalence radius certified on (0,1)";
                    write_payload(out_path, out, dump(j));
                    err << "no univalence radius certified\n";
                    return 3;
                }
                j["rho0"] = lr->rho0;
                j["rho"] = lr->rho;
                j["truncation_used"] = lr->truncation;
                j["tail_bound"] = lr->tail_bound;
            } else if (c_an->parsed()) {
                DomainSpec dom =
                    (cq_domain == "shifted") ? DomainSpec::shifted(cq_gamma) : DomainSpec::unit();
                const InfimumResult res = an_bound(dom, cq_M, cq_alpha, cq_n);
                j = json{{"op", "an"},       {"domain", dom.describe()}, {"n", cq_n},
                         {"M", cq_M},        {"alpha", cq_alpha},        {"value", res.value},
                         {"minimizer", res.minimizer}};
            } else if (c_cn->parsed()) {
                const double v = cn_closed(cq_alpha, cq_gamma, cq_M, cq_n);
                j = json{{"op", "cn"},     {"n", cq_n},         {"M", cq_M},
                         {"gamma", cq_gamma}, {"alpha", cq_alpha}, {"value", v}};
                if (cq_n >= 2)
                    j["t1"] = cn_minimizer_t1(cq_alpha, cq_gamma, cq_n);
                else
                    j["t1"] = nullptr;
            } else if (c_asym->parsed()) {
                const AsymptoticReport rep = asymptotic_check(cq_alpha, cq_M, cq_nmax);
                j = json{{"op", "asymptotic"},        {"alpha", cq_alpha},
                         {"M", cq_M},                 {"n_max", cq_nmax},
                         {"sup_ratio", rep.sup_ratio}, {"last_ratio", rep.last_ratio},
                         {"plateau_ok", rep.plateau_ok}, {"ratios", rep.ratios}};
            }
            write_payload(out_path, out, dump(j));
            return 0;
        }

        // ---- norm-estimate
        if (n_sub->parsed()) {
            std::map<std::string, double> params;
            if (n_gopt->count()) params["gamma"] = n_gamma;
            if (n_aopt->count()) params["alpha"] = n_alpha;
            if (n_topt->count()) params["t"] = n_t;
            if (n_lopt->count()) params["lambda"] = n_lambda;
            if (n_bopt->count()) params["beta"] = n_beta;

            const HarmonicFunctionHandle h = catalog_function(n_fn, params);
            const DomainSpec dom = (n_domain == "shifted") ? DomainSpec::shifted(n_domain_gamma)
                                                           : DomainSpec::unit();
            const SupEstimate est =
                n_type ? estimate_bloch_type_seminorm(h, dom, n_exponent, n_radial, n_angular,
                                                      n_bdist)
                       : estimate_bloch_seminorm(h, dom, n_exponent, n_radial, n_angular, n_bdist);

            json jp;
            for (const auto& [k, v] : params) jp[k] = v;
            const double origin_abs = std::abs(h.value_at_origin);
            json j{{"function", n_fn},
                   {"params", jp},
                   {"domain", dom.describe()},
                   {"exponent", n_exponent},
                   {"type_seminorm", n_type},
                   {"seminorm_estimate", est.value},
                   {"argmax", {est.argmax_point.real(), est.argmax_point.imag()}},
                   {"grid_radii", est.grid_radii},
                   {"grid_angles", est.grid_angles},
                   {"boundary_distance", n_bdist},
                   {"value_at_origin_abs", origin_abs},
                   {"norm_estimate", origin_abs + est.value}};
            write_payload(out_path, out, dump(j));
            return 0;
        }

        err << "no subcommand given\n";
        return 2;
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const tail_error& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const consistency_error& e) {
        err << "error: " << e.what() << "\n";
        return 5;
    } catch (const quadrature_error& e) {
        err << "error: " << e.what() << "\n";
        return 5;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 5;
    }
}

} // namespace bloch
