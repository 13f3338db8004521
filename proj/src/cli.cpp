#include "zetascope/cli.hpp"

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "zetascope/emit.hpp"
#include "zetascope/errors.hpp"
#include "zetascope/primes.hpp"
#include "zetascope/xi.hpp"
#include "zetascope/zeros.hpp"
#include "zetascope/zeta.hpp"

namespace zetascope {

namespace {

EvalMethod parse_method(const std::string& name) {
    if (name == "dirichlet") return EvalMethod::dirichlet;
    if (name == "eta") return EvalMethod::eta;
    if (name == "theta_integral") return EvalMethod::theta_integral;
    if (name == "reflection") return EvalMethod::reflection;
    return EvalMethod::auto_dispatch;
}

std::string run_eval(double re, double im, double tol, const std::string& method) {
    const EvalResult r = zeta(Cplx(re, im), tol, parse_method(method));
    return json_object({
               {"s", json_object({{"re", json_number(re)}, {"im", json_number(im)}})},
               {"value", json_object({{"re", json_number(r.value.real())},
                                      {"im", json_number(r.value.imag())}})},
               {"method", json_string(method_name(r.method))},
               {"terms_used", json_int(r.terms_used)},
               {"est_error", json_number(r.est_error)},
           }) +
           "\n";
}

std::string run_zeros(const ScanConfig& config) {
    std::vector<std::vector<std::string>> rows;
    for (const ZeroRecord& z : scan_zeros(config))
        rows.push_back({fmt_int(z.index), fmt_sig(z.t), fmt_sig(z.residual)});
    return emit_csv({"index", "t", "residual"}, rows);
}

std::string run_primes(double x) {
    const PrimeStats p = pnt_stats(x);
    return json_object({
               {"x", json_number(p.x)},
               {"pi_x", json_int(p.pi_x)},
               {"li_x", json_number(p.li_x)},
               {"x_over_ln_x", json_number(p.x_over_ln_x)},
               {"ratio_li", json_number(p.ratio_li)},
               {"ratio_pnt", json_number(p.ratio_pnt)},
               {"gap", json_number(p.gap)},
           }) +
           "\n";
}

std::string run_xi_check(double x_min, double x_max, double y_min, double y_max, int nx,
                         int ny) {
    if (nx < 2 || ny < 2) throw domain_error("xi-check: need nx, ny >= 2");
    double max_r = 0.0, sum_r = 0.0;
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const double x = x_min + (x_max - x_min) * i / (nx - 1);
            const double y = y_min + (y_max - y_min) * j / (ny - 1);
            const double r = xi_symmetry_residual(Cplx(x, y));
            max_r = std::max(max_r, r);
            sum_r += r;
        }
    }
    const long long points = static_cast<long long>(nx) * ny;
    return json_object({
               {"x_min", json_number(x_min)},
               {"x_max", json_number(x_max)},
               {"y_min", json_number(y_min)},
               {"y_max", json_number(y_max)},
               {"nx", json_int(nx)},
               {"ny", json_int(ny)},
               {"points", json_int(points)},
               {"max_residual", json_number(max_r)},
               {"mean_residual", json_number(sum_r / static_cast<double>(points))},
           }) +
           "\n";
}

std::string run_symmetry(const std::string& family, double c, double n_phase, double x_min,
                         double x_max, int samples) {
    const CurveFamily fam =
        family == "x_pow_x" ? CurveFamily::x_pow_x : CurveFamily::c_pow_x;
    const BranchCurve curve = branch_curves(fam, c, n_phase, x_min, x_max, samples);
    std::vector<std::vector<std::string>> rows;
    for (const CurveSample& s : curve.samples)
        rows.push_back({fmt_sig(s.x), fmt_sig(s.re), fmt_sig(s.im)});
    return emit_csv({"x", "re", "im"}, rows);
}

std::string run_grid(const Region& region, int nx, int ny, double tol,
                     const std::string& svg_path) {
    const GridField field = grid_eval(region, nx, ny, tol);
    if (!svg_path.empty()) {
        const std::string svg = emit_svg(field, extract_zero_curves(field));
        std::ofstream out(svg_path, std::ios::binary);
        if (!out || !(out << svg))
            throw domain_error("grid: cannot write " + svg_path);
    }
    std::vector<std::vector<std::string>> rows;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            rows.push_back({fmt_sig(field.x_at(i)), fmt_sig(field.y_at(j)),
                            fmt_sig(field.re_values[static_cast<size_t>(field.idx(i, j))]),
                            fmt_sig(field.im_values[static_cast<size_t>(field.idx(i, j))])});
    return emit_csv({"x", "y", "re", "im"}, rows);
}

std::string run_table13(int k_max, const ScanConfig& config) {
    std::vector<std::vector<std::string>> rows;
    for (const Table13Row& row : table13(k_max, config))
        rows.push_back({fmt_int(row.k), fmt_int(row.primes_up_to), fmt_sig(row.t_k)});
    return emit_csv({"k", "primes_up_to_t_k", "t_k"}, rows);
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args) {
    CLI::App app{"Riemann zeta workbench: evaluation, zeros, primes, branch plots"};
    app.require_subcommand(1);

    auto* eval_cmd = app.add_subcommand("eval", "evaluate zeta at a point");
    double ev_re = 0.0, ev_im = 0.0, ev_tol = 1e-12;
    std::string ev_method = "auto";
    eval_cmd->add_option("--re", ev_re, "real part of s")->required();
    eval_cmd->add_option("--im", ev_im, "imaginary part of s");
    eval_cmd->add_option("--tol", ev_tol, "absolute error target");
    eval_cmd->add_option("--method", ev_method, "evaluation method")
        ->check(CLI::IsMember({"auto", "dirichlet", "eta", "theta_integral", "reflection"}));

    auto* zeros_cmd = app.add_subcommand("zeros", "scan critical-line zeros");
    ScanConfig scan;
    zeros_cmd->add_option("--tmax", scan.t_max, "scan upper bound")->required();
    zeros_cmd->add_option("--step", scan.step, "grid step");
    zeros_cmd->add_option("--refine-tol", scan.refine_tol, "bisection width target");

    auto* primes_cmd = app.add_subcommand("primes", "prime counting vs li and x/ln x");
    double pr_x = 0.0;
    primes_cmd->add_option("--x", pr_x, "count primes up to x")->required();

    auto* xi_cmd = app.add_subcommand("xi-check", "xi(s) = xi(1-s) residual over a grid");
    double xc_xmin = -4.0, xc_xmax = 5.0, xc_ymin = 0.0, xc_ymax = 30.0;
    int xc_nx = 25, xc_ny = 25;
    xi_cmd->add_option("--xmin", xc_xmin, "");
    xi_cmd->add_option("--xmax", xc_xmax, "");
    xi_cmd->add_option("--ymin", xc_ymin, "");
    xi_cmd->add_option("--ymax", xc_ymax, "");
    xi_cmd->add_option("--nx", xc_nx, "");
    xi_cmd->add_option("--ny", xc_ny, "");

    auto* sym_cmd = app.add_subcommand("symmetry", "sample x^x or c^x on a log branch");
    std::string sym_family;
    double sym_c = -4.0, sym_n = 1.0, sym_xmin = -3.0, sym_xmax = 3.0;
    int sym_samples = 601;
    sym_cmd->add_option("--family", sym_family, "x_pow_x or c_pow_x")
        ->required()
        ->check(CLI::IsMember({"x_pow_x", "c_pow_x"}));
    sym_cmd->add_option("--c", sym_c, "base for c_pow_x");
    sym_cmd->add_option("--n", sym_n, "branch phase: log(-1) = i pi n");
    sym_cmd->add_option("--xmin", sym_xmin, "");
    sym_cmd->add_option("--xmax", sym_xmax, "");
    sym_cmd->add_option("--samples", sym_samples, "");

    auto* grid_cmd = app.add_subcommand("grid", "re/im zeta over a rectangle");
    Region region{0.0, 1.0, 0.0, 1.0};
    int gr_nx = 50, gr_ny = 50;
    double gr_tol = 1e-10;
    std::string gr_svg;
    grid_cmd->add_option("--xmin", region.x_min)->required();
    grid_cmd->add_option("--xmax", region.x_max)->required();
    grid_cmd->add_option("--ymin", region.y_min)->required();
    grid_cmd->add_option("--ymax", region.y_max)->required();
    grid_cmd->add_option("--nx", gr_nx, "");
    grid_cmd->add_option("--ny", gr_ny, "");
    grid_cmd->add_option("--tol", gr_tol, "");
    grid_cmd->add_option("--svg", gr_svg, "also write zero-curve plot to this path");

    auto* t13_cmd = app.add_subcommand("table13", "prime counts below zero ordinates");
    int t13_kmax = 6;
    ScanConfig t13_scan;
    t13_cmd->add_option("--kmax", t13_kmax, "");
    t13_cmd->add_option("--tmax", t13_scan.t_max, "");
    t13_cmd->add_option("--step", t13_scan.step, "");
    t13_cmd->add_option("--refine-tol", t13_scan.refine_tol, "");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("zetascope");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        std::string out;
        if (*eval_cmd) {
            out = run_eval(ev_re, ev_im, ev_tol, ev_method);
        } else if (*zeros_cmd) {
            out = run_zeros(scan);
        } else if (*primes_cmd) {
            out = run_primes(pr_x);
        } else if (*xi_cmd) {
            out = run_xi_check(xc_xmin, xc_xmax, xc_ymin, xc_ymax, xc_nx, xc_ny);
        } else if (*sym_cmd) {
            out = run_symmetry(sym_family, sym_c, sym_n, sym_xmin, sym_xmax, sym_samples);
        } else if (*grid_cmd) {
            out = run_grid(region, gr_nx, gr_ny, gr_tol, gr_svg);
        } else if (*t13_cmd) {
            out = run_table13(t13_kmax, t13_scan);
        }
        std::cout << out;
    } catch (const numeric_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace zetascope
