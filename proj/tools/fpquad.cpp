// Command-line front end: single finite-part integral evaluations,
// h-convergence sweeps (CSV), and engine-vs-definition cross checks.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fpquad/fp_engine.hpp"
#include "fpquad/oracle.hpp"

namespace {

using namespace fpquad;

constexpr int kExitOk = 0;
constexpr int kExitNumerical = 1;
constexpr int kExitUsage = 2;

std::string fmt17(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct CommonOpts {
    std::string integrand_name;
    int n = 1;
    std::string transform = "sinhsinh";
    double contour_offset = 0.5;
    double tol = 1e-15;
    int max_terms = 20000;
};

void add_common(CLI::App* cmd, CommonOpts& o)
{
    cmd->add_option("integrand", o.integrand_name, "builtin integrand name")->required();
    cmd->add_option("--n", o.n, "singularity order (>= 1)")->required();
    cmd->add_option("--transform", o.transform, "DE transform")
        ->check(CLI::IsMember({"sinhsinh", "sinh"}));
    cmd->add_option("--contour-offset", o.contour_offset, "imaginary offset of the path, in (0,1)");
    cmd->add_option("--tol", o.tol, "truncation threshold");
    cmd->add_option("--max-terms", o.max_terms, "term cap per direction");
}

FpProblem make_problem(const CommonOpts& o)
{
    const Integrand* g = find_builtin(o.integrand_name);
    if (!g) throw CLI::ValidationError("unknown integrand '" + o.integrand_name + "'");
    if (o.n < 1) throw CLI::ValidationError("--n must be >= 1");
    FpProblem p;
    p.integrand = *g;
    p.n = o.n;
    p.contour = scaled_contour(o.contour_offset);
    p.transform = o.transform == "sinh" ? DeTransformKind::Sinh : DeTransformKind::SinhSinh;
    return p;
}

int cmd_compute(const CommonOpts& o, double h, const std::string& mode)
{
    const FpProblem problem = make_problem(o);
    const QuadratureConfig config{h, o.tol, o.max_terms, false};
    const FpResult r =
        mode == "full" ? compute_full(problem, config) : compute_symmetric(problem, config);

    std::string line = "integrand=" + o.integrand_name + " n=" + std::to_string(o.n) +
                       " h=" + fmt17(h) + " transform=" + o.transform +
                       " contour_offset=" + fmt17(o.contour_offset) + " mode=" + mode +
                       " value=" + fmt17(r.value) + " n_pos=" + std::to_string(r.n_pos) +
                       " n_neg=" + std::to_string(r.n_neg);
    if (mode == "full") line += " imag_residual=" + fmt17(r.imag_residual);
    if (const auto exact = exact_value(o.integrand_name, o.n)) {
        const double abs_error = std::abs(r.value - *exact);
        const double rel_error = *exact != 0.0 ? abs_error / std::abs(*exact) : std::abs(r.value);
        line += " exact=" + fmt17(*exact) + " abs_error=" + fmt17(abs_error) +
                " rel_error=" + fmt17(rel_error);
    }
    std::cout << line << "\n";
    return kExitOk;
}

int cmd_sweep(const CommonOpts& o, std::vector<double> h_list, const std::string& out_path)
{
    if (h_list.empty()) throw CLI::ValidationError("empty h list");
    for (double h : h_list)
        if (!(h > 0.0)) throw CLI::ValidationError("all h values must be positive");
    const FpProblem problem = make_problem(o);
    std::sort(h_list.begin(), h_list.end(), std::greater<>());

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (out_path != "-") {
        file.open(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "fpquad: cannot open '" << out_path << "' for writing\n";
            return kExitNumerical;
        }
        out = &file;
    }

    const auto exact = exact_value(o.integrand_name, o.n);
    *out << "h,N_total,value,abs_error,rel_error\n";
    for (double h : h_list) {
        const QuadratureConfig config{h, o.tol, o.max_terms, false};
        double value = std::nan(""), abs_error = std::nan(""), rel_error = std::nan("");
        int n_total = 0;
        try {
            const FpResult r = compute_symmetric(problem, config);
            value = r.value;
            n_total = r.n_pos + 1;
            if (exact) {
                abs_error = std::abs(value - *exact);
                rel_error = *exact != 0.0 ? abs_error / std::abs(*exact) : std::abs(value);
            }
        } catch (const NotConverged&) {
            n_total = o.max_terms + 1;
        }
        *out << fmt17(h) << ',' << n_total << ',' << fmt17(value) << ',' << fmt17(abs_error)
             << ',' << fmt17(rel_error) << "\n";
    }
    return kExitOk;
}

int cmd_oracle_check(const CommonOpts& o)
{
    const FpProblem problem = make_problem(o);
    const QuadratureConfig config{1.0 / 32.0, o.tol, o.max_terms, false};
    const double engine = compute_symmetric(problem, config).value;
    const double oracle = fp_oracle(problem.integrand, o.n);
    const double diff = std::abs(engine - oracle);
    const double discrepancy = std::abs(engine) < 1e-14 ? diff : diff / std::abs(engine);
    std::cout << "integrand=" << o.integrand_name << " n=" << o.n << " engine=" << fmt17(engine)
              << " oracle=" << fmt17(oracle) << " discrepancy=" << fmt17(discrepancy) << "\n";
    return discrepancy <= 1e-5 ? kExitOk : kExitNumerical;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hadamard finite-part integrals on [0,inf) via contour DE quadrature"};
    // --h is a real option below, so the help flag must not claim -h.
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    CommonOpts compute_opts, sweep_opts, oracle_opts;
    double h = 1.0 / 16.0;
    std::string mode = "symmetric";
    std::vector<double> h_list = {0.5, 0.25, 0.125, 0.0625, 0.03125, 0.015625};
    std::string out_path = "-";

    auto* compute = app.add_subcommand("compute", "evaluate one finite-part integral");
    compute->set_help_flag("--help", "print help");
    add_common(compute, compute_opts);
    compute->add_option("--h", h, "trapezoidal mesh");
    compute->add_option("--mode", mode, "summation mode")->check(CLI::IsMember({"full", "symmetric"}));

    auto* sweep = app.add_subcommand("sweep", "h-convergence study, CSV output");
    sweep->set_help_flag("--help", "print help");
    add_common(sweep, sweep_opts);
    sweep->add_option("--h", h_list, "mesh values (default 2^-1 .. 2^-6)")->expected(-1);
    sweep->add_option("--out", out_path, "output path ('-' for stdout)");

    auto* oracle = app.add_subcommand("oracle-check", "compare engine against the defining limit");
    oracle->set_help_flag("--help", "print help");
    add_common(oracle, oracle_opts);

    try {
        app.parse(argc, argv);
        if (compute->parsed()) return cmd_compute(compute_opts, h, mode);
        if (sweep->parsed()) return cmd_sweep(sweep_opts, h_list, out_path);
        return cmd_oracle_check(oracle_opts);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "fpquad: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "fpquad: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "fpquad: " << e.what() << "\n";
        return kExitNumerical;
    }
}
