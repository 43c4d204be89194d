#include "fpquad/fp_engine.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

namespace fpquad {

namespace {

using cplx = std::complex<double>;

constexpr double kZeroValueThreshold = 1e-14;
constexpr double kPi = std::numbers::pi;

cplx integer_inverse_power(cplx z, int n)
{
    cplx p = 1.0;
    for (int i = 0; i < n; ++i) p *= z;
    return 1.0 / p;
}

void validate(const FpProblem& problem, const QuadratureConfig& config)
{
    if (problem.n < 1)
        throw std::domain_error("fp_engine: n must be >= 1");
    if (!(config.h > 0.0))
        throw std::domain_error("fp_engine: mesh h must be positive");
    if (!(config.rel_tol > 0.0 && config.rel_tol < 1.0))
        throw std::domain_error("fp_engine: rel_tol must lie in (0,1)");
    if (config.max_terms < 1)
        throw std::domain_error("fp_engine: max_terms must be >= 1");
}

double zero_aware_abs(double value)
{
    return std::abs(value) < kZeroValueThreshold ? 0.0 : std::abs(value);
}

#ifndef NDEBUG
// Reflection-principle precondition of the half-sum: f real on the axis.
bool real_on_axis(const Integrand& g)
{
    for (double x : {0.0, 0.3, 1.0, 2.7}) {
        const cplx fx = g.f(cplx{x, 0.0});
        if (std::abs(fx.imag()) > 1e-12 * (1.0 + std::abs(fx.real()))) return false;
    }
    return true;
}
#endif

} // namespace

cplx term(const FpProblem& problem, double v)
{
    const double u = psi(problem.transform, v);
    const cplx z = problem.contour.phi(u);
    if (z.imag() == 0.0 && z.real() >= 0.0)
        throw std::domain_error("fp_engine: contour point lies on [0,+inf) at v = " +
                                std::to_string(v));
    return integer_inverse_power(z, problem.n) * problem.integrand.f(z) * std::log(-z) *
           problem.contour.phi_prime(u) * psi_prime(problem.transform, v);
}

bool truncation_should_stop(double k_term_abs, double running_sum_abs, double h, double rel_tol)
{
    const double weighted = (h / kPi) * k_term_abs;
    if (running_sum_abs > 0.0) return weighted < rel_tol * running_sum_abs;
    return weighted < rel_tol;
}

// The builtin parameterization traverses the positively-oriented path with
// u decreasing, so the sum over increasing k carries an overall minus sign
// relative to the plain trapezoidal sum.

FpResult compute_full(const FpProblem& problem, const QuadratureConfig& config)
{
    validate(problem, config);
    const double h = config.h;
    FpResult result;

    cplx sum = term(problem, 0.0);
    if (config.record_trace) result.term_trace.emplace_back(0, std::abs(sum));

    // value = -(h/2*pi*i) * sum = (i h/2*pi) * sum
    const auto scaled = [h](cplx s) { return cplx{0.0, h / (2.0 * kPi)} * s; };

    for (int dir : {+1, -1}) {
        bool stopped = false;
        for (int k = 1; k <= config.max_terms; ++k) {
            const cplx t = term(problem, dir * k * h);
            sum += t;
            if (config.record_trace) result.term_trace.emplace_back(dir * k, std::abs(t));
            (dir > 0 ? result.n_pos : result.n_neg) = k;
            if (truncation_should_stop(std::abs(t), zero_aware_abs(std::abs(scaled(sum))), h,
                                       config.rel_tol)) {
                stopped = true;
                break;
            }
        }
        if (!stopped)
            throw NotConverged("compute_full: direction " + std::to_string(dir) +
                               " hit max_terms = " + std::to_string(config.max_terms));
    }

    const cplx value = scaled(sum);
    result.value = value.real();
    result.imag_residual = value.imag();
    return result;
}

FpResult compute_symmetric(const FpProblem& problem, const QuadratureConfig& config)
{
    validate(problem, config);
    assert(real_on_axis(problem.integrand));
    const double h = config.h;
    FpResult result;

    const cplx t0 = term(problem, 0.0);
    if (config.record_trace) result.term_trace.emplace_back(0, std::abs(t0));
    double value = -(h / (2.0 * kPi)) * t0.imag();

    bool stopped = false;
    for (int k = 1; k <= config.max_terms; ++k) {
        const cplx t = term(problem, k * h);
        value -= (h / kPi) * t.imag();
        if (config.record_trace) result.term_trace.emplace_back(k, std::abs(t));
        result.n_pos = k;
        if (truncation_should_stop(std::abs(t), zero_aware_abs(value), h, config.rel_tol)) {
            stopped = true;
            break;
        }
    }
    if (!stopped)
        throw NotConverged("compute_symmetric: hit max_terms = " +
                           std::to_string(config.max_terms));

    result.value = value;
    return result;
}

double error_bound(const ErrorBoundParams& params, double h, int n_prime)
{
    if (!(params.d > 0.0 && params.script_n > 0.0 && params.big_c >= 0.0 && params.c1 > 0.0 &&
          params.c2 > 0.0))
        throw std::domain_error("error_bound: all parameters must be positive");
    if (!(h > 0.0) || n_prime < 1)
        throw std::domain_error("error_bound: need h > 0 and n_prime >= 1");
    const double q = std::exp(-2.0 * kPi * params.d / h);
    const double discretization = params.script_n / (2.0 * kPi) * q / (1.0 - q);
    const double truncation = params.big_c * std::exp(-params.c1 * std::exp(params.c2 * n_prime * h));
    return discretization + truncation;
}

} // namespace fpquad
