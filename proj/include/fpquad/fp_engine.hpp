#pragma once

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fpquad/contour.hpp"
#include "fpquad/de_transform.hpp"
#include "fpquad/integrand.hpp"

namespace fpquad {

/// A finite-part integral of x^-n f(x) over [0,+inf), together with the
/// path and transform used to evaluate its contour representation
///   I = (1/2*pi*i) * contour integral of z^-n f(z) log(-z) dz.
struct FpProblem {
    Integrand integrand;
    int n = 1; // singularity order, >= 1
    Contour contour;
    DeTransformKind transform = DeTransformKind::SinhSinh;
};

struct QuadratureConfig {
    double h = 1.0 / 16.0;   // trapezoidal mesh
    double rel_tol = 1e-15;  // truncation threshold
    int max_terms = 20000;   // cap per summation direction
    bool record_trace = false;
};

struct FpResult {
    double value = 0.0;
    int n_pos = 0; // terms used with k > 0
    int n_neg = 0; // terms used with k < 0
    // Imaginary part left over by the full sum; ~0 for f real on the axis.
    double imag_residual = 0.0;
    std::vector<std::pair<int, double>> term_trace; // (k, |term|), if requested
};

class NotConverged : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One summand of the trapezoidal sum at parameter v:
///   z^-n f(z) log(-z) phi'(u) psi'(v),  u = psi(v), z = phi(u).
/// log is the principal branch applied to -z, so its cut lies on [0,+inf).
/// Throws std::domain_error if z lands on [0,+inf).
std::complex<double> term(const FpProblem& problem, double v);

/// Truncation rule: stop once (h/pi)*|term| drops below rel_tol relative
/// to the running value, or below rel_tol outright when the running value
/// is zero. Callers treat |value| < 1e-14 as zero.
bool truncation_should_stop(double k_term_abs, double running_sum_abs, double h, double rel_tol);

/// Trapezoidal evaluation of the contour integral, summing both
/// directions with independent truncation. Reports the real part; the
/// leftover imaginary part lands in imag_residual.
FpResult compute_full(const FpProblem& problem, const QuadratureConfig& config);

/// Half-sum evaluation for f real-valued on the real axis, using the
/// conjugate symmetry of the contour to fold k and -k together.
/// Agrees with compute_full to roundoff under that precondition.
FpResult compute_symmetric(const FpProblem& problem, const QuadratureConfig& config);

/// User-supplied constants of the theoretical error bound. None of them
/// are computed from f; the bound is a diagnostic formula only.
struct ErrorBoundParams {
    double d;        // analyticity strip half-width
    double script_n; // norm constant of the transformed integrand
    double big_c;    // truncation-term constant
    double c1;       // double-exponential decay constants of |f(phi(psi(v)))|
    double c2;
};

/// (script_n/2pi) * q/(1-q) + big_c * exp(-c1*exp(c2*n_prime*h)),
/// q = exp(-2*pi*d/h).
double error_bound(const ErrorBoundParams& params, double h, int n_prime);

} // namespace fpquad
