#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "fpquad/integrand.hpp"

namespace fpquad {

enum class Extrapolation {
    None,            // take the value at the smallest epsilon
    RichardsonLogEps // fit out the eps^m and eps^m*log(eps) remainder terms
};

/// Strictly decreasing positive epsilons at which the defining limit is
/// sampled before extrapolating to 0.
struct EpsilonSchedule {
    std::vector<double> eps_values;
    Extrapolation extrapolation = Extrapolation::RichardsonLogEps;
};

/// Ten log-spaced points from 3e-2 down to 2e-3. The lower end is set by
/// roundoff: the eps^(k+1-n) correction terms cancel against the integral,
/// so pushing epsilon much smaller amplifies noise for n >= 3.
EpsilonSchedule default_schedule();

class OracleUnstable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The bracket of the defining limit at a fixed epsilon:
///   integral_eps^inf x^-n f(x) dx
///   - sum_{k=0}^{n-2} eps^(k+1-n)/(k! (n-1-k)) f^(k)(0)
///   + log(eps)/(n-1)! f^(n-1)(0)
/// (the middle sum is empty for n = 1). The integral is evaluated by an
/// ordinary exp-sinh quadrature, a code path fully independent of the
/// contour engine. Requires integrand.derivative_at_zero and f_real.
double fp_by_definition(const Integrand& integrand, int n, double eps);

/// Evaluates fp_by_definition across the schedule and extrapolates to the
/// epsilon -> 0 limit. Accuracy target ~1e-6; throws OracleUnstable when
/// the sampled sequence is too noisy to extrapolate.
double fp_oracle(const Integrand& integrand, int n, const EpsilonSchedule& schedule);
double fp_oracle(const Integrand& integrand, int n);

/// Closed-form values of the eight builtin (integrand, n) cases, n = 1..4.
std::optional<double> exact_value(std::string_view integrand_name, int n);

} // namespace fpquad
