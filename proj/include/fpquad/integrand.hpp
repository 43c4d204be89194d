#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "fpquad/de_transform.hpp"

namespace fpquad {

/// An analytic function f on a neighbourhood of [0,+inf) with f(0) != 0.
///
/// The complex evaluator drives the contour quadrature. The two optional
/// hooks exist for the epsilon-limit reference path: derivative_at_zero
/// supplies f^(k)(0) analytically, and f_real evaluates f on the real
/// axis in extended precision so that the reference's error budget stays
/// dominated by epsilon rather than by roundoff.
struct Integrand {
    std::string name;
    std::function<std::complex<double>(std::complex<double>)> f;
    DeTransformKind decay = DeTransformKind::SinhSinh;
    std::function<double(int)> derivative_at_zero; // optional
    std::function<long double(long double)> f_real; // optional
};

/// Builtin integrands: "one_over_1px2" (1/(1+x^2)) and "exp_decay" (e^-x).
const Integrand* find_builtin(std::string_view name);
std::vector<std::string> builtin_names();

} // namespace fpquad
