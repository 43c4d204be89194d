#pragma once

#include <string>

namespace fpquad {

/// Variable transforms used to map the contour parameter line onto
/// trapezoidal sampling points. SinhSinh is the choice for transformed
/// integrands with algebraic decay, Sinh for single-exponential decay.
enum class DeTransformKind {
    SinhSinh,
    Sinh,
};

/// psi(v): sinh(sinh v) or sinh v. Odd, strictly increasing.
/// Throws std::range_error once the result would overflow a double.
double psi(DeTransformKind kind, double v);

/// Derivative of psi: cosh(sinh v)*cosh v or cosh v. Even, positive.
double psi_prime(DeTransformKind kind, double v);

std::string to_string(DeTransformKind kind);

} // namespace fpquad
