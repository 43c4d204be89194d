#include "fpquad/de_transform.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fpquad {

namespace {

// exp(exp(|v|)) overflows a double past this point.
constexpr double kSinhSinhLimit = 6.565;
// exp(|v|) overflows past this point.
constexpr double kSinhLimit = 709.7;

void check_range(DeTransformKind kind, double v)
{
    const double limit = (kind == DeTransformKind::SinhSinh) ? kSinhSinhLimit : kSinhLimit;
    if (!(std::abs(v) <= limit))
        throw std::range_error("de_transform: |v| = " + std::to_string(std::abs(v)) +
                               " exceeds the floating-point range of " + to_string(kind));
}

} // namespace

double psi(DeTransformKind kind, double v)
{
    check_range(kind, v);
    switch (kind) {
    case DeTransformKind::SinhSinh: return std::sinh(std::sinh(v));
    case DeTransformKind::Sinh: return std::sinh(v);
    }
    throw std::logic_error("de_transform: unknown kind");
}

double psi_prime(DeTransformKind kind, double v)
{
    check_range(kind, v);
    switch (kind) {
    case DeTransformKind::SinhSinh: return std::cosh(std::sinh(v)) * std::cosh(v);
    case DeTransformKind::Sinh: return std::cosh(v);
    }
    throw std::logic_error("de_transform: unknown kind");
}

std::string to_string(DeTransformKind kind)
{
    return kind == DeTransformKind::SinhSinh ? "sinhsinh" : "sinh";
}

} // namespace fpquad
