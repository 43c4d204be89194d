#include "fpquad/contour.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fpquad {

namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

cplx phi_at(double offset, double u)
{
    const cplx w{u, offset};
    return w / (kI * std::numbers::pi) * std::log((1.0 + kI * w) / (1.0 - kI * w));
}

// d/dw [w log((1+iw)/(1-iw))] = log((1+iw)/(1-iw)) + 2iw/(1+w^2)
cplx phi_prime_at(double offset, double u)
{
    const cplx w{u, offset};
    return (std::log((1.0 + kI * w) / (1.0 - kI * w)) + 2.0 * kI * w / (1.0 + w * w)) /
           (kI * std::numbers::pi);
}

} // namespace

Contour scaled_contour(double half_offset)
{
    if (!(half_offset > 0.0 && half_offset < 1.0))
        throw std::domain_error("scaled_contour: half_offset must lie in (0,1), got " +
                                std::to_string(half_offset));
    Contour c;
    c.phi = [half_offset](double u) { return phi_at(half_offset, u); };
    c.phi_prime = [half_offset](double u) { return phi_prime_at(half_offset, u); };
    c.descriptor = "log-ratio contour, offset " + std::to_string(half_offset);
    return c;
}

Contour default_contour()
{
    return scaled_contour(0.5);
}

} // namespace fpquad
