#pragma once

#include <complex>
#include <functional>
#include <string>

namespace fpquad {

/// A path z = phi(u), -inf < u < +inf, that encircles the half line
/// [0,+inf) without touching it and is symmetric with respect to the
/// real axis: phi(-u) = conj(phi(u)), hence phi'(-u) = -conj(phi'(u)).
///
/// Users may supply their own (phi, phi') pair; the path must stay inside
/// the analyticity domain of the integrand.
struct Contour {
    std::function<std::complex<double>(double)> phi;
    std::function<std::complex<double>(double)> phi_prime;
    std::string descriptor;
};

/// The builtin path
///   phi(u) = ((u + 0.5i)/(i pi)) * log((1 + i(u+0.5i)) / (1 - i(u+0.5i)))
/// with its closed-form derivative. The interior log stays on the
/// principal branch for all real u.
Contour default_contour();

/// Same formula with the imaginary offset 0.5 replaced by half_offset.
/// Throws std::domain_error unless 0 < half_offset < 1.
Contour scaled_contour(double half_offset);

} // namespace fpquad
