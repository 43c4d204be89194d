#include "fpquad/integrand.hpp"

#include <array>
#include <cmath>

namespace fpquad {

namespace {

using cplx = std::complex<double>;

double factorial(int k)
{
    double r = 1.0;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

Integrand make_one_over_1px2()
{
    Integrand g;
    g.name = "one_over_1px2";
    g.f = [](cplx z) { return 1.0 / (1.0 + z * z); };
    g.decay = DeTransformKind::SinhSinh;
    // 1/(1+x^2) = sum (-1)^m x^(2m): odd derivatives vanish,
    // f^(2m)(0) = (2m)! (-1)^m.
    g.derivative_at_zero = [](int k) {
        if (k % 2 != 0) return 0.0;
        return factorial(k) * ((k / 2) % 2 == 0 ? 1.0 : -1.0);
    };
    g.f_real = [](long double x) { return 1.0L / (1.0L + x * x); };
    return g;
}

Integrand make_exp_decay()
{
    Integrand g;
    g.name = "exp_decay";
    g.f = [](cplx z) { return std::exp(-z); };
    // e^{-phi(psi(v))} already decays double-exponentially in v under
    // sinh(sinh .), so the algebraic-decay transform serves here too.
    g.decay = DeTransformKind::SinhSinh;
    g.derivative_at_zero = [](int k) { return k % 2 == 0 ? 1.0 : -1.0; };
    g.f_real = [](long double x) { return std::exp(-x); };
    return g;
}

} // namespace

const Integrand* find_builtin(std::string_view name)
{
    static const Integrand one_over_1px2 = make_one_over_1px2();
    static const Integrand exp_decay = make_exp_decay();
    if (name == "one_over_1px2") return &one_over_1px2;
    if (name == "exp_decay") return &exp_decay;
    return nullptr;
}

std::vector<std::string> builtin_names()
{
    return {"one_over_1px2", "exp_decay"};
}

} // namespace fpquad
