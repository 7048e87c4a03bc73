#include "ncsa/special.hpp"

#include "ncsa/errors.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace ncsa {

namespace {

constexpr double pi = std::numbers::pi;

// Lanczos g = 7, n = 9.
constexpr std::array<double, 9> lanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

cplx gamma_right(cplx z)  // Re z >= 0.5
{
    z -= 1.0;
    cplx x = lanczos[0];
    for (int i = 1; i < 9; ++i)
        x += lanczos[i] / (z + static_cast<double>(i));
    const cplx t = z + 7.5;
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace

cplx gamma_fn(cplx z)
{
    if (z.real() < 0.5)
        return pi / (std::sin(pi * z) * gamma_right(1.0 - z));
    return gamma_right(z);
}

cplx rgamma(cplx z)
{
    if (z.real() < 0.5) {
        if (z.imag() == 0.0 && z.real() == std::floor(z.real()))
            return 0.0;
        return std::sin(pi * z) * gamma_right(1.0 - z) / pi;
    }
    return 1.0 / gamma_right(z);
}

cplx upper_gamma_tail(cplx a, double x, double tol, int max_iter)
{
    if (!(x > 0.0))
        throw Error(ErrorKind::invalid_argument, "upper_gamma_tail: x must be positive");
    constexpr double tiny = 1e-300;
    cplx b = x + 1.0 - a;
    cplx c = 1.0 / tiny;
    cplx d = 1.0 / b;
    cplx h = d;
    for (int i = 1; i <= max_iter; ++i) {
        const cplx an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const cplx del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < tol)
            return std::exp(-x) * h;
    }
    throw Error(ErrorKind::tolerance, "upper_gamma_tail: continued fraction did not converge");
}

namespace {

// B_{2k} / (2k)! for k = 1..12
constexpr std::array<double, 12> bern_over_fact = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
    854513.0 / 138.0 / 1.1240007277776077e21,
    -236364091.0 / 2730.0 / 6.204484017332394e23,
};

cplx zeta_em(cplx s)
{
    const int N = 20 + static_cast<int>(std::ceil(std::abs(s.imag())));
    cplx sum = 0.0;
    for (int n = N - 1; n >= 1; --n)
        sum += std::pow(static_cast<double>(n), -s);
    const double Nd = N;
    sum += std::pow(Nd, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(Nd, -s);
    cplx rising = s;  // s (s+1) ... (s+2k-2)
    cplx npow = std::pow(Nd, -s - 1.0);
    for (int k = 1; k <= 12; ++k) {
        sum += bern_over_fact[k - 1] * rising * npow;
        rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
        npow /= Nd * Nd;
    }
    return sum;
}

}  // namespace

cplx riemann_zeta(cplx s)
{
    if (s == cplx(1.0, 0.0))
        throw PoleError("riemann_zeta: pole at s = 1", 1.0);
    if (s.real() < 0.0) {
        const cplx t = 1.0 - s;
        return std::pow(2.0, s) * std::pow(pi, s - 1.0) * std::sin(pi * s / 2.0) * gamma_fn(t) *
               zeta_em(t);
    }
    return zeta_em(s);
}

}  // namespace ncsa
