#include "ncsa/errors.hpp"
#include "ncsa/special.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace ncsa;

TEST_CASE("gamma_fn on the real line and reflection")
{
    CHECK(std::abs(gamma_fn(5.0) - 24.0) < 1e-12);
    CHECK(std::abs(gamma_fn(0.5) - std::sqrt(std::numbers::pi)) < 1e-13);
    CHECK(std::abs(gamma_fn(-1.5) - 4.0 * std::sqrt(std::numbers::pi) / 3.0) < 1e-12);
    const cplx z(0.3, 1.7);
    // Γ(z)Γ(1-z) = π / sin(πz)
    const cplx lhs = gamma_fn(z) * gamma_fn(1.0 - z);
    const cplx rhs = std::numbers::pi / std::sin(std::numbers::pi * z);
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));
}

TEST_CASE("rgamma vanishes at non-positive integers")
{
    for (int k = 0; k >= -6; --k) CHECK(rgamma(static_cast<double>(k)) == cplx(0.0));
    CHECK(std::abs(rgamma(3.0) - 0.5) < 1e-15);
}

TEST_CASE("upper_gamma_tail matches boost incomplete gamma")
{
    for (double a : {0.5, 1.0, 2.5, 4.0})
        for (double x : {0.3, 1.0, 5.0}) {
            // G(a, x) = x^{-a} Γ(a, x)
            const double want = std::pow(x, -a) * boost::math::tgamma(a, x);
            CHECK(std::abs(upper_gamma_tail(a, x).real() - want) < 1e-12 * std::max(1.0, want));
        }
}

TEST_CASE("riemann_zeta classical values")
{
    CHECK(std::abs(riemann_zeta(2.0) - std::numbers::pi * std::numbers::pi / 6.0) < 1e-13);
    CHECK(std::abs(riemann_zeta(0.0) + 0.5) < 1e-14);
    CHECK(std::abs(riemann_zeta(-2.0)) < 1e-14);
    CHECK(std::abs(riemann_zeta(-1.0) + 1.0 / 12.0) < 1e-13);
}
