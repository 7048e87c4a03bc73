#pragma once

#include <complex>

namespace ncsa {

using cplx = std::complex<double>;

cplx gamma_fn(cplx z);
// 1/Γ(z); entire, exact zeros at non-positive integers.
cplx rgamma(cplx z);

// G(a, x) = ∫_1^∞ t^{a-1} e^{-xt} dt for x > 0 (continued fraction).
// Throws a tolerance error when the fraction has not converged after max_iter steps.
cplx upper_gamma_tail(cplx a, double x, double tol = 1e-16, int max_iter = 5000);

// Riemann zeta, continued to ℂ \ {1}.
cplx riemann_zeta(cplx s);

}  // namespace ncsa
