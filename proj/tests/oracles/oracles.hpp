#pragma once

// Independent reference computations used by the unit and acceptance tests.

#include "ncsa/gamma.hpp"
#include "ncsa/lattice_zeta.hpp"
#include "ncsa/nc_torus.hpp"
#include "ncsa/suq2.hpp"

#include <Eigen/Dense>
#include <random>
#include <span>
#include <vector>

namespace ncsa::oracle {

// ∫_{S^{n-1}} u^p dS by nested Gauss–Legendre over hyperspherical angles (n <= 4).
double sphere_moment_quadrature(int n, std::span<const int> p);

// Res_{s=0} Σ' P(k)|k|^{-(s+n+d)} read off as the log-slope of smoothed partial sums between R1 and R2.
double residue_log_slope(int n, const LatticePoly& P, int degree, double R1, double R2);

// Z_2(4) from a smoothed sum at radius R plus the integral tail.
double epstein_z2_at_4(double R);

// Quadratic fit of (s-n) Z_n(s) at s = n + h, h ∈ {0.1, 0.05, 0.025}, extrapolated to h = 0.
double epstein_pole_fit(int n);

// Predicted (eigenvalue, multiplicity) list of the truncated Dirac operator from lattice point counts.
std::vector<std::pair<double, int>> dirac_levels_analytic(int n, int K);

// τ(F_{μν}F_{μν}) for θ = 0 straight from the abelian field strength coefficients.
double abelian_yang_mills(const OneFormTorus& A);

// Faithful representation of SU_q(2) on ℓ²(ℕ) ⊗ ℓ²(ℤ_K), truncated to N levels.
Eigen::MatrixXcd suq2_faithful(const PBWElem& x, double q, int N, int K);
Eigen::MatrixXcd suq2_faithful_word(const std::vector<Gen>& w, double q, int N, int K);

// Dense N×N matrix of a half-line operator.
Eigen::MatrixXd rep_atom_matrix(const RepAtomOp& op, const QContext& ctx, int N);
// Dense matrix of π±(g) on N levels.
Eigen::MatrixXd side_generator_matrix(Side s, Gen g, double q, int N);

// Random skew-adjoint one-form on the 4-torus with modes {m1, m2, m1+m2}.
OneFormTorus random_torus_form(std::mt19937_64& rng, int n, int max_mode, double scale);
Theta random_theta(std::mt19937_64& rng, int n);

}  // namespace ncsa::oracle
