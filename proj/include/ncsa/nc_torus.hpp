#pragma once

#include "ncsa/action.hpp"
#include "ncsa/parallel.hpp"
#include "ncsa/special.hpp"

#include <Eigen/Dense>
#include <map>
#include <numbers>
#include <tuple>
#include <vector>

namespace ncsa {

using IVec = std::vector<int>;

inline constexpr double torus_c = 4.0 * std::numbers::pi * std::numbers::pi / 3.0;
inline constexpr double torus_prune_eps = 1e-15;

struct Theta {
    int n = 0;
    Eigen::MatrixXd m;

    static Theta zero(int n);
    static Theta from_matrix(const Eigen::MatrixXd& m);  // rejects non-skew input
    double form(const IVec& k, const IVec& q) const;     // k·Θq
};

// Σ a_k U_k with finite support.
class TorusElement {
public:
    int n = 0;
    std::map<IVec, cplx> c;

    TorusElement() = default;
    explicit TorusElement(int dim) : n(dim) {}
    static TorusElement unit(int dim);
    static TorusElement mode(const IVec& k, cplx value = 1.0);

    cplx coeff(const IVec& k) const;
    void add(const IVec& k, cplx value);
    void prune(double eps = torus_prune_eps);
    bool is_selfadjoint(double tol = 1e-12) const;
    double max_abs() const;

    TorusElement& operator+=(const TorusElement& o);
    TorusElement& operator-=(const TorusElement& o);
    TorusElement& operator*=(cplx s);
};

TorusElement operator+(TorusElement a, const TorusElement& b);
TorusElement operator-(TorusElement a, const TorusElement& b);
TorusElement operator*(cplx s, TorusElement a);

TorusElement weyl_mul(const TorusElement& a, const TorusElement& b, const Theta& th,
                      Exec ex = Exec::parallel);
TorusElement commutator(const TorusElement& a, const TorusElement& b, const Theta& th);
TorusElement adjoint(const TorusElement& a);
cplx tau(const TorusElement& a);
TorusElement delta_mu(const TorusElement& a, int mu);  // mu is 1-based

struct OneFormTorus {
    int n = 0;
    std::vector<TorusElement> A;  // A[alpha-1]

    static OneFormTorus zero(int n);
    // Each (alpha, l, c) also sets a_{alpha,-l} = -conj(c); contradictory entries are rejected.
    static OneFormTorus from_entries(int n, const std::vector<std::tuple<int, IVec, cplx>>& entries);
    bool is_skew_adjoint(double tol = 1e-12) const;
    std::vector<IVec> support() const;
};

struct Curvature {
    int n = 0;
    std::vector<TorusElement> F;  // row-major n×n
    const TorusElement& operator()(int a, int b) const { return F[static_cast<std::size_t>((a - 1) * n + (b - 1))]; }
    TorusElement& operator()(int a, int b) { return F[static_cast<std::size_t>((a - 1) * n + (b - 1))]; }
};

Curvature curvature(const OneFormTorus& A, const Theta& th);
// Same field strength from the closed coefficient formula.
Curvature curvature_from_coefficients(const OneFormTorus& A, const Theta& th);
double yang_mills(const OneFormTorus& A, const Theta& th);
OneFormTorus gauge_transform(const OneFormTorus& A, const TorusElement& u, const Theta& th);

// ∮(𝔸⁺)^q for n = 4 as finite sums over the support; q = 1 is the vanishing tadpole.
double cs_sums(const OneFormTorus& A, const Theta& th, int q, Exec ex = Exec::parallel);
double zeta0_shift(const OneFormTorus& A, const Theta& th, int n, bool diophantine_asserted);
// 2 Σ_{q=1}^{4} (-1)^q/q ∮(𝔸⁺)^q
double zeta0_shift_via_cs(const OneFormTorus& A, const Theta& th, Exec ex = Exec::parallel);

struct TorusActionReport {
    double yang_mills = 0.0;
    double zeta_D0 = 0.0;        // unperturbed ζ_D(0) = 2^m (Z_n(0) + 1)
    double zeta0_shift = 0.0;
    double top_integral = 0.0;   // ∮|D_A|^{-n}
    ExpansionReport expansion;
};

TorusActionReport torus_action(const OneFormTorus& A, const Theta& th, int n, const CutoffMoments& moments,
                               double lambda, bool diophantine_asserted);

struct SpectrumData {
    std::vector<std::pair<double, int>> levels;  // eigenvalue, multiplicity (ascending)
    int kernel_dim = 0;
    long long total_dim = 0;
    long long modes = 0;
};

// Spectrum of D on modes with |k| <= K; throws when modes · 2^m exceeds max_dim.
SpectrumData dirac_truncated(int n, int K, long long max_dim = 4'000'000, Exec ex = Exec::parallel);

}  // namespace ncsa
