#pragma once

#include "ncsa/parallel.hpp"
#include "ncsa/special.hpp"

#include <Eigen/Dense>
#include <map>
#include <span>
#include <vector>

namespace ncsa {

using IVec = std::vector<int>;

// Σ c_p k^p over exponent vectors p ∈ ℕⁿ.
struct LatticePoly {
    int n = 0;
    std::map<IVec, cplx> terms;

    LatticePoly() = default;
    explicit LatticePoly(int dim) : n(dim) {}
    static LatticePoly constant(int dim, cplx c = 1.0);
    // Monomial k_{i1} k_{i2} ... with 1-based coordinate indices.
    static LatticePoly monomial(int dim, std::span<const int> coords, cplx c = 1.0);

    void add(const IVec& p, cplx c);
    int degree() const;
    cplx operator()(std::span<const int> k) const;
};

// b(l) over q blocks of ℤⁿ with signs ε; phases e^{i k·Θ Σ ε_i l_i} implied.
struct TwistedFamily {
    int n = 0;
    int q = 0;
    std::vector<std::pair<std::vector<IVec>, cplx>> b;
    std::vector<int> eps;
    Eigen::MatrixXd theta;
    bool diophantine_asserted = false;
};

struct EpsteinOptions {
    double tol = 1e-10;
    int max_shells = 2000;
};

struct EpsteinResult {
    cplx value;
    double tail_bound = 0.0;
    int shells = 0;  // largest |k|² kept in the theta sums
};

// Z_n(s) = Σ' |k|^{-s} by the theta split at t = 1.
class EpsteinEvaluator {
public:
    explicit EpsteinEvaluator(int n, EpsteinOptions opts = {});
    EpsteinResult evaluate(cplx s) const;
    int n() const { return n_; }
    const std::vector<double>& counts() const { return counts_; }

private:
    int n_;
    EpsteinOptions opts_;
    std::vector<double> counts_;  // r_n(m), m = 0..max_shells
};

// r_n(m) = #{k ∈ ℤⁿ : |k|² = m}, m = 0..max_m.
std::vector<double> representation_counts(int n, int max_m);

EpsteinResult epstein_eval(int n, cplx s, const EpsteinOptions& opts = {});
cplx epstein_value(int n, cplx s, const EpsteinOptions& opts = {});
double epstein_residue(int n);

double sphere_moment(int n, std::span<const int> p);
cplx residue_lattice_sum(int n, const LatticePoly& P, double r);
cplx twisted_residue(const TwistedFamily& fam, const LatticePoly& P, double r);

// Smooth cutoff: 1 on [0, u0], 0 on [1, ∞), C^∞ in between.
double smooth_cutoff(double u, double u0 = 0.25);
double smooth_cutoff_derivative(double u, double u0 = 0.25);

// Σ'_{|k| < R} P(k) |k|^{-t} w(|k|/R), enumerated row by row over k_1.
cplx direct_lattice_sum(int n, const LatticePoly& P, double t, double R, Exec ex = Exec::parallel,
                        double u0 = 0.25);

}  // namespace ncsa
