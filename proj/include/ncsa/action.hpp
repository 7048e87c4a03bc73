#pragma once

#include "ncsa/special.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ncsa {

struct Cutoff {
    enum class Family { exponential, gaussian, table };
    Family family = Family::exponential;
    double amplitude = 1.0;                          // Φ(t) = amplitude · profile(t)
    std::vector<std::pair<double, double>> table;    // (t, Φ(t)), t ascending, t_0 = 0

    static Cutoff exponential(double amplitude = 1.0);
    static Cutoff gaussian(double amplitude = 1.0);
    static Cutoff tabulated(std::vector<std::pair<double, double>> table);

    double operator()(double t) const;
};

struct MomentEntry {
    double value = 0.0;
    std::string provenance;  // "analytic" or "quadrature"
    double error_bound = 0.0;
};

struct CutoffMoments {
    double phi0 = 0.0;  // Φ(0)
    std::map<int, MomentEntry> phi;

    double operator[](int k) const;
};

struct MomentOptions {
    bool force_quadrature = false;
    double tol = 1e-10;
};

// Φ_k = ½ ∫_0^∞ Φ(t) t^{k/2 - 1} dt
CutoffMoments cutoff_moments(const Cutoff& phi, const std::vector<int>& ks, const MomentOptions& opts = {});

struct ExpansionTerm {
    int power = 0;  // power of Λ
    cplx coeff;     // multiplies Λ^power
    std::string tag;
};

struct ExpansionReport {
    std::vector<ExpansionTerm> terms;  // strictly decreasing powers
    double lambda = 0.0;
    cplx total;
};

// Σ_{k>0} Φ_k Λ^k ∮|D|^{-k} + Φ(0) ζ(0)
ExpansionReport assemble(const std::map<int, cplx>& integrals, cplx zeta0, const CutoffMoments& moments,
                         double lambda);

}  // namespace ncsa
