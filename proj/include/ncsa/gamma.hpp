#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

namespace ncsa {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

struct GammaRep {
    int n = 0;
    int m = 0;    // floor(n/2)
    int dim = 1;  // 2^m
    std::vector<CMatrix> g;  // g[i] is γ^{i+1}
    // For odd n the product γ^1 ⋯ γ^n is a scalar multiple of the identity.
    cplx top_scalar = 0.0;
};

GammaRep build_gamma(int n);

// Indices are 1-based. Even-length lists use the signed pairing sum,
// odd-length lists reduce through the Clifford relations.
cplx gamma_trace(const GammaRep& rep, std::span<const int> indices);
cplx gamma_trace_matrix(const GammaRep& rep, std::span<const int> indices);

// Signed sum over perfect pairings of Π δ^{i_a i_b}, without the 2^m factor.
double pairing_sum(std::span<const int> indices);

// (-i)^{n/2} γ^1 ⋯ γ^n; even n only.
CMatrix chirality(const GammaRep& rep);

}  // namespace ncsa
