#include "ncsa/gamma.hpp"

#include "ncsa/errors.hpp"

#include <algorithm>
#include <string>

namespace ncsa {

namespace {

CMatrix kron(const CMatrix& a, const CMatrix& b)
{
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

CMatrix chain(const std::vector<CMatrix>& factors)
{
    CMatrix out = CMatrix::Identity(1, 1);
    for (const auto& f : factors)
        out = kron(out, f);
    return out;
}

void check_indices(const GammaRep& rep, std::span<const int> indices)
{
    for (int i : indices)
        if (i < 1 || i > rep.n)
            throw Error(ErrorKind::invalid_argument,
                        "gamma index " + std::to_string(i) + " out of range 1.." + std::to_string(rep.n));
}

double pairing_rec(std::vector<int>& idx)
{
    if (idx.empty()) return 1.0;
    const int first = idx[0];
    double total = 0.0;
    for (std::size_t j = 1; j < idx.size(); ++j) {
        if (idx[j] != first) continue;
        std::vector<int> rest;
        rest.reserve(idx.size() - 2);
        for (std::size_t k = 1; k < idx.size(); ++k)
            if (k != j) rest.push_back(idx[k]);
        const double sign = (j % 2 == 1) ? 1.0 : -1.0;
        total += sign * pairing_rec(rest);
    }
    return total;
}

}  // namespace

GammaRep build_gamma(int n)
{
    if (n <= 0)
        throw Error(ErrorKind::invalid_argument, "build_gamma: n must be >= 1");
    GammaRep rep;
    rep.n = n;
    rep.m = n / 2;
    rep.dim = 1 << rep.m;
    const cplx I(0.0, 1.0);
    CMatrix s1(2, 2), s2(2, 2), s3(2, 2), id = CMatrix::Identity(2, 2);
    s1 << 0, 1, 1, 0;
    s2 << 0, -I, I, 0;
    s3 << 1, 0, 0, -1;
    for (int j = 0; j < rep.m; ++j) {
        std::vector<CMatrix> f1, f2;
        for (int k = 0; k < rep.m; ++k) {
            if (k < j) {
                f1.push_back(s3);
                f2.push_back(s3);
            } else if (k == j) {
                f1.push_back(s1);
                f2.push_back(s2);
            } else {
                f1.push_back(id);
                f2.push_back(id);
            }
        }
        rep.g.push_back(chain(f1));
        rep.g.push_back(chain(f2));
    }
    if (n % 2 == 1) {
        std::vector<CMatrix> f(rep.m, s3);
        rep.g.push_back(chain(f));
        CMatrix prod = CMatrix::Identity(rep.dim, rep.dim);
        for (const auto& g : rep.g) prod = prod * g;
        rep.top_scalar = prod(0, 0);
    }
    return rep;
}

double pairing_sum(std::span<const int> indices)
{
    if (indices.size() % 2 == 1) return 0.0;
    std::vector<int> idx(indices.begin(), indices.end());
    return pairing_rec(idx);
}

cplx gamma_trace(const GammaRep& rep, std::span<const int> indices)
{
    check_indices(rep, indices);
    if (indices.size() % 2 == 0)
        return static_cast<double>(rep.dim) * pairing_sum(indices);
    if (rep.n % 2 == 0) return 0.0;
    // Odd length, odd n: sort with anticommutation signs and cancel squares.
    std::vector<int> w(indices.begin(), indices.end());
    double sign = 1.0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] == w[i + 1]) {
                w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
                changed = true;
                break;
            }
            if (w[i] > w[i + 1]) {
                std::swap(w[i], w[i + 1]);
                sign = -sign;
                changed = true;
            }
        }
    }
    if (static_cast<int>(w.size()) != rep.n) return 0.0;
    return sign * static_cast<double>(rep.dim) * rep.top_scalar;
}

cplx gamma_trace_matrix(const GammaRep& rep, std::span<const int> indices)
{
    check_indices(rep, indices);
    CMatrix prod = CMatrix::Identity(rep.dim, rep.dim);
    for (int i : indices) prod = prod * rep.g[i - 1];
    return prod.trace();
}

CMatrix chirality(const GammaRep& rep)
{
    if (rep.n % 2 == 1)
        throw Error(ErrorKind::unsupported, "chirality: odd dimension has no grading");
    CMatrix prod = CMatrix::Identity(rep.dim, rep.dim);
    for (const auto& g : rep.g) prod = prod * g;
    return std::pow(cplx(0.0, -1.0), rep.m) * prod;
}

}  // namespace ncsa
