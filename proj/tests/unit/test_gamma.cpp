#include "ncsa/errors.hpp"
#include "ncsa/gamma.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

using namespace ncsa;

TEST_CASE("build_gamma gives hermitian anticommuting generators")
{
    for (int n = 1; n <= 6; ++n) {
        const GammaRep rep = build_gamma(n);
        CHECK(rep.dim == (1 << (n / 2)));
        for (int i = 0; i < n; ++i) {
            CHECK((rep.g[i] - rep.g[i].adjoint()).norm() < 1e-14);
            for (int j = 0; j < n; ++j) {
                const CMatrix ac = rep.g[i] * rep.g[j] + rep.g[j] * rep.g[i];
                const CMatrix want = (i == j ? 2.0 : 0.0) * CMatrix::Identity(rep.dim, rep.dim);
                CHECK((ac - want).norm() < 1e-14);
            }
        }
    }
}

TEST_CASE("gamma_trace examples")
{
    const GammaRep r2 = build_gamma(2), r3 = build_gamma(3), r4 = build_gamma(4);
    const int i1212[] = {1, 2, 1, 2};
    CHECK(std::abs(gamma_trace(r2, i1212) + 2.0) < 1e-14);
    const int i11[] = {1, 1};
    CHECK(std::abs(gamma_trace(r4, i11) - 4.0) < 1e-14);
    const int i123[] = {1, 2, 3};
    CHECK(std::abs(gamma_trace(r4, i123)) < 1e-14);
    const cplx t3 = gamma_trace(r3, i123);
    CHECK(std::abs(t3.real()) < 1e-14);
    CHECK(std::abs(std::abs(t3) - 2.0) < 1e-14);
    CHECK(std::abs(t3 - gamma_trace_matrix(r3, i123)) < 1e-14);
}

TEST_CASE("chirality")
{
    const GammaRep r2 = build_gamma(2);
    const CMatrix chi = chirality(r2);
    CHECK((chi - cplx(0.0, -1.0) * r2.g[0] * r2.g[1]).norm() < 1e-14);
    CHECK((chi * chi - CMatrix::Identity(2, 2)).norm() < 1e-14);
    CHECK((chi * r2.g[0] + r2.g[0] * chi).norm() < 1e-14);
    CHECK(std::abs(chirality(build_gamma(4)).trace()) < 1e-14);
    try {
        chirality(build_gamma(3));
        FAIL("odd n accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::unsupported);
    }
}

TEST_CASE("property: pairing path equals matrix path for lists up to length 8")
{
    std::mt19937_64 rng(11);
    for (int n : {2, 3, 4}) {
        const GammaRep rep = build_gamma(n);
        std::uniform_int_distribution<int> idx(1, n);
        for (int trial = 0; trial < 300; ++trial) {
            std::vector<int> I(static_cast<std::size_t>(trial % 9));
            for (auto& v : I) v = idx(rng);
            CHECK(std::abs(gamma_trace(rep, I) - gamma_trace_matrix(rep, I)) < 1e-10);
        }
    }
}

TEST_CASE("property: cyclic invariance")
{
    std::mt19937_64 rng(12);
    for (int n : {2, 3, 4}) {
        const GammaRep rep = build_gamma(n);
        std::uniform_int_distribution<int> idx(1, n);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<int> I(static_cast<std::size_t>(1 + trial % 8));
            for (auto& v : I) v = idx(rng);
            const cplx t = gamma_trace(rep, I);
            std::rotate(I.begin(), I.begin() + 1, I.end());
            CHECK(std::abs(gamma_trace(rep, I) - t) < 1e-12);
        }
    }
}

TEST_CASE("property: contraction identity")
{
    for (int n : {2, 3, 4, 5}) {
        const GammaRep rep = build_gamma(n);
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                cplx s = 0.0;
                for (int mu = 1; mu <= n; ++mu) {
                    const int I[] = {a, mu, b, mu};
                    s += gamma_trace(rep, I);
                }
                const double want = a == b ? rep.dim * (2.0 - n) : 0.0;
                CHECK(std::abs(s - want) < 1e-12);
            }
    }
}
