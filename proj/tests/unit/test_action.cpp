#include "ncsa/action.hpp"
#include "ncsa/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace ncsa;

TEST_CASE("exponential cutoff moments")
{
    const CutoffMoments a = cutoff_moments(Cutoff::exponential(), {2, 3});
    CHECK(a.phi.at(2).provenance == "analytic");
    CHECK(std::abs(a[2] - 0.5) < 1e-15);
    CHECK(std::abs(a[3] - std::sqrt(std::numbers::pi) / 4.0) < 1e-15);
    CHECK(a.phi0 == 1.0);
    MomentOptions o;
    o.force_quadrature = true;
    const CutoffMoments b = cutoff_moments(Cutoff::exponential(), {1, 2, 3, 4}, o);
    for (int k = 1; k <= 4; ++k) {
        CHECK(b.phi.at(k).provenance == "quadrature");
        CHECK(std::abs(b[k] - 0.5 * std::tgamma(0.5 * k)) < 1e-10);
        CHECK(b.phi.at(k).error_bound <= 1e-8);
    }
}

TEST_CASE("gaussian cutoff moments")
{
    MomentOptions o;
    o.force_quadrature = true;
    const CutoffMoments a = cutoff_moments(Cutoff::gaussian(2.0), {1, 2, 3});
    const CutoffMoments b = cutoff_moments(Cutoff::gaussian(2.0), {1, 2, 3}, o);
    for (int k = 1; k <= 3; ++k) {
        CHECK(std::abs(a[k] - 0.5 * std::tgamma(0.25 * k)) < 1e-14);
        CHECK(std::abs(a[k] - b[k]) < 1e-10);
    }
}

TEST_CASE("tabulated cutoff")
{
    std::vector<std::pair<double, double>> rows;
    for (int i = 0; i <= 200; ++i) {
        const double t = 0.05 * i;
        rows.emplace_back(t, std::exp(-t));
    }
    const Cutoff c = Cutoff::tabulated(rows);
    CHECK(std::abs(c(0.0) - 1.0) < 1e-12);
    CHECK(std::abs(c(12.0) - std::exp(-12.0)) < 1e-8);
    const CutoffMoments m = cutoff_moments(c, {1, 2, 3});
    // limited by the spline interpolation error at h = 0.05
    for (int k = 1; k <= 3; ++k) CHECK(std::abs(m[k] - 0.5 * std::tgamma(0.5 * k)) < 1e-5);

    std::vector<std::pair<double, double>> flat{{0.0, 1.0}, {1.0, 1.0}, {2.0, 1.0}, {3.0, 1.0}, {4.0, 1.0}};
    CHECK_THROWS_AS(cutoff_moments(Cutoff::tabulated(flat), {2}), Error);
    CHECK_THROWS_AS(Cutoff::tabulated({{0.5, 1.0}, {0.2, 1.0}}), Error);
}

TEST_CASE("moments need k >= 1")
{
    try {
        cutoff_moments(Cutoff::exponential(), {0});
        FAIL("k = 0 accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::invalid_argument);
    }
}

TEST_CASE("assemble examples")
{
    const CutoffMoments m = cutoff_moments(Cutoff::exponential(), {1, 2, 3});
    const double lambda = 4.0;
    SUBCASE("SU_q(2) with A = 0")
    {
        const ExpansionReport r = assemble({{3, 2.0}, {2, 0.0}, {1, -0.5}}, 0.0, m, lambda);
        CHECK(std::abs(r.total - (2.0 * m[3] * 64.0 - 0.5 * m[1] * 4.0)) < 1e-12);
        REQUIRE(r.terms.size() == 4);
        CHECK(r.terms[0].power == 3);
        CHECK(r.terms[3].power == 0);
        for (std::size_t i = 1; i < r.terms.size(); ++i) CHECK(r.terms[i].power < r.terms[i - 1].power);
    }
    SUBCASE("torus n = 2")
    {
        const double pi = std::numbers::pi;
        const ExpansionReport r = assemble({{1, 0.0}, {2, 4.0 * pi}}, 0.0, m, lambda);
        CHECK(std::abs(r.total - 4.0 * pi * m[2] * 16.0) < 1e-12);
    }
    SUBCASE("all zero")
    {
        CHECK(assemble({{1, 0.0}, {2, 0.0}}, 0.0, m, lambda).total == cplx(0.0));
    }
    SUBCASE("Phi(0) term passes through")
    {
        const ExpansionReport r = assemble({}, cplx(1.5, -0.5), m, lambda);
        CHECK(r.total == cplx(1.5, -0.5));
    }
    CHECK_THROWS_AS(assemble({{1, 1.0}}, 0.0, m, 0.0), Error);
}
