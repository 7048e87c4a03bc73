#include "acceptance/criteria.hpp"

#include "ncsa/action.hpp"
#include "ncsa/errors.hpp"
#include "ncsa/lattice_zeta.hpp"
#include "ncsa/nc_torus.hpp"
#include "ncsa/suq2.hpp"
#include "oracles/oracles.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

namespace ncsa::acceptance {

namespace {

constexpr double pi = std::numbers::pi;
const double test_qs[] = {0.3, 0.5, 0.7};

// Tracks the worst deviation seen by one criterion.
struct Check {
    double tol;
    double worst = 0.0;
    std::string where;
    bool ok = true;

    void operator()(cplx got, cplx want, const std::string& label)
    {
        const double err = std::abs(got - want);
        if (err > worst) {
            worst = err;
            where = label;
        }
        if (!(err <= tol)) ok = false;
    }
    void rel(double got, double want, const std::string& label)
    {
        const double err = std::abs(got - want) / std::max(std::abs(want), 1.0);
        if (err > worst) {
            worst = err;
            where = label;
        }
        if (!(err <= tol)) ok = false;
    }
    std::string detail() const
    {
        std::ostringstream s;
        s.precision(3);
        s << "max deviation " << std::scientific << worst << " (tol " << tol << ")";
        if (!where.empty()) s << " at " << where;
        return s.str();
    }
};

CriterionResult make(int id, const std::string& name, const Check& c) { return {id, name, c.ok, c.detail()}; }

CriterionResult guarded(int id, const std::string& name, const std::function<CriterionResult()>& f)
{
    try {
        return f();
    } catch (const std::exception& e) {
        return {id, name, false, std::string("exception: ") + e.what()};
    }
}

std::string qlabel(const std::string& what, double q)
{
    std::ostringstream s;
    s << what << " q=" << q;
    return s.str();
}

PBWElem g(Gen x) { return PBWElem::generator(x); }

LadderElem bbstar_power(int n) { return rep_ladder(PBWElem::monomial(0, n, n)); }

CriterionResult c1()
{
    Check c{1e-8};
    c(epstein_value(2, 0.0), -1.0, "n=2");
    c(epstein_value(4, 0.0), -1.0, "n=4");
    return make(1, "Epstein values at s=0", c);
}

CriterionResult c2()
{
    Check c{1e-5};
    c(oracle::epstein_pole_fit(2), 2.0 * pi, "n=2");
    c(oracle::epstein_pole_fit(4), 2.0 * pi * pi, "n=4");
    return make(2, "Epstein residues by pole fit", c);
}

CriterionResult c3()
{
    Check c{1e-8};
    for (int n : {2, 4}) {
        for (int i = 0; i < 20; ++i) {
            const double re = 0.5 + (n - 1.0) * (i % 5) / 4.0;
            const double im = 0.3 + 0.7 * (i / 5);
            const cplx s(re, im);
            const cplx lhs = epstein_value(n, s);
            const cplx rhs = std::pow(pi, s - 0.5 * n) * gamma_fn(0.5 * (static_cast<double>(n) - s)) * rgamma(0.5 * s) *
                             epstein_value(n, static_cast<double>(n) - s);
            std::ostringstream lab;
            lab << "n=" << n << " s=" << re << "+" << im << "i";
            c(lhs, rhs, lab.str());
        }
    }
    return make(3, "Epstein functional equation grid", c);
}

CriterionResult c4()
{
    Check exact{1e-12}, numeric{1e-5};
    // n = 2 quadratic: δ_ij π
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            const int idx[] = {i, j};
            const LatticePoly P = LatticePoly::monomial(2, idx);
            const double want = i == j ? pi : 0.0;
            exact(residue_lattice_sum(2, P, 4.0), want, "n=2 k" + std::to_string(i) + "k" + std::to_string(j));
            numeric(oracle::residue_log_slope(2, P, 2, 40.0, 80.0), want,
                    "oracle n=2 k" + std::to_string(i) + "k" + std::to_string(j));
        }
    // n = 4 quadratic: δ_ij π²/2
    for (int i = 1; i <= 4; ++i)
        for (int j = i; j <= 4; ++j) {
            const int idx[] = {i, j};
            exact(residue_lattice_sum(4, LatticePoly::monomial(4, idx), 6.0), i == j ? pi * pi / 2.0 : 0.0,
                  "n=4 quadratic");
        }
    // n = 4 quartic: pairing count × π²/12
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            for (int l = 1; l <= 4; ++l)
                for (int m = 1; m <= 4; ++m) {
                    const int idx[] = {i, j, l, m};
                    const double pairs = (i == j && l == m) + (i == l && j == m) + (i == m && j == l);
                    exact(residue_lattice_sum(4, LatticePoly::monomial(4, idx), 8.0), pairs * pi * pi / 12.0,
                          "n=4 quartic");
                }
    {
        const int q2[] = {1, 1};
        const int q4a[] = {1, 1, 2, 2};
        const int q4b[] = {1, 1, 1, 1};
        numeric(oracle::residue_log_slope(4, LatticePoly::monomial(4, q2), 2, 16.0, 32.0), pi * pi / 2.0,
                "oracle n=4 k1k1");
        numeric(oracle::residue_log_slope(4, LatticePoly::monomial(4, q4a), 4, 16.0, 32.0), pi * pi / 12.0,
                "oracle n=4 k1k1k2k2");
        numeric(oracle::residue_log_slope(4, LatticePoly::monomial(4, q4b), 4, 16.0, 32.0), pi * pi / 4.0,
                "oracle n=4 k1^4");
    }
    CriterionResult r{4, "lattice residue table", exact.ok && numeric.ok,
                      "analytic: " + exact.detail() + "; oracle: " + numeric.detail()};
    return r;
}

CriterionResult c5()
{
    Check c{1e-10};
    std::mt19937_64 rng(20240501);
    for (int trial = 0; trial < 10; ++trial) {
        const OneFormTorus A = oracle::random_torus_form(rng, 4, 2, 0.4);
        const Theta th = oracle::random_theta(rng, 4);
        const double direct = zeta0_shift(A, th, 4, true);
        const double via_cs = zeta0_shift_via_cs(A, th);
        const double ym = -torus_c * yang_mills(A, th);
        const std::string lab = "trial " + std::to_string(trial);
        c(direct, via_cs, lab + " shift vs cs");
        c(direct, ym, lab + " shift vs YM");
        c(via_cs, ym, lab + " cs vs YM");
    }
    return make(5, "torus zeta(0) shift identity", c);
}

CriterionResult c6()
{
    Check c{1e-10};
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> kd(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = trial % 2 == 0 ? 4 : 2;
        const OneFormTorus A = oracle::random_torus_form(rng, n, 2, 0.5);
        const Theta th = oracle::random_theta(rng, n);
        IVec k(static_cast<std::size_t>(n));
        for (auto& v : k) v = kd(rng);
        const OneFormTorus B = gauge_transform(A, TorusElement::mode(k), th);
        c(yang_mills(B, th), yang_mills(A, th), "trial " + std::to_string(trial));
    }
    return make(6, "torus Yang-Mills gauge invariance", c);
}

CriterionResult c7()
{
    const SpectrumData s = dirac_truncated(2, 3);
    const auto want = oracle::dirac_levels_analytic(2, 3);
    bool ok = s.kernel_dim == 2 && s.levels.size() == want.size();
    for (std::size_t i = 0; ok && i < want.size(); ++i)
        ok = std::abs(s.levels[i].first - want[i].first) < 1e-9 && s.levels[i].second == want[i].second;
    std::ostringstream d;
    d << "kernel " << s.kernel_dim << ", " << s.levels.size() << " levels, multiplicities "
      << (ok ? "match" : "differ");
    return {7, "torus truncated Dirac spectrum", ok, d.str()};
}

CriterionResult c8()
{
    Check c{1e-8};
    for (double q : test_qs) {
        const QContext ctx = QContext::make(q);
        const double q2 = q * q;
        const LadderElem adas = delta_one_form(g(Gen::a), g(Gen::astar));
        const LadderElem asda = delta_one_form(g(Gen::astar), g(Gen::a));
        // τ-level values
        auto tt = [&](const LadderElem& t, bool zero) {
            cplx s = 0.0;
            for (const auto& rt : hopf_r(zero_degree(t), ctx).terms)
                s += rt.weight * (zero ? cplx(tau0(rt.plus, ctx).value * tau0(rt.minus, ctx).value)
                                       : tau1(rt.plus) * tau1(rt.minus));
            return s;
        };
        c(tt(adas, false), -1.0, qlabel("t1t1 a da*", q));
        c(tt(asda, false), 1.0, qlabel("t1t1 a* da", q));
        c(tt(adas, true), 1.0 / (q2 - 1.0), qlabel("t0t0 a da*", q));
        c(tt(asda, true), q2 / (q2 - 1.0), qlabel("t0t0 a* da", q));
        c(nc_integral(adas, 1, ctx), (q2 + 3.0) / (2.0 * (q2 - 1.0)), qlabel("a da*", q));
        c(nc_integral(asda, 1, ctx), (3.0 * q2 + 1.0) / (2.0 * (q2 - 1.0)), qlabel("a* da", q));
        c(nc_integral(delta_one_form(g(Gen::b), g(Gen::b)), 1, ctx), 0.0, qlabel("b db", q));
        c(nc_integral(delta_one_form(g(Gen::bstar), g(Gen::bstar)), 1, ctx), 0.0, qlabel("b* db*", q));
        c(nc_integral(delta_one_form(g(Gen::b), g(Gen::bstar)), 1, ctx), -2.0 / (q2 - 1.0), qlabel("b db*", q));
        c(nc_integral(delta_one_form(g(Gen::bstar), g(Gen::b)), 1, ctx), -2.0 / (q2 - 1.0), qlabel("b* db", q));
        // π(b)[D, π(b*)] D^{-1} with D^{-1} = F|D|^{-1}
        LadderElem t = delta_one_form(g(Gen::b), g(Gen::bstar), true);
        t.f = (t.f + 1) % 2;
        c(nc_integral(t, 1, ctx), 2.0 / (1.0 - q2), qlabel("b[D,b*]D^-1", q));
        for (int n = 1; n <= 3; ++n) {
            const double x = std::pow(q, 2 * n), y = std::pow(q, 2 * n + 2);
            const LadderElem bb = bbstar_power(n);
            const std::string ns = " n=" + std::to_string(n);
            c(nc_integral(bb, 1, ctx), -2.0 * (1.0 + x) / ((1.0 - x) * (1.0 - x)), qlabel("(bb*)^n" + ns, q));
            c(nc_integral(bb * delta_one_form(g(Gen::bstar), g(Gen::b)), 1, ctx), 2.0 / (1.0 - y),
              qlabel("(bb*)^n b* db" + ns, q));
            c(nc_integral(bb * delta_one_form(g(Gen::b), g(Gen::bstar)), 1, ctx), 2.0 / (1.0 - y),
              qlabel("(bb*)^n b db*" + ns, q));
            const double x2 = std::pow(q, 4 * n + 2), x3 = std::pow(q, 4 * n);
            c(nc_integral(bb * adas, 1, ctx),
              (-2.0 * x2 - 2.0 * x3 - 2.0 * y + 6.0 * x) / ((1.0 - x) * (1.0 - x) * (1.0 - y)),
              qlabel("(bb*)^n a da*" + ns, q));
            c(nc_integral(bb * asda, 1, ctx), (6.0 * y - 2.0 * x - 2.0 * q2 - 2.0) / ((1.0 - x) * (1.0 - x) * (1.0 - y)),
              qlabel("(bb*)^n a* da" + ns, q));
        }
    }
    return make(8, "SU_q(2) noncommutative integrals", c);
}

struct RowSpec {
    std::string name;
    Gen x, y;
};

CriterionResult c9()
{
    Check c{1e-8};
    const RowSpec rows[] = {{"a*da", Gen::astar, Gen::a}, {"b*db", Gen::bstar, Gen::b},
                            {"ada*", Gen::a, Gen::astar}, {"bdb*", Gen::b, Gen::bstar}};
    for (double q : test_qs) {
        const QContext ctx = QContext::make(q);
        const double q2 = q * q, q4 = q2 * q2;
        for (const auto& row : rows) {
            const SuqActionValues v = suq2_coefficients(delta_one_form(g(row.x), g(row.y)), ctx);
            double want[7];
            if (row.name == "a*da") {
                const double w[7] = {2, 2, 2, 4 * q2 / (q2 - 1), 4 * q2 * (q2 + 2) / (q4 - 1), (3 * q2 + 1) / (2 * (q2 - 1)),
                                     (11 * q4 + 36 * q2 + 13) / (3 * (q4 - 1))};
                std::copy(w, w + 7, want);
            } else if (row.name == "ada*") {
                const double w[7] = {-2, 2, -2, -4 / (q2 - 1), 4 * (2 * q2 + 1) / (q4 - 1), (q2 + 3) / (2 * (q2 - 1)),
                                     (13 * q4 + 36 * q2 + 11) / (3 * (q4 - 1))};
                std::copy(w, w + 7, want);
            } else {
                const double w[7] = {0, 0, 0, 0, -4 / (q4 - 1), -2 / (q2 - 1), 4 * q2 / (q4 - 1)};
                std::copy(w, w + 7, want);
            }
            const cplx got[7] = {v.x.at({1, 3}), v.x.at({2, 3}), v.x.at({3, 3}), v.x.at({1, 2}),
                                 v.x.at({2, 2}), v.x.at({1, 1}), v.zeta0};
            for (int i = 0; i < 7; ++i) c(got[i], want[i], qlabel(row.name + " col " + std::to_string(i + 1), q));
        }
        const CutoffMoments mom = cutoff_moments(Cutoff::exponential(), {1, 2, 3});
        const double lambda = 3.0;
        for (int n = 0; n <= 3; ++n) {
            const SuqActionReport r = suq2_action(suq2_example_an(n), ctx, mom, lambda);
            const double want = 2.0 * mom[3] * std::pow(lambda, 3) - 0.5 * mom[1] * lambda +
                                8.0 / (1.0 + std::pow(q, 2 * n + 2)) * mom.phi0;
            c(r.expansion.total, want, qlabel("S(A_" + std::to_string(n) + ")", q));
            c(r.values.c2, 0.0, qlabel("A_n Lambda^2", q));
        }
    }
    return make(9, "SU_q(2) example one-forms and action", c);
}

struct IdealEntry {
    std::string name;
    std::vector<IdealFactor> tail;
};

CriterionResult c10()
{
    using K = IdealFactor::Kind;
    Check c{1e-8};
    const IdealEntry entries[] = {
        {"b* db", {{K::bstar_db}}},       {"b db*", {{K::b_db_star}}},         {"a da*", {{K::a_da_star}}},
        {"a* da", {{K::astar_da}}},       {"b*^2 db db", {{K::db_db, 2}}},     {"db db*", {{K::db_db_star, 1}}},
        {"da da*", {{K::da_da_star}}},    {"da* da", {{K::da_star_da}}},
    };
    const IdealEntry mixed[] = {
        {"a*b* da db", {{K::astar_bstar_da_db}}},
        {"ab* da* db", {{K::a_bstar_da_star_db}}},
        {"a*b da db*", {{K::astar_b_da_db_star}}},
        {"ab da* db*", {{K::a_b_da_star_db_star}}},
    };
    bool refused = true;
    for (double q : test_qs) {
        const QContext ctx = QContext::make(q);
        for (int n = 0; n <= 3; ++n) {
            const std::string ns = " n=" + std::to_string(n);
            for (const auto& e : entries) {
                std::vector<IdealFactor> f{{K::bbstar, n}};
                f.insert(f.end(), e.tail.begin(), e.tail.end());
                c(nc_integral(ideal_product_ladder(f), 2, ctx), lqmq_integral(ideal_r_reduce(f, q), q),
                  qlabel(e.name + ns, q));
            }
            for (const auto& e : mixed) {
                std::vector<IdealFactor> f{{K::bbstar, n}};
                f.insert(f.end(), e.tail.begin(), e.tail.end());
                c(nc_integral(ideal_product_ladder(f), 2, ctx), 0.0, qlabel(e.name + ns, q));
                try {
                    ideal_r_reduce(f, q);
                    refused = false;
                } catch (const Error& err) {
                    refused = refused && err.kind() == ErrorKind::unsupported;
                }
            }
        }
    }
    CriterionResult r = make(10, "weight-2 dual path", c);
    r.pass = r.pass && refused;
    if (!refused) r.detail += "; a mixed entry was reduced";
    return r;
}

CriterionResult c11()
{
    Check c{1e-4};
    for (double q : test_qs) {
        const QContext ctx = QContext::make(q);
        const LadderElem ts[] = {LadderElem::one(), LadderElem::letter(Letter::bp) * LadderElem::letter(Letter::bps),
                                 LadderElem::letter(Letter::ap) * LadderElem::letter(Letter::aps)};
        const char* names[] = {"1", "b+b+*", "a+a+*"};
        for (int i = 0; i < 3; ++i) {
            const ShellFit f = shell_fit(ts[i], ctx, 100, 40);
            c.rel(f.leading, nc_integral(ts[i], 3, ctx).real(), qlabel(names[i], q));
        }
    }
    return make(11, "shell trace asymptotics", c);
}

CriterionResult c12()
{
    Check c{1e-8};
    for (double q : test_qs) {
        const QContext ctx = QContext::make(q);
        const cplx v = nc_integral(delta_one_form(g(Gen::a), g(Gen::astar)), 1, ctx) -
                       nc_integral(delta_one_form(g(Gen::astar), g(Gen::a)), 1, ctx);
        c(v, -1.0, qlabel("N phi1(a,a*)", q));
    }
    return make(12, "cocycle spot check", c);
}

CriterionResult c13()
{
    Check c{1e-8};
    MomentOptions opts;
    opts.force_quadrature = true;
    const CutoffMoments m = cutoff_moments(Cutoff::exponential(), {1, 2, 3, 4}, opts);
    for (int k = 1; k <= 4; ++k) c(m[k], 0.5 * std::tgamma(0.5 * k), "k=" + std::to_string(k));
    return make(13, "cutoff moments by quadrature", c);
}

}  // namespace

std::vector<CriterionResult> run_all()
{
    using F = CriterionResult (*)();
    const std::pair<const char*, F> list[] = {
        {"Epstein values at s=0", c1},         {"Epstein residues by pole fit", c2},
        {"Epstein functional equation grid", c3}, {"lattice residue table", c4},
        {"torus zeta(0) shift identity", c5},  {"torus Yang-Mills gauge invariance", c6},
        {"torus truncated Dirac spectrum", c7}, {"SU_q(2) noncommutative integrals", c8},
        {"SU_q(2) example one-forms and action", c9}, {"weight-2 dual path", c10},
        {"shell trace asymptotics", c11},      {"cocycle spot check", c12},
        {"cutoff moments by quadrature", c13},
    };
    std::vector<CriterionResult> out;
    int id = 1;
    for (const auto& [name, f] : list) out.push_back(guarded(id++, name, f));
    return out;
}

std::string format(const CriterionResult& r)
{
    char buf[16];
    std::snprintf(buf, sizeof buf, "%2d", r.id);
    return std::string(r.pass ? "PASS" : "FAIL") + " [" + buf + "] " + r.name + ": " + r.detail;
}

}  // namespace ncsa::acceptance
