#include "ncsa/action.hpp"

#include "ncsa/errors.hpp"

#include <boost/math/interpolators/makima.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <memory>

namespace ncsa {

namespace {

using boost::math::interpolators::makima;

struct TableModel {
    std::vector<double> knots;
    makima<std::vector<double>> spline;
    double t_end;
    double phi_end;
    double beta;  // Φ(t) = phi_end · e^{-β (t - t_end)} beyond the table
};

TableModel make_model(const std::vector<std::pair<double, double>>& table)
{
    std::vector<double> x, y;
    for (const auto& [t, v] : table) {
        x.push_back(t);
        y.push_back(v);
    }
    const std::size_t N = x.size();
    double beta = -1.0;
    if (y[N - 1] > 0.0 && y[N - 2] > 0.0)
        beta = std::log(y[N - 2] / y[N - 1]) / (x[N - 1] - x[N - 2]);
    const double t_end = x.back(), phi_end = y.back();
    std::vector<double> knots = x;
    return TableModel{std::move(knots), makima<std::vector<double>>(std::move(x), std::move(y)), t_end, phi_end, beta};
}

void validate_table(const std::vector<std::pair<double, double>>& table)
{
    if (table.size() < 4) throw Error(ErrorKind::schema, "cutoff table needs at least 4 points");
    if (table.front().first != 0.0) throw Error(ErrorKind::schema, "cutoff table must start at t = 0");
    for (std::size_t i = 1; i < table.size(); ++i)
        if (!(table[i].first > table[i - 1].first))
            throw Error(ErrorKind::schema, "cutoff table abscissae must be strictly increasing");
    for (const auto& [t, v] : table)
        if (!std::isfinite(v) || v < 0.0) throw Error(ErrorKind::schema, "cutoff table values must be finite and >= 0");
}

}  // namespace

Cutoff Cutoff::exponential(double amplitude)
{
    Cutoff c;
    c.family = Family::exponential;
    c.amplitude = amplitude;
    return c;
}

Cutoff Cutoff::gaussian(double amplitude)
{
    Cutoff c;
    c.family = Family::gaussian;
    c.amplitude = amplitude;
    return c;
}

Cutoff Cutoff::tabulated(std::vector<std::pair<double, double>> table)
{
    validate_table(table);
    Cutoff c;
    c.family = Family::table;
    c.table = std::move(table);
    return c;
}

double Cutoff::operator()(double t) const
{
    switch (family) {
    case Family::exponential:
        return amplitude * std::exp(-t);
    case Family::gaussian:
        return amplitude * std::exp(-t * t);
    case Family::table: {
        const auto m = make_model(table);
        if (t <= m.t_end) return m.spline(t);
        if (m.beta <= 0.0) return m.phi_end;
        return m.phi_end * std::exp(-m.beta * (t - m.t_end));
    }
    }
    return 0.0;
}

double CutoffMoments::operator[](int k) const
{
    if (k == 0) return phi0;
    auto it = phi.find(k);
    if (it == phi.end()) throw Error(ErrorKind::invalid_argument, "moment Phi_" + std::to_string(k) + " not computed");
    return it->second.value;
}

CutoffMoments cutoff_moments(const Cutoff& phi, const std::vector<int>& ks, const MomentOptions& opts)
{
    CutoffMoments out;
    out.phi0 = phi(0.0);
    std::unique_ptr<TableModel> model;
    if (phi.family == Cutoff::Family::table) {
        validate_table(phi.table);
        model = std::make_unique<TableModel>(make_model(phi.table));
    }
    for (int k : ks) {
        if (k < 1) throw Error(ErrorKind::invalid_argument, "divergent moment: Phi_k needs k >= 1");
        MomentEntry e;
        const double h = 0.5 * k;
        if (phi.family != Cutoff::Family::table && !opts.force_quadrature) {
            e.provenance = "analytic";
            e.value = phi.family == Cutoff::Family::exponential ? phi.amplitude * 0.5 * std::tgamma(h)
                                                                 : phi.amplitude * 0.25 * std::tgamma(0.25 * k);
            out.phi[k] = e;
            continue;
        }
        e.provenance = "quadrature";
        // t = u² turns ½∫Φ(t) t^{k/2-1} dt into ∫Φ(u²) u^{k-1} du, smooth at 0.
        if (phi.family != Cutoff::Family::table) {
            boost::math::quadrature::exp_sinh<double> integrator;
            double err = 0.0;
            e.value = integrator.integrate(
                [&](double u) {
                    const double v = phi(u * u) * std::pow(u, k - 1);
                    return std::isfinite(v) ? v : 0.0;  // exp·∞ at the far abscissae
                },
                opts.tol, &err);
            e.error_bound = err * std::max(1.0, std::abs(e.value));
        } else {
            const TableModel& m = *model;
            if (m.beta <= 0.0)
                throw Error(ErrorKind::invalid_argument, "divergent moment: tabulated cutoff does not decay");
            // The spline is only C¹ at the knots, so integrate knot interval by knot interval.
            double head = 0.0, err = 0.0;
            for (std::size_t i = 0; i + 1 < m.knots.size(); ++i) {
                double e = 0.0;
                head += boost::math::quadrature::gauss_kronrod<double, 21>::integrate(
                    [&](double u) { return m.spline(u * u) * std::pow(u, k - 1); }, std::sqrt(m.knots[i]),
                    std::sqrt(m.knots[i + 1]), 5, opts.tol, &e);
                err += e;
            }
            const double tail = 0.5 * m.phi_end * std::exp(m.beta * m.t_end) * std::pow(m.beta, -h) *
                                boost::math::tgamma(h, m.beta * m.t_end);
            e.value = head + tail;
            e.error_bound = err * std::max(1.0, std::abs(head));
        }
        if (!std::isfinite(e.value)) throw Error(ErrorKind::invalid_argument, "divergent moment");
        if (e.error_bound > 1e-8)
            throw Error(ErrorKind::tolerance, "moment quadrature error bound above 1e-8 for k=" + std::to_string(k));
        out.phi[k] = e;
    }
    return out;
}

ExpansionReport assemble(const std::map<int, cplx>& integrals, cplx zeta0, const CutoffMoments& moments,
                         double lambda)
{
    if (!(lambda > 0.0)) throw Error(ErrorKind::invalid_argument, "assemble: lambda must be > 0");
    ExpansionReport rep;
    rep.lambda = lambda;
    for (auto it = integrals.rbegin(); it != integrals.rend(); ++it) {
        if (it->first <= 0) throw Error(ErrorKind::invalid_argument, "assemble: integral weights must be positive");
        rep.terms.push_back({it->first, moments[it->first] * it->second, "Phi_" + std::to_string(it->first)});
    }
    rep.terms.push_back({0, moments.phi0 * zeta0, "Phi(0)"});
    rep.total = 0.0;
    for (const auto& t : rep.terms) rep.total += t.coeff * std::pow(lambda, t.power);
    return rep;
}

}  // namespace ncsa
