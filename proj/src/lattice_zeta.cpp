#include "ncsa/lattice_zeta.hpp"

#include "ncsa/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ncsa {

namespace {
constexpr double pi = std::numbers::pi;
}

LatticePoly LatticePoly::constant(int dim, cplx c)
{
    LatticePoly p(dim);
    p.add(IVec(static_cast<std::size_t>(dim), 0), c);
    return p;
}

LatticePoly LatticePoly::monomial(int dim, std::span<const int> coords, cplx c)
{
    IVec e(static_cast<std::size_t>(dim), 0);
    for (int i : coords) {
        if (i < 1 || i > dim)
            throw Error(ErrorKind::invalid_argument, "LatticePoly: coordinate out of range");
        ++e[static_cast<std::size_t>(i - 1)];
    }
    LatticePoly p(dim);
    p.add(e, c);
    return p;
}

void LatticePoly::add(const IVec& p, cplx c)
{
    if (static_cast<int>(p.size()) != n)
        throw Error(ErrorKind::invalid_argument, "LatticePoly: exponent length mismatch");
    for (int e : p)
        if (e < 0) throw Error(ErrorKind::invalid_argument, "LatticePoly: negative exponent");
    terms[p] += c;
}

int LatticePoly::degree() const
{
    int d = 0;
    for (const auto& [p, c] : terms) {
        int s = 0;
        for (int e : p) s += e;
        d = std::max(d, s);
    }
    return d;
}

cplx LatticePoly::operator()(std::span<const int> k) const
{
    cplx total = 0.0;
    for (const auto& [p, c] : terms) {
        double v = 1.0;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (int e = 0; e < p[i]; ++e) v *= k[i];
        total += c * v;
    }
    return total;
}

std::vector<double> representation_counts(int n, int max_m)
{
    std::vector<double> r1(static_cast<std::size_t>(max_m) + 1, 0.0);
    r1[0] = 1.0;
    for (int j = 1; j * j <= max_m; ++j) r1[static_cast<std::size_t>(j * j)] = 2.0;
    std::vector<double> r(static_cast<std::size_t>(max_m) + 1, 0.0);
    r[0] = 1.0;
    for (int d = 0; d < n; ++d) {
        std::vector<double> next(r.size(), 0.0);
        for (int m = 0; m <= max_m; ++m)
            for (int j = 0; j * j <= m; ++j)
                next[static_cast<std::size_t>(m)] +=
                    r1[static_cast<std::size_t>(j * j)] * r[static_cast<std::size_t>(m - j * j)];
        r = std::move(next);
    }
    return r;
}

EpsteinEvaluator::EpsteinEvaluator(int n, EpsteinOptions opts) : n_(n), opts_(opts)
{
    if (n < 1 || n > 6)
        throw Error(ErrorKind::unsupported, "Epstein zeta supported for 1 <= n <= 6");
    if (!(opts_.tol > 0.0))
        throw Error(ErrorKind::invalid_argument, "Epstein tolerance must be positive");
    counts_ = representation_counts(n, opts_.max_shells);
}

EpsteinResult EpsteinEvaluator::evaluate(cplx s) const
{
    const double nd = n_;
    if (std::abs(s - nd) < 1e-13)
        throw PoleError("Epstein zeta: pole at s = n", epstein_residue(n_));
    const cplx a1 = s / 2.0;
    const cplx a2 = (nd - s) / 2.0;
    const cplx pref = std::pow(pi, s / 2.0);
    const double scale = std::max(1.0, std::abs(pref * rgamma(a1)));
    const double c1 = std::max(0.0, a1.real() - 1.0);
    const double c2 = std::max(0.0, a2.real() - 1.0);
    // |G(a, x)| <= e^{-x} / (x - max(0, Re a - 1)) since t^c <= e^{c(t-1)}.
    auto bound = [&](int m) {
        const double r = counts_[static_cast<std::size_t>(m)];
        if (r == 0.0) return 0.0;
        const double x = pi * m;
        const double d1 = x - c1, d2 = x - c2;
        if (d1 <= 0.5 || d2 <= 0.5) return HUGE_VAL;
        return r * std::exp(-x) * (1.0 / d1 + 1.0 / d2);
    };
    const int mmax = opts_.max_shells;
    auto tail_from = [&](int m0) {
        double t = 0.0;
        for (int m = m0; m <= std::min(mmax, m0 + 400); ++m) t += bound(m);
        return t;
    };
    int M = 1;
    double tail = tail_from(M + 1);
    while (tail * scale > opts_.tol * 1e-2) {
        ++M;
        if (M + 400 > mmax)
            throw Error(ErrorKind::tolerance, "Epstein zeta: shell cap reached before tail bound");
        tail = tail_from(M + 1);
    }
    cplx S = 0.0;
    for (int m = M; m >= 1; --m) {
        const double r = counts_[static_cast<std::size_t>(m)];
        if (r == 0.0) continue;
        const double x = pi * m;
        S += r * (upper_gamma_tail(a1, x) + upper_gamma_tail(a2, x));
    }
    EpsteinResult res;
    res.value = pref * ((S - 2.0 / (nd - s)) * rgamma(a1) - rgamma(a1 + 1.0));
    res.tail_bound = tail * scale;
    res.shells = M;
    return res;
}

EpsteinResult epstein_eval(int n, cplx s, const EpsteinOptions& opts)
{
    return EpsteinEvaluator(n, opts).evaluate(s);
}

cplx epstein_value(int n, cplx s, const EpsteinOptions& opts)
{
    return epstein_eval(n, s, opts).value;
}

double epstein_residue(int n)
{
    if (n < 1) throw Error(ErrorKind::invalid_argument, "epstein_residue: n must be >= 1");
    return 2.0 * std::pow(pi, n / 2.0) / std::tgamma(n / 2.0);
}

double sphere_moment(int n, std::span<const int> p)
{
    if (static_cast<int>(p.size()) != n)
        throw Error(ErrorKind::invalid_argument, "sphere_moment: exponent length mismatch");
    int total = 0;
    double lg = 0.0;
    for (int e : p) {
        if (e < 0) throw Error(ErrorKind::invalid_argument, "sphere_moment: negative exponent");
        if (e % 2 == 1) return 0.0;
        total += e;
        lg += std::lgamma((e + 1) / 2.0);
    }
    return 2.0 * std::exp(lg - std::lgamma((n + total) / 2.0));
}

cplx residue_lattice_sum(int n, const LatticePoly& P, double r)
{
    if (P.n != n) throw Error(ErrorKind::invalid_argument, "residue_lattice_sum: dimension mismatch");
    cplx total = 0.0;
    for (const auto& [p, c] : P.terms) {
        int d = 0;
        for (int e : p) d += e;
        if (std::abs(r - (n + d)) < 1e-12) total += c * sphere_moment(n, p);
    }
    return total;
}

cplx twisted_residue(const TwistedFamily& fam, const LatticePoly& P, double r)
{
    if (!fam.diophantine_asserted)
        throw Error(ErrorKind::assumption,
                    "twisted_residue: Diophantine assumption not asserted for theta");
    if (fam.theta.rows() != fam.n || fam.theta.cols() != fam.n)
        throw Error(ErrorKind::invalid_argument, "twisted_residue: theta has wrong shape");
    if ((fam.theta + fam.theta.transpose()).cwiseAbs().maxCoeff() > 1e-14)
        throw Error(ErrorKind::invalid_argument, "twisted_residue: theta is not skew-symmetric");
    if (static_cast<int>(fam.eps.size()) != fam.q)
        throw Error(ErrorKind::invalid_argument, "twisted_residue: sign vector length mismatch");
    cplx V = 0.0;
    for (const auto& [ls, c] : fam.b) {
        if (static_cast<int>(ls.size()) != fam.q)
            throw Error(ErrorKind::invalid_argument, "twisted_residue: support block count mismatch");
        IVec sum(static_cast<std::size_t>(fam.n), 0);
        for (int i = 0; i < fam.q; ++i) {
            if (static_cast<int>(ls[static_cast<std::size_t>(i)].size()) != fam.n)
                throw Error(ErrorKind::invalid_argument, "twisted_residue: support vector length mismatch");
            for (int j = 0; j < fam.n; ++j)
                sum[static_cast<std::size_t>(j)] +=
                    fam.eps[static_cast<std::size_t>(i)] * ls[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        if (std::all_of(sum.begin(), sum.end(), [](int v) { return v == 0; })) V += c;
    }
    return V * residue_lattice_sum(fam.n, P, r);
}

double smooth_cutoff(double u, double u0)
{
    if (u <= u0) return 1.0;
    if (u >= 1.0) return 0.0;
    const double A = std::exp(-1.0 / (1.0 - u));
    const double B = std::exp(-1.0 / (u - u0));
    return A / (A + B);
}

double smooth_cutoff_derivative(double u, double u0)
{
    if (u <= u0 || u >= 1.0) return 0.0;
    const double A = std::exp(-1.0 / (1.0 - u));
    const double B = std::exp(-1.0 / (u - u0));
    const double s = A + B;
    return -A * B * (1.0 / ((1.0 - u) * (1.0 - u)) + 1.0 / ((u - u0) * (u - u0))) / (s * s);
}

namespace {

struct Accum {
    double re = 0.0, im = 0.0, cre = 0.0, cim = 0.0;
    static void add1(double& s, double& c, double x)
    {
        const double t = s + x;
        if (std::abs(s) >= std::abs(x)) c += (s - t) + x;
        else c += (x - t) + s;
        s = t;
    }
    void add(cplx z)
    {
        add1(re, cre, z.real());
        add1(im, cim, z.imag());
    }
    cplx value() const { return {re + cre, im + cim}; }
};

struct PolyTerm {
    IVec p;
    cplx c;
};

void inner_sum(int depth, int n, IVec& k, long long norm2, double R2, double R, double t, double u0,
               const std::vector<PolyTerm>& terms, Accum& acc)
{
    if (depth == n) {
        if (norm2 == 0 || static_cast<double>(norm2) >= R2) return;
        const double nrm = std::sqrt(static_cast<double>(norm2));
        const double w = smooth_cutoff(nrm / R, u0);
        if (w == 0.0) return;
        cplx pk = 0.0;
        for (const auto& term : terms) {
            double v = 1.0;
            for (int i = 0; i < n; ++i)
                for (int e = 0; e < term.p[static_cast<std::size_t>(i)]; ++e) v *= k[static_cast<std::size_t>(i)];
            pk += term.c * v;
        }
        acc.add(pk * (w * std::exp(-0.5 * t * std::log(static_cast<double>(norm2)))));
        return;
    }
    const double rem = R2 - static_cast<double>(norm2);
    if (rem <= 0.0) return;
    const int lim = static_cast<int>(std::floor(std::sqrt(rem)));
    for (int v = -lim; v <= lim; ++v) {
        k[static_cast<std::size_t>(depth)] = v;
        inner_sum(depth + 1, n, k, norm2 + static_cast<long long>(v) * v, R2, R, t, u0, terms, acc);
    }
    k[static_cast<std::size_t>(depth)] = 0;
}

}  // namespace

cplx direct_lattice_sum(int n, const LatticePoly& P, double t, double R, Exec ex, double u0)
{
    if (P.n != n) throw Error(ErrorKind::invalid_argument, "direct_lattice_sum: dimension mismatch");
    if (!(R >= 1.0)) throw Error(ErrorKind::invalid_argument, "direct_lattice_sum: radius must be >= 1");
    std::vector<PolyTerm> terms;
    for (const auto& [p, c] : P.terms) terms.push_back({p, c});
    const int lim = static_cast<int>(std::ceil(R));
    const double R2 = R * R;
    const int lead = std::min(n, 2);
    const int width = 2 * lim + 1;
    const std::size_t rows = lead == 1 ? static_cast<std::size_t>(width)
                                       : static_cast<std::size_t>(width) * static_cast<std::size_t>(width);
    auto row = [&](std::size_t idx) -> cplx {
        IVec k(static_cast<std::size_t>(n), 0);
        long long norm2 = 0;
        if (lead == 1) {
            k[0] = static_cast<int>(idx) - lim;
        } else {
            k[0] = static_cast<int>(idx / static_cast<std::size_t>(width)) - lim;
            k[1] = static_cast<int>(idx % static_cast<std::size_t>(width)) - lim;
        }
        for (int i = 0; i < lead; ++i) norm2 += static_cast<long long>(k[static_cast<std::size_t>(i)]) * k[static_cast<std::size_t>(i)];
        if (static_cast<double>(norm2) >= R2) return 0.0;
        Accum acc;
        inner_sum(lead, n, k, norm2, R2, R, t, u0, terms, acc);
        return acc.value();
    };
    return ordered_sum(map_indexed<cplx>(rows, row, ex));
}

}  // namespace ncsa
