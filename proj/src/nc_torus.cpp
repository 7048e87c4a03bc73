#include "ncsa/nc_torus.hpp"

#include "ncsa/errors.hpp"
#include "ncsa/gamma.hpp"
#include "ncsa/lattice_zeta.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

namespace ncsa {

namespace {

constexpr double pi = std::numbers::pi;

IVec negate(const IVec& k)
{
    IVec r(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) r[i] = -k[i];
    return r;
}

IVec add_vec(const IVec& a, const IVec& b)
{
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

void check_dims(const TorusElement& a, const TorusElement& b)
{
    if (a.n != b.n)
        throw Error(ErrorKind::invalid_argument, "torus elements have different dimensions");
}

}  // namespace

Theta Theta::zero(int n)
{
    return Theta{n, Eigen::MatrixXd::Zero(n, n)};
}

Theta Theta::from_matrix(const Eigen::MatrixXd& m)
{
    if (m.rows() != m.cols() || m.rows() < 1)
        throw Error(ErrorKind::invalid_argument, "theta must be a non-empty square matrix");
    if ((m + m.transpose()).cwiseAbs().maxCoeff() > 1e-14)
        throw Error(ErrorKind::invalid_argument, "theta must be skew-symmetric");
    return Theta{static_cast<int>(m.rows()), m};
}

double Theta::form(const IVec& k, const IVec& q) const
{
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        if (k[static_cast<std::size_t>(i)] == 0) continue;
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += m(i, j) * q[static_cast<std::size_t>(j)];
        s += k[static_cast<std::size_t>(i)] * row;
    }
    return s;
}

TorusElement TorusElement::unit(int dim)
{
    TorusElement e(dim);
    e.c[IVec(static_cast<std::size_t>(dim), 0)] = 1.0;
    return e;
}

TorusElement TorusElement::mode(const IVec& k, cplx value)
{
    TorusElement e(static_cast<int>(k.size()));
    e.c[k] = value;
    return e;
}

cplx TorusElement::coeff(const IVec& k) const
{
    auto it = c.find(k);
    return it == c.end() ? cplx(0.0) : it->second;
}

void TorusElement::add(const IVec& k, cplx value)
{
    if (static_cast<int>(k.size()) != n)
        throw Error(ErrorKind::invalid_argument, "torus mode has wrong dimension");
    c[k] += value;
}

void TorusElement::prune(double eps)
{
    for (auto it = c.begin(); it != c.end();) {
        if (std::abs(it->second) < eps) it = c.erase(it);
        else ++it;
    }
}

bool TorusElement::is_selfadjoint(double tol) const
{
    for (const auto& [k, v] : c)
        if (std::abs(coeff(negate(k)) - std::conj(v)) > tol) return false;
    return true;
}

double TorusElement::max_abs() const
{
    double m = 0.0;
    for (const auto& [k, v] : c) m = std::max(m, std::abs(v));
    return m;
}

TorusElement& TorusElement::operator+=(const TorusElement& o)
{
    check_dims(*this, o);
    for (const auto& [k, v] : o.c) c[k] += v;
    prune();
    return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o)
{
    check_dims(*this, o);
    for (const auto& [k, v] : o.c) c[k] -= v;
    prune();
    return *this;
}

TorusElement& TorusElement::operator*=(cplx s)
{
    for (auto& [k, v] : c) v *= s;
    prune();
    return *this;
}

TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
TorusElement operator*(cplx s, TorusElement a) { return a *= s; }

TorusElement weyl_mul(const TorusElement& a, const TorusElement& b, const Theta& th, Exec ex)
{
    check_dims(a, b);
    if (th.n != a.n) throw Error(ErrorKind::invalid_argument, "theta dimension mismatch");
    std::vector<std::pair<IVec, cplx>> av(a.c.begin(), a.c.end()), bv(b.c.begin(), b.c.end());
    using Row = std::vector<std::pair<IVec, cplx>>;
    auto rows = map_indexed<Row>(
        av.size(),
        [&](std::size_t i) {
            Row r;
            r.reserve(bv.size());
            const auto& [k, x] = av[i];
            for (const auto& [q, y] : bv) {
                const double ph = -0.5 * th.form(k, q);
                r.emplace_back(add_vec(k, q), x * y * cplx(std::cos(ph), std::sin(ph)));
            }
            return r;
        },
        ex);
    TorusElement out(a.n);
    for (const auto& r : rows)
        for (const auto& [k, v] : r) out.c[k] += v;
    out.prune();
    return out;
}

TorusElement commutator(const TorusElement& a, const TorusElement& b, const Theta& th)
{
    return weyl_mul(a, b, th) - weyl_mul(b, a, th);
}

TorusElement adjoint(const TorusElement& a)
{
    TorusElement out(a.n);
    for (const auto& [k, v] : a.c) out.c[negate(k)] = std::conj(v);
    return out;
}

cplx tau(const TorusElement& a)
{
    return a.coeff(IVec(static_cast<std::size_t>(a.n), 0));
}

TorusElement delta_mu(const TorusElement& a, int mu)
{
    if (mu < 1 || mu > a.n)
        throw Error(ErrorKind::invalid_argument, "derivation index out of range");
    TorusElement out(a.n);
    for (const auto& [k, v] : a.c)
        if (k[static_cast<std::size_t>(mu - 1)] != 0)
            out.c[k] = cplx(0.0, k[static_cast<std::size_t>(mu - 1)]) * v;
    return out;
}

OneFormTorus OneFormTorus::zero(int n)
{
    OneFormTorus A;
    A.n = n;
    A.A.assign(static_cast<std::size_t>(n), TorusElement(n));
    return A;
}

OneFormTorus OneFormTorus::from_entries(int n, const std::vector<std::tuple<int, IVec, cplx>>& entries)
{
    OneFormTorus A = zero(n);
    std::map<std::pair<int, IVec>, cplx> fixed;
    auto set = [&](int alpha, const IVec& l, cplx v) {
        auto key = std::make_pair(alpha, l);
        auto it = fixed.find(key);
        if (it != fixed.end()) {
            if (std::abs(it->second - v) > 1e-12 * std::max(1.0, std::abs(v)))
                throw Error(ErrorKind::schema, "conflicting one-form entries for alpha=" + std::to_string(alpha));
            return;
        }
        fixed.emplace(key, v);
    };
    for (const auto& [alpha, l, v] : entries) {
        if (alpha < 1 || alpha > n)
            throw Error(ErrorKind::schema, "one-form index alpha out of range");
        if (static_cast<int>(l.size()) != n)
            throw Error(ErrorKind::schema, "one-form mode has wrong dimension");
        set(alpha, l, v);
        set(alpha, negate(l), -std::conj(v));
    }
    for (const auto& [key, v] : fixed)
        if (v != cplx(0.0)) A.A[static_cast<std::size_t>(key.first - 1)].c[key.second] = v;
    return A;
}

bool OneFormTorus::is_skew_adjoint(double tol) const
{
    for (const auto& a : A) {
        for (const auto& [k, v] : a.c)
            if (std::abs(a.coeff(negate(k)) + std::conj(v)) > tol) return false;
    }
    return true;
}

std::vector<IVec> OneFormTorus::support() const
{
    std::map<IVec, int> s;
    for (const auto& a : A)
        for (const auto& [k, v] : a.c) s[k] = 1;
    std::vector<IVec> out;
    for (const auto& [k, one] : s) out.push_back(k);
    return out;
}

namespace {

void require_skew(const OneFormTorus& A)
{
    if (!A.is_skew_adjoint(1e-10))
        throw Error(ErrorKind::invalid_argument, "one-form is not skew-adjoint");
}

}  // namespace

Curvature curvature(const OneFormTorus& A, const Theta& th)
{
    require_skew(A);
    const int n = A.n;
    Curvature F{n, std::vector<TorusElement>(static_cast<std::size_t>(n * n), TorusElement(n))};
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (a == b) continue;
            const auto& Aa = A.A[static_cast<std::size_t>(a - 1)];
            const auto& Ab = A.A[static_cast<std::size_t>(b - 1)];
            F(a, b) = delta_mu(Ab, a) - delta_mu(Aa, b) + commutator(Aa, Ab, th);
        }
    return F;
}

Curvature curvature_from_coefficients(const OneFormTorus& A, const Theta& th)
{
    require_skew(A);
    const int n = A.n;
    Curvature F{n, std::vector<TorusElement>(static_cast<std::size_t>(n * n), TorusElement(n))};
    const auto supp = A.support();
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (a == b) continue;
            const auto& Aa = A.A[static_cast<std::size_t>(a - 1)];
            const auto& Ab = A.A[static_cast<std::size_t>(b - 1)];
            TorusElement out(n);
            for (const auto& k : supp) {
                const cplx lin = Ab.coeff(k) * static_cast<double>(k[static_cast<std::size_t>(a - 1)]) -
                                 Aa.coeff(k) * static_cast<double>(k[static_cast<std::size_t>(b - 1)]);
                if (lin != cplx(0.0)) out.c[k] += cplx(0.0, 1.0) * lin;
            }
            // Quadratic part: k runs over sums l + l' of support modes.
            for (const auto& [l, vb] : Ab.c)
                for (const auto& [lp, va] : Aa.c) {
                    const IVec k = add_vec(lp, l);
                    out.c[k] += cplx(0.0, -2.0) * va * vb * std::sin(0.5 * th.form(k, l));
                }
            out.prune();
            F(a, b) = out;
        }
    return F;
}

double yang_mills(const OneFormTorus& A, const Theta& th)
{
    const Curvature F = curvature(A, th);
    cplx total = 0.0;
    for (int a = 1; a <= A.n; ++a)
        for (int b = 1; b <= A.n; ++b) {
            if (a == b) continue;
            total += tau(weyl_mul(F(a, b), F(a, b), th));
        }
    return total.real();
}

OneFormTorus gauge_transform(const OneFormTorus& A, const TorusElement& u, const Theta& th)
{
    require_skew(A);
    const TorusElement us = adjoint(u);
    const TorusElement one = TorusElement::unit(A.n);
    const double scale = std::max(1.0, u.max_abs() * u.max_abs());
    if ((weyl_mul(u, us, th) - one).max_abs() > 1e-10 * scale ||
        (weyl_mul(us, u, th) - one).max_abs() > 1e-10 * scale)
        throw Error(ErrorKind::invalid_argument, "gauge_transform: u is not unitary");
    OneFormTorus out = OneFormTorus::zero(A.n);
    for (int a = 1; a <= A.n; ++a) {
        const auto& Aa = A.A[static_cast<std::size_t>(a - 1)];
        out.A[static_cast<std::size_t>(a - 1)] =
            weyl_mul(weyl_mul(u, Aa, th), us, th) + weyl_mul(u, delta_mu(us, a), th);
    }
    if (!out.is_skew_adjoint(1e-9))
        throw Error(ErrorKind::tolerance, "gauge_transform: result lost skew-adjointness");
    return out;
}

double cs_sums(const OneFormTorus& A, const Theta& th, int q, Exec ex)
{
    if (A.n != 4) throw Error(ErrorKind::unsupported, "cs_sums is defined for n = 4 only");
    require_skew(A);
    if (q < 1 || q > 4) throw Error(ErrorKind::invalid_argument, "cs_sums: q must be in 1..4");
    if (q == 1) return 0.0;
    const int n = 4;
    const auto supp = A.support();
    auto a = [&](int alpha, const IVec& l) { return A.A[static_cast<std::size_t>(alpha)].coeff(l); };
    auto norm2 = [](const IVec& l) {
        double s = 0.0;
        for (int v : l) s += static_cast<double>(v) * v;
        return s;
    };
    std::vector<cplx> parts;
    if (q == 2) {
        parts = map_indexed<cplx>(
            supp.size(),
            [&](std::size_t i) {
                const IVec& l = supp[i];
                const IVec ml = negate(l);
                cplx s = 0.0;
                for (int a1 = 0; a1 < n; ++a1)
                    for (int a2 = 0; a2 < n; ++a2) {
                        const double w = static_cast<double>(l[static_cast<std::size_t>(a1)]) * l[static_cast<std::size_t>(a2)] -
                                         (a1 == a2 ? norm2(l) : 0.0);
                        if (w != 0.0) s += a(a1, l) * a(a2, ml) * w;
                    }
                return s;
            },
            ex);
        return (2.0 * torus_c * ordered_sum(parts)).real();
    }
    if (q == 3) {
        parts = map_indexed<cplx>(
            supp.size(),
            [&](std::size_t i) {
                const IVec& l1 = supp[i];
                cplx s = 0.0;
                for (const IVec& l2 : supp) {
                    const double sn = std::sin(0.5 * th.form(l1, l2));
                    if (sn == 0.0) continue;
                    const IVec m12 = negate(add_vec(l1, l2));
                    cplx inner = 0.0;
                    for (int a1 = 0; a1 < n; ++a1) {
                        const cplx x = a(a1, l2) * a(a1, l1);
                        if (x == cplx(0.0)) continue;
                        for (int a3 = 0; a3 < n; ++a3)
                            inner += a(a3, m12) * x * static_cast<double>(l1[static_cast<std::size_t>(a3)]);
                    }
                    s += sn * inner;
                }
                return s;
            },
            ex);
        return (-12.0 * torus_c * ordered_sum(parts)).real();
    }
    parts = map_indexed<cplx>(
        supp.size(),
        [&](std::size_t i) {
            const IVec& l1 = supp[i];
            cplx s = 0.0;
            for (const IVec& l2 : supp)
                for (const IVec& l3 : supp) {
                    const double sn = std::sin(0.5 * th.form(l1, add_vec(l2, l3))) * std::sin(0.5 * th.form(l2, l3));
                    if (sn == 0.0) continue;
                    const IVec m = negate(add_vec(l1, add_vec(l2, l3)));
                    cplx inner = 0.0;
                    for (int a1 = 0; a1 < n; ++a1) {
                        const cplx x = a(a1, m) * a(a1, l2);
                        if (x == cplx(0.0)) continue;
                        for (int a2 = 0; a2 < n; ++a2) inner += x * a(a2, l3) * a(a2, l1);
                    }
                    s += sn * inner;
                }
            return s;
        },
        ex);
    return (8.0 * torus_c * ordered_sum(parts)).real();
}

double zeta0_shift(const OneFormTorus& A, const Theta& th, int n, bool diophantine_asserted)
{
    if (n != 2 && n != 4) throw Error(ErrorKind::unsupported, "zeta0_shift supports n = 2 or n = 4");
    if (A.n != n || th.n != n) throw Error(ErrorKind::invalid_argument, "zeta0_shift: dimension mismatch");
    if (!diophantine_asserted)
        throw Error(ErrorKind::assumption, "zeta0_shift: Diophantine assumption not asserted for theta");
    if (n == 2) return 0.0;
    return -torus_c * yang_mills(A, th);
}

double zeta0_shift_via_cs(const OneFormTorus& A, const Theta& th, Exec ex)
{
    double s = 0.0;
    for (int q = 1; q <= 4; ++q) s += ((q % 2 == 0) ? 1.0 : -1.0) / q * cs_sums(A, th, q, ex);
    return 2.0 * s;
}

TorusActionReport torus_action(const OneFormTorus& A, const Theta& th, int n, const CutoffMoments& moments,
                               double lambda, bool diophantine_asserted)
{
    if (n != 2 && n != 4) throw Error(ErrorKind::unsupported, "torus_action supports n = 2 or n = 4");
    TorusActionReport rep;
    const double fiber = std::pow(2.0, n / 2);
    rep.top_integral = fiber * epstein_residue(n);
    rep.zeta_D0 = fiber * (epstein_value(n, 0.0).real() + 1.0);
    rep.zeta0_shift = zeta0_shift(A, th, n, diophantine_asserted);
    rep.yang_mills = n == 4 ? yang_mills(A, th) : 0.0;
    std::map<int, cplx> integrals;
    for (int k = 1; k <= n; ++k) integrals[k] = k == n ? rep.top_integral : 0.0;
    rep.expansion = assemble(integrals, rep.zeta_D0 + rep.zeta0_shift, moments, lambda);
    return rep;
}

SpectrumData dirac_truncated(int n, int K, long long max_dim, Exec ex)
{
    if (n < 1) throw Error(ErrorKind::invalid_argument, "dirac_truncated: n must be >= 1");
    if (K < 1) throw Error(ErrorKind::invalid_argument, "dirac_truncated: K must be >= 1");
    const GammaRep rep = build_gamma(n);
    const double box = std::pow(2.0 * K + 1.0, n);
    if (box * rep.dim > 50.0 * static_cast<double>(max_dim))
        throw Error(ErrorKind::invalid_argument, "dirac_truncated: memory guard exceeded");
    std::vector<IVec> modes;
    IVec k(static_cast<std::size_t>(n), -K);
    while (true) {
        long long r2 = 0;
        for (int v : k) r2 += static_cast<long long>(v) * v;
        if (r2 <= static_cast<long long>(K) * K) modes.push_back(k);
        int i = 0;
        while (i < n && k[static_cast<std::size_t>(i)] == K) k[static_cast<std::size_t>(i++)] = -K;
        if (i == n) break;
        ++k[static_cast<std::size_t>(i)];
    }
    SpectrumData out;
    out.modes = static_cast<long long>(modes.size());
    out.total_dim = out.modes * rep.dim;
    if (out.total_dim > max_dim)
        throw Error(ErrorKind::invalid_argument, "dirac_truncated: memory guard exceeded");
    auto eig = map_indexed<std::vector<double>>(
        modes.size(),
        [&](std::size_t i) {
            CMatrix D = CMatrix::Zero(rep.dim, rep.dim);
            for (int mu = 0; mu < n; ++mu)
                D += static_cast<double>(modes[i][static_cast<std::size_t>(mu)]) * rep.g[static_cast<std::size_t>(mu)];
            Eigen::SelfAdjointEigenSolver<CMatrix> es(D, Eigen::EigenvaluesOnly);
            const auto& ev = es.eigenvalues();
            return std::vector<double>(ev.data(), ev.data() + ev.size());
        },
        ex);
    std::vector<double> all;
    for (const auto& v : eig) all.insert(all.end(), v.begin(), v.end());
    std::sort(all.begin(), all.end());
    for (double v : all) {
        if (!out.levels.empty() && std::abs(out.levels.back().first - v) < 1e-9)
            ++out.levels.back().second;
        else
            out.levels.emplace_back(v, 1);
    }
    for (auto& [v, mult] : out.levels) {
        if (std::abs(v) < 1e-9) {
            v = 0.0;
            out.kernel_dim = mult;
        }
    }
    return out;
}

}  // namespace ncsa
