#include "ncsa/errors.hpp"
#include "ncsa/suq2.hpp"

#include <cmath>

namespace ncsa {

QContext QContext::make(double q, double tol, long long max_terms)
{
    if (!(q > 0.0 && q < 1.0)) throw Error(ErrorKind::invalid_argument, "q must lie strictly between 0 and 1");
    if (!(tol > 0.0)) throw Error(ErrorKind::invalid_argument, "tolerance must be positive");
    if (max_terms < 1) throw Error(ErrorKind::invalid_argument, "max_terms must be positive");
    return QContext{q, tol, max_terms};
}

double QContext::qn(long long n) const
{
    if (n <= 0) return 0.0;
    return std::sqrt(-std::expm1(2.0 * static_cast<double>(n) * std::log(q)));
}

namespace {

// a^{α} (bb*)^{k} ↦ coefficient
using APoly = std::map<std::array<int, 2>, long double>;

APoly a_product(int alpha, int alpha2, long double q)
{
    if (alpha == 0 || alpha2 == 0 || (alpha > 0) == (alpha2 > 0)) return APoly{{{alpha + alpha2, 0}, 1.0}};
    APoly s = alpha > 0 ? a_product(alpha - 1, alpha2 + 1, q) : a_product(alpha + 1, alpha2 - 1, q);
    const long double f = alpha > 0 ? std::pow(q, 2 * (alpha2 + 1)) : std::pow(q, 2 * alpha2);
    APoly out = s;
    for (const auto& [key, c] : s) out[{key[0], key[1] + 1}] -= f * c;
    return out;
}

}  // namespace

PBWElem PBWElem::one() { return monomial(0, 0, 0); }

PBWElem PBWElem::monomial(int alpha, int beta, int gamma, cplx c)
{
    if (beta < 0 || gamma < 0) throw Error(ErrorKind::invalid_argument, "PBW exponents of b and b* must be >= 0");
    PBWElem e;
    if (c != cplx(0.0)) e.terms[{alpha, beta, gamma}] = c;
    return e;
}

PBWElem PBWElem::generator(Gen g)
{
    switch (g) {
    case Gen::a: return monomial(1, 0, 0);
    case Gen::astar: return monomial(-1, 0, 0);
    case Gen::b: return monomial(0, 1, 0);
    case Gen::bstar: return monomial(0, 0, 1);
    }
    return PBWElem{};
}

PBWElem& PBWElem::operator+=(const PBWElem& o)
{
    for (const auto& [k, v] : o.terms) terms[k] += v;
    prune();
    return *this;
}

void PBWElem::prune(double eps)
{
    for (auto it = terms.begin(); it != terms.end();) {
        if (std::abs(it->second) <= eps) it = terms.erase(it);
        else ++it;
    }
}

PBWElem pbw_mul(const PBWElem& x, const PBWElem& y, double q)
{
    PBWElem out;
    for (const auto& [k1, c1] : x.terms)
        for (const auto& [k2, c2] : y.terms) {
            // b^β b*^γ a^{α'} = q^{(β+γ)α'} a^{α'} b^β b*^γ
            const cplx c = c1 * c2 * std::pow(q, (k1[1] + k1[2]) * k2[0]);
            for (const auto& [ak, ac] : a_product(k1[0], k2[0], q))
                out.terms[{ak[0], k1[1] + k2[1] + ak[1], k1[2] + k2[2] + ak[1]}] += c * static_cast<double>(ac);
        }
    out.prune();
    return out;
}

PBWElem pbw_normalize(const std::vector<Gen>& word, double q)
{
    PBWElem out = PBWElem::one();
    for (Gen g : word) out = pbw_mul(out, PBWElem::generator(g), q);
    return out;
}

PBWElem pbw_adjoint(const PBWElem& x, double q)
{
    PBWElem out;
    for (const auto& [k, c] : x.terms)
        out += pbw_mul(PBWElem::monomial(0, k[2], k[1], std::conj(c)), PBWElem::monomial(-k[0], 0, 0), q);
    return out;
}

SideElem side_from_gen(Gen g)
{
    switch (g) {
    case Gen::a: return SideElem{{{1, 0}, 1.0L}};
    case Gen::astar: return SideElem{{{-1, 0}, 1.0L}};
    case Gen::b:
    case Gen::bstar: return SideElem{{{0, 1}, 1.0L}};
    }
    return SideElem{};
}

SideElem side_mul(const SideElem& x, const SideElem& y, double q)
{
    SideElem out;
    const long double ql = q;
    for (const auto& [k1, c1] : x)
        for (const auto& [k2, c2] : y) {
            const lcplx c = c1 * c2 * std::pow(ql, k1[1] * k2[0]);
            for (const auto& [ak, ac] : a_product(k1[0], k2[0], ql)) out[{ak[0], k1[1] + k2[1] + 2 * ak[1]}] += c * ac;
        }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == lcplx(0.0L)) it = out.erase(it);
        else ++it;
    }
    return out;
}

lcplx side_tau1(const SideElem& x)
{
    auto it = x.find({0, 0});
    return it == x.end() ? lcplx(0.0L) : it->second;
}

lcplx side_tau0(const SideElem& x, Side s, double q)
{
    lcplx sum = 0.0L;
    const long double ql = q;
    for (const auto& [k, c] : x) {
        if (k[0] != 0 || k[1] == 0) continue;
        const long double sign = (s == Side::minus && k[1] % 2 == 1) ? -1.0L : 1.0L;
        sum += c * sign / (1.0L - std::pow(ql, k[1]));
    }
    return sum;
}

}  // namespace ncsa
