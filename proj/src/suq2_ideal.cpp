#include "ncsa/errors.hpp"
#include "ncsa/suq2.hpp"

#include <cmath>

namespace ncsa {

namespace {

using K = IdealFactor::Kind;

PBWElem gen(Gen g) { return PBWElem::generator(g); }

LadderElem d(Gen g) { return delta_ladder(rep_ladder(gen(g))); }

LMPoly lm(cplx c, cplx l, cplx m, int power = 1)
{
    LMPoly p;
    p.constant = c;
    if (l != cplx(0.0)) p.L[power] = l;
    if (m != cplx(0.0)) p.M[power] = m;
    return p;
}

void require_n(const IdealFactor& f, int min)
{
    if (f.n < min) throw Error(ErrorKind::invalid_argument, "ideal factor exponent too small");
}

}  // namespace

LMPoly LMPoly::operator*(const LMPoly& o) const
{
    LMPoly r;
    r.constant = constant * o.constant;
    auto add = [](std::map<int, cplx>& dst, int k, cplx v) {
        if (v != cplx(0.0)) dst[k] += v;
    };
    for (const auto& [k, v] : L) add(r.L, k, v * o.constant);
    for (const auto& [k, v] : o.L) add(r.L, k, v * constant);
    for (const auto& [k, v] : M) add(r.M, k, v * o.constant);
    for (const auto& [k, v] : o.M) add(r.M, k, v * constant);
    for (const auto& [k1, v1] : L)
        for (const auto& [k2, v2] : o.L) add(r.L, k1 + k2, v1 * v2);
    for (const auto& [k1, v1] : M)
        for (const auto& [k2, v2] : o.M) add(r.M, k1 + k2, v1 * v2);
    return r;
}

LadderElem ideal_factor_ladder(const IdealFactor& f)
{
    switch (f.kind) {
    case K::bbstar:
        require_n(f, 0);
        return rep_ladder(PBWElem::monomial(0, f.n, f.n));
    case K::b_db_star: return delta_one_form(gen(Gen::b), gen(Gen::bstar));
    case K::bstar_db: return delta_one_form(gen(Gen::bstar), gen(Gen::b));
    case K::a_da_star: return delta_one_form(gen(Gen::a), gen(Gen::astar));
    case K::astar_da: return delta_one_form(gen(Gen::astar), gen(Gen::a));
    case K::da_da_star: return d(Gen::a) * d(Gen::astar);
    case K::da_star_da: return d(Gen::astar) * d(Gen::a);
    case K::db_db:
        require_n(f, 2);
        return rep_ladder(PBWElem::monomial(0, f.n - 2, f.n)) * d(Gen::b) * d(Gen::b);
    case K::db_db_star:
        require_n(f, 1);
        return rep_ladder(PBWElem::monomial(0, f.n - 1, f.n - 1)) * d(Gen::b) * d(Gen::bstar);
    case K::db_star_db_star:
        require_n(f, 2);
        return rep_ladder(PBWElem::monomial(0, f.n, f.n - 2)) * d(Gen::bstar) * d(Gen::bstar);
    case K::astar_bstar_da_db: return rep_ladder(PBWElem::monomial(-1, 0, 1)) * d(Gen::a) * d(Gen::b);
    case K::a_bstar_da_star_db: return rep_ladder(PBWElem::monomial(1, 0, 1)) * d(Gen::astar) * d(Gen::b);
    case K::astar_b_da_db_star: return rep_ladder(PBWElem::monomial(-1, 1, 0)) * d(Gen::a) * d(Gen::bstar);
    case K::a_b_da_star_db_star: return rep_ladder(PBWElem::monomial(1, 1, 0)) * d(Gen::astar) * d(Gen::bstar);
    }
    throw Error(ErrorKind::invalid_argument, "unknown ideal factor");
}

LadderElem ideal_product_ladder(const std::vector<IdealFactor>& factors)
{
    LadderElem out = LadderElem::one();
    for (const auto& f : factors) out = out * ideal_factor_ladder(f);
    return out;
}

LMPoly ideal_r_reduce(const std::vector<IdealFactor>& factors, double q)
{
    LMPoly out = lm(1.0, 0.0, 0.0);
    for (const auto& f : factors) {
        LMPoly p;
        switch (f.kind) {
        case K::bbstar:
            require_n(f, 0);
            p = f.n == 0 ? lm(1.0, 0.0, 0.0) : lm(0.0, 1.0, 1.0, f.n);
            break;
        case K::b_db_star: p = lm(0.0, -1.0, 1.0); break;
        case K::bstar_db: p = lm(0.0, 1.0, -1.0); break;
        case K::a_da_star:
        case K::da_da_star: p = lm(-1.0, 1.0, 1.0); break;
        case K::astar_da: p = lm(1.0, -q * q, -q * q); break;
        case K::da_star_da: p = lm(-1.0, q * q, q * q); break;
        case K::db_db:
            require_n(f, 2);
            p = lm(0.0, 1.0, 1.0, f.n);
            break;
        case K::db_db_star:
            require_n(f, 1);
            p = lm(0.0, -1.0, -1.0, f.n);
            break;
        case K::db_star_db_star:
            require_n(f, 2);
            p = lm(0.0, 1.0, 1.0, f.n);
            break;
        default:
            throw Error(ErrorKind::unsupported, "ideal_r_reduce: factor is not reducible to L_q, M_q");
        }
        out = out * p;
    }
    return out;
}

cplx lqmq_integral(const LMPoly& p, double q)
{
    // ∮ L_q^k |D|^{-2} = ∮ M_q^k |D|^{-2} = 2/(1 - q^{2k}); ∮ |D|^{-2} = 0.
    cplx sum = 0.0;
    for (const auto& [k, v] : p.L) sum += v * 2.0 / (1.0 - std::pow(q, 2 * k));
    for (const auto& [k, v] : p.M) sum += v * 2.0 / (1.0 - std::pow(q, 2 * k));
    return sum;
}

}  // namespace ncsa
