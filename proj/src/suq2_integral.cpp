#include "ncsa/errors.hpp"
#include "ncsa/suq2.hpp"

#include <algorithm>
#include <cmath>

namespace ncsa {

RepAtomOp RepAtomOp::identity(Side s)
{
    RepAtomOp op;
    op.side = s;
    return op;
}

RepAtomOp RepAtomOp::generator(Side s, Gen g)
{
    RepAtomOp op = identity(s);
    switch (g) {
    case Gen::a:
        op.shift = 1;
        op.atoms.push_back({Atom::Kind::qn, 1, 1});
        break;
    case Gen::astar:
        op.shift = -1;
        op.min_index = 1;
        op.atoms.push_back({Atom::Kind::qn, 1, 0});
        break;
    case Gen::b:
    case Gen::bstar:
        op.atoms.push_back({Atom::Kind::qpow, 1, 0});
        if (s == Side::minus) op.scale = -1.0;
        break;
    }
    return op;
}

RepAtomOp RepAtomOp::after(const RepAtomOp& first) const
{
    if (first.side != side) throw Error(ErrorKind::invalid_argument, "cannot compose operators on different sides");
    RepAtomOp out = first;
    out.shift = first.shift + shift;
    out.min_index = std::max(first.min_index, min_index - first.shift);
    out.scale = first.scale * scale;
    for (Atom a : atoms) {
        a.d += first.shift;
        out.atoms.push_back(a);
    }
    return out;
}

int RepAtomOp::b_power() const
{
    int p = 0;
    for (const Atom& a : atoms)
        if (a.kind == Atom::Kind::qpow) p += a.c;
    return p;
}

double RepAtomOp::coefficient(long long n, const QContext& ctx) const
{
    if (n < min_index) return 0.0;
    long long e = 0;
    double v = scale;
    for (const Atom& a : atoms) {
        if (a.kind == Atom::Kind::qpow) e += static_cast<long long>(a.c) * (n + a.d);
        else v *= std::pow(ctx.qn(n + a.d), a.c);
    }
    return e == 0 ? v : v * std::pow(ctx.q, static_cast<double>(e));
}

LetterImage letter_image(Letter l, double q)
{
    switch (l) {
    case Letter::ap: return {1.0, Gen::a, Gen::a};
    case Letter::am: return {-q, Gen::b, Gen::bstar};
    case Letter::bp: return {-1.0, Gen::a, Gen::b};
    case Letter::bm: return {-1.0, Gen::b, Gen::astar};
    case Letter::aps: return {1.0, Gen::astar, Gen::astar};
    case Letter::ams: return {-q, Gen::bstar, Gen::b};
    case Letter::bps: return {-1.0, Gen::astar, Gen::bstar};
    case Letter::bms: return {-1.0, Gen::bstar, Gen::a};
    }
    return {0.0, Gen::a, Gen::a};
}

RepTerm hopf_r_word(const Word& w, cplx c, const QContext& ctx)
{
    RepTerm t{c, RepAtomOp::identity(Side::plus), RepAtomOp::identity(Side::minus)};
    for (Letter l : w) {
        const LetterImage im = letter_image(l, ctx.q);
        t.weight *= im.weight;
        t.plus = t.plus.after(RepAtomOp::generator(Side::plus, im.plus));
        t.minus = t.minus.after(RepAtomOp::generator(Side::minus, im.minus));
    }
    return t;
}

RepTensor hopf_r(const LadderElem& t, const QContext& ctx)
{
    RepTensor out;
    for (const auto& [w, c] : t.terms) {
        if (word_degree(w) != 0) throw Error(ErrorKind::invalid_argument, "hopf_r: input has a word of nonzero degree");
        out.terms.push_back(hopf_r_word(w, c, ctx));
    }
    return out;
}

cplx tau1(const RepAtomOp& op)
{
    return (op.shift == 0 && op.b_power() == 0) ? cplx(op.scale) : cplx(0.0);
}

Tau0Result tau0(const RepAtomOp& op, const QContext& ctx)
{
    Tau0Result r;
    if (op.shift != 0) return r;
    const double q = ctx.q;
    const int beta = op.b_power();
    const double t1 = tau1(op).real();
    const double s = std::abs(op.scale);
    int D = 0;
    for (const Atom& a : op.atoms)
        if (a.kind == Atom::Kind::qpow) D += a.c * a.d;
    auto tail = [&](long long N) {
        if (beta > 0) return s * std::pow(q, static_cast<double>(beta * (N + 1) + D)) / (1.0 - std::pow(q, beta));
        double b = 0.0;
        for (const Atom& a : op.atoms) b += a.c * std::pow(q, 2.0 * static_cast<double>(N + 1 + a.d));
        return s * b / (1.0 - q * q);
    };
    double sum = 0.0, comp = 0.0;
    for (long long n = 0; n < ctx.max_terms; ++n) {
        const double term = op.coefficient(n, ctx) - t1;
        const double t = sum + term;
        comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
        sum = t;
        const double b = tail(n);
        if (b <= ctx.tol) {
            r.value = sum + comp;
            r.tail_bound = b;
            r.terms = n + 1;
            return r;
        }
    }
    throw Error(ErrorKind::tolerance, "tau0: tail bound not reached within max_terms");
}

// ---------------------------------------------------------------- graded normal form

std::size_t GradedTensor::size() const
{
    std::size_t n = 0;
    for (const auto& [d, m] : parts) n += m.size();
    return n;
}

namespace {

using TensorMap = std::map<std::pair<SideKey, SideKey>, lcplx>;

void accumulate(TensorMap& out, const SideElem& p, const SideElem& m, lcplx w)
{
    for (const auto& [pk, pc] : p)
        for (const auto& [mk, mc] : m) out[{pk, mk}] += w * pc * mc;
}

void prune_map(TensorMap& m)
{
    for (auto it = m.begin(); it != m.end();) {
        if (it->second == lcplx(0.0L)) it = m.erase(it);
        else ++it;
    }
}

}  // namespace

GradedTensor hopf_r_graded(const LadderElem& t, double q, Exec ex)
{
    std::vector<std::pair<Word, cplx>> words(t.terms.begin(), t.terms.end());
    struct Img {
        int degree;
        lcplx w;
        SideElem p, m;
    };
    auto imgs = map_indexed<Img>(
        words.size(),
        [&](std::size_t i) {
            Img im{word_degree(words[i].first), lcplx(words[i].second), SideElem{{{0, 0}, 1.0L}}, SideElem{{{0, 0}, 1.0L}}};
            for (Letter l : words[i].first) {
                const LetterImage li = letter_image(l, q);
                im.w *= static_cast<long double>(li.weight);
                im.p = side_mul(im.p, side_from_gen(li.plus), q);
                im.m = side_mul(im.m, side_from_gen(li.minus), q);
            }
            return im;
        },
        ex);
    GradedTensor g;
    for (const auto& im : imgs) accumulate(g.parts[im.degree], im.p, im.m, im.w);
    for (auto& [d, m] : g.parts) prune_map(m);
    return g;
}

GradedTensor graded_mul(const GradedTensor& x, const GradedTensor& y, double q)
{
    GradedTensor g;
    for (const auto& [d1, m1] : x.parts)
        for (const auto& [d2, m2] : y.parts) {
            TensorMap& out = g.parts[d1 + d2];
            for (const auto& [k1, c1] : m1)
                for (const auto& [k2, c2] : m2) {
                    const SideElem p = side_mul(SideElem{{k1.first, 1.0L}}, SideElem{{k2.first, 1.0L}}, q);
                    const SideElem m = side_mul(SideElem{{k1.second, 1.0L}}, SideElem{{k2.second, 1.0L}}, q);
                    accumulate(out, p, m, c1 * c2);
                }
        }
    for (auto& [d, m] : g.parts) prune_map(m);
    return g;
}

// ---------------------------------------------------------------- integrals

namespace {

template <class C>
C combine(int k, int f, C t1p, C t0p, C t1m, C t0m)
{
    using R = typename C::value_type;
    if (f == 1) return k == 1 ? t0p * t1m - t1p * t0m : C(0);
    switch (k) {
    case 3: return R(2) * t1p * t1m;
    case 2: return R(2) * (t1p * t0m + t0p * t1m);
    default: return R(2) * t0p * t0m - R(0.5) * t1p * t1m;
    }
}

void check_weight(int k)
{
    if (k < 1 || k > 3) throw Error(ErrorKind::invalid_argument, "integral weight k must be 1, 2 or 3");
}

}  // namespace

cplx nc_integral(const LadderElem& t, int k, const QContext& ctx, Exec ex)
{
    check_weight(k);
    if (t.f == 1 && k != 1) return 0.0;
    const LadderElem t0 = zero_degree(t);
    std::vector<std::pair<Word, cplx>> words(t0.terms.begin(), t0.terms.end());
    auto parts = map_indexed<cplx>(
        words.size(),
        [&](std::size_t i) {
            const RepTerm rt = hopf_r_word(words[i].first, words[i].second, ctx);
            const cplx t1p = tau1(rt.plus), t1m = tau1(rt.minus);
            const bool need0 = k != 3;
            const cplx t0p = need0 ? cplx(tau0(rt.plus, ctx).value) : 0.0;
            const cplx t0m = need0 ? cplx(tau0(rt.minus, ctx).value) : 0.0;
            return rt.weight * combine(k, t.f, t1p, t0p, t1m, t0m);
        },
        ex);
    return ordered_sum(parts);
}

cplx nc_integral_graded(const GradedTensor& g, int k, int f, double q)
{
    check_weight(k);
    auto it = g.parts.find(0);
    if (it == g.parts.end()) return 0.0;
    lcplx sum = 0.0L;
    for (const auto& [key, c] : it->second) {
        const SideElem p{{key.first, 1.0L}}, m{{key.second, 1.0L}};
        sum += c * combine(k, f, side_tau1(p), side_tau0(p, Side::plus, q), side_tau1(m), side_tau0(m, Side::minus, q));
    }
    return cplx(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
}

cplx nc_integral_power(const LadderElem& t, int p, int k, const QContext& ctx, Exec ex)
{
    if (p < 1) throw Error(ErrorKind::invalid_argument, "nc_integral_power: p must be >= 1");
    const GradedTensor g = hopf_r_graded(t, ctx.q, ex);
    GradedTensor acc = g;
    for (int i = 1; i < p; ++i) acc = graded_mul(acc, g, ctx.q);
    return nc_integral_graded(acc, k, (t.f * p) % 2, ctx.q);
}

cplx zeta_D_suq2(cplx s)
{
    if (std::abs(s - 1.0) < 1e-14) throw PoleError("zeta_D has a pole at s = 1", -0.5);
    if (std::abs(s - 3.0) < 1e-14) throw PoleError("zeta_D has a pole at s = 3", 2.0);
    const cplx two = 2.0;
    return 2.0 * (std::pow(two, s - 2.0) - 1.0) * riemann_zeta(s - 2.0) - 0.5 * (std::pow(two, s) - 1.0) * riemann_zeta(s);
}

SuqMoments suq2_moments(const QContext& ctx)
{
    const LadderElem one = LadderElem::one();
    SuqMoments m;
    m.weight3 = nc_integral(one, 3, ctx, Exec::serial).real();
    m.weight2 = nc_integral(one, 2, ctx, Exec::serial).real();
    m.weight1 = nc_integral(one, 1, ctx, Exec::serial).real();
    m.zeta0 = zeta_D_suq2(0.0).real();
    return m;
}

}  // namespace ncsa
