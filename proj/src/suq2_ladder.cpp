#include "ncsa/errors.hpp"
#include "ncsa/suq2.hpp"

#include <algorithm>

namespace ncsa {

int letter_degree(Letter l)
{
    switch (l) {
    case Letter::ap:
    case Letter::bp:
    case Letter::ams:
    case Letter::bms: return 1;
    default: return -1;
    }
}

Letter letter_star(Letter l)
{
    const auto v = static_cast<std::uint8_t>(l);
    return static_cast<Letter>(v < 4 ? v + 4 : v - 4);
}

std::string letter_name(Letter l)
{
    static const char* names[] = {"a+", "a-", "b+", "b-", "a+*", "a-*", "b+*", "b-*"};
    return names[static_cast<std::uint8_t>(l)];
}

int word_degree(const Word& w)
{
    int d = 0;
    for (Letter l : w) d += letter_degree(l);
    return d;
}

LadderElem LadderElem::one()
{
    LadderElem e;
    e.terms[Word{}] = 1.0;
    return e;
}

LadderElem LadderElem::letter(Letter l, cplx c)
{
    LadderElem e;
    e.terms[Word{l}] = c;
    return e;
}

LadderElem& LadderElem::operator+=(const LadderElem& o)
{
    if (empty()) f = o.f;
    else if (!o.empty() && o.f != f)
        throw Error(ErrorKind::invalid_argument, "cannot add ladder elements with different F powers");
    for (const auto& [w, c] : o.terms) terms[w] += c;
    prune();
    return *this;
}

LadderElem& LadderElem::operator-=(const LadderElem& o)
{
    LadderElem neg = o;
    neg *= -1.0;
    return *this += neg;
}

LadderElem& LadderElem::operator*=(cplx s)
{
    for (auto& [w, c] : terms) c *= s;
    prune();
    return *this;
}

LadderElem LadderElem::operator*(const LadderElem& o) const
{
    LadderElem out;
    out.f = (f + o.f) % 2;
    for (const auto& [w1, c1] : terms)
        for (const auto& [w2, c2] : o.terms) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            out.terms[w] += c1 * c2;
        }
    out.prune();
    return out;
}

void LadderElem::prune(double eps)
{
    for (auto it = terms.begin(); it != terms.end();) {
        if (std::abs(it->second) <= eps) it = terms.erase(it);
        else ++it;
    }
}

LadderElem operator+(LadderElem a, const LadderElem& b) { return a += b; }
LadderElem operator-(LadderElem a, const LadderElem& b) { return a -= b; }
LadderElem operator*(cplx s, LadderElem a) { return a *= s; }

LadderElem ladder_adjoint(const LadderElem& t)
{
    LadderElem out;
    out.f = t.f;
    for (const auto& [w, c] : t.terms) {
        Word r(w.rbegin(), w.rend());
        for (Letter& l : r) l = letter_star(l);
        out.terms[r] += std::conj(c);
    }
    return out;
}

LadderElem rep_ladder(const PBWElem& x)
{
    const LadderElem pa = LadderElem::letter(Letter::ap) + LadderElem::letter(Letter::am);
    const LadderElem pas = LadderElem::letter(Letter::aps) + LadderElem::letter(Letter::ams);
    const LadderElem pb = LadderElem::letter(Letter::bp) + LadderElem::letter(Letter::bm);
    const LadderElem pbs = LadderElem::letter(Letter::bps) + LadderElem::letter(Letter::bms);
    LadderElem out;
    for (const auto& [k, c] : x.terms) {
        LadderElem m = LadderElem::one();
        for (int i = 0; i < std::abs(k[0]); ++i) m = m * (k[0] > 0 ? pa : pas);
        for (int i = 0; i < k[1]; ++i) m = m * pb;
        for (int i = 0; i < k[2]; ++i) m = m * pbs;
        out += c * m;
    }
    return out;
}

LadderElem delta_ladder(const LadderElem& t)
{
    LadderElem out;
    out.f = t.f;
    for (const auto& [w, c] : t.terms) {
        const int d = word_degree(w);
        if (d != 0) out.terms[w] = static_cast<double>(d) * c;
    }
    return out;
}

LadderElem zero_degree(const LadderElem& t)
{
    LadderElem out;
    out.f = t.f;
    for (const auto& [w, c] : t.terms)
        if (word_degree(w) == 0) out.terms[w] = c;
    return out;
}

LadderElem ladder_power(const LadderElem& t, int p)
{
    if (p < 0) throw Error(ErrorKind::invalid_argument, "ladder_power: negative exponent");
    LadderElem out = LadderElem::one();
    for (int i = 0; i < p; ++i) out = out * t;
    return out;
}

LadderElem delta_one_form(const PBWElem& x, const PBWElem& y, bool with_f)
{
    LadderElem out = rep_ladder(x) * delta_ladder(rep_ladder(y));
    if (with_f) out.f = 1 - out.f;
    return out;
}

}  // namespace ncsa
