#pragma once

#include "ncsa/action.hpp"
#include "ncsa/parallel.hpp"
#include "ncsa/special.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace ncsa {

struct QContext {
    double q = 0.5;
    double tol = 1e-13;      // per-τ₀ tail target
    long long max_terms = 200000;

    static QContext make(double q, double tol = 1e-13, long long max_terms = 200000);
    double qn(long long n) const;  // sqrt(1 - q^{2n}), 0 for n <= 0
    bool guard_band() const { return q >= 0.95; }
};

// ---------------------------------------------------------------- PBW algebra

enum class Gen : std::uint8_t { a, astar, b, bstar };

// (α, β, γ) ↦ a^α b^β b*^γ, α < 0 meaning a*^{|α|}.
using PBWKey = std::array<int, 3>;

class PBWElem {
public:
    std::map<PBWKey, cplx> terms;

    static PBWElem one();
    static PBWElem monomial(int alpha, int beta, int gamma, cplx c = 1.0);
    static PBWElem generator(Gen g);

    PBWElem& operator+=(const PBWElem& o);
    bool empty() const { return terms.empty(); }
    void prune(double eps = 1e-15);
};

PBWElem pbw_mul(const PBWElem& x, const PBWElem& y, double q);
PBWElem pbw_normalize(const std::vector<Gen>& word, double q);
PBWElem pbw_adjoint(const PBWElem& x, double q);

// ---------------------------------------------------------------- ladder operators

enum class Letter : std::uint8_t { ap, am, bp, bm, aps, ams, bps, bms };

int letter_degree(Letter l);
Letter letter_star(Letter l);
std::string letter_name(Letter l);

using Word = std::vector<Letter>;

// Σ c_w w, optionally multiplied on the left by F (which commutes with every letter).
class LadderElem {
public:
    std::map<Word, cplx> terms;
    int f = 0;

    static LadderElem one();
    static LadderElem letter(Letter l, cplx c = 1.0);

    LadderElem& operator+=(const LadderElem& o);
    LadderElem& operator-=(const LadderElem& o);
    LadderElem& operator*=(cplx s);
    LadderElem operator*(const LadderElem& o) const;
    bool empty() const { return terms.empty(); }
    void prune(double eps = 1e-15);
    std::size_t size() const { return terms.size(); }
};

LadderElem operator+(LadderElem a, const LadderElem& b);
LadderElem operator-(LadderElem a, const LadderElem& b);
LadderElem operator*(cplx s, LadderElem a);

int word_degree(const Word& w);
LadderElem ladder_adjoint(const LadderElem& t);
LadderElem rep_ladder(const PBWElem& x);
LadderElem delta_ladder(const LadderElem& t);
LadderElem zero_degree(const LadderElem& t);
LadderElem ladder_power(const LadderElem& t, int p);
// π(x)δ(π(y)); with_f gives π(x)[D, π(y)] = F π(x)δ(π(y)).
LadderElem delta_one_form(const PBWElem& x, const PBWElem& y, bool with_f = false);

// ---------------------------------------------------------------- Hopf map and τ functionals

enum class Side : std::uint8_t { plus, minus };

// Coefficient factor q^{c(n+d)} (qpow) or q_{n+d}^c (qn).
struct Atom {
    enum class Kind : std::uint8_t { qpow, qn };
    Kind kind;
    int c;
    int d;
};

// ε_n ↦ coefficient(n) ε_{n+shift} on the half line.
struct RepAtomOp {
    Side side = Side::plus;
    int shift = 0;
    int min_index = 0;  // coefficient vanishes for n < min_index (an intermediate index went negative)
    double scale = 1.0;
    std::vector<Atom> atoms;

    static RepAtomOp identity(Side s);
    static RepAtomOp generator(Side s, Gen g);

    // this ∘ first
    RepAtomOp after(const RepAtomOp& first) const;
    int b_power() const;
    double coefficient(long long n, const QContext& ctx) const;
};

struct RepTerm {
    cplx weight;
    RepAtomOp plus;
    RepAtomOp minus;
};

struct RepTensor {
    std::vector<RepTerm> terms;
};

// Image of one letter: weight · π₊(plus) ⊗ π₋(minus).
struct LetterImage {
    double weight;
    Gen plus;
    Gen minus;
};
LetterImage letter_image(Letter l, double q);

RepTensor hopf_r(const LadderElem& t, const QContext& ctx);  // degree-0 words only
RepTerm hopf_r_word(const Word& w, cplx c, const QContext& ctx);  // any degree

cplx tau1(const RepAtomOp& op);

struct Tau0Result {
    double value = 0.0;
    double tail_bound = 0.0;
    long long terms = 0;
};
Tau0Result tau0(const RepAtomOp& op, const QContext& ctx);

// ---------------------------------------------------------------- exact side normal form

// Side algebra π±(A): b* acts as b, monomials a^α b^β. Reordering produces
// large q^{-k} factors that later cancel, so this path runs in extended precision.
using lcplx = std::complex<long double>;
using SideKey = std::array<int, 2>;
using SideElem = std::map<SideKey, lcplx>;

SideElem side_from_gen(Gen g);
SideElem side_mul(const SideElem& x, const SideElem& y, double q);
lcplx side_tau1(const SideElem& x);
lcplx side_tau0(const SideElem& x, Side s, double q);

// r(T) grouped by ℤ-degree, with each side compressed to normal form.
struct GradedTensor {
    std::map<int, std::map<std::pair<SideKey, SideKey>, lcplx>> parts;

    std::size_t size() const;
};

GradedTensor hopf_r_graded(const LadderElem& t, double q, Exec ex = Exec::parallel);
GradedTensor graded_mul(const GradedTensor& x, const GradedTensor& y, double q);

// ---------------------------------------------------------------- integrals

// ∮ T|D|^{-k}, k ∈ {1,2,3}, with T's F flag honoured.
cplx nc_integral(const LadderElem& t, int k, const QContext& ctx, Exec ex = Exec::parallel);
// Same functional on the degree-0 part of a graded tensor (closed-form τ values).
cplx nc_integral_graded(const GradedTensor& g, int k, int f, double q);
// ∮ T^p |D|^{-k} through the graded power path.
cplx nc_integral_power(const LadderElem& t, int p, int k, const QContext& ctx, Exec ex = Exec::parallel);

cplx zeta_D_suq2(cplx s);

struct SuqMoments {
    double weight3 = 2.0;
    double weight2 = 0.0;
    double weight1 = -0.5;
    double zeta0 = 0.0;
};
SuqMoments suq2_moments(const QContext& ctx);

// ---------------------------------------------------------------- ideal R fast path

struct IdealFactor {
    enum class Kind {
        bbstar,            // bb*
        b_db_star,         // bδ(b*)
        bstar_db,          // b*δ(b)
        a_da_star,         // aδ(a*)
        astar_da,          // a*δ(a)
        da_da_star,        // da da*
        da_star_da,        // da* da
        db_db,             // b^{n-2} b*^n db db
        db_db_star,        // b^{n-1} b*^{n-1} db db*
        db_star_db_star,   // b^n b*^{n-2} db* db*
        astar_bstar_da_db, // a*b* da db
        a_bstar_da_star_db,
        astar_b_da_db_star,
        a_b_da_star_db_star,
    };
    Kind kind;
    int n = 1;
};

// c + Σ_k (l_k L_q^k + m_k M_q^k), using L_q M_q ≃ 0.
struct LMPoly {
    cplx constant = 0.0;
    std::map<int, cplx> L;
    std::map<int, cplx> M;

    LMPoly operator*(const LMPoly& o) const;
};

LadderElem ideal_factor_ladder(const IdealFactor& f);
LadderElem ideal_product_ladder(const std::vector<IdealFactor>& factors);
LMPoly ideal_r_reduce(const std::vector<IdealFactor>& factors, double q);
cplx lqmq_integral(const LMPoly& p, double q);

// ---------------------------------------------------------------- spectral action

struct SuqActionValues {
    // x[p][k] = ∮ A^p |D|^{-k}, 1 <= p <= k <= 3
    std::map<std::pair<int, int>, cplx> x;
    cplx c3, c2, c1, zeta0;
};

SuqActionValues suq2_coefficients(const LadderElem& A, const QContext& ctx, bool with_j = true,
                                  Exec ex = Exec::parallel);

struct SuqActionReport {
    SuqActionValues values;
    ExpansionReport expansion;
};

SuqActionReport suq2_action(const LadderElem& A, const QContext& ctx, const CutoffMoments& moments, double lambda,
                            bool with_j = true, Exec ex = Exec::parallel);

// B_n = (bb*)^n bδ(b*), A_n = B_n + B_n^*
LadderElem suq2_example_an(int n);

// ---------------------------------------------------------------- shell oracle

inline constexpr int shell_cap = 400;

// Σ of diagonal matrix elements of T over the shell 2j (both spin parts).
cplx shell_trace_oracle(const LadderElem& t, int two_j, const QContext& ctx);

struct ShellFit {
    double leading = 0.0;  // coefficient of (2j)^2, the ∮T|D|^{-3} estimate
    double linear = 0.0;
    double constant = 0.0;
    double residual = 0.0;
};
ShellFit shell_fit(const LadderElem& t, const QContext& ctx, int first_two_j, int shells = 40,
                   Exec ex = Exec::parallel);

}  // namespace ncsa
