#include "ncsa/errors.hpp"
#include "ncsa/suq2.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace ncsa {

SuqActionValues suq2_coefficients(const LadderElem& A, const QContext& ctx, bool with_j, Exec ex)
{
    if (A.f != 0) throw Error(ErrorKind::invalid_argument, "suq2_action expects a delta one-form without F");
    SuqActionValues v;
    const GradedTensor g = hopf_r_graded(A, ctx.q, ex);
    GradedTensor power = g;
    for (int p = 1; p <= 3; ++p) {
        if (p > 1) power = graded_mul(power, g, ctx.q);
        for (int k = p; k <= 3; ++k) v.x[{p, k}] = nc_integral_graded(power, k, 0, ctx.q);
    }
    const SuqMoments m = suq2_moments(ctx);
    auto X = [&](int p, int k) { return v.x.at({p, k}); };
    v.c3 = m.weight3;
    if (with_j) {
        v.c2 = m.weight2 - 4.0 * X(1, 3);
        v.c1 = m.weight1 + 2.0 * (X(2, 3) - X(1, 2)) + std::norm(X(1, 3));
        v.zeta0 = m.zeta0 - 2.0 * X(1, 1) + X(2, 2) - (2.0 / 3.0) * X(3, 3) +
                  std::conj(X(1, 3)) * (0.5 * X(1, 2) - X(2, 3)) + 0.5 * X(1, 3) * std::conj(X(1, 2));
    } else {
        v.c2 = m.weight2 - 2.0 * X(1, 3);
        v.c1 = m.weight1 - X(1, 2) + X(2, 3);
        v.zeta0 = m.zeta0 - X(1, 1) + 0.5 * X(2, 2) - (1.0 / 3.0) * X(3, 3);
    }
    return v;
}

SuqActionReport suq2_action(const LadderElem& A, const QContext& ctx, const CutoffMoments& moments, double lambda,
                            bool with_j, Exec ex)
{
    SuqActionReport r;
    r.values = suq2_coefficients(A, ctx, with_j, ex);
    r.expansion = assemble({{3, r.values.c3}, {2, r.values.c2}, {1, r.values.c1}}, r.values.zeta0, moments, lambda);
    return r;
}

LadderElem suq2_example_an(int n)
{
    if (n < 0) throw Error(ErrorKind::invalid_argument, "A_n needs n >= 0");
    const LadderElem B = delta_one_form(PBWElem::monomial(0, n + 1, n), PBWElem::generator(Gen::bstar));
    return B + ladder_adjoint(B);
}

namespace {

struct ShellState {
    int two_j, m, l;
    bool up;

    bool valid() const
    {
        if (two_j < 0 || m < 0 || m > two_j || l < 0) return false;
        return up ? l <= two_j + 1 : (two_j >= 1 && l <= two_j - 1);
    }
};

// Apply one letter; returns false when the image vanishes.
bool act(Letter x, ShellState& s, double& coef, const QContext& ctx)
{
    const double q = ctx.q;
    const int m = s.m, l = s.l;
    switch (x) {
    case Letter::ap: coef *= ctx.qn(m + 1) * ctx.qn(l + 1); s.two_j += 1; s.m += 1; s.l += 1; break;
    case Letter::am: coef *= std::pow(q, m + l + 1); s.two_j -= 1; break;
    case Letter::bp: coef *= std::pow(q, l) * ctx.qn(m + 1); s.two_j += 1; s.m += 1; break;
    case Letter::bm: coef *= -std::pow(q, m) * ctx.qn(l); s.two_j -= 1; s.l -= 1; break;
    case Letter::aps: coef *= ctx.qn(m) * ctx.qn(l); s.two_j -= 1; s.m -= 1; s.l -= 1; break;
    case Letter::ams: coef *= std::pow(q, m + l + 1); s.two_j += 1; break;
    case Letter::bps: coef *= std::pow(q, l) * ctx.qn(m); s.two_j -= 1; s.m -= 1; break;
    case Letter::bms: coef *= -std::pow(q, m) * ctx.qn(l + 1); s.two_j += 1; s.l += 1; break;
    }
    return coef != 0.0 && s.valid();
}

}  // namespace

cplx shell_trace_oracle(const LadderElem& t, int two_j, const QContext& ctx)
{
    if (two_j < 0 || two_j > shell_cap) throw Error(ErrorKind::invalid_argument, "shell index outside the configured cap");
    if (t.f != 0) throw Error(ErrorKind::unsupported, "shell oracle does not realise F");
    cplx total = 0.0;
    for (const auto& [w, c] : t.terms) {
        if (word_degree(w) != 0) continue;
        double sum = 0.0;
        for (int up = 0; up <= 1; ++up)
            for (int m = 0; m <= two_j; ++m)
                for (int l = 0; l <= two_j + 1; ++l) {
                    const ShellState start{two_j, m, l, up == 1};
                    if (!start.valid()) continue;
                    ShellState s = start;
                    double coef = 1.0;
                    bool alive = true;
                    for (auto it = w.rbegin(); it != w.rend() && alive; ++it) alive = act(*it, s, coef, ctx);
                    if (alive && s.m == start.m && s.l == start.l && s.two_j == start.two_j) sum += coef;
                }
        total += c * sum;
    }
    return total;
}

ShellFit shell_fit(const LadderElem& t, const QContext& ctx, int first_two_j, int shells, Exec ex)
{
    if (shells < 3) throw Error(ErrorKind::invalid_argument, "shell_fit needs at least 3 shells");
    if (first_two_j < 0 || first_two_j + shells - 1 > shell_cap)
        throw Error(ErrorKind::invalid_argument, "shell range outside the configured cap");
    const auto traces = map_indexed<double>(
        static_cast<std::size_t>(shells),
        [&](std::size_t i) { return shell_trace_oracle(t, first_two_j + static_cast<int>(i), ctx).real(); }, ex);
    const double x0 = first_two_j + 0.5 * (shells - 1);
    Eigen::MatrixXd V(shells, 3);
    Eigen::VectorXd y(shells);
    for (int i = 0; i < shells; ++i) {
        const double u = first_two_j + i - x0;
        V(i, 0) = u * u;
        V(i, 1) = u;
        V(i, 2) = 1.0;
        y(i) = traces[static_cast<std::size_t>(i)];
    }
    const Eigen::Vector3d c = V.colPivHouseholderQr().solve(y);
    ShellFit f;
    // Undo the centring: c0 (x - x0)^2 + c1 (x - x0) + c2.
    f.leading = c(0);
    f.linear = c(1) - 2.0 * c(0) * x0;
    f.constant = c(0) * x0 * x0 - c(1) * x0 + c(2);
    f.residual = (V * c - y).norm();
    return f;
}

}  // namespace ncsa
