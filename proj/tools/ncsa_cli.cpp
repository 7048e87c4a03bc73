// ncsa: batch front end for the zeta, torus, SU_q(2) and action computations.
#include "acceptance/criteria.hpp"
#include "ncsa/errors.hpp"
#include "ncsa/io.hpp"
#include "ncsa/lattice_zeta.hpp"
#include "ncsa/nc_torus.hpp"
#include "ncsa/parallel.hpp"
#include "ncsa/suq2.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace ncsa;

namespace {

struct RunConfig {
    std::string subcommand;
    std::string input;
    std::string one_form;
    std::string cutoff;
    std::string out;
    std::string format = "json";
    double tol = 0.0;  // 0 keeps each module's default
    long long max_terms = 0;
    int trunc = 0;
    int threads = 0;
    int n = 2;
    double s = 0.0;
    double s_imag = 0.0;
    std::optional<double> q;
    std::optional<double> lambda;
    bool no_j = false;
};

constexpr double cross_check_tol = 1e-8;

void emit(const json& report, const RunConfig& cfg)
{
    const std::string text = report.dump(2) + "\n";
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw Error(ErrorKind::invalid_argument, "cannot write " + cfg.out);
    f << text;
}

Cutoff load_cutoff(const RunConfig& cfg)
{
    if (cfg.cutoff.empty()) return Cutoff::exponential();
    json j = read_json_file(cfg.cutoff);
    return parse_cutoff(j.contains("cutoff") ? j["cutoff"] : j);
}

json cutoff_json(const Cutoff& c)
{
    switch (c.family) {
    case Cutoff::Family::exponential: return {{"family", "exponential"}, {"amplitude", c.amplitude}};
    case Cutoff::Family::gaussian: return {{"family", "gaussian"}, {"amplitude", c.amplitude}};
    case Cutoff::Family::table: return {{"family", "table"}, {"rows", c.table.size()}};
    }
    return {};
}

json run_zeta(const RunConfig& cfg)
{
    EpsteinOptions opts;
    if (cfg.tol > 0.0) opts.tol = cfg.tol;
    if (cfg.trunc > 0) opts.max_shells = cfg.trunc;
    const cplx s(cfg.s, cfg.s_imag);
    const EpsteinResult r = epstein_eval(cfg.n, s, opts);
    return {{"subcommand", "zeta"},
            {"n", cfg.n},
            {"s", to_json(s)},
            {"value", to_json(r.value)},
            {"tail_bound", r.tail_bound},
            {"shells", r.shells},
            {"residue_at_n", {{"value", epstein_residue(cfg.n)}, {"provenance", "closed form 2 pi^{n/2}/Gamma(n/2)"}}},
            {"provenance", "theta split at t=1"}};
}

json run_torus(const RunConfig& cfg)
{
    if (cfg.input.empty()) throw Error(ErrorKind::schema, "torus: --input is required");
    const TorusInput in = parse_torus(read_json_file(cfg.input));
    if (in.n != 2 && in.n != 4) throw Error(ErrorKind::unsupported, "torus: only n = 2 and n = 4 are supported");
    const Cutoff cut = load_cutoff(cfg);
    std::vector<int> ks;
    for (int k = 1; k <= in.n; ++k) ks.push_back(k);
    const CutoffMoments mom = cutoff_moments(cut, ks);
    const double lambda = cfg.lambda.value_or(1.0);
    const TorusActionReport rep = torus_action(in.A, in.theta, in.n, mom, lambda, in.diophantine_asserted);

    json out{{"subcommand", "torus"},
             {"n", in.n},
             {"diophantine_asserted", in.diophantine_asserted},
             {"cutoff", cutoff_json(cut)},
             {"moments", to_json(mom)},
             {"top_integral", {{"value", rep.top_integral}, {"provenance", "2^{n/2} x Epstein residue"}}},
             {"zeta_D0", {{"value", rep.zeta_D0}, {"provenance", "2^{n/2} (Z_n(0) + 1)"}}},
             {"zeta0_shift", {{"value", rep.zeta0_shift}, {"provenance", "-c YM (n=4), 0 (n=2)"}}},
             {"yang_mills", rep.yang_mills},
             {"expansion", to_json(rep.expansion)}};
    if (in.n == 4) {
        json cs = json::object();
        for (int q = 2; q <= 4; ++q) cs[std::to_string(q)] = cs_sums(in.A, in.theta, q);
        const double via_cs = zeta0_shift_via_cs(in.A, in.theta);
        const double dev = std::abs(via_cs - rep.zeta0_shift);
        out["cs_sums"] = cs;
        out["zeta0_shift_via_cs"] = {{"value", via_cs}, {"deviation", dev}, {"provenance", "2 sum (-1)^q/q cs_q"}};
        out["cross_check_passed"] = dev <= cross_check_tol * std::max(1.0, std::abs(via_cs));
    }
    if (cfg.trunc > 0) {
        const SpectrumData sp = dirac_truncated(in.n, cfg.trunc);
        json levels = json::array();
        for (const auto& [ev, mult] : sp.levels) levels.push_back({{"eigenvalue", ev}, {"multiplicity", mult}});
        out["spectrum"] = {{"K", cfg.trunc}, {"kernel_dim", sp.kernel_dim}, {"levels", levels}};
    }
    return out;
}

json run_suq2(const RunConfig& cfg)
{
    if (cfg.one_form.empty()) throw Error(ErrorKind::schema, "suq2: --one-form is required");
    const SuqInput in = parse_suq_one_form(read_json_file(cfg.one_form));
    const std::optional<double> q = cfg.q ? cfg.q : in.q;
    if (!q) throw Error(ErrorKind::schema, "suq2: q missing (use --q or a 'q' field)");
    if (!(*q > 0.0 && *q < 1.0)) throw Error(ErrorKind::invalid_argument, "suq2: q must lie in (0, 1)");
    QContext ctx = QContext::make(*q);
    if (cfg.tol > 0.0) ctx.tol = cfg.tol;
    if (cfg.max_terms > 0) ctx.max_terms = cfg.max_terms;
    const bool with_j = !cfg.no_j;
    if (ctx.guard_band()) std::cerr << "warning: q >= 0.95, tau0 series are poorly conditioned\n";

    const SuqActionValues v = suq2_coefficients(in.A, ctx, with_j);
    json x = json::object();
    double worst = 0.0;
    for (const auto& [pk, val] : v.x) {
        json e{{"p", pk.first}, {"k", pk.second}, {"value", to_json(val)}, {"provenance", "graded closed-form tau"}};
        if (pk.first == 1) {
            const cplx series = nc_integral(in.A, pk.second, ctx);
            const double dev = std::abs(series - val);
            worst = std::max(worst, dev / std::max(1.0, std::abs(val)));
            e["series"] = {{"value", to_json(series)}, {"deviation", dev}, {"provenance", "tau0 q-series"}};
        }
        x[std::to_string(pk.first) + "," + std::to_string(pk.second)] = e;
    }
    const SuqMoments m = suq2_moments(ctx);
    json out{{"subcommand", "suq2"},
             {"q", *q},
             {"with_j", with_j},
             {"forms", in.forms},
             {"words", in.A.size()},
             {"integrals", x},
             {"unperturbed", {{"weight3", m.weight3}, {"weight2", m.weight2}, {"weight1", m.weight1}, {"zeta0", m.zeta0}}},
             {"coefficients", {{"c3", to_json(v.c3)}, {"c2", to_json(v.c2)}, {"c1", to_json(v.c1)}, {"zeta0", to_json(v.zeta0)}}},
             {"tolerances", {{"tau0_tail", ctx.tol}, {"max_terms", ctx.max_terms}, {"cross_check", cross_check_tol}}}};
    if (cfg.lambda) {
        const Cutoff cut = load_cutoff(cfg);
        const CutoffMoments mom = cutoff_moments(cut, {1, 2, 3});
        const SuqActionReport rep = suq2_action(in.A, ctx, mom, *cfg.lambda, with_j);
        out["cutoff"] = cutoff_json(cut);
        out["moments"] = to_json(mom);
        out["expansion"] = to_json(rep.expansion);
    }
    out["cross_check_passed"] = worst <= cross_check_tol;
    return out;
}

json run_action(const RunConfig& cfg)
{
    if (cfg.input.empty()) throw Error(ErrorKind::schema, "action: --input is required");
    const ActionInput in = parse_action(read_json_file(cfg.input));
    const std::optional<double> lambda = cfg.lambda ? cfg.lambda : in.lambda;
    if (!lambda) throw Error(ErrorKind::schema, "action: lambda missing");
    std::vector<int> ks;
    for (const auto& [k, v] : in.integrals) ks.push_back(k);
    MomentOptions mo;
    if (cfg.tol > 0.0) mo.tol = cfg.tol;
    const CutoffMoments mom = cutoff_moments(in.cutoff, ks, mo);
    const ExpansionReport rep = assemble(in.integrals, in.zeta0.value_or(0.0), mom, *lambda);
    return {{"subcommand", "action"}, {"cutoff", cutoff_json(in.cutoff)}, {"moments", to_json(mom)},
            {"expansion", to_json(rep)}};
}

int run_selftest()
{
    int failed = 0;
    for (const auto& r : acceptance::run_all()) {
        std::cout << acceptance::format(r) << "\n";
        if (!r.pass) ++failed;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << "\n";
    return failed ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv)
{
    RunConfig cfg;
    CLI::App app{"Spectral action coefficients on the noncommutative torus and SU_q(2)"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--tol", cfg.tol, "tolerance override")->check(CLI::PositiveNumber);
        sub->add_option("--max-terms", cfg.max_terms, "series term cap")->check(CLI::PositiveNumber);
        sub->add_option("--trunc", cfg.trunc, "truncation cap (shells or spectrum box)")->check(CLI::PositiveNumber);
        sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--out", cfg.out, "report path (stdout if omitted)");
        sub->add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"json"}));
    };

    auto* zeta = app.add_subcommand("zeta", "Epstein zeta Z_n(s)");
    common(zeta);
    zeta->add_option("--n", cfg.n, "lattice dimension");
    zeta->add_option("--s", cfg.s, "real part of s");
    zeta->add_option("--s-imag", cfg.s_imag, "imaginary part of s");

    auto* torus = app.add_subcommand("torus", "spectral action of a perturbed torus Dirac operator");
    common(torus);
    torus->add_option("--input", cfg.input, "torus JSON")->check(CLI::ExistingFile);
    torus->add_option("--lambda", cfg.lambda, "cutoff scale");
    torus->add_option("--cutoff", cfg.cutoff, "cutoff JSON (exponential if omitted)");

    auto* suq = app.add_subcommand("suq2", "noncommutative integrals and action coefficients on SU_q(2)");
    common(suq);
    suq->add_option("--q", cfg.q, "deformation parameter in (0,1)");
    suq->add_option("--one-form", cfg.one_form, "one-form JSON")->check(CLI::ExistingFile);
    suq->add_option("--lambda", cfg.lambda, "cutoff scale; adds the expansion");
    suq->add_option("--cutoff", cfg.cutoff, "cutoff JSON (exponential if omitted)");
    suq->add_flag("--no-j", cfg.no_j, "drop the J-conjugate terms");

    auto* action = app.add_subcommand("action", "assemble an expansion from integrals and a cutoff");
    common(action);
    action->add_option("--input", cfg.input, "action JSON")->check(CLI::ExistingFile);
    action->add_option("--lambda", cfg.lambda, "cutoff scale (overrides the file)");

    auto* self = app.add_subcommand("selftest", "run the acceptance criteria");
    common(self);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (cfg.threads > 0) set_threads(cfg.threads);

    try {
        if (self->parsed()) return run_selftest();
        json report;
        if (zeta->parsed()) report = run_zeta(cfg);
        else if (torus->parsed()) report = run_torus(cfg);
        else if (suq->parsed()) report = run_suq2(cfg);
        else report = run_action(cfg);
        emit(report, cfg);
        if (report.value("cross_check_passed", true)) return 0;
        std::cerr << json{{"error", "cross-check outside tolerance"}}.dump() << "\n";
        return exit_code(ErrorKind::tolerance);
    } catch (const PoleError& e) {
        json err{{"error", e.what()}, {"kind", "pole"}, {"residue", e.residue()}};
        std::cerr << err.dump() << "\n";
        return exit_code(e.kind());
    } catch (const Error& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return exit_code(e.kind());
    }
}
