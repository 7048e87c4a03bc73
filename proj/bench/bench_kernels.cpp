// Serial reference vs OpenMP path for the heavy kernels. Arg 0 = serial, 1 = parallel.
#include "ncsa/lattice_zeta.hpp"
#include "ncsa/nc_torus.hpp"
#include "ncsa/parallel.hpp"
#include "ncsa/suq2.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace ncsa;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

TorusElement dense_element(int n, int radius, unsigned seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> c(0.0, 1.0);
    TorusElement a(n);
    IVec k(static_cast<std::size_t>(n), -radius);
    for (;;) {
        a.add(k, cplx(c(rng), c(rng)));
        int i = 0;
        while (i < n && k[static_cast<std::size_t>(i)] == radius) k[static_cast<std::size_t>(i++)] = -radius;
        if (i == n) break;
        ++k[static_cast<std::size_t>(i)];
    }
    return a;
}

OneFormTorus wide_form(int modes)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> m(-3, 3);
    std::uniform_real_distribution<double> c(-0.3, 0.3);
    std::vector<std::tuple<int, IVec, cplx>> entries;
    for (int i = 0; i < modes; ++i) {
        IVec l{m(rng), m(rng), m(rng), i + 1};
        entries.emplace_back(1 + i % 4, l, cplx(c(rng), c(rng)));
    }
    return OneFormTorus::from_entries(4, entries);
}

Theta golden_theta()
{
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(4, 4);
    const double g = 0.6180339887498949;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            t(i, j) = g * (i + 1) / (j + 1);
            t(j, i) = -t(i, j);
        }
    return Theta::from_matrix(t);
}

void BM_direct_lattice_sum(benchmark::State& st)
{
    const int idx[] = {1, 1, 2, 2};
    const LatticePoly P = LatticePoly::monomial(4, idx);
    for (auto _ : st) benchmark::DoNotOptimize(direct_lattice_sum(4, P, 8.5, 24.0, exec_of(st)));
}

void BM_weyl_mul(benchmark::State& st)
{
    const Theta th = golden_theta();
    const TorusElement a = dense_element(4, 3, 1), b = dense_element(4, 2, 2);
    for (auto _ : st) benchmark::DoNotOptimize(weyl_mul(a, b, th, exec_of(st)));
}

void BM_cs_sums(benchmark::State& st)
{
    const Theta th = golden_theta();
    const OneFormTorus A = wide_form(12);
    for (auto _ : st) benchmark::DoNotOptimize(cs_sums(A, th, 4, exec_of(st)));
}

void BM_nc_integral(benchmark::State& st)
{
    const QContext ctx = QContext::make(0.8);
    const LadderElem A = suq2_example_an(2);
    const LadderElem A2 = A * A;
    for (auto _ : st) benchmark::DoNotOptimize(nc_integral(A2, 1, ctx, exec_of(st)));
}

void BM_shell_fit(benchmark::State& st)
{
    const QContext ctx = QContext::make(0.5);
    const LadderElem t = LadderElem::letter(Letter::ap) * LadderElem::letter(Letter::aps);
    for (auto _ : st) benchmark::DoNotOptimize(shell_fit(t, ctx, 100, 40, exec_of(st)));
}

}  // namespace

BENCHMARK(BM_direct_lattice_sum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_weyl_mul)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_cs_sums)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_nc_integral)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_shell_fit)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
