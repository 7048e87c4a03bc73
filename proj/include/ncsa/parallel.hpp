#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace ncsa {

// Every kernel takes an Exec tag. Both paths evaluate the same per-item function
// and reduce in the same fixed order, so results are bitwise identical.
enum class Exec { serial, parallel };

void set_threads(int n);
int threads();

template <class T, class F>
std::vector<T> map_indexed(std::size_t count, F&& f, Exec ex)
{
    std::vector<T> out(count);
    if (ex == Exec::parallel) {
        const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads())
        for (long long i = 0; i < n; ++i)
            out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < count; ++i)
            out[i] = f(i);
    }
    return out;
}

// Neumaier-compensated sum in index order.
double ordered_sum(const std::vector<double>& v);
std::complex<double> ordered_sum(const std::vector<std::complex<double>>& v);

}  // namespace ncsa
