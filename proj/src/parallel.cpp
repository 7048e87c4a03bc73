#include "ncsa/parallel.hpp"

#include "ncsa/errors.hpp"

#include <atomic>
#include <cmath>
#include <omp.h>

namespace ncsa {

namespace {
std::atomic<int> g_threads{0};
}

void set_threads(int n)
{
    if (n < 1)
        throw Error(ErrorKind::invalid_argument, "thread count must be positive");
    g_threads = n;
}

int threads()
{
    const int t = g_threads.load();
    return t > 0 ? t : omp_get_max_threads();
}

double ordered_sum(const std::vector<double>& v)
{
    double s = 0.0, c = 0.0;
    for (double x : v) {
        const double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    return s + c;
}

std::complex<double> ordered_sum(const std::vector<std::complex<double>>& v)
{
    std::vector<double> re(v.size()), im(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        re[i] = v[i].real();
        im[i] = v[i].imag();
    }
    return {ordered_sum(re), ordered_sum(im)};
}

}  // namespace ncsa
