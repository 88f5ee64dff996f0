#include "sppspec/quadrature.hpp"

#include <stdexcept>

namespace sppspec {

std::vector<long double> cumulative_simpson(std::span<const long double> f, long double h) {
    const std::size_t n = f.size();
    if (n < 3 || (n - 1) % 2 != 0)
        throw std::invalid_argument("cumulative_simpson: need an even number of intervals");
    std::vector<long double> out(n);
    out[0] = 0.0L;
    for (std::size_t j = 1; j < n; ++j) {
        if (j % 2 == 0)
            out[j] = out[j - 2] + h * (f[j - 2] + 4.0L * f[j - 1] + f[j]) / 3.0L;
        else
            out[j] = out[j - 1] + h * (5.0L * f[j - 1] + 8.0L * f[j] - f[j + 1]) / 12.0L;
    }
    return out;
}

std::vector<double> cumulative_simpson(std::span<const double> f, double h) {
    std::vector<long double> work(f.begin(), f.end());
    auto acc = cumulative_simpson(std::span<const long double>(work), static_cast<long double>(h));
    return std::vector<double>(acc.begin(), acc.end());
}

GridFunction cumulative_integral(const GridFunction& f) {
    auto acc = cumulative_simpson(f.samples(), f.spacing());
    return GridFunction(f.period(), std::move(acc));
}

double integrate(const GridFunction& f) {
    auto acc = cumulative_simpson(f.samples(), f.spacing());
    return acc.back();
}

} // namespace sppspec
