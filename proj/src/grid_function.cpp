#include "sppspec/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sppspec {

GridFunction::GridFunction(double period, std::vector<double> samples)
    : period_(period), samples_(std::move(samples)) {
    if (!(period_ > 0.0) || !std::isfinite(period_))
        throw std::invalid_argument("GridFunction: period must be positive and finite");
    if (samples_.size() < 3)
        throw std::invalid_argument("GridFunction: need at least 2 intervals (3 samples)");
    for (std::size_t j = 0; j < samples_.size(); ++j)
        if (!std::isfinite(samples_[j]))
            throw std::invalid_argument("GridFunction: non-finite sample at node " + std::to_string(j));
}

GridFunction GridFunction::sample(const std::function<double(double)>& f, double period, std::size_t intervals) {
    if (!(period > 0.0) || !std::isfinite(period))
        throw std::invalid_argument("sample: period must be positive and finite");
    if (intervals < 2)
        throw std::invalid_argument("sample: need at least 2 intervals");
    if (intervals % 2 != 0)
        ++intervals; // cumulative Simpson needs an even interval count
    std::vector<double> s(intervals + 1);
    for (std::size_t j = 0; j <= intervals; ++j) {
        const double x = period * static_cast<double>(j) / static_cast<double>(intervals);
        s[j] = f(x);
        if (!std::isfinite(s[j]))
            throw std::invalid_argument("sample: evaluator returned a non-finite value at node " +
                                        std::to_string(j) + " (x = " + std::to_string(x) + ")");
    }
    return GridFunction(period, std::move(s));
}

std::size_t GridFunction::nearest_index(double x) const {
    const double clamped = std::clamp(x, 0.0, period_);
    const auto j = static_cast<long>(std::lround(clamped / period_ * static_cast<double>(intervals())));
    return static_cast<std::size_t>(std::clamp<long>(j, 0, static_cast<long>(intervals())));
}

double GridFunction::max_abs() const {
    double m = 0.0;
    for (double v : samples_) m = std::max(m, std::fabs(v));
    return m;
}

double GridFunction::min_value() const {
    return *std::min_element(samples_.begin(), samples_.end());
}

} // namespace sppspec
