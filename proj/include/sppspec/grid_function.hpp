#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace sppspec {

/// A real-valued function sampled on a uniform grid over one period [0, T].
/// Stores both endpoints, so a grid with M intervals holds M+1 samples at
/// x_j = j*T/M. Periodicity checks are direct endpoint comparisons.
class GridFunction {
public:
    GridFunction() = default;
    GridFunction(double period, std::vector<double> samples);

    /// Sample an evaluator at the M+1 uniform nodes of [0, T].
    /// An odd interval count is incremented to the next even one, so the
    /// cumulative Simpson rule used downstream always applies cleanly.
    /// Throws std::invalid_argument on a non-finite sample, naming the node.
    static GridFunction sample(const std::function<double(double)>& f, double period, std::size_t intervals);

    double period() const { return period_; }
    std::size_t intervals() const { return samples_.size() - 1; }
    std::size_t size() const { return samples_.size(); }
    double spacing() const { return period_ / static_cast<double>(intervals()); }
    double node(std::size_t j) const { return period_ * static_cast<double>(j) / static_cast<double>(intervals()); }

    double operator[](std::size_t j) const { return samples_[j]; }
    double& operator[](std::size_t j) { return samples_[j]; }
    std::span<const double> samples() const { return samples_; }
    std::vector<double>& mutable_samples() { return samples_; }

    double front() const { return samples_.front(); }
    double back() const { return samples_.back(); }

    /// Index of the grid node nearest to x (x clamped into [0, T]).
    std::size_t nearest_index(double x) const;

    double max_abs() const;
    double min_value() const;

private:
    double period_ = 0.0;
    std::vector<double> samples_;
};

} // namespace sppspec
