#pragma once

#include <span>

namespace transmute {

struct LineFit {
    double slope;
    double intercept;
};

/// Ordinary least squares y = slope * x + intercept. Requires >= 2 points
/// with distinct x; returns NaNs otherwise.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace transmute
