#include "transmute/fit.hpp"

#include <cstddef>
#include <limits>

namespace transmute {

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n) {
        return {nan, nan};
    }
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) {
        return {nan, nan};
    }
    const double slope = sxy / sxx;
    return {slope, my - slope * mx};
}

}  // namespace transmute
