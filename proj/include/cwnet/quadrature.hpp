#pragma once

// 5-point Gauss-Legendre quadrature, exact through degree 9.  Used for
// initial cell averages and for the indicator oracle in the tests; cells
// containing a known discontinuity are integrated piecewise.

#include <array>
#include <cmath>
#include <vector>

namespace cwnet {

struct gl5 {
    static const std::array<double, 5>& nodes() {
        static const std::array<double, 5> x = [] {
            double a = std::sqrt(5.0 - 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
            double b = std::sqrt(5.0 + 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
            return std::array<double, 5>{0.0, a, -a, b, -b};
        }();
        return x;
    }
    static const std::array<double, 5>& weights() {
        static const std::array<double, 5> w = [] {
            double s = std::sqrt(70.0);
            double wa = (322.0 + 13.0 * s) / 900.0;
            double wb = (322.0 - 13.0 * s) / 900.0;
            return std::array<double, 5>{128.0 / 225.0, wa, wa, wb, wb};
        }();
        return w;
    }
};

template <class F>
double gauss5(F&& f, double a, double b) {
    const double m = 0.5 * (a + b);
    const double r = 0.5 * (b - a);
    const auto& x = gl5::nodes();
    const auto& w = gl5::weights();
    double s = 0.0;
    for (int i = 0; i < 5; ++i) s += w[i] * f(m + r * x[i]);
    return r * s;
}

template <class F>
double cell_average(F&& f, double a, double b) {
    return gauss5(f, a, b) / (b - a);
}

// Cell average of piecewise-smooth data: the cell is split at every
// breakpoint that falls strictly inside it.
template <class F>
double cell_average_split(F&& f, double a, double b, const std::vector<double>& breaks) {
    double s = 0.0;
    double lo = a;
    for (double br : breaks) {
        if (br > lo && br < b) {
            s += gauss5(f, lo, br);
            lo = br;
        }
    }
    s += gauss5(f, lo, b);
    return s / (b - a);
}

}  // namespace cwnet
