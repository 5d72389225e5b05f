#pragma once

namespace cwnet {

// Parabola in the local frame xi = x - x_ref; the owner tracks x_ref.
struct parabola {
    double a0 = 0.0, a1 = 0.0, a2 = 0.0;

    double eval(double xi) const { return a0 + (a1 + a2 * xi) * xi; }
    double deriv(double xi) const { return a1 + 2.0 * a2 * xi; }

    // mean over [l, r] in the local frame
    double average(double l, double r) const {
        return a0 + a1 * 0.5 * (l + r) + a2 * (l * l + l * r + r * r) / 3.0;
    }
};

}  // namespace cwnet
