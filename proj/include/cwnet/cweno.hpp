#pragma once

// CWENO3 reconstructions.
//
// Boundary cells blend a constant, a linear and a closing parabola built
// from the three outermost cell averages; the nonlinear weights approach
// the h-dependent optimal weights where the data is smooth.  Interior
// cells use the symmetric central blend (two one-sided linears plus the
// central parabola, optimal weights [0.25, 0.5, 0.25]).
//
// All polynomials live in the local frame xi = x - x_center of the cell
// they belong to.  For the boundary stencil that is the SECOND cell from
// the boundary (the one holding u15), so the physical boundary sits at
// xi = -1.5h and the first interior interface at xi = -0.5h.

#include <array>
#include <cmath>

#include "cwnet/params.hpp"
#include "cwnet/poly.hpp"

namespace cwnet {

namespace detail {
inline double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}
}  // namespace detail

// Indicators of the boundary stencil, closed forms of the defining
// integral h * int_{x0}^{x1} P'^2 + h^3 * int P''^2 (first cell only).
// IS0 = 0 by construction (P0 is constant).
inline std::array<double, 3> boundary_indicators(double sl, double sr, double c1, double c2) {
    double is1 = sl * sl;
    double is2 = ((4.0 / 3.0) * sr * sr + (c1 - 11.0 / 3.0) * sr * sl +
                  (10.0 / 3.0 - 3.0 * c1 + c1 * c1) * sl * sl) / (c2 * c2);
    return {0.0, is1, is2};
}

struct boundary_recon {
    parabola P;                    // blended polynomial about the u15 cell center
    std::array<double, 3> w;       // realized weights
    std::array<double, 3> c;       // optimal weights at this h
    std::array<double, 3> is;      // smoothness indicators
    std::array<parabola, 3> cand;  // candidates P0, P1, P2

    static constexpr double xi_boundary(double h) { return -1.5 * h; }
    static constexpr double xi_first_interface(double h) { return -0.5 * h; }
};

// u05, u15, u25: cell averages ordered from the boundary inward.
inline boundary_recon boundary_reconstruct(double u05, double u15, double u25, double h,
                                           const param_set& ps) {
    boundary_recon r;
    const double sl = u15 - u05;
    const double sr = u25 - u15;
    r.c = ps.optimal_weights(h);
    const double c0 = r.c[0], c1 = r.c[1], c2 = r.c[2];

    r.cand[0] = {u05, 0.0, 0.0};
    r.cand[1] = {u15, sl / h, 0.0};
    // P2 closes c0*P0 + c1*P1 + c2*P2 = P_opt, the parabola preserving all
    // three averages (its own coefficients about the u15 center are
    // a0 = u15 - (sr-sl)/24, a1 = (sr+sl)/(2h), a2 = (sr-sl)/(2h^2)).
    r.cand[2] = {(-c0 * u05 + (1.0 - c1) * u15 - (sr - sl) / 24.0) / c2,
                 (sr + sl - 2.0 * c1 * sl) / (2.0 * h) / c2,
                 (sr - sl) / (2.0 * h * h) / c2};

    r.is = boundary_indicators(sl, sr, c1, c2);

    const double e = ps.eps(h);
    std::array<double, 3> alpha;
    double asum = 0.0;
    for (int i = 0; i < 3; ++i) {
        alpha[i] = r.c[i] / detail::ipow(e + r.is[i], ps.p);
        asum += alpha[i];
    }
    for (int i = 0; i < 3; ++i) r.w[i] = alpha[i] / asum;

    r.P.a0 = r.w[0] * r.cand[0].a0 + r.w[1] * r.cand[1].a0 + r.w[2] * r.cand[2].a0;
    r.P.a1 = r.w[1] * r.cand[1].a1 + r.w[2] * r.cand[2].a1;
    r.P.a2 = r.w[2] * r.cand[2].a2;
    return r;
}

// Interior indicators: IS_l and IS_r of the one-sided linears, IS_c of the
// central parabola P_c = (P_opt - 0.25*(P_l + P_r)) / 0.5.
inline std::array<double, 3> interior_indicators(double sl, double sr) {
    double isc = (13.0 / 3.0) * (sr - sl) * (sr - sl) + 0.25 * (sr + sl) * (sr + sl);
    return {sl * sl, isc, sr * sr};
}

struct interior_recon {
    parabola P;               // about the cell center
    std::array<double, 3> w;  // weights of (l, c, r)
};

// um, u0, up: averages of the left neighbor, the cell itself, the right neighbor.
inline interior_recon interior_reconstruct(double um, double u0, double up, double h,
                                           const param_set& ps) {
    const double sl = u0 - um;
    const double sr = up - u0;
    const auto is = interior_indicators(sl, sr);
    const double e = ps.eps(h);

    double al = 0.25 / detail::ipow(e + is[0], ps.p);
    double ac = 0.50 / detail::ipow(e + is[1], ps.p);
    double ar = 0.25 / detail::ipow(e + is[2], ps.p);
    const double asum = al + ac + ar;
    const double wl = al / asum, wc = ac / asum, wr = ar / asum;

    interior_recon r;
    r.w = {wl, wc, wr};
    // P_l = u0 + sl/h xi, P_r = u0 + sr/h xi,
    // P_c = u0 - (sr-sl)/12 + (sr+sl)/(2h) xi + (sr-sl)/h^2 xi^2
    r.P.a0 = u0 - wc * (sr - sl) / 12.0;
    r.P.a1 = (wl * sl + wr * sr + wc * 0.5 * (sr + sl)) / h;
    r.P.a2 = wc * (sr - sl) / (h * h);
    return r;
}

}  // namespace cwnet
