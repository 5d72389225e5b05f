#pragma once

// Finite-volume building blocks: per-edge interface traces (CWENO3 in the
// interior, the boundary blend in the outermost cells) and the three-stage
// TVD Runge-Kutta step with the stage times (t, t+dt, t+dt/2) forwarded to
// the right-hand side so time-dependent closures see the stage clock.

#include <cmath>
#include <limits>
#include <vector>

#include "cwnet/cweno.hpp"
#include "cwnet/models.hpp"

namespace cwnet {

template <int NC>
using edge_state = std::vector<state<NC>>;

template <int NC>
using net_state = std::vector<edge_state<NC>>;

// Traces at the n+1 interfaces of one edge.
//   minus[k]: limit from the left (cell k-1), valid for k = 1..n;
//   plus[k]:  limit from the right (cell k), valid for k = 0..n-1;
//   plus[0] and minus[n] come from the boundary reconstruction evaluated
//   at the physical edge ends.  The exterior slots minus[0] and plus[n]
//   stay NaN; closures fill the corresponding fluxes directly.
template <int NC>
struct edge_traces {
    std::vector<state<NC>> minus, plus;
};

// Componentwise reconstruction over one edge; u.size() >= 3 required.
template <int NC>
void compute_traces(const edge_state<NC>& u, double h, const param_set& ps,
                    edge_traces<NC>& tr) {
    const int n = static_cast<int>(u.size());
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    tr.minus.assign(n + 1, state<NC>{});
    tr.plus.assign(n + 1, state<NC>{});
    for (int c = 0; c < NC; ++c) {
        tr.minus[0][c] = nan;
        tr.plus[n][c] = nan;
    }

    for (int c = 0; c < NC; ++c) {
        // left boundary cell: poly sits on cell 1's center frame
        auto bl = boundary_reconstruct(u[0][c], u[1][c], u[2][c], h, ps);
        tr.plus[0][c] = bl.P.eval(boundary_recon::xi_boundary(h));
        tr.minus[1][c] = bl.P.eval(boundary_recon::xi_first_interface(h));

        // right boundary cell: same operator on the mirrored averages
        auto br = boundary_reconstruct(u[n - 1][c], u[n - 2][c], u[n - 3][c], h, ps);
        tr.minus[n][c] = br.P.eval(boundary_recon::xi_boundary(h));
        tr.plus[n - 1][c] = br.P.eval(boundary_recon::xi_first_interface(h));

        // interior cells feed both their faces
        for (int j = 1; j <= n - 2; ++j) {
            auto ir = interior_reconstruct(u[j - 1][c], u[j][c], u[j + 1][c], h, ps);
            tr.plus[j][c] = ir.P.eval(-0.5 * h);
            tr.minus[j + 1][c] = ir.P.eval(0.5 * h);
        }
    }
}

// --- TVD-RK3 (Shu-Osher) ------------------------------------------------------
//
// The steppers are generic over the state container (any net_state<NC>)
// so callers never have to spell out the component count.

template <class NetState>
void net_resize_like(const NetState& src, NetState& dst) {
    dst.resize(src.size());
    for (size_t e = 0; e < src.size(); ++e) dst[e].resize(src[e].size());
}

// dst = a*x + b*y
template <class NetState>
void net_lincomb(double a, const NetState& x, double b, const NetState& y, NetState& dst) {
    for (size_t e = 0; e < x.size(); ++e)
        for (size_t j = 0; j < x[e].size(); ++j)
            for (size_t c = 0; c < x[e][j].size(); ++c)
                dst[e][j][c] = a * x[e][j][c] + b * y[e][j][c];
}

// One SSP step:
//   u1 = u + dt L(u, t)
//   u2 = 3/4 u + 1/4 (u1 + dt L(u1, t+dt))
//   u  = 1/3 u + 2/3 (u2 + dt L(u2, t+dt/2))
template <class NetState, class Rhs>
void rk3_step(NetState& u, Rhs&& rhs, double t, double dt) {
    static thread_local NetState k, u1, u2;
    net_resize_like(u, k);
    net_resize_like(u, u1);
    net_resize_like(u, u2);

    rhs(u, t, k);
    net_lincomb(1.0, u, dt, k, u1);
    rhs(u1, t + dt, k);
    net_lincomb(1.0, u1, dt, k, u2);
    net_lincomb(0.75, u, 0.25, u2, u2);
    rhs(u2, t + 0.5 * dt, k);
    net_lincomb(1.0, u2, dt, k, u1);
    net_lincomb(1.0 / 3.0, u, 2.0 / 3.0, u1, u);
}

// Fixed-step integration from t0 to t1 (the last step is shortened to
// land on t1).  Returns the reached time.
template <class NetState, class Rhs>
double integrate(NetState& u, Rhs&& rhs, double dt, double t0, double t1) {
    double t = t0;
    while (t < t1 - 1e-14) {
        const double step = std::min(dt, t1 - t);
        rk3_step(u, rhs, t, step);
        t += step;
    }
    return t1;
}

template <class NetState, class Rhs>
void integrate(NetState& u, Rhs&& rhs, double dt, double T) {
    integrate(u, rhs, dt, 0.0, T);
}

}  // namespace cwnet
