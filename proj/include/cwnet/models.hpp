#pragma once

// The three flux models.  States are small fixed-size arrays of conserved
// quantities; every model provides flux() and max_speed() so the generic
// local Lax-Friedrichs flux below applies.  Traffic additionally carries
// the demand/supply splitting used by its exact (Godunov) solver and by
// the junction models.

#include <algorithm>
#include <array>
#include <cmath>

namespace cwnet {

template <int NC>
using state = std::array<double, NC>;

// --- LWR traffic, triangular fundamental diagram ---------------------------

struct traffic {
    static constexpr int nc = 1;
    double v = 1.0;
    double rho_max = 1.0;

    double f(double rho) const {
        return rho <= 0.5 * rho_max ? rho * v : (rho_max - rho) * v;
    }
    state<1> flux(const state<1>& u) const { return {f(u[0])}; }
    double max_speed(const state<1>&) const { return v; }

    // Demand/supply of the triangular diagram; traces are clamped into
    // [0, rho_max] here so slight reconstruction excursions stay harmless.
    double demand(double rho) const {
        rho = std::clamp(rho, 0.0, rho_max);
        return rho <= 0.5 * rho_max ? rho * v : 0.5 * rho_max * v;
    }
    double supply(double rho) const {
        rho = std::clamp(rho, 0.0, rho_max);
        return rho <= 0.5 * rho_max ? 0.5 * rho_max * v : (rho_max - rho) * v;
    }
    // Exact interface flux for concave f: min of upstream demand and
    // downstream supply.
    state<1> godunov(const state<1>& ul, const state<1>& ur) const {
        return {std::min(demand(ul[0]), supply(ur[0]))};
    }
};

// --- shallow water ----------------------------------------------------------

struct shallow_water {
    static constexpr int nc = 2;
    double g = 1.0;

    state<2> flux(const state<2>& u) const {
        const double h = u[0], q = u[1];
        return {q, q * q / h + 0.5 * g * h * h};
    }
    double max_speed(const state<2>& u) const {
        return std::abs(u[1] / u[0]) + std::sqrt(g * u[0]);
    }
};

// --- 1-D Euler ---------------------------------------------------------------

struct euler {
    static constexpr int nc = 3;
    double gamma = 1.4;

    double pressure(const state<3>& u) const {
        return (gamma - 1.0) * (u[2] - 0.5 * u[1] * u[1] / u[0]);
    }
    state<3> flux(const state<3>& u) const {
        const double rho = u[0], m = u[1], E = u[2];
        const double v = m / rho;
        const double p = pressure(u);
        return {m, m * v + p, v * (E + p)};
    }
    double max_speed(const state<3>& u) const {
        return std::abs(u[1] / u[0]) + std::sqrt(gamma * pressure(u) / u[0]);
    }
};

// --- generic local Lax-Friedrichs -------------------------------------------

template <class Model>
state<Model::nc> llf_flux(const Model& m, const state<Model::nc>& ul,
                          const state<Model::nc>& ur) {
    const double lam = std::max(m.max_speed(ul), m.max_speed(ur));
    const auto fl = m.flux(ul);
    const auto fr = m.flux(ur);
    state<Model::nc> out;
    for (int c = 0; c < Model::nc; ++c)
        out[c] = 0.5 * (fl[c] + fr[c]) - 0.5 * lam * (ur[c] - ul[c]);
    return out;
}

}  // namespace cwnet
