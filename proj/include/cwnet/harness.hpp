#pragma once

// Experiment harness: grid studies, scenario runners, error metrics.
//
// Errors are measured against exact cell averages of the exact solution
// where one is known (the traffic tests return to their initial data),
// and against a restricted fine-grid reference for the channel network.

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "cwnet/cweno.hpp"
#include "cwnet/fv.hpp"
#include "cwnet/network.hpp"
#include "cwnet/quadrature.hpp"

namespace cwnet {

// --- convergence tables ----------------------------------------------------------

struct conv_row {
    int n = 0;
    double h = 0.0;
    double error = 0.0;
    double eoc = std::numeric_limits<double>::quiet_NaN();
};

using conv_table = std::vector<conv_row>;

// eoc_n = log2(e_{n-1}/e_n); first row and nonpositive errors get NaN
inline void fill_eoc(conv_table& t) {
    for (size_t i = 0; i < t.size(); ++i) {
        if (i == 0 || t[i].error <= 0.0 || t[i - 1].error <= 0.0)
            t[i].eoc = std::numeric_limits<double>::quiet_NaN();
        else
            t[i].eoc = std::log2(t[i - 1].error / t[i].error);
    }
}

// --- norms and grid transfer -----------------------------------------------------

template <class NetState>
double linf_diff(const NetState& a, const NetState& b) {
    double m = 0.0;
    for (size_t e = 0; e < a.size(); ++e)
        for (size_t j = 0; j < a[e].size(); ++j)
            for (size_t c = 0; c < a[e][j].size(); ++c)
                m = std::max(m, std::abs(a[e][j][c] - b[e][j][c]));
    return m;
}

template <class NetState>
double linf_diff_component(const NetState& a, const NetState& b, int c) {
    double m = 0.0;
    for (size_t e = 0; e < a.size(); ++e)
        for (size_t j = 0; j < a[e].size(); ++j) m = std::max(m, std::abs(a[e][j][c] - b[e][j][c]));
    return m;
}

// cell averages restrict exactly: a coarse cell is the mean of its children
template <class NetState>
NetState restrict_state(const NetState& fine, int factor) {
    NetState coarse(fine.size());
    for (size_t e = 0; e < fine.size(); ++e) {
        const size_t nc_cells = fine[e].size() / factor;
        coarse[e].assign(nc_cells, {});
        for (size_t j = 0; j < nc_cells; ++j)
            for (int k = 0; k < factor; ++k)
                for (size_t c = 0; c < fine[e][j].size(); ++c)
                    coarse[e][j][c] += fine[e][j * factor + k][c] / factor;
    }
    return coarse;
}

// exact cell averages of a pointwise function, split at the given abscissae
template <int NC, class F>
edge_state<NC> cell_averages(const edge_grid& g, F&& f, const std::vector<double>& breaks = {}) {
    edge_state<NC> u(g.n);
    for (int j = 0; j < g.n; ++j) {
        for (int c = 0; c < NC; ++c) {
            auto comp = [&](double x) { return f(x)[c]; };
            u[j][c] = cell_average_split(comp, g.left(j), g.left(j + 1), breaks);
        }
    }
    return u;
}

// --- reconstruction studies ------------------------------------------------------

enum class recon_case { smooth, disc_i25, disc_i15 };

inline double recon_smooth_fn(double x) { return std::sin(2.0 * M_PI * x); }

inline constexpr double recon_xstar = 0.1;
inline constexpr double recon_jump = 0.5;

inline double recon_disc_fn(double x) {
    return std::sin(2.0 * M_PI * x) + (x > recon_xstar ? recon_jump : 0.0);
}

// One-sided reconstruction accuracy at the domain boundary (smooth case)
// and at the discontinuity location approached from the smooth side
// (discontinuous cases).  h = 0.25 * 2^-n.
inline conv_table recon_study(recon_case rc, const param_set& ps, int n_min = 1, int n_max = 14) {
    conv_table t;
    for (int n = n_min; n <= n_max; ++n) {
        const double h = 0.25 * std::pow(2.0, -n);
        double x0 = 0.0, xi_eval = 0.0, target = 0.0;
        const bool disc = rc != recon_case::smooth;
        switch (rc) {
            case recon_case::smooth:
                x0 = 0.0;
                xi_eval = -1.5 * h;  // the boundary itself
                target = 0.0;
                break;
            case recon_case::disc_i25:
                x0 = recon_xstar - 2.5 * h;  // jump centered in the third cell
                xi_eval = h;
                target = std::sin(2.0 * M_PI * recon_xstar);
                break;
            case recon_case::disc_i15:
                x0 = recon_xstar - 1.5 * h;  // jump centered in the second cell
                xi_eval = 0.0;
                target = std::sin(2.0 * M_PI * recon_xstar);
                break;
        }
        double ub[3];
        for (int k = 0; k < 3; ++k) {
            auto f = disc ? recon_disc_fn : recon_smooth_fn;
            ub[k] = cell_average_split(f, x0 + k * h, x0 + (k + 1) * h,
                                       disc ? std::vector<double>{recon_xstar}
                                            : std::vector<double>{});
        }
        const auto rec = boundary_reconstruct(ub[0], ub[1], ub[2], h, ps);
        t.push_back({n, h, std::abs(rec.P.eval(xi_eval) - target), 0.0});
    }
    fill_eoc(t);
    return t;
}

// --- traffic network (one diverging and one merging junction) ---------------------

inline constexpr double road_length = 0.2;

inline double road_profile(double x, double mean, double amp, double shift) {
    const double s = M_PI * (x + shift) / road_length;
    return mean + amp * std::sin(s - std::sin(s) / M_PI);
}

inline double main_profile(double x) { return road_profile(x, 0.20, 0.150, 0.0); }
inline double upper_profile(double x) { return road_profile(x, 0.14, 0.105, road_length); }
inline double lower_profile(double x) { return road_profile(x, 0.06, 0.045, road_length); }

// roads: 0 = main (into the diverging node), 1 = upper, 2 = lower (both
// return into the merging node ahead of the main road)
inline network<traffic> three_road_network(int cells, const param_set& ps, double priority) {
    network<traffic> net;
    net.ps = ps;
    const double h = road_length / cells;
    for (const char* nm : {"main", "upper", "lower"}) {
        edge_def e;
        e.name = nm;
        e.grid = {0.0, h, cells};
        e.left.k = closure::kind::junction_port;
        e.right.k = closure::kind::junction_port;
        net.edges.push_back(std::move(e));
    }
    node diverge;
    diverge.kind = node_kind::traffic_disperse;
    diverge.coef = 0.7;
    diverge.ports = {{0, side::right}, {1, side::left}, {2, side::left}};
    node merge;
    merge.kind = node_kind::traffic_merge;
    merge.coef = priority;
    merge.ports = {{1, side::right}, {2, side::right}, {0, side::left}};
    net.nodes = {diverge, merge};
    return net;
}

inline net_state<1> three_road_smooth_initial(const network<traffic>& net) {
    net_state<1> u(3);
    auto wrap = [](double (*f)(double)) {
        return [f](double x) { return state<1>{f(x)}; };
    };
    u[0] = cell_averages<1>(net.edges[0].grid, wrap(main_profile));
    u[1] = cell_averages<1>(net.edges[1].grid, wrap(upper_profile));
    u[2] = cell_averages<1>(net.edges[2].grid, wrap(lower_profile));
    return u;
}

inline net_state<1> three_road_jam_initial(const network<traffic>& net) {
    net_state<1> u(3);
    const std::vector<double> brk = {0.05};
    u[0] = cell_averages<1>(net.edges[0].grid, [](double) { return state<1>{0.50}; });
    u[1] = cell_averages<1>(
        net.edges[1].grid, [](double x) { return state<1>{x <= 0.05 ? 0.35 : 0.90}; }, brk);
    u[2] = cell_averages<1>(
        net.edges[2].grid, [](double x) { return state<1>{x <= 0.05 ? 0.15 : 0.85}; }, brk);
    return u;
}

// the smooth data is 0.2-periodic in time, so the t = 0.4 solution equals
// the initial data; errors are taken against the initial cell averages
inline conv_table traffic_smooth_table(const param_set& ps, int n_min = 0, int n_max = 7) {
    conv_table t;
    for (int n = n_min; n <= n_max; ++n) {
        const int cells = 10 << n;
        auto net = three_road_network(cells, ps, 0.5);
        auto u = three_road_smooth_initial(net);
        const auto exact = u;
        const double h = net.edges[0].grid.h;
        auto rhs = [&](const net_state<1>& s, double tt, net_state<1>& out) {
            net.rhs(s, tt, out);
        };
        integrate(u, rhs, h / 2.0, 0.0, 0.4);
        t.push_back({n, h, linf_diff(u, exact), 0.0});
    }
    fill_eoc(t);
    return t;
}

inline std::vector<net_state<1>> traffic_jam_run(const param_set& ps, int cells,
                                                 const std::vector<double>& times) {
    auto net = three_road_network(cells, ps, 0.2);
    auto u = three_road_jam_initial(net);
    auto rhs = [&](const net_state<1>& s, double tt, net_state<1>& out) { net.rhs(s, tt, out); };
    std::vector<net_state<1>> snaps;
    double t = 0.0;
    for (double target : times) {
        t = integrate(u, rhs, net.edges[0].grid.h / 2.0, t, target);
        snaps.push_back(u);
    }
    return snaps;
}

// --- single road with time-dependent inflow ---------------------------------------

inline constexpr double tdbc_length = 0.4;

inline double tdbc_profile(double x) {
    const double s = 2.0 * M_PI * x / tdbc_length;
    return 0.20 + 0.150 * std::sin(s - std::sin(s) / M_PI);
}

// inflow trace that advects the initial profile back in at speed v = 1
inline double tdbc_boundary(double t) { return tdbc_profile(-t); }

inline network<traffic> tdbc_network(int cells, const param_set& ps) {
    network<traffic> net;
    net.ps = ps;
    edge_def e;
    e.name = "road";
    e.grid = {0.0, tdbc_length / cells, cells};
    e.left.k = closure::kind::dirichlet_trace;
    e.left.trace_fn = tdbc_boundary;
    e.right.k = closure::kind::free_outflow;
    net.edges.push_back(std::move(e));
    return net;
}

inline conv_table traffic_tdbc_table(const param_set& ps, int n_min = 0, int n_max = 7) {
    conv_table t;
    for (int n = n_min; n <= n_max; ++n) {
        const double h = 0.02 * std::pow(2.0, -n);
        const int cells = static_cast<int>(std::lround(tdbc_length / h));
        auto net = tdbc_network(cells, ps);
        net_state<1> u(1);
        u[0] = cell_averages<1>(net.edges[0].grid,
                                [](double x) { return state<1>{tdbc_profile(x)}; });
        const auto exact = u;
        auto rhs = [&](const net_state<1>& s, double tt, net_state<1>& out) {
            net.rhs(s, tt, out);
        };
        integrate(u, rhs, h / 2.0, 0.0, 0.4);
        t.push_back({n, h, linf_diff(u, exact), 0.0});
    }
    fill_eoc(t);
    return t;
}

// --- channel network ---------------------------------------------------------------

struct channel_edge_spec {
    const char* name;
    char from, to;
    double length;
};

// orientation: a cycle A->B->E->A with the interior edges B->C, B->D,
// C->D, D->E closing the mesh
inline const std::vector<channel_edge_spec>& channel_edges() {
    static const std::vector<channel_edge_spec> edges = {
        {"AB", 'A', 'B', 0.10}, {"BC", 'B', 'C', 0.05}, {"BD", 'B', 'D', 0.05},
        {"BE", 'B', 'E', 0.15}, {"CD", 'C', 'D', 0.05}, {"DE", 'D', 'E', 0.05},
        {"EA", 'E', 'A', 0.05}};
    return edges;
}

inline network<shallow_water> channel_network(double hgrid, const param_set& ps) {
    network<shallow_water> net;
    net.ps = ps;
    for (const auto& es : channel_edges()) {
        edge_def e;
        e.name = es.name;
        e.grid = {0.0, hgrid, static_cast<int>(std::lround(es.length / hgrid))};
        e.left.k = closure::kind::junction_port;
        e.right.k = closure::kind::junction_port;
        net.edges.push_back(std::move(e));
    }
    for (char nm : {'A', 'B', 'C', 'D', 'E'}) {
        node nd;
        nd.kind = node_kind::channel;
        for (size_t i = 0; i < channel_edges().size(); ++i) {
            if (channel_edges()[i].to == nm) nd.ports.push_back({static_cast<int>(i), side::right});
            if (channel_edges()[i].from == nm) nd.ports.push_back({static_cast<int>(i), side::left});
        }
        net.nodes.push_back(std::move(nd));
    }
    return net;
}

inline double channel_bump(double x) {
    const double s = std::sin(M_PI * x / 0.1);
    return 0.3 + 0.03 * s * s * s * s;
}

inline net_state<2> channel_initial(const network<shallow_water>& net) {
    net_state<2> u(net.edges.size());
    for (size_t e = 0; e < net.edges.size(); ++e) {
        if (net.edges[e].name == "AB")
            u[e] = cell_averages<2>(net.edges[e].grid,
                                    [](double x) { return state<2>{channel_bump(x), 0.0}; });
        else
            u[e] = cell_averages<2>(net.edges[e].grid,
                                    [](double) { return state<2>{0.3, 0.0}; });
    }
    return u;
}

inline net_state<2> channel_run(int n, const param_set& ps, double T = 0.2) {
    const double hgrid = 0.01 * std::pow(2.0, -n);
    auto net = channel_network(hgrid, ps);
    auto u = channel_initial(net);
    auto rhs = [&](const net_state<2>& s, double tt, net_state<2>& out) { net.rhs(s, tt, out); };
    integrate(u, rhs, hgrid / 2.0, 0.0, T);
    return u;
}

// The reference is computed on level n_ref and restricted; the height
// carries most of the signal amplitude, the reported error tracks the
// discharge component.
inline conv_table channel_table(const param_set& ps, int n_min, int n_max, int n_ref) {
    const auto ref = channel_run(n_ref, ps);
    conv_table t;
    for (int n = n_min; n <= n_max; ++n) {
        const auto u = channel_run(n, ps);
        const auto rr = restrict_state(ref, 1 << (n_ref - n));
        t.push_back({n, 0.01 * std::pow(2.0, -n), linf_diff_component(u, rr, 1), 0.0});
    }
    fill_eoc(t);
    return t;
}

// --- shock-acoustic interaction ----------------------------------------------------

inline state<3> shock_acoustic_initial(double x) {
    double rho, v, p;
    if (x < -4.0) {
        rho = 3.857143;
        v = 2.629369;
        p = 10.33333;
    } else {
        rho = 1.0 + 0.2 * std::sin(5.0 * x);
        v = 0.0;
        p = 1.0;
    }
    const double gam = euler{}.gamma;
    return {rho, rho * v, p / (gam - 1.0) + 0.5 * rho * v * v};
}

inline network<euler> shock_network(int cells, const param_set& ps, bool split) {
    network<euler> net;
    net.ps = ps;
    const double h = 10.0 / cells;
    if (!split) {
        edge_def e;
        e.name = "domain";
        e.grid = {-5.0, h, cells};
        e.left.k = closure::kind::free_outflow;
        e.right.k = closure::kind::free_outflow;
        net.edges.push_back(std::move(e));
    } else {
        edge_def l, r;
        l.name = "left_half";
        l.grid = {-5.0, h, cells / 2};
        l.left.k = closure::kind::free_outflow;
        l.right.k = closure::kind::interface_port;
        l.right.peer_edge = 1;
        r.name = "right_half";
        r.grid = {0.0, h, cells / 2};
        r.left.k = closure::kind::interface_port;
        r.left.peer_edge = 0;
        r.right.k = closure::kind::free_outflow;
        net.edges.push_back(std::move(l));
        net.edges.push_back(std::move(r));
    }
    return net;
}

struct shock_result {
    net_state<3> u;
    double h = 0.0;
    bool positive = true;  // rho > 0 and p > 0 after every step
};

inline shock_result shock_acoustic_run(int cells, const param_set& ps, bool split,
                                       double T = 1.8) {
    auto net = shock_network(cells, ps, split);
    net_state<3> u(net.edges.size());
    for (size_t e = 0; e < net.edges.size(); ++e)
        u[e] = cell_averages<3>(net.edges[e].grid, shock_acoustic_initial, {-4.0});
    auto rhs = [&](const net_state<3>& s, double tt, net_state<3>& out) { net.rhs(s, tt, out); };

    shock_result res;
    res.h = net.edges[0].grid.h;
    const double dt = 0.225 * res.h;
    const euler mdl;
    double t = 0.0;
    while (t < T - 1e-12) {
        const double step = std::min(dt, T - t);
        rk3_step(u, rhs, t, step);
        t += step;
        for (const auto& eu : u)
            for (const auto& cell : eu)
                if (cell[0] <= 0.0 || mdl.pressure(cell) <= 0.0) res.positive = false;
    }
    res.u = std::move(u);
    return res;
}

// h-weighted L1 distance between the split-domain and single-domain runs
inline double shock_split_l1_diff(int cells, const param_set& ps, double T = 1.8) {
    const auto single = shock_acoustic_run(cells, ps, false, T);
    const auto split = shock_acoustic_run(cells, ps, true, T);
    double acc = 0.0;
    size_t j0 = 0;
    for (const auto& eu : split.u) {
        for (size_t j = 0; j < eu.size(); ++j)
            for (int c = 0; c < 3; ++c) acc += std::abs(eu[j][c] - single.u[0][j0 + j][c]);
        j0 += eu.size();
    }
    return acc * single.h;
}

// --- dam break against walls -------------------------------------------------------

inline network<shallow_water> dam_network(int cells, const param_set& ps) {
    network<shallow_water> net;
    net.ps = ps;
    edge_def e;
    e.name = "basin";
    e.grid = {0.0, 1.0 / cells, cells};
    e.left.k = closure::kind::wall;
    e.right.k = closure::kind::wall;
    net.edges.push_back(std::move(e));
    return net;
}

struct dam_stats {
    double volume_rel_drift = 0.0;
    double wall_mass_flux_max = 0.0;  // max |mass flux| through either wall, all stages
    double h_min = std::numeric_limits<double>::infinity();
    double h_max = 0.0;
    double h0_max = 0.0;
    std::vector<net_state<2>> snapshots;
};

// variant 'a': outer depth 0.5 (subcritical); 'b': outer depth 0.05
// (supercritical regions appear).  Adaptive steps dt = 0.45 h / lambda.
inline dam_stats dam_break_run(char variant, const param_set& ps, int cells,
                               const std::vector<double>& times) {
    auto net = dam_network(cells, ps);
    const double h_out = variant == 'a' ? 0.5 : 0.05;
    net_state<2> u(1);
    u[0] = cell_averages<2>(
        net.edges[0].grid,
        [&](double x) { return state<2>{x >= 0.4 && x <= 0.6 ? 1.0 : h_out, 0.0}; },
        {0.4, 0.6});

    dam_stats st;
    const double hg = net.edges[0].grid.h;
    double vol0 = 0.0;
    for (const auto& cell : u[0]) {
        vol0 += cell[0] * hg;
        st.h0_max = std::max(st.h0_max, cell[0]);
    }

    std::vector<std::vector<state<2>>> fluxes;
    auto rhs = [&](const net_state<2>& s, double tt, net_state<2>& out) {
        net.rhs(s, tt, out, &fluxes);
        const int n = net.edges[0].grid.n;
        st.wall_mass_flux_max = std::max(
            {st.wall_mass_flux_max, std::abs(fluxes[0][0][0]), std::abs(fluxes[0][n][0])});
    };

    double t = 0.0;
    for (double target : times) {
        while (t < target - 1e-12) {
            const double dt = std::min(0.45 * hg / net.max_wave_speed(u), target - t);
            rk3_step(u, rhs, t, dt);
            t += dt;
            for (const auto& cell : u[0]) {
                st.h_min = std::min(st.h_min, cell[0]);
                st.h_max = std::max(st.h_max, cell[0]);
            }
        }
        st.snapshots.push_back(u);
    }

    double vol = 0.0;
    for (const auto& cell : u[0]) vol += cell[0] * hg;
    st.volume_rel_drift = std::abs(vol - vol0) / vol0;
    return st;
}

}  // namespace cwnet
