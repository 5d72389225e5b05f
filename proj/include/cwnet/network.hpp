#pragma once

// Network graph and flux assembly.
//
// Every edge owns a uniform grid plus a closure for each end; ends are
// either physical boundaries (wall, prescribed trace, free outflow), an
// artificial interface pairing two edges into one domain, or a port of a
// junction node.  One right-hand-side evaluation computes all traces,
// fills the complete interface-flux table (interior fluxes, closure
// fluxes, junction fluxes), and differences it edge by edge.
//
// Junction models:
//   traffic_disperse  1 in / 2 out, fixed split alpha : (1 - alpha)
//   traffic_merge     2 in / 1 out, priority P for the first in-edge
//   channel           any degree; common height h*, per-port discharge
//                     q*_e from mass conservation plus the Riemann
//                     invariant of the characteristic leaving each edge

#include <cassert>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "cwnet/fv.hpp"
#include "cwnet/grid.hpp"
#include "cwnet/models.hpp"

namespace cwnet {

enum class side { left, right };

struct closure {
    enum class kind { none, wall, dirichlet_trace, free_outflow, junction_port, interface_port };
    kind k = kind::none;
    std::function<double(double)> trace_fn;  // dirichlet_trace: scalar trace at time t
    int peer_edge = -1;                      // interface_port
};

struct edge_def {
    std::string name;
    edge_grid grid;
    closure left, right;
};

struct port {
    int edge = -1;
    side s = side::right;  // right: the edge ends at the node; left: it starts there
};

enum class node_kind { traffic_disperse, traffic_merge, channel };

struct node {
    node_kind kind;
    // disperse: fraction onto the first out-port; merge: priority of the
    // first in-port.  Unused for channel nodes.
    double coef = 0.0;
    // disperse: [in, out_first, out_second]; merge: [in_first, in_second, out]
    std::vector<port> ports;
};

// --- channel junction solver ---------------------------------------------------

struct channel_node_result {
    double h_star = 0.0;
    std::vector<double> q_star;  // per port
    int iterations = 0;
};

// traces: one-sided (h, q) per port; sgn: +1 where the edge ends at the
// node, -1 where it starts.  Solves
//   sum_k sgn_k q*_k = 0,
//   q*_k / h* + sgn_k 2 sqrt(g h*) = v_k + sgn_k 2 sqrt(g h_k)   (per port)
// by damped Newton (arrow-shaped Jacobian, eliminated in closed form),
// then projects the discharges so the mass equation holds to rounding.
inline channel_node_result channel_node_solve(const std::vector<state<2>>& traces,
                                              const std::vector<double>& sgn, double g,
                                              double tol = 1e-12, int max_iter = 50) {
    const int m = static_cast<int>(traces.size());
    assert(static_cast<int>(sgn.size()) == m);

    std::vector<double> inv(m);
    double h0 = 0.0;
    for (int k = 0; k < m; ++k) {
        const double h = traces[k][0], q = traces[k][1];
        inv[k] = q / h + sgn[k] * 2.0 * std::sqrt(g * h);
        h0 += h;
    }

    double hs = h0 / m;
    std::vector<double> qs(m);
    for (int k = 0; k < m; ++k) qs[k] = traces[k][1];

    auto residual = [&](double h, const std::vector<double>& q, std::vector<double>& r) {
        r[0] = 0.0;
        for (int k = 0; k < m; ++k) r[0] += sgn[k] * q[k];
        const double c = std::sqrt(g * h);
        for (int k = 0; k < m; ++k) r[1 + k] = q[k] / h + sgn[k] * 2.0 * c - inv[k];
    };
    auto maxabs = [](const std::vector<double>& r) {
        double v = 0.0;
        for (double x : r) v = std::max(v, std::abs(x));
        return v;
    };

    std::vector<double> r(m + 1), rn(m + 1), qn(m);
    residual(hs, qs, r);
    int it = 0;
    for (; it < max_iter && maxabs(r) > tol; ++it) {
        // rows 1..m:  A_k dh + (1/h*) dq_k = -r_k,  A_k = -q_k/h*^2 + sgn_k sqrt(g/h*)
        // row 0:      sum sgn_k dq_k = -r_0
        double sr = 0.0, sa = 0.0;
        for (int k = 0; k < m; ++k) {
            const double a = -qs[k] / (hs * hs) + sgn[k] * std::sqrt(g / hs);
            sr += sgn[k] * r[1 + k];
            sa += sgn[k] * a;
        }
        const double dh = (r[0] - hs * sr) / (hs * sa);
        std::vector<double> dq(m);
        for (int k = 0; k < m; ++k) {
            const double a = -qs[k] / (hs * hs) + sgn[k] * std::sqrt(g / hs);
            dq[k] = hs * (-r[1 + k] - a * dh);
        }
        // damping by halving until the residual drops and h* stays positive
        double s = 1.0;
        bool moved = false;
        for (int half = 0; half < 30; ++half) {
            const double hn = hs + s * dh;
            if (hn > 0.0) {
                for (int k = 0; k < m; ++k) qn[k] = qs[k] + s * dq[k];
                residual(hn, qn, rn);
                if (maxabs(rn) < maxabs(r)) {
                    hs = hn;
                    qs = qn;
                    r = rn;
                    moved = true;
                    break;
                }
            }
            s *= 0.5;
        }
        if (!moved) throw std::runtime_error("channel node solve: line search stalled");
    }
    if (maxabs(r) > tol) throw std::runtime_error("channel node solve: no convergence");

    // exact node mass balance
    double excess = 0.0;
    for (int k = 0; k < m; ++k) excess += sgn[k] * qs[k];
    for (int k = 0; k < m; ++k) qs[k] -= sgn[k] * excess / m;

    return {hs, std::move(qs), it};
}

// --- median used by the merge junction -----------------------------------------

inline double median3(double a, double b, double c) {
    return std::max(std::min(a, b), std::min(std::max(a, b), c));
}

// --- the network -----------------------------------------------------------------

template <class Model>
struct network {
    Model model;
    param_set ps;
    std::vector<edge_def> edges;
    std::vector<node> nodes;

    static constexpr int nc = Model::nc;

    net_state<nc> make_state() const {
        net_state<nc> u(edges.size());
        for (size_t e = 0; e < edges.size(); ++e) u[e].assign(edges[e].grid.n, state<nc>{});
        return u;
    }

    double max_wave_speed(const net_state<nc>& u) const {
        double lam = 0.0;
        for (const auto& eu : u)
            for (const auto& cell : eu) lam = std::max(lam, model.max_speed(cell));
        return lam;
    }

    // Interface flux of the model: exact solver for traffic, LLF otherwise.
    state<nc> interface_flux(const state<nc>& ul, const state<nc>& ur) const {
        if constexpr (std::is_same_v<Model, traffic>)
            return model.godunov(ul, ur);
        else
            return llf_flux(model, ul, ur);
    }

    // Full semi-discrete right-hand side.  If flux_out is non-null the
    // complete interface-flux table is copied there (used by the
    // conservation and node-balance tests).
    void rhs(const net_state<nc>& u, double t, net_state<nc>& out,
             std::vector<std::vector<state<nc>>>* flux_out = nullptr) const {
        const size_t ne = edges.size();
        static thread_local std::vector<edge_traces<nc>> tr;
        static thread_local std::vector<std::vector<state<nc>>> H;
        tr.resize(ne);
        H.resize(ne);

        for (size_t e = 0; e < ne; ++e) {
            compute_traces<nc>(u[e], edges[e].grid.h, ps, tr[e]);
            H[e].assign(edges[e].grid.n + 1, state<nc>{});
            for (int k = 1; k < edges[e].grid.n; ++k)
                H[e][k] = interface_flux(tr[e].minus[k], tr[e].plus[k]);
        }

        auto port_trace = [&](const port& p) -> const state<nc>& {
            return p.s == side::right ? tr[p.edge].minus[edges[p.edge].grid.n]
                                      : tr[p.edge].plus[0];
        };
        auto port_slot = [&](const port& p) -> state<nc>& {
            return p.s == side::right ? H[p.edge][edges[p.edge].grid.n] : H[p.edge][0];
        };

        for (const auto& nd : nodes) apply_node(nd, port_trace, port_slot);

        for (size_t e = 0; e < ne; ++e) {
            apply_closure(edges[e].left, e, side::left, t, tr, H);
            apply_closure(edges[e].right, e, side::right, t, tr, H);
        }

        net_resize_like(u, out);
        for (size_t e = 0; e < ne; ++e) {
            const double h = edges[e].grid.h;
            for (int j = 0; j < edges[e].grid.n; ++j)
                for (int c = 0; c < nc; ++c)
                    out[e][j][c] = -(H[e][j + 1][c] - H[e][j][c]) / h;
        }
        if (flux_out) *flux_out = H;
    }

  private:
    template <class PT, class PS>
    void apply_node(const node& nd, PT&& port_trace, PS&& port_slot) const {
        if constexpr (std::is_same_v<Model, traffic>) {
            if (nd.kind == node_kind::traffic_disperse) {
                const double alpha = nd.coef;
                const double din = model.demand(port_trace(nd.ports[0])[0]);
                const double s1 = model.supply(port_trace(nd.ports[1])[0]);
                const double s2 = model.supply(port_trace(nd.ports[2])[0]);
                const double gam = std::min({din, s1 / alpha, s2 / (1.0 - alpha)});
                port_slot(nd.ports[0]) = {gam};
                port_slot(nd.ports[1]) = {alpha * gam};
                port_slot(nd.ports[2]) = {(1.0 - alpha) * gam};
                return;
            }
            if (nd.kind == node_kind::traffic_merge) {
                const double prio = nd.coef;
                const double d1 = model.demand(port_trace(nd.ports[0])[0]);
                const double d2 = model.demand(port_trace(nd.ports[1])[0]);
                const double sup = model.supply(port_trace(nd.ports[2])[0]);
                double g1, g2;
                if (d1 + d2 <= sup) {
                    g1 = d1;
                    g2 = d2;
                } else {
                    g1 = median3(prio * sup, sup - d2, d1);
                    g2 = sup - g1;
                }
                port_slot(nd.ports[0]) = {g1};
                port_slot(nd.ports[1]) = {g2};
                port_slot(nd.ports[2]) = {g1 + g2};
                return;
            }
        }
        if constexpr (std::is_same_v<Model, shallow_water>) {
            if (nd.kind == node_kind::channel) {
                const int m = static_cast<int>(nd.ports.size());
                std::vector<state<2>> traces(m);
                std::vector<double> sgn(m);
                for (int k = 0; k < m; ++k) {
                    traces[k] = port_trace(nd.ports[k]);
                    sgn[k] = nd.ports[k].s == side::right ? 1.0 : -1.0;
                }
                auto res = channel_node_solve(traces, sgn, model.g);
                for (int k = 0; k < m; ++k)
                    port_slot(nd.ports[k]) = model.flux({res.h_star, res.q_star[k]});
                return;
            }
        }
        throw std::logic_error("node kind not supported by this model");
    }

    void apply_closure(const closure& cl, size_t e, side s, double t,
                       const std::vector<edge_traces<nc>>& tr,
                       std::vector<std::vector<state<nc>>>& H) const {
        if (cl.k == closure::kind::none || cl.k == closure::kind::junction_port) return;
        const int n = edges[e].grid.n;
        const state<nc>& trace = s == side::right ? tr[e].minus[n] : tr[e].plus[0];
        state<nc>& slot = s == side::right ? H[e][n] : H[e][0];

        switch (cl.k) {
            case closure::kind::wall: {
                if constexpr (std::is_same_v<Model, shallow_water>) {
                    const state<2> ghost = {trace[0], -trace[1]};
                    slot = s == side::left ? llf_flux(model, ghost, trace)
                                           : llf_flux(model, trace, ghost);
                    slot[0] = 0.0;  // exact by antisymmetry; pin against rounding
                } else {
                    throw std::logic_error("wall closure only supported for shallow water");
                }
                break;
            }
            case closure::kind::dirichlet_trace: {
                state<nc> b = trace;
                b[0] = cl.trace_fn(t);
                slot = s == side::left ? interface_flux(b, trace) : interface_flux(trace, b);
                break;
            }
            case closure::kind::free_outflow:
                slot = interface_flux(trace, trace);
                break;
            case closure::kind::interface_port: {
                // shared artificial boundary: identical flux on both sides;
                // computed when visiting the edge on the left of the pair
                if (s == side::right) {
                    const state<nc>& right_trace = tr[cl.peer_edge].plus[0];
                    slot = llf_flux(model, trace, right_trace);
                    H[cl.peer_edge][0] = slot;
                }
                break;
            }
            default:
                break;
        }
    }
};

}  // namespace cwnet
