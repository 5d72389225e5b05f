#pragma once

// Reconstruction parameter sets: epsilon law, optimal-weight law, power p.
//
// epsilon(h) is either K*h^q or a constant.  The optimal weights follow
// c = [K0*h^g0, K1*h^g1, 1 - c0 - c1], with c0 and c1 capped at 0.25 so
// that c2 stays strictly positive on coarse grids.

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace cwnet {

struct param_set {
    // epsilon law
    double K = 1.0;
    double q = 1.0;
    bool eps_const = false;
    double eps_value = 0.0;  // used when eps_const
    // optimal-weight law
    double K0 = 1.0;
    double gamma0 = 1.0;
    double K1 = 1.0;
    double gamma1 = 0.0;
    // weight power
    int p = 2;
    // cap keeping c2 > 0 (see cap note above)
    double cap = 0.25;

    std::string name = "custom";

    double eps(double h) const {
        return eps_const ? eps_value : K * std::pow(h, q);
    }

    std::array<double, 3> optimal_weights(double h) const {
        double c0 = std::min(K0 * std::pow(h, gamma0), cap);
        double c1 = std::min(K1 * std::pow(h, gamma1), cap);
        return {c0, c1, 1.0 - c0 - c1};
    }

    // Sufficient conditions for full order in all three cases:
    //   q <= 2,  gamma0 >= max(q, 1 + gamma1),  p*q >= 1 + gamma0.
    bool satisfies_conditions() const {
        if (eps_const) return false;  // constant eps never satisfies the h-scaling requirements
        return q <= 2.0 && gamma0 >= std::max(q, 1.0 + gamma1) && p * q >= 1.0 + gamma0;
    }
};

inline param_set sigma1()   { return {1.0, 1.0, false, 0.0, 1.0, 1.0, 0.25, 0.0, 2, 0.25, "sigma1"}; }
inline param_set sigma2()   { return {1.0, 2.0, false, 0.0, 1.0, 2.0, 0.25, 0.0, 2, 0.25, "sigma2"}; }
inline param_set sigma3()   { return {0.0, 0.0, true, 1e-3, 1.0, 2.0, 1.0, 1.0, 2, 0.25, "sigma3"}; }
inline param_set sigma4()   { return {0.0, 0.0, true, 1e-6, 1.0, 2.0, 1.0, 1.0, 2, 0.25, "sigma4"}; }
inline param_set sigma5_1() { return {1.0, 2.0, false, 0.0, 1.0, 1.0, 0.25, 0.0, 2, 0.25, "sigma5.1"}; }
inline param_set sigma5_2() { return {1.0, 2.0, false, 0.0, 1.0, 1.0, 1.0, 1.0, 2, 0.25, "sigma5.2"}; }
inline param_set sigma5_3() { return {1.0, 1.0, false, 0.0, 1.0, 1.5, 1.0, 0.5, 2, 0.25, "sigma5.3"}; }
inline param_set sigma6_2() { return {1.0, 1.0, false, 0.0, 1.0, 2.0, 1.0, 1.0, 2, 0.25, "sigma6.2"}; }

inline std::optional<param_set> param_set_by_name(const std::string& s) {
    if (s == "sigma1") return sigma1();
    if (s == "sigma2") return sigma2();
    if (s == "sigma3") return sigma3();
    if (s == "sigma4") return sigma4();
    if (s == "sigma5.1") return sigma5_1();
    if (s == "sigma5.2") return sigma5_2();
    if (s == "sigma5.3") return sigma5_3();
    if (s == "sigma6.2") return sigma6_2();
    return std::nullopt;
}

}  // namespace cwnet
