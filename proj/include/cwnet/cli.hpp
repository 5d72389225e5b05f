#pragma once

// Flag parsing and the scenario registry for the command-line driver.
// Parsing is separated from execution so the flag grammar can be tested
// without touching the filesystem.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cwnet/params.hpp"

namespace cwnet {

enum class emit_kind { table, snapshot };

struct cli_config {
    std::string scenario;
    std::string params = "sigma1";
    param_set ps = sigma1();
    std::optional<int> n_min, n_max;
    std::optional<std::string> out;  // table path or snapshot stem; default: scenario name
    std::optional<emit_kind> emit;
    std::optional<std::vector<double>> times;
    bool condition_warning = false;  // custom parameters violating the order conditions
};

struct scenario_info {
    const char* name;
    emit_kind kind;
    int default_n_min, default_n_max;
    std::vector<double> default_times;
};

inline const std::vector<scenario_info>& scenario_registry() {
    static const std::vector<scenario_info> reg = {
        {"recon-smooth", emit_kind::table, 1, 14, {}},
        {"recon-i25", emit_kind::table, 1, 14, {}},
        {"recon-i15", emit_kind::table, 1, 14, {}},
        {"traffic-smooth", emit_kind::table, 0, 7, {}},
        {"traffic-tdbc", emit_kind::table, 0, 7, {}},
        {"channel-network", emit_kind::table, 0, 6, {}},
        {"traffic-jam", emit_kind::snapshot, 0, 0, {0.05, 0.15}},
        {"shock-acoustic", emit_kind::snapshot, 3, 3, {1.8}},
        {"shock-acoustic-split", emit_kind::snapshot, 3, 3, {1.8}},
        {"dam-break-a", emit_kind::snapshot, 0, 0, {0.35, 0.6}},
        {"dam-break-b", emit_kind::snapshot, 0, 0, {0.35, 0.6}},
    };
    return reg;
}

inline const scenario_info* find_scenario(const std::string& name) {
    for (const auto& s : scenario_registry())
        if (name == s.name) return &s;
    return nullptr;
}

inline std::string cli_usage() {
    std::string u =
        "usage: cwnet --scenario NAME [options]\n"
        "\n"
        "options:\n"
        "  --scenario NAME   one of:";
    for (const auto& s : scenario_registry()) {
        u += " ";
        u += s.name;
    }
    u +=
        "\n"
        "  --params SET      sigma1 sigma2 sigma3 sigma4 sigma5.1 sigma5.2 sigma5.3\n"
        "                    sigma6.2 or custom (default sigma1)\n"
        "  --n-min N         coarsest refinement level\n"
        "  --n-max N         finest refinement level\n"
        "  --out PATH        output file (table) or file stem (snapshots);\n"
        "                    default: the scenario name\n"
        "  --emit KIND       table or snapshot\n"
        "  --times T1,T2,..  snapshot times, strictly increasing\n"
        "  --K --q --p --K0 --gamma0 --K1 --gamma1 --eps\n"
        "                    reconstruction parameters, only with --params custom\n";
    return u;
}

struct cli_parse_result {
    bool ok = false;
    cli_config cfg;
    std::string error;  // one-line diagnostic when !ok
};

namespace detail {

inline bool parse_double(const std::string& s, double& v) {
    try {
        size_t pos = 0;
        v = std::stod(s, &pos);
        return pos == s.size();
    } catch (...) {
        return false;
    }
}

inline bool parse_int(const std::string& s, int& v) {
    try {
        size_t pos = 0;
        v = std::stoi(s, &pos);
        return pos == s.size();
    } catch (...) {
        return false;
    }
}

}  // namespace detail

inline cli_parse_result parse_cli(const std::vector<std::string>& args) {
    cli_parse_result res;
    auto fail = [&](const std::string& msg) {
        res.ok = false;
        res.error = msg;
        return res;
    };

    bool custom = false;
    // custom parameter accumulators, applied after the loop
    struct {
        std::optional<double> K, q, K0, gamma0, K1, gamma1, eps;
        std::optional<int> p;
    } cp;
    std::optional<std::string> scenario, params, out, emit, times;
    std::optional<int> n_min, n_max;

    for (size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        auto value = [&](std::string& dst) {
            if (i + 1 >= args.size()) return false;
            dst = args[++i];
            return true;
        };
        std::string v;
        if (a == "--scenario") {
            if (!value(v)) return fail("--scenario needs a value");
            scenario = v;
        } else if (a == "--params") {
            if (!value(v)) return fail("--params needs a value");
            params = v;
        } else if (a == "--n-min" || a == "--n-max") {
            if (!value(v)) return fail(a + " needs a value");
            int n;
            if (!detail::parse_int(v, n) || n < 0) return fail(a + ": bad level '" + v + "'");
            (a == "--n-min" ? n_min : n_max) = n;
        } else if (a == "--out") {
            if (!value(v)) return fail("--out needs a value");
            out = v;
        } else if (a == "--emit") {
            if (!value(v)) return fail("--emit needs a value");
            if (v != "table" && v != "snapshot") return fail("--emit: 'table' or 'snapshot'");
            emit = v;
        } else if (a == "--times") {
            if (!value(v)) return fail("--times needs a value");
            times = v;
        } else if (a == "--p") {
            if (!value(v)) return fail("--p needs a value");
            int n;
            if (!detail::parse_int(v, n) || n < 1) return fail("--p: bad power '" + v + "'");
            cp.p = n;
        } else if (a == "--K" || a == "--q" || a == "--K0" || a == "--gamma0" ||
                   a == "--K1" || a == "--gamma1" || a == "--eps") {
            if (!value(v)) return fail(a + " needs a value");
            double d;
            if (!detail::parse_double(v, d)) return fail(a + ": bad number '" + v + "'");
            if (a == "--K") cp.K = d;
            if (a == "--q") cp.q = d;
            if (a == "--K0") cp.K0 = d;
            if (a == "--gamma0") cp.gamma0 = d;
            if (a == "--K1") cp.K1 = d;
            if (a == "--gamma1") cp.gamma1 = d;
            if (a == "--eps") cp.eps = d;
        } else {
            return fail("unknown flag '" + a + "'");
        }
    }

    if (!scenario) return fail("--scenario is required");
    if (!find_scenario(*scenario)) return fail("unknown scenario '" + *scenario + "'");
    res.cfg.scenario = *scenario;

    if (params) {
        res.cfg.params = *params;
        if (*params == "custom") {
            custom = true;
        } else {
            auto ps = param_set_by_name(*params);
            if (!ps) return fail("unknown parameter set '" + *params + "'");
            res.cfg.ps = *ps;
        }
    }

    const bool any_custom_flag = cp.K || cp.q || cp.p || cp.K0 || cp.gamma0 || cp.K1 ||
                                 cp.gamma1 || cp.eps;
    if (any_custom_flag && !custom)
        return fail("reconstruction parameter flags require --params custom");
    if (custom) {
        param_set ps = sigma1();
        ps.name = "custom";
        if (cp.K) ps.K = *cp.K;
        if (cp.q) ps.q = *cp.q;
        if (cp.p) ps.p = *cp.p;
        if (cp.K0) ps.K0 = *cp.K0;
        if (cp.gamma0) ps.gamma0 = *cp.gamma0;
        if (cp.K1) ps.K1 = *cp.K1;
        if (cp.gamma1) ps.gamma1 = *cp.gamma1;
        if (cp.eps) {
            ps.eps_const = true;
            ps.eps_value = *cp.eps;
        }
        res.cfg.ps = ps;
        res.cfg.condition_warning = !ps.satisfies_conditions();
    }

    if (n_min) res.cfg.n_min = n_min;
    if (n_max) res.cfg.n_max = n_max;
    if (res.cfg.n_min && res.cfg.n_max && *res.cfg.n_min > *res.cfg.n_max)
        return fail("--n-min exceeds --n-max");

    if (out) res.cfg.out = *out;
    if (emit) res.cfg.emit = *emit == "table" ? emit_kind::table : emit_kind::snapshot;

    if (times) {
        std::vector<double> ts;
        std::stringstream ss(*times);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            double d;
            if (tok.empty() || !detail::parse_double(tok, d))
                return fail("--times: bad value '" + tok + "'");
            if (!ts.empty() && d <= ts.back()) return fail("--times must be strictly increasing");
            ts.push_back(d);
        }
        if (ts.empty()) return fail("--times: empty list");
        res.cfg.times = std::move(ts);
    }

    const auto* info = find_scenario(res.cfg.scenario);
    if (res.cfg.emit && *res.cfg.emit != info->kind)
        return fail(std::string("scenario '") + info->name + "' emits " +
                    (info->kind == emit_kind::table ? "table" : "snapshot") + " output only");

    res.ok = true;
    return res;
}

}  // namespace cwnet
