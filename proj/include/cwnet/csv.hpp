#pragma once

// CSV writers for convergence tables and solution snapshots, plus a
// parser for the table format (used to round-trip emitted files).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cwnet/harness.hpp"
#include "cwnet/network.hpp"

namespace cwnet {

template <class Model>
struct component_names;
template <>
struct component_names<traffic> {
    static constexpr const char* value = "rho";
};
template <>
struct component_names<shallow_water> {
    static constexpr const char* value = "h,q";
};
template <>
struct component_names<euler> {
    static constexpr const char* value = "rho,m,E";
};

// header `n,h,error,eoc`; error with 6 digits of mantissa, eoc with two
// decimals, empty on the first row (and wherever it is undefined)
inline std::string format_table_csv(const conv_table& t) {
    std::string out = "n,h,error,eoc\n";
    char buf[96];
    for (const auto& r : t) {
        if (std::isnan(r.eoc))
            std::snprintf(buf, sizeof buf, "%d,%.2e,%.6e,\n", r.n, r.h, r.error);
        else
            std::snprintf(buf, sizeof buf, "%d,%.2e,%.6e,%.2f\n", r.n, r.h, r.error, r.eoc);
        out += buf;
    }
    return out;
}

inline void write_table_csv(const conv_table& t, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << format_table_csv(t);
}

inline conv_table parse_table_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "n,h,error,eoc")
        throw std::runtime_error("bad table header");
    conv_table t;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        conv_row r;
        std::istringstream ls(line);
        std::string field;
        std::getline(ls, field, ',');
        r.n = std::stoi(field);
        std::getline(ls, field, ',');
        r.h = std::stod(field);
        std::getline(ls, field, ',');
        r.error = std::stod(field);
        if (std::getline(ls, field, ',') && !field.empty())
            r.eoc = std::stod(field);
        else
            r.eoc = std::numeric_limits<double>::quiet_NaN();
        t.push_back(r);
    }
    return t;
}

// one file per edge: header `x_center,<component names>`, one row per cell
template <class Model>
void write_snapshot_csv(const network<Model>& net, const net_state<Model::nc>& u, size_t e,
                        const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << "x_center," << component_names<Model>::value << "\n";
    char buf[48];
    for (size_t j = 0; j < u[e].size(); ++j) {
        std::snprintf(buf, sizeof buf, "%.6e", net.edges[e].grid.center(static_cast<int>(j)));
        f << buf;
        for (int c = 0; c < Model::nc; ++c) {
            std::snprintf(buf, sizeof buf, ",%.10e", u[e][j][c]);
            f << buf;
        }
        f << "\n";
    }
}

}  // namespace cwnet
