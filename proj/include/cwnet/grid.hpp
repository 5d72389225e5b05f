#pragma once

// Uniform cell grid of one edge.  Interface k sits at x0 + k*h
// (k = 0..n), cell j covers [x0 + j*h, x0 + (j+1)*h].

#include <vector>

namespace cwnet {

struct edge_grid {
    double x0 = 0.0;
    double h = 1.0;
    int n = 0;

    double left(int j) const { return x0 + j * h; }
    double center(int j) const { return x0 + (j + 0.5) * h; }
    double length() const { return n * h; }
};

}  // namespace cwnet
