#pragma once

// Expected convergence histories for the regression and acceptance
// checks.  Errors are printed to three significant digits,
// convergence rates to one decimal; the first rate of a column is
// undefined (stored as NaN).

#include <limits>

namespace golden {

inline constexpr double nan_cr = std::numeric_limits<double>::quiet_NaN();

inline constexpr int smooth_rows = 14;
inline constexpr const char* smooth_sets[5] = {"sigma1", "sigma2", "sigma3", "sigma4", "sigma5.1"};
inline constexpr double smooth_err[5][14] = {
    {3.22e-01, 9.03e-02, 1.06e-02, 1.04e-03, 1.10e-04, 1.24e-05, 1.47e-06, 1.78e-07, 2.20e-08, 2.73e-09, 3.40e-10, 4.24e-11, 5.29e-12, 6.61e-13},
    {3.59e-01, 1.70e-01, 6.03e-02, 1.39e-02, 2.21e-03, 2.96e-04, 3.76e-05, 4.73e-06, 5.91e-07, 7.40e-08, 9.24e-09, 1.16e-09, 1.44e-10, 1.81e-11},
    {3.73e-01, 1.92e-01, 5.92e-02, 1.09e-03, 1.36e-05, 3.40e-06, 4.54e-07, 5.75e-08, 7.21e-09, 9.02e-10, 1.13e-10, 1.41e-11, 1.76e-12, 2.20e-13},
    {3.73e-01, 1.94e-01, 9.79e-02, 4.90e-02, 2.45e-02, 1.04e-02, 4.94e-04, 4.30e-06, 3.21e-08, 4.34e-10, 1.04e-10, 1.39e-11, 1.76e-12, 2.20e-13},
    {3.71e-01, 1.92e-01, 9.62e-02, 4.73e-02, 2.28e-02, 1.06e-02, 4.68e-03, 1.89e-03, 6.82e-04, 2.19e-04, 6.39e-05, 1.74e-05, 4.56e-06, 1.17e-06},
};
inline constexpr double smooth_cr[5][14] = {
    {nan_cr, 1.8, 3.1, 3.3, 3.3, 3.1, 3.1, 3.0, 3.0, 3.0, 3.0, 3.0, 3.0, 3.0},
    {nan_cr, 1.1, 1.5, 2.1, 2.7, 2.9, 3.0, 3.0, 3.0, 3.0, 3.0, 3.0, 3.0, 3.0},
    {nan_cr, 1.0, 1.7, 5.8, 6.3, 2.0, 2.9, 3.0, 3.0, 3.0, 3.0, 3.0, 3.0, 3.0},
    {nan_cr, 0.9, 1.0, 1.0, 1.0, 1.2, 4.4, 6.8, 7.1, 6.2, 2.1, 2.9, 3.0, 3.0},
    {nan_cr, 0.9, 1.0, 1.0, 1.1, 1.1, 1.2, 1.3, 1.5, 1.6, 1.8, 1.9, 1.9, 2.0},
};

inline constexpr int i25_rows = 14;
inline constexpr const char* i25_sets[6] = {"sigma1", "sigma2", "sigma3", "sigma4", "sigma5.2", "sigma6.2"};
inline constexpr double i25_err[6][14] = {
    {9.99e-01, 2.05e-01, 7.73e-03, 5.66e-03, 1.49e-03, 3.77e-04, 9.52e-05, 2.39e-05, 6.00e-06, 1.50e-06, 3.76e-07, 9.40e-08, 2.35e-08, 5.88e-09},
    {1.25e+00, 6.04e-01, 2.63e-01, 7.98e-02, 1.32e-02, 1.55e-03, 1.46e-04, 7.04e-06, 1.82e-06, 8.93e-07, 2.78e-07, 7.61e-08, 1.99e-08, 5.07e-09},
    {1.38e+00, 7.29e-01, 2.44e-01, 1.37e-02, 2.96e-02, 1.76e-02, 2.02e-02, 3.22e-02, 5.46e-02, 8.81e-02, 1.28e-01, 1.67e-01, 1.97e-01, 2.16e-01},
    {1.38e+00, 7.43e-01, 3.55e-01, 1.69e-01, 8.22e-02, 4.04e-02, 1.91e-02, 3.93e-03, 1.14e-04, 1.68e-06, 5.84e-07, 7.18e-07, 1.20e-06, 2.29e-06},
    {1.36e+00, 7.33e-01, 3.51e-01, 1.69e-01, 8.21e-02, 4.04e-02, 2.00e-02, 9.96e-03, 4.97e-03, 2.48e-03, 1.24e-03, 6.20e-04, 3.10e-04, 1.55e-04},
    {7.83e-02, 2.07e-01, 2.26e-01, 2.00e-01, 1.51e-01, 9.81e-02, 5.70e-02, 3.09e-02, 1.61e-02, 8.24e-03, 4.17e-03, 2.09e-03, 1.05e-03, 5.26e-04},
};
inline constexpr double i25_cr[6][14] = {
    {nan_cr, 2.3, 4.7, 0.4, 1.9, 2.0, 2.0, 2.0, 2.0, 2.0, 2.0, 2.0, 2.0, 2.0},
    {nan_cr, 1.0, 1.2, 1.7, 2.6, 3.1, 3.4, 4.4, 2.0, 1.0, 1.7, 1.9, 1.9, 2.0},
    {nan_cr, 0.9, 1.6, 4.2, -1.1, 0.7, -0.2, -0.7, -0.8, -0.7, -0.5, -0.4, -0.2, -0.1},
    {nan_cr, 0.9, 1.1, 1.1, 1.0, 1.0, 1.1, 2.3, 5.1, 6.1, 1.5, -0.3, -0.7, -0.9},
    {nan_cr, 0.9, 1.1, 1.1, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0},
    {nan_cr, -1.4, -0.1, 0.2, 0.4, 0.6, 0.8, 0.9, 0.9, 1.0, 1.0, 1.0, 1.0, 1.0},
};

inline constexpr int i15_rows = 14;
inline constexpr const char* i15_sets[5] = {"sigma1", "sigma2", "sigma3", "sigma4", "sigma5.3"};
inline constexpr double i15_err[5][14] = {
    {7.01e-01, 2.47e-01, 1.08e-02, 7.67e-02, 9.65e-02, 8.66e-02, 6.44e-02, 4.16e-02, 2.42e-02, 1.31e-02, 6.87e-03, 3.51e-03, 1.78e-03, 8.94e-04},
    {7.32e-01, 3.43e-01, 1.58e-01, 7.60e-02, 3.80e-02, 1.93e-02, 9.76e-03, 4.92e-03, 2.47e-03, 1.24e-03, 6.20e-04, 3.10e-04, 1.55e-04, 7.76e-05},
    {7.40e-01, 3.55e-01, 1.58e-01, 1.90e-03, 1.60e-01, 2.29e-01, 2.45e-01, 2.49e-01, 2.50e-01, 2.50e-01, 2.50e-01, 2.50e-01, 2.50e-01, 2.50e-01},
    {7.40e-01, 3.56e-01, 1.70e-01, 8.23e-02, 4.05e-02, 2.00e-02, 9.96e-03, 4.91e-03, 2.22e-03, 1.88e-04, 3.57e-03, 1.57e-02, 5.37e-02, 1.31e-01},
    {6.17e-01, 5.08e-02, 1.62e-01, 2.12e-01, 2.24e-01, 2.27e-01, 2.24e-01, 2.19e-01, 2.10e-01, 1.99e-01, 1.84e-01, 1.66e-01, 1.46e-01, 1.25e-01},
};
inline constexpr double i15_cr[5][14] = {
    {nan_cr, 1.5, 4.5, -2.8, -0.3, 0.2, 0.4, 0.6, 0.8, 0.9, 0.9, 1.0, 1.0, 1.0},
    {nan_cr, 1.1, 1.1, 1.1, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0},
    {nan_cr, 1.1, 1.2, 6.4, -6.4, -0.5, -0.1, -0.0, -0.0, -0.0, -0.0, -0.0, -0.0, -0.0},
    {nan_cr, 1.1, 1.1, 1.0, 1.0, 1.0, 1.0, 1.0, 1.1, 3.6, -4.2, -2.1, -1.8, -1.3},
    {nan_cr, 3.6, -1.7, -0.4, -0.1, -0.0, 0.0, 0.0, 0.1, 0.1, 0.1, 0.1, 0.2, 0.2},
};

inline constexpr int traffic_net_rows = 8;
inline constexpr double traffic_net_err[2][8] = {
    {6.44e-03, 9.37e-04, 1.39e-04, 1.90e-05, 2.47e-06, 3.14e-07, 3.96e-08, 4.97e-09},
    {1.71e-02, 4.42e-03, 8.18e-04, 1.17e-04, 1.51e-05, 1.88e-06, 2.34e-07, 2.92e-08},
};
inline constexpr double traffic_net_cr[2][8] = {
    {nan_cr, 2.8, 2.8, 2.9, 2.9, 3.0, 3.0, 3.0},
    {nan_cr, 2.0, 2.4, 2.8, 3.0, 3.0, 3.0, 3.0},
};

inline constexpr int tdbc_rows = 8;
inline constexpr double tdbc_err[2][8] = {
    {4.54e-03, 6.88e-04, 9.13e-05, 1.17e-05, 1.48e-06, 1.86e-07, 2.34e-08, 2.92e-09},
    {1.53e-02, 3.75e-03, 6.77e-04, 1.02e-04, 1.37e-05, 1.75e-06, 2.21e-07, 2.78e-08},
};
inline constexpr double tdbc_cr[2][8] = {
    {nan_cr, 2.7, 2.9, 3.0, 3.0, 3.0, 3.0, 3.0},
    {nan_cr, 2.0, 2.5, 2.7, 2.9, 3.0, 3.0, 3.0},
};

inline constexpr int channel_rows = 8;
inline constexpr double channel_err[2][8] = {
    {8.68e-04, 2.78e-04, 6.03e-05, 1.15e-05, 1.67e-06, 2.20e-07, 2.82e-08, 3.51e-09},
    {8.60e-04, 8.52e-04, 6.59e-05, 1.11e-05, 1.53e-06, 2.01e-07, 2.56e-08, 3.18e-09},
};
inline constexpr double channel_cr[2][8] = {
    {nan_cr, 1.6, 2.2, 2.4, 2.8, 2.9, 3.0, 3.0},
    {nan_cr, 0.1, 3.7, 2.6, 2.8, 2.9, 3.0, 3.0},
};

}  // namespace golden
