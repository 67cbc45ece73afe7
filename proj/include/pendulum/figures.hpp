#pragma once

#include <string>

#include "pendulum/config.hpp"
#include "pendulum/emit.hpp"

namespace pendulum {

/// Knobs shared by the figure builders. Defaults regenerate every dataset at
/// the nominal q = 160 parameter point in well under a minute.
struct FigureOptions {
    PendulumConfig cfg = PendulumConfig::reference();
    double tol = 1e-10;
    int count = 70;       // spectrum depth for exact-spectrum figures
    int curve_points = 200;
    // fig1 grid and family size
    double q_min = 0.0;
    double q_max = 200.0;
    int q_points = 101;
    int fig1_orders = 8;  // curves a_0..a_{2(n-1)} and b_2..b_{2n}
};

/// Datasets behind the eight published figures:
///   fig1  characteristic-value curves a_{2m}(q), b_{2m}(q) + a = +-2q lines
///   fig2  E_series - E_exact per order, both limits, vs E_exact
///   fig3  classical tau(E) above the well + rotor-series (E, tau) points
///   fig4  rotor-series (E, T_rev) points per order
///   fig5  classical tau(E) inside the well + oscillator-series points
///   fig6  oscillator-series (E, T_rev) points per order
///   fig7  discrete (e_bar, tau) per parity, raw and corrected + classical
///   fig8  discrete (E, T_rev) per parity, raw and corrected + order-4 curves
FigureDataset make_figure(const std::string& figure_id, const FigureOptions& opts);

FigureDataset fig1_characteristic_curves(const FigureOptions& opts);
FigureDataset fig2_eigenvalue_errors(const FigureOptions& opts);
FigureDataset fig3_rotor_periods(const FigureOptions& opts);
FigureDataset fig4_rotor_revivals(const FigureOptions& opts);
FigureDataset fig5_oscillator_periods(const FigureOptions& opts);
FigureDataset fig6_oscillator_revivals(const FigureOptions& opts);
FigureDataset fig7_discrete_periods(const FigureOptions& opts);
FigureDataset fig8_discrete_revivals(const FigureOptions& opts);

}  // namespace pendulum
