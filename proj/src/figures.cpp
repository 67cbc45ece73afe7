#include "pendulum/figures.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pendulum/classical.hpp"
#include "pendulum/oscillator_pt.hpp"
#include "pendulum/rotor.hpp"
#include "pendulum/timescales.hpp"

namespace pendulum {

namespace {

constexpr double kPi = std::numbers::pi;

nlohmann::json base_metadata(const std::string& figure_id, const FigureOptions& opts) {
    return {{"figure", figure_id},
            {"hbar", opts.cfg.hbar},
            {"mass", opts.cfg.mass},
            {"length", opts.cfg.length},
            {"v0", opts.cfg.v0},
            {"q", q_of_config(opts.cfg)},
            {"count", opts.count},
            {"tol", opts.tol}};
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * i / (n - 1.0);
    return xs;
}

// Oscillator series summed through grade `order`.
double osc_energy(int order, int n, const PendulumConfig& cfg) {
    double e = 0.0;
    for (int g = 0; g <= order; ++g) e += closed_form(g, n, cfg);
    return e;
}

void append_discrete(FigureDataset& ds, const std::vector<DiscreteDerivatives>& rows,
                     const std::string& prefix, bool revival, double hbar) {
    for (const auto& r : rows) {
        if (revival) {
            ds.rows.push_back({prefix, r.energy, 4.0 * kPi * hbar / std::abs(r.d2)});
        } else {
            ds.rows.push_back({prefix, r.e_bar, 2.0 * kPi * hbar / std::abs(r.d1)});
        }
    }
}

}  // namespace

FigureDataset fig1_characteristic_curves(const FigureOptions& opts) {
    FigureDataset ds;
    ds.figure_id = "fig1";
    ds.x_label = "q";
    ds.y_label = "a";
    ds.metadata = base_metadata("fig1", opts);
    ds.metadata["q_grid"] = {opts.q_min, opts.q_max, opts.q_points};

    for (double q : linspace(opts.q_min, opts.q_max, opts.q_points)) {
        const auto even = char_values(q, Parity::even, opts.fig1_orders, opts.tol);
        const auto odd = char_values(q, Parity::odd, opts.fig1_orders, opts.tol);
        for (const auto& cv : even) {
            ds.rows.push_back({"a_" + std::to_string(cv.order_r), q, cv.a});
        }
        for (const auto& cv : odd) {
            ds.rows.push_back({"b_" + std::to_string(cv.order_r), q, cv.a});
        }
        ds.rows.push_back({"ref_plus_2q", q, 2.0 * q});
        ds.rows.push_back({"ref_minus_2q", q, -2.0 * q});
    }
    return ds;
}

FigureDataset fig2_eigenvalue_errors(const FigureOptions& opts) {
    FigureDataset ds;
    ds.figure_id = "fig2";
    ds.x_label = "energy_exact";
    ds.y_label = "energy_series_minus_exact";
    ds.metadata = base_metadata("fig2", opts);
    ds.metadata["sign_convention"] = "series_minus_exact";

    const auto table = spectrum(opts.cfg, opts.count, opts.tol);
    for (const auto& row : table.rows) {
        if (row.energy < opts.cfg.v0) {
            const int n = row.label.global_index;
            for (int order = 0; order <= 4; ++order) {
                const double e = osc_energy(order, n, opts.cfg);
                ds.rows.push_back({"osc" + std::to_string(order), row.energy,
                                   e - row.energy});
            }
        } else {
            const int m = row.label.rotor_m();
            for (int order : {0, 2, 4}) {
                if (order >= 2 && m < 2) continue;
                const double e = rotor_energy(m, opts.cfg, order).energy;
                ds.rows.push_back({"rot" + std::to_string(order), row.energy,
                                   e - row.energy});
            }
        }
    }
    return ds;
}

namespace {

// Rotor-side point figures (3 and 4) share the m loop: points are kept when
// the series energy sits above the separatrix.
FigureDataset rotor_point_figure(const FigureOptions& opts, bool revival,
                                 const std::string& id) {
    FigureDataset ds;
    ds.figure_id = id;
    ds.x_label = "energy";
    ds.y_label = revival ? "t_rev" : "tau";
    ds.metadata = base_metadata(id, opts);

    const int m_max = 25;
    for (int order : {0, 2, 4}) {
        for (int m = order >= 2 ? 2 : 1; m <= m_max; ++m) {
            const double e = rotor_energy(m, opts.cfg, order).energy;
            if (e < opts.cfg.v0) continue;
            const auto t = analytic_timescales(Limit::rotor, m, opts.cfg, order);
            ds.rows.push_back({"order" + std::to_string(order), e,
                               revival ? t.t_rev : t.tau});
        }
    }
    if (!revival) {
        const double e_hi = rotor_energy(m_max, opts.cfg, 0).energy;
        for (double e : linspace(1.02 * opts.cfg.v0, e_hi, opts.curve_points)) {
            ds.rows.push_back({"classical", e, period(e, opts.cfg).tau});
        }
    }
    return ds;
}

FigureDataset oscillator_point_figure(const FigureOptions& opts, bool revival,
                                      const std::string& id) {
    FigureDataset ds;
    ds.figure_id = id;
    ds.x_label = "energy";
    ds.y_label = revival ? "t_rev" : "tau";
    ds.metadata = base_metadata(id, opts);

    for (int order = revival ? 1 : 0; order <= 4; ++order) {
        for (int n = 0;; ++n) {
            const double e = osc_energy(order, n, opts.cfg);
            if (e >= opts.cfg.v0) break;
            const auto t = analytic_timescales(Limit::oscillator, n, opts.cfg, order);
            ds.rows.push_back({"order" + std::to_string(order), e,
                               revival ? t.t_rev : t.tau});
        }
    }
    if (!revival) {
        for (double e : linspace(-0.995 * opts.cfg.v0, 0.995 * opts.cfg.v0,
                                 opts.curve_points)) {
            ds.rows.push_back({"classical", e, period(e, opts.cfg).tau});
        }
    }
    return ds;
}

}  // namespace

FigureDataset fig3_rotor_periods(const FigureOptions& opts) {
    return rotor_point_figure(opts, false, "fig3");
}

FigureDataset fig4_rotor_revivals(const FigureOptions& opts) {
    return rotor_point_figure(opts, true, "fig4");
}

FigureDataset fig5_oscillator_periods(const FigureOptions& opts) {
    return oscillator_point_figure(opts, false, "fig5");
}

FigureDataset fig6_oscillator_revivals(const FigureOptions& opts) {
    return oscillator_point_figure(opts, true, "fig6");
}

FigureDataset fig7_discrete_periods(const FigureOptions& opts) {
    FigureDataset ds;
    ds.figure_id = "fig7";
    ds.x_label = "energy";
    ds.y_label = "tau";
    ds.metadata = base_metadata("fig7", opts);

    const auto table = spectrum(opts.cfg, opts.count, opts.tol);
    double e_max = opts.cfg.v0;
    for (const auto& row : table.rows) e_max = std::max(e_max, row.energy);

    for (Parity p : {Parity::even, Parity::odd}) {
        const auto raw = discrete_table(table, p);
        append_discrete(ds, raw, "tau_" + to_string(p) + "_raw", false, opts.cfg.hbar);
        append_discrete(ds, parity_corrected(raw), "tau_" + to_string(p) + "_corrected",
                        false, opts.cfg.hbar);
    }
    for (double e : linspace(-0.99 * opts.cfg.v0, 0.995 * opts.cfg.v0, opts.curve_points)) {
        ds.rows.push_back({"classical_libration", e, period(e, opts.cfg).tau});
    }
    for (double e : linspace(1.005 * opts.cfg.v0, e_max, opts.curve_points)) {
        ds.rows.push_back({"classical_rotation", e, period(e, opts.cfg).tau});
    }
    return ds;
}

FigureDataset fig8_discrete_revivals(const FigureOptions& opts) {
    FigureDataset ds;
    ds.figure_id = "fig8";
    ds.x_label = "energy";
    ds.y_label = "t_rev";
    ds.metadata = base_metadata("fig8", opts);

    const auto table = spectrum(opts.cfg, opts.count, opts.tol);
    double e_max = opts.cfg.v0;
    for (const auto& row : table.rows) e_max = std::max(e_max, row.energy);

    for (Parity p : {Parity::even, Parity::odd}) {
        const auto raw = discrete_table(table, p);
        append_discrete(ds, raw, "t_rev_" + to_string(p) + "_raw", true, opts.cfg.hbar);
        append_discrete(ds, parity_corrected(raw), "t_rev_" + to_string(p) + "_corrected",
                        true, opts.cfg.hbar);
    }

    // Fourth-order analytic envelopes from both limits.
    for (double n = 0.0;; n += 0.25) {
        const double e = series_energy(Limit::oscillator, n, opts.cfg, 4);
        if (e >= opts.cfg.v0) break;
        ds.rows.push_back(
            {"analytic_osc_order4", e,
             analytic_timescales(Limit::oscillator, n, opts.cfg, 4).t_rev});
    }
    const double m_lo = std::sqrt(2.0 * opts.cfg.inertia() * opts.cfg.v0) / opts.cfg.hbar;
    const double m_hi = std::sqrt(2.0 * opts.cfg.inertia() * e_max) / opts.cfg.hbar;
    for (double m = std::max(2.0, m_lo); m <= m_hi; m += 0.25) {
        const double e = series_energy(Limit::rotor, m, opts.cfg, 4);
        if (e < opts.cfg.v0) continue;
        ds.rows.push_back({"analytic_rot_order4", e,
                           analytic_timescales(Limit::rotor, m, opts.cfg, 4).t_rev});
    }
    return ds;
}

FigureDataset make_figure(const std::string& figure_id, const FigureOptions& opts) {
    if (figure_id == "fig1") return fig1_characteristic_curves(opts);
    if (figure_id == "fig2") return fig2_eigenvalue_errors(opts);
    if (figure_id == "fig3") return fig3_rotor_periods(opts);
    if (figure_id == "fig4") return fig4_rotor_revivals(opts);
    if (figure_id == "fig5") return fig5_oscillator_periods(opts);
    if (figure_id == "fig6") return fig6_oscillator_revivals(opts);
    if (figure_id == "fig7") return fig7_discrete_periods(opts);
    if (figure_id == "fig8") return fig8_discrete_revivals(opts);
    throw std::invalid_argument("make_figure: unknown figure id '" + figure_id + "'");
}

}  // namespace pendulum
