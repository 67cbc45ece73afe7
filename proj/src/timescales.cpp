#include "pendulum/timescales.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace pendulum {

namespace {

constexpr double kPi = std::numbers::pi;

// Value plus first three derivatives, propagated exactly through the series
// expressions (truncated Taylor arithmetic).
struct Jet {
    double f = 0.0, f1 = 0.0, f2 = 0.0, f3 = 0.0;

    static Jet variable(double x) { return {x, 1.0, 0.0, 0.0}; }
    static Jet constant(double c) { return {c, 0.0, 0.0, 0.0}; }

    friend Jet operator+(const Jet& a, const Jet& b) {
        return {a.f + b.f, a.f1 + b.f1, a.f2 + b.f2, a.f3 + b.f3};
    }
    friend Jet operator-(const Jet& a, const Jet& b) {
        return {a.f - b.f, a.f1 - b.f1, a.f2 - b.f2, a.f3 - b.f3};
    }
    friend Jet operator*(const Jet& a, const Jet& b) {
        return {a.f * b.f,
                a.f1 * b.f + a.f * b.f1,
                a.f2 * b.f + 2.0 * a.f1 * b.f1 + a.f * b.f2,
                a.f3 * b.f + 3.0 * a.f2 * b.f1 + 3.0 * a.f1 * b.f2 + a.f * b.f3};
    }
    friend Jet operator*(const Jet& a, double s) { return {a.f * s, a.f1 * s, a.f2 * s, a.f3 * s}; }

    Jet reciprocal() const {
        const double g = f, g1 = f1, g2 = f2, g3 = f3;
        const double h = 1.0 / g;
        const double h1 = -g1 * h * h;
        const double h2 = (2.0 * g1 * g1 - g * g2) * h * h * h;
        const double h3 = (-6.0 * g1 * g1 * g1 + 6.0 * g * g1 * g2 - g * g * g3) * h * h * h * h;
        return {h, h1, h2, h3};
    }
};

Jet oscillator_series(Jet n, const PendulumConfig& cfg, int order) {
    const double hb = cfg.hbar;
    const double inertia = cfg.inertia();
    const double omega = std::sqrt(cfg.v0 / inertia);
    const Jet one = Jet::constant(1.0);

    Jet e = (n + Jet::constant(0.5)) * (hb * omega) - Jet::constant(cfg.v0);
    const Jet n2 = n * n, n3 = n2 * n, n4 = n2 * n2, n5 = n4 * n;
    if (order >= 1) {
        e = e - (n2 * 2.0 + n * 2.0 + one) * (hb * hb / (32.0 * inertia));
    }
    if (order >= 2) {
        const double pref = std::pow(hb, 3) / (inertia * inertia) *
                            std::sqrt(inertia / cfg.v0) / 512.0;
        e = e - (n3 * 2.0 + n2 * 3.0 + n * 3.0 + one) * pref;
    }
    if (order >= 3) {
        const double pref = std::pow(hb, 4) / (cfg.v0 * inertia * inertia) / 8192.0;
        e = e - (n4 * 5.0 + n3 * 10.0 + n2 * 16.0 + n * 11.0 + one * 3.0) * pref;
    }
    if (order >= 4) {
        const double pref = std::pow(hb, 5) /
                            (std::pow(inertia, 2.5) * std::pow(cfg.v0, 1.5)) / 524288.0;
        e = e - (n5 * 66.0 + n4 * 165.0 + n3 * 370.0 + n2 * 390.0 + n * 225.0 +
                 one * 53.0) * pref;
    }
    return e;
}

Jet rotor_series(Jet m, const PendulumConfig& cfg, int order) {
    const double hb2 = cfg.hbar * cfg.hbar;
    const double inertia = cfg.inertia();
    const Jet m2 = m * m;

    Jet e = m2 * (hb2 / (2.0 * inertia));
    if (order >= 2) {
        const Jet denom = m2 * 4.0 - Jet::constant(1.0);
        e = e + denom.reciprocal() * (inertia * cfg.v0 * cfg.v0 / hb2);
    }
    if (order >= 4) {
        const Jet d1 = m2 * 4.0 - Jet::constant(1.0);
        const Jet d2 = m2 * 4.0 - Jet::constant(4.0);
        const Jet denom = d1 * d1 * d1 * d2;
        const double pref = std::pow(cfg.v0, 4) * std::pow(inertia, 3) / std::pow(cfg.hbar, 6);
        e = e + (m2 * 20.0 + Jet::constant(7.0)) * denom.reciprocal() * pref;
    }
    return e;
}

Jet series_jet(Limit limit, double level, const PendulumConfig& cfg, int order) {
    cfg.validate();
    if (limit == Limit::oscillator) {
        if (order < 0 || order > 4) {
            throw std::invalid_argument("oscillator series: order in 0..4");
        }
        return oscillator_series(Jet::variable(level), cfg, order);
    }
    if (order != 0 && order != 2 && order != 4) {
        throw std::invalid_argument("rotor series: order must be 0, 2, or 4");
    }
    if (order >= 2 && level < 2.0) {
        throw std::invalid_argument("rotor series: level >= 2 required for order >= 2");
    }
    return rotor_series(Jet::variable(level), cfg, order);
}

}  // namespace

Timescales timescales_from(double d1, double d2, double d3, double hbar) {
    if (d1 == 0.0) throw std::invalid_argument("timescales_from: d1 = 0, no classical period");
    const double inf = std::numeric_limits<double>::infinity();
    Timescales t;
    t.tau = 2.0 * kPi * hbar / std::abs(d1);
    t.t_rev = d2 == 0.0 ? inf : 2.0 * kPi * hbar / (std::abs(d2) / 2.0);
    t.t_super = d3 == 0.0 ? inf : 2.0 * kPi * hbar / (std::abs(d3) / 6.0);
    return t;
}

double series_energy(Limit limit, double level, const PendulumConfig& cfg, int order) {
    return series_jet(limit, level, cfg, order).f;
}

Timescales analytic_timescales(Limit limit, double level, const PendulumConfig& cfg,
                               int order) {
    const Jet e = series_jet(limit, level, cfg, order);
    Timescales t = timescales_from(e.f1, e.f2, e.f3, cfg.hbar);
    t.source.kind = TimescaleSource::Kind::analytic;
    t.source.limit = limit;
    t.source.order = order;
    return t;
}

std::vector<DiscreteDerivatives> discrete_table(const SpectrumTable& table, Parity parity) {
    std::vector<double> e;
    for (const auto& row : table.rows) {
        if (row.label.parity == parity) e.push_back(row.energy);
    }
    // Rows of SpectrumTable are energy-ordered, so the subsequence is too.
    if (e.size() < 4) {
        throw std::invalid_argument("discrete_table: need at least 4 states of this parity");
    }
    std::vector<DiscreteDerivatives> rows;
    rows.reserve(e.size() - 3);
    for (std::size_t k = 1; k + 2 < e.size(); ++k) {
        DiscreteDerivatives d;
        d.k = static_cast<int>(k);
        d.energy = e[k];
        d.e_bar = 0.5 * (e[k] + e[k + 1]);
        d.d1 = e[k + 1] - e[k];
        d.d2 = e[k + 1] - 2.0 * e[k] + e[k - 1];
        d.d3 = e[k + 2] - 3.0 * e[k + 1] + 3.0 * e[k] - e[k - 1];
        d.parity = parity;
        d.parity_corrected = false;
        rows.push_back(d);
    }
    return rows;
}

std::vector<DiscreteDerivatives> parity_corrected(std::vector<DiscreteDerivatives> rows) {
    for (auto& r : rows) {
        if (r.parity_corrected) continue;
        r.d1 /= 2.0;
        r.d2 /= 4.0;
        r.d3 /= 8.0;
        r.parity_corrected = true;
    }
    return rows;
}

HierarchyRatios hierarchy_ratios(Limit limit, double level, double q) {
    if (!(q > 0.0)) throw std::invalid_argument("hierarchy_ratios: q must be > 0");
    HierarchyRatios h;
    if (limit == Limit::rotor) {
        const double m3 = level * level * level;
        h.t_super = std::pow(4.0 * m3 / q, 2);
        h.t_rev = 2.0 * level;
    } else {
        h.t_super = 64.0 * q;
        h.t_rev = 8.0 * std::sqrt(q);
    }
    return h;
}

}  // namespace pendulum
