#include "pendulum/classical.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "pendulum/elliptic.hpp"

namespace pendulum {

std::string to_string(ClassicalRegime r) {
    switch (r) {
        case ClassicalRegime::rest: return "rest";
        case ClassicalRegime::libration: return "libration";
        case ClassicalRegime::separatrix: return "separatrix";
        case ClassicalRegime::rotation: return "rotation";
    }
    return "?";
}

double turning_angle(double energy, const PendulumConfig& cfg) {
    cfg.validate();
    if (energy < -cfg.v0 || energy > cfg.v0) {
        throw std::invalid_argument("turning_angle: energy outside [-V0, +V0]");
    }
    return std::acos(-energy / cfg.v0);
}

PeriodPoint period(double energy, const PendulumConfig& cfg) {
    cfg.validate();
    if (!std::isfinite(energy) || energy < -cfg.v0) {
        throw std::invalid_argument("period: energy below -V0 (no classical motion)");
    }
    const double inertia = cfg.inertia();
    PeriodPoint p;
    p.energy = energy;
    if (energy == -cfg.v0) {
        p.regime = ClassicalRegime::rest;
        p.tau = 2.0 * std::numbers::pi * std::sqrt(inertia / cfg.v0);
    } else if (energy == cfg.v0) {
        p.regime = ClassicalRegime::separatrix;
        p.tau = std::numeric_limits<double>::infinity();
    } else if (energy < cfg.v0) {
        p.regime = ClassicalRegime::libration;
        // m1 = 1 - k^2 formed directly from the energy: no cancellation as
        // E -> V0, where the logarithmic divergence lives.
        const double m1 = (cfg.v0 - energy) / (2.0 * cfg.v0);
        p.tau = 4.0 * std::sqrt(inertia / cfg.v0) * elliptic_k_from_complement(m1);
    } else {
        p.regime = ClassicalRegime::rotation;
        const double m1 = (energy - cfg.v0) / (energy + cfg.v0);
        p.tau = 2.0 * std::sqrt(2.0 * inertia / (energy + cfg.v0)) *
                elliptic_k_from_complement(m1);
    }
    return p;
}

std::vector<PeriodPoint> period_curve(const PendulumConfig& cfg,
                                      const std::vector<double>& energies) {
    std::vector<PeriodPoint> out;
    out.reserve(energies.size());
    for (double e : energies) out.push_back(period(e, cfg));
    return out;
}

}  // namespace pendulum
