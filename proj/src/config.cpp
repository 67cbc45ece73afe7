#include "pendulum/config.hpp"

#include <cmath>
#include <stdexcept>

namespace pendulum {

std::string to_string(Parity p) {
    return p == Parity::even ? "even" : "odd";
}

PendulumConfig::PendulumConfig(double hbar_, double mass_, double length_, double v0_)
    : hbar(hbar_), mass(mass_), length(length_), v0(v0_) {
    validate();
}

void PendulumConfig::validate() const {
    auto ok = [](double x) { return std::isfinite(x) && x > 0.0; };
    if (!ok(hbar) || !ok(mass) || !ok(length) || !ok(v0)) {
        throw std::invalid_argument(
            "PendulumConfig: hbar, mass, length, v0 must be positive and finite");
    }
}

double q_of_config(const PendulumConfig& cfg) {
    cfg.validate();
    return 4.0 * cfg.inertia() * cfg.v0 / (cfg.hbar * cfg.hbar);
}

double energy_from_a(double a, const PendulumConfig& cfg) {
    cfg.validate();
    return a * cfg.hbar * cfg.hbar / (8.0 * cfg.inertia());
}

double a_from_energy(double energy, const PendulumConfig& cfg) {
    cfg.validate();
    return 8.0 * cfg.inertia() * energy / (cfg.hbar * cfg.hbar);
}

double estimate_q(double mass, double length, double force_scale, FieldKind kind) {
    if (!(mass > 0.0) || !(length > 0.0) || !(force_scale >= 0.0) ||
        !std::isfinite(mass) || !std::isfinite(length) || !std::isfinite(force_scale)) {
        throw std::invalid_argument("estimate_q: mass and length must be positive, "
                                    "force_scale non-negative");
    }
    constexpr double hbar_si = 1.054571817e-34;  // J s (CODATA 2018)
    double v0 = 0.0;
    switch (kind) {
        case FieldKind::gravity: v0 = mass * force_scale * length; break;
        case FieldKind::electric_charge: v0 = force_scale * length; break;
        case FieldKind::electric_dipole: v0 = force_scale; break;
    }
    const double inertia = mass * length * length;
    return 4.0 * inertia * v0 / (hbar_si * hbar_si);
}

}  // namespace pendulum
