#pragma once

#include <string>

namespace pendulum {

enum class Parity { even, odd };

std::string to_string(Parity p);

/// Physical parameters of the rigid pendulum: a particle of mass `mass`
/// on a circle of radius `length`, in a potential V(theta) = -v0*cos(theta).
/// All four fields must be strictly positive and finite.
struct PendulumConfig {
    double hbar = 1.0;
    double mass = 0.5;
    double length = 1.0;
    double v0 = 80.0;

    PendulumConfig() = default;
    PendulumConfig(double hbar_, double mass_, double length_, double v0_);

    double inertia() const { return mass * length * length; }

    /// The nominal parameter set hbar = 2*mass = length = 1, v0 = 80 (q = 160).
    static PendulumConfig reference() { return PendulumConfig{}; }

    /// Throws std::invalid_argument unless every field is positive and finite.
    void validate() const;
};

/// Dimensionless Mathieu-frame coordinates of a state: the field strength q
/// and the characteristic parameter a. All spectral numerics run in this frame;
/// physical units enter only through the conversions below.
struct MathieuCoords {
    double q = 0.0;
    double a = 0.0;
};

/// q = 4*I*V0/hbar^2 with I = mass*length^2.
double q_of_config(const PendulumConfig& cfg);

/// E = a*hbar^2/(8*I) and its exact inverse.
double energy_from_a(double a, const PendulumConfig& cfg);
double a_from_energy(double energy, const PendulumConfig& cfg);

/// Kind of external field for order-of-magnitude q estimates.
/// Meaning of force_scale:
///   gravity         acceleration g [m/s^2], V0 = mass*g*length
///   electric_charge force Q*E [N],          V0 = Q*E*length
///   electric_dipole energy p*E [J],         V0 = p*E
enum class FieldKind { gravity, electric_charge, electric_dipole };

/// q for a physical system in SI units (uses the SI value of hbar).
/// force_scale = 0 gives q = 0; negative inputs are rejected.
double estimate_q(double mass, double length, double force_scale, FieldKind kind);

/// Label of one pendulum eigenstate. order_r is the (even) Mathieu order of
/// the periodic solution; odd parity starts at r = 2. global_index is the
/// position in the merged spectrum ordered by ascending energy, ties at
/// exact degeneracy broken even-before-odd.
struct StateLabel {
    Parity parity = Parity::even;
    int order_r = 0;
    int global_index = 0;

    /// Rotor quantum number m = r/2.
    int rotor_m() const { return order_r / 2; }
};

}  // namespace pendulum
