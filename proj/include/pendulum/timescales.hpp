#pragma once

#include <vector>

#include "pendulum/config.hpp"
#include "pendulum/mathieu.hpp"

namespace pendulum {

enum class Limit { rotor, oscillator };

/// Where a Timescales triple came from: an analytic series (which limit, at
/// which truncation order) or parity-separated discrete differences.
struct TimescaleSource {
    enum class Kind { analytic, discrete };
    Kind kind = Kind::analytic;
    Limit limit = Limit::oscillator;
    int order = 0;
    Parity parity = Parity::even;
};

/// Classical period, revival, and superrevival times
///   tau = 2 pi hbar / |E'|, T_rev = 2 pi hbar / (|E''|/2),
///   T_super = 2 pi hbar / (|E'''|/6).
/// A vanishing second or third derivative gives +infinity (quadratic and
/// linear spectra have no revival/superrevival structure at that order).
struct Timescales {
    double tau = 0.0;
    double t_rev = 0.0;
    double t_super = 0.0;
    TimescaleSource source;
};

/// Build the triple from derivative estimates d1 = E', d2 = E'', d3 = E'''.
/// d1 = 0 is rejected (no classical period).
Timescales timescales_from(double d1, double d2, double d3, double hbar);

/// Perturbative energy at continuous quantum number `level`:
/// oscillator: sum of the closed forms through grade `order` (0..4) at n;
/// rotor: the free-rotor energy plus corrections through `order` (0, 2, 4)
/// at m. Level is treated as a real number in both cases.
double series_energy(Limit limit, double level, const PendulumConfig& cfg, int order);

/// Timescales from exact derivatives of the perturbative series, evaluated
/// at continuous quantum number. Rotor orders >= 2 require level >= 2.
Timescales analytic_timescales(Limit limit, double level, const PendulumConfig& cfg,
                               int order);

/// Discrete derivatives within one parity class of the spectrum, ordered by
/// energy. Row k (k = 1 .. size-3 of the subsequence) carries
///   d1 = E_{k+1} - E_k          (with e_bar = midpoint of the pair)
///   d2 = E_{k+1} - 2 E_k + E_{k-1}
///   d3 = E_{k+2} - 3 E_{k+1} + 3 E_k - E_{k-1}
/// in raw form. Because one parity class samples every other state in the
/// oscillator regime, the parity-corrected variant divides d1, d2, d3 by
/// 2, 4, 8; in the rotor regime each class holds one state per m and the raw
/// variant is the physical one.
struct DiscreteDerivatives {
    int k = 0;           // index within the parity subsequence
    double energy = 0.0; // E_k, the center state
    double e_bar = 0.0;  // (E_k + E_{k+1})/2
    double d1 = 0.0;
    double d2 = 0.0;
    double d3 = 0.0;
    Parity parity = Parity::even;
    bool parity_corrected = false;
};

/// Raw table; requires at least 4 states of the requested parity.
std::vector<DiscreteDerivatives> discrete_table(const SpectrumTable& table, Parity parity);

/// The parity-corrected copies (d1/2, d2/4, d3/8).
std::vector<DiscreteDerivatives> parity_corrected(std::vector<DiscreteDerivatives> rows);

/// Leading-order timescale hierarchy, normalized to tau = 1:
///   rotor:      ((4 m^3 / q)^2, 2m, 1)
///   oscillator: ((8 sqrt(q))^2, 8 sqrt(q), 1)
struct HierarchyRatios {
    double t_super = 0.0;
    double t_rev = 0.0;
    double tau = 1.0;
};

HierarchyRatios hierarchy_ratios(Limit limit, double level, double q);

}  // namespace pendulum
