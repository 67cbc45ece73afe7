#pragma once

#include <vector>

#include "pendulum/config.hpp"

namespace pendulum {

/// Classification of classical motion by energy against the well depth:
/// rest at E = -V0, libration for -V0 < E < +V0, the separatrix at E = +V0
/// (where the period diverges), rotation for E > +V0.
enum class ClassicalRegime { rest, libration, separatrix, rotation };

std::string to_string(ClassicalRegime r);

struct PeriodPoint {
    double energy = 0.0;
    double tau = 0.0;  // +infinity when regime == separatrix
    ClassicalRegime regime = ClassicalRegime::libration;
};

/// Turning angle Theta = arccos(-E/V0) of librating motion, in [0, pi].
/// Requires -V0 <= E <= +V0.
double turning_angle(double energy, const PendulumConfig& cfg);

/// Classical period tau(E).
///   libration: tau = 4 sqrt(I/V0) K(k),        k^2 = (E+V0)/(2V0)
///   rotation:  tau = 2 sqrt(2I/(E+V0)) K(k'),  k'^2 = 2V0/(E+V0)
/// E = -V0 returns the small-oscillation limit 2 pi sqrt(I/V0); E = +V0 is
/// flagged as the separatrix (tau = +infinity), not thrown. E < -V0 throws.
PeriodPoint period(double energy, const PendulumConfig& cfg);

/// period() applied pointwise to an energy grid.
std::vector<PeriodPoint> period_curve(const PendulumConfig& cfg,
                                      const std::vector<double>& energies);

}  // namespace pendulum
