#pragma once

#include "pendulum/config.hpp"

namespace pendulum {

/// One free-rotor level with perturbative field corrections. Only positive m
/// is enumerated; the +-m degeneracy of the field-free rotor is folded into
/// the parity labeling of the full spectrum.
struct RotorLevel {
    int m = 0;
    int order = 0;  // 0, 2, or 4
    double energy = 0.0;
};

/// E_m through the requested order:
///   order 0: hbar^2 m^2 / (2 I)
///   order 2: + I V0^2 / (hbar^2 (4m^2 - 1))
///   order 4: + V0^4 I^3 / hbar^6 * (20m^2+7) / ((4m^2-1)^3 (4m^2-4))
/// The order-4 term is the q^4 term of the characteristic-value expansion
/// mapped to energy units. m in {0, 1} is rejected for order >= 2 (m = 1
/// requires degenerate treatment and poles the order-4 denominator).
RotorLevel rotor_energy(int m, const PendulumConfig& cfg, int order);

/// Small-q characteristic-value expansion, valid for r >= 3 where a_r and
/// b_r are approximately degenerate:
///   r^2 + q^2/(2(r^2-1)) + (5r^2+7) q^4 / (32 (r^2-1)^3 (r^2-4)).
/// `terms` is the highest correction kept: 0 -> r^2 only, 1 -> + q^2 term,
/// 2 -> + q^4 term.
double handbook_a_high(int r, double q, int terms = 2);

enum class WkbMethod { series, action_root };

struct WkbResult {
    int m = 0;
    double a = 0.0;
    WkbMethod method = WkbMethod::series;
    bool within_validity = true;  // q^2/(2 m^4) < 1 heuristic (series only)
};

/// Rotor-side WKB expansion of the characteristic value,
/// a = m^2 + q^2/(2m^2) + 5q^4/(32m^6) + 9q^6/(64m^10), truncated after
/// `highest_term` (0..3). Outside the validity heuristic the value is still
/// computed and flagged.
WkbResult wkb_series(int m, double q, int highest_term = 3);

/// Direct WKB quantization: solves
///   2 m pi = sqrt(a) * Int_{-pi}^{+pi} (1 + (2q/a) cos theta)^{1/2} dtheta
/// for a by bracketed bisection, the integral evaluated by adaptive
/// quadrature to 1e-12. Valid above the separatrix only (a > 2q); if the
/// bracket [max(2.0002 q, m^2/2), 4 m^2 + 2q] contains no root, throws.
WkbResult wkb_action_root(int m, double q);

}  // namespace pendulum
