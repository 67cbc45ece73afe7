#pragma once

#include <vector>

#include "pendulum/config.hpp"
#include "pendulum/tridiag.hpp"

namespace pendulum {

/// One converged Mathieu characteristic value a_r(q) (even) or b_r(q) (odd),
/// period-pi solutions only, so order_r is always even. `truncation` is the
/// Fourier basis size of the final sweep; `converged` means doubling the
/// truncation moved the value by less than the requested tolerance.
struct CharValue {
    Parity parity = Parity::even;
    int order_r = 0;
    double a = 0.0;
    int truncation = 0;
    bool converged = false;
};

/// Fourier-cosine discretization on the basis {1/sqrt(2), cos 2z, cos 4z, ...}:
/// diag = (0, 4, 16, ..., (2(n-1))^2), offdiag = (sqrt(2) q, q, q, ...).
/// Eigenvalues approximate a_0, a_2, a_4, ... The sqrt(2) on the first
/// coupling keeps the matrix symmetric. Requires n >= 4. q may be negative
/// (the spectrum is independent of the sign of q for these orders).
TridiagSystem build_even_matrix(double q, int n);

/// Fourier-sine basis {sin 2z, sin 4z, ...}: diag = (4, 16, 36, ...),
/// offdiag = (q, q, ...). Eigenvalues approximate b_2, b_4, ...
TridiagSystem build_odd_matrix(double q, int n);

/// First `count` characteristic values of the requested parity.
/// The truncation starts at N0 = max(2*count, ceil(2 sqrt(q)) + 10) and is
/// doubled until two successive sweeps agree within `tol` (absolute, in
/// a-units) on every requested value. Negative q is folded to |q|.
/// Non-convergence after max_doublings is reported through the converged
/// flags (the last iterate is returned, not thrown away).
std::vector<CharValue> char_values(double q, Parity parity, int count, double tol = 1e-10,
                                   int max_doublings = 12);

struct SpectrumRow {
    StateLabel label;
    double a = 0.0;
    double energy = 0.0;
};

/// Merged even+odd spectrum, globally indexed by ascending energy.
/// energy = a * energy_scale with energy_scale = hbar^2/(8 I).
struct SpectrumTable {
    double q = 0.0;
    double energy_scale = 0.25;
    std::vector<SpectrumRow> rows;
    bool all_converged = true;
};

SpectrumTable spectrum(const PendulumConfig& cfg, int count, double tol = 1e-10);

/// Spectrum directly from q, in the reference frame hbar = 1, I = 1/2
/// (so energy = a/4 and V0 = q/2). Accepts q = 0, unlike PendulumConfig.
SpectrumTable spectrum_from_q(double q, int count, double tol = 1e-10);

}  // namespace pendulum
