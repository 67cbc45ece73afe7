#pragma once

#include <vector>

#include "pendulum/config.hpp"

namespace pendulum {

/// Harmonic frame for the small-angle limit: omega = sqrt(V0/I), coordinate
/// x = theta * length with the pendulum's mass. basis_dim bounds the number
/// of oscillator states kept in perturbation sums; it must satisfy
/// basis_dim >= n + 4*r_max + 10 for the highest H_{2r} in play, which makes
/// every sum through fourth order exact (the perturbations are banded).
struct OscillatorFrame {
    double hbar = 1.0;
    double mass = 0.5;
    double omega = 1.0;
    int basis_dim = 40;

    static OscillatorFrame for_config(const PendulumConfig& cfg, int n_max, int r_max = 5);

    /// sqrt(hbar / (2 mass omega)), the length scale of the ladder expansion.
    double ladder_unit() const;
};

/// Dense symmetric matrix of <i|x^power|j>, i,j < dim, row-major, built by
/// repeated multiplication of the single-x ladder matrix. Entries vanish for
/// |i-j| > power; entries with i+j+power >= 2*dim feel the truncation.
std::vector<double> x_power_matrix(int power, int dim, const OscillatorFrame& frame);

/// One monomial of a perturbing potential: coeff * x^power, with a grade used
/// by the graded bookkeeping (grade of the pendulum H_{2r} term is r-1).
struct PerturbationTerm {
    int power = 0;
    double coeff = 0.0;
    int grade = 1;
};

struct PerturbationPolynomial {
    std::vector<PerturbationTerm> terms;
    int max_power() const;
};

/// The pendulum's anharmonic tail H' = sum_{r=2}^{max_r} H_{2r} with
/// H_{2r} = (-1)^{r+1} V0 x^{2r} / ((2r)! l^{2r}) and grade r-1.
PerturbationPolynomial pendulum_perturbation(const PendulumConfig& cfg, int max_r = 5);

/// Rayleigh-Schrodinger correction of order rs_order (1..4) for state n.
/// Second order is the textbook sum over intermediate states; third and
/// fourth use the full expressions with the <n|H'|n> counterterms, all sums
/// running over the truncated basis. The result is re-checked at
/// basis_dim + 10 and a std::runtime_error is thrown if it moved.
double rs_pt(const PerturbationPolynomial& pert, int n, const OscillatorFrame& frame,
             int rs_order);

struct PtCorrection {
    int n = 0;
    int order = 0;
    double value = 0.0;
};

/// Energy correction of the oscillator expansion at grade `order` (1..4):
/// the sum of every RS contribution whose term grades add up to `order`
/// (e.g. order 3 collects H8 in first order, the H6/H4 cross terms in second
/// order, and H4 three times in third order). Computed with grade-truncated
/// polynomial arithmetic over the RS resolvent chains, so all cross orderings
/// are included exactly.
PtCorrection graded_correction(int order, int n, const PendulumConfig& cfg);

/// The published closed-form series, orders 0..4. Order 0 includes the -V0
/// well-depth offset.
double closed_form(int order, int n, const PendulumConfig& cfg);

/// Large-q characteristic-value expansion with p = 2n+1, through q^{-3/2}:
///   a ~ -2q + 2p sqrt(q) - (p^2+1)/8 - (p^3+3p)/(2^7 sqrt(q))
///       - (5p^4+34p^2+9)/(2^12 q) - (33p^5+410p^3+405p)/(2^17 q^{3/2}).
/// `terms` counts leading terms kept (0..6). Requires q > 0.
double handbook_a_low(int n, double q, int terms = 6);

}  // namespace pendulum
