#include "pendulum/rotor.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pendulum {

namespace {

// Adaptive Simpson, private to this module (a separate quadrature lives in
// the test oracles). The WKB integrand is smooth away from a = 2q; the
// recursion depth is ample for 1e-13 on this family.
double simpson(double (*f)(double, double), double p, double a, double b, double fa,
               double fm, double fb, double whole, double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm, p), frm = f(rm, p);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * eps) {
        return left + right + delta / 15.0;
    }
    return simpson(f, p, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
           simpson(f, p, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

double integrate(double (*f)(double, double), double p, double a, double b, double eps) {
    const double fa = f(a, p), fb = f(b, p), fm = f(0.5 * (a + b), p);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson(f, p, a, b, fa, fm, fb, whole, eps, 48);
}

double wkb_integrand(double theta, double two_q_over_a) {
    return std::sqrt(1.0 + two_q_over_a * std::cos(theta));
}

// sqrt(a) * Int_{-pi}^{pi} sqrt(1 + (2q/a) cos theta) dtheta; even integrand.
double quantization_lhs(double a, double q) {
    const double integral =
        2.0 * integrate(wkb_integrand, 2.0 * q / a, 0.0, std::numbers::pi, 1e-13);
    return std::sqrt(a) * integral;
}

}  // namespace

RotorLevel rotor_energy(int m, const PendulumConfig& cfg, int order) {
    cfg.validate();
    if (order != 0 && order != 2 && order != 4) {
        throw std::invalid_argument("rotor_energy: order must be 0, 2, or 4");
    }
    if (m < 0) throw std::invalid_argument("rotor_energy: m must be >= 0");
    if (order >= 2 && m < 2) {
        throw std::invalid_argument(
            "rotor_energy: m in {0, 1} needs degenerate treatment, not supported "
            "beyond order 0");
    }
    const double hb2 = cfg.hbar * cfg.hbar;
    const double inertia = cfg.inertia();
    const double m2 = static_cast<double>(m) * m;
    double e = hb2 * m2 / (2.0 * inertia);
    if (order >= 2) {
        e += inertia * cfg.v0 * cfg.v0 / (hb2 * (4.0 * m2 - 1.0));
    }
    if (order >= 4) {
        const double denom = std::pow(4.0 * m2 - 1.0, 3) * (4.0 * m2 - 4.0);
        e += std::pow(cfg.v0, 4) * std::pow(inertia, 3) / std::pow(cfg.hbar, 6) *
             (20.0 * m2 + 7.0) / denom;
    }
    return RotorLevel{m, order, e};
}

double handbook_a_high(int r, double q, int terms) {
    if (r <= 2) throw std::invalid_argument("handbook_a_high: need r >= 3");
    if (terms < 0 || terms > 2) throw std::invalid_argument("handbook_a_high: terms in 0..2");
    const double r2 = static_cast<double>(r) * r;
    double a = r2;
    if (terms >= 1) a += q * q / (2.0 * (r2 - 1.0));
    if (terms >= 2) {
        a += (5.0 * r2 + 7.0) * std::pow(q, 4) /
             (32.0 * std::pow(r2 - 1.0, 3) * (r2 - 4.0));
    }
    return a;
}

WkbResult wkb_series(int m, double q, int highest_term) {
    if (m < 1) throw std::invalid_argument("wkb_series: m must be >= 1");
    if (highest_term < 0 || highest_term > 3) {
        throw std::invalid_argument("wkb_series: highest_term in 0..3");
    }
    const double m2 = static_cast<double>(m) * m;
    WkbResult res;
    res.m = m;
    res.method = WkbMethod::series;
    res.within_validity = q * q / (2.0 * m2 * m2) < 1.0;
    res.a = m2;
    if (highest_term >= 1) res.a += q * q / (2.0 * m2);
    if (highest_term >= 2) res.a += 5.0 * std::pow(q, 4) / (32.0 * std::pow(m2, 3));
    if (highest_term >= 3) res.a += 9.0 * std::pow(q, 6) / (64.0 * std::pow(m2, 5));
    return res;
}

WkbResult wkb_action_root(int m, double q) {
    if (m < 1) throw std::invalid_argument("wkb_action_root: m must be >= 1");
    if (!(q >= 0.0)) throw std::invalid_argument("wkb_action_root: q must be >= 0");

    const double target = 2.0 * m * std::numbers::pi;
    const double m2 = static_cast<double>(m) * m;
    double lo = std::max(2.0002 * q, 0.5 * m2);
    double hi = 4.0 * m2 + 2.0 * q;
    if (q == 0.0) lo = std::max(lo, 1e-8);

    // quantization_lhs is strictly increasing in a.
    if (quantization_lhs(lo, q) > target || quantization_lhs(hi, q) < target) {
        throw std::domain_error(
            "wkb_action_root: no root with a > 2q (state below the rotor regime)");
    }
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (quantization_lhs(mid, q) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= 1e-13 * std::max(1.0, std::abs(mid))) break;
    }

    WkbResult res;
    res.m = m;
    res.a = 0.5 * (lo + hi);
    res.method = WkbMethod::action_root;
    res.within_validity = true;
    return res;
}

}  // namespace pendulum
