#include "pendulum/selftest.hpp"

#include <cmath>
#include <cstdio>

#include "pendulum/oscillator_pt.hpp"

namespace pendulum {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

void check(std::vector<CheckResult>& out, const std::string& name, bool pass,
           const std::string& detail) {
    out.push_back({name, pass, detail});
}

double quadratic_taylor_term(int order, int n, double hbar, double omega, double u) {
    // (n+1/2) hbar omega [ sqrt(1+u) - 1 ] expanded in u = 2 lambda/(mu omega^2)
    static constexpr double coeff[5] = {0.0, 0.5, -0.125, 1.0 / 16.0, -5.0 / 128.0};
    return (n + 0.5) * hbar * omega * coeff[order] * std::pow(u, order);
}

}  // namespace

std::vector<CheckResult> run_selftest() {
    std::vector<CheckResult> out;

    OscillatorFrame frame{1.0, 1.3, 2.1, 48};
    const int n = 3;
    const double mu = frame.mass, om = frame.omega;

    {
        PerturbationPolynomial constant{{{0, 0.37, 1}}};
        const double e1 = rs_pt(constant, n, frame, 1);
        check(out, "constant_shift_order1", std::abs(e1 - 0.37) < 1e-12,
              "E1=" + fmt(e1));
        for (int k = 2; k <= 4; ++k) {
            const double ek = rs_pt(constant, n, frame, k);
            check(out, "constant_shift_order" + std::to_string(k), std::abs(ek) < 1e-10,
                  "|E" + std::to_string(k) + "|=" + fmt(std::abs(ek)));
        }
    }

    {
        const double f = 0.83;
        PerturbationPolynomial linear{{{1, -f, 1}}};
        const double expected = -f * f / (2.0 * mu * om * om);
        const double e2 = rs_pt(linear, n, frame, 2);
        check(out, "linear_term_order2",
              std::abs(e2 - expected) < 1e-10 * std::abs(expected),
              "E2=" + fmt(e2) + " expected=" + fmt(expected));
        for (int k : {1, 3, 4}) {
            const double ek = rs_pt(linear, n, frame, k);
            check(out, "linear_term_order" + std::to_string(k), std::abs(ek) < 1e-10,
                  "|E" + std::to_string(k) + "|=" + fmt(std::abs(ek)));
        }
    }

    {
        const double lambda = 0.05;
        PerturbationPolynomial quad{{{2, lambda, 1}}};
        const double u = 2.0 * lambda / (mu * om * om);
        for (int k = 1; k <= 4; ++k) {
            const double ek = rs_pt(quad, n, frame, k);
            const double expected = quadratic_taylor_term(k, n, frame.hbar, om, u);
            check(out, "quadratic_term_order" + std::to_string(k),
                  std::abs(ek - expected) < 1e-9 * std::abs(expected),
                  "E" + std::to_string(k) + "=" + fmt(ek) + " expected=" + fmt(expected));
        }

        // Residual after summing through order 4 scales as lambda^5.
        auto residual = [&](double lam) {
            PerturbationPolynomial p{{{2, lam, 1}}};
            const double exact =
                (n + 0.5) * frame.hbar * std::sqrt(om * om + 2.0 * lam / mu) -
                (n + 0.5) * frame.hbar * om;
            double sum = 0.0;
            for (int k = 1; k <= 4; ++k) sum += rs_pt(p, n, frame, k);
            return std::abs(exact - sum);
        };
        const double scale = mu * om * om;
        const double r1 = residual(1e-3 * scale), r2 = residual(1e-2 * scale);
        const double slope = std::log10(r2 / r1);
        check(out, "quadratic_residual_slope", std::abs(slope - 5.0) < 0.2,
              "slope=" + fmt(slope));
    }

    {
        const PendulumConfig configs[] = {PendulumConfig::reference(),
                                          {1.0, 1.0, 1.0, 40.0},
                                          {2.0, 0.7, 1.3, 55.0}};
        double worst = 0.0;
        for (const auto& cfg : configs) {
            for (int nn = 0; nn <= 6; ++nn) {
                for (int g = 1; g <= 4; ++g) {
                    const double engine = graded_correction(g, nn, cfg).value;
                    const double closed = closed_form(g, nn, cfg);
                    worst = std::max(worst, std::abs(engine - closed) / std::abs(closed));
                }
            }
        }
        check(out, "engine_vs_closed_form_sweep", worst < 1e-9, "worst_rel=" + fmt(worst));
    }

    return out;
}

}  // namespace pendulum
