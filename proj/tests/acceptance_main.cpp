// Acceptance suite: every reproduction target with its tolerance pinned in
// code, one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pendulum/classical.hpp"
#include "pendulum/config.hpp"
#include "pendulum/mathieu.hpp"
#include "pendulum/oscillator_pt.hpp"
#include "pendulum/rotor.hpp"
#include "pendulum/timescales.hpp"

using namespace pendulum;

namespace {

constexpr double kPi = std::numbers::pi;

struct Criterion {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& why) {
        if (!ok && pass) {
            pass = false;
            detail = why;
        }
    }
    void note(const std::string& info) {
        if (pass) detail = info;
    }
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- 1. solver vs small-q handbook series ---------------------------------

Criterion criterion_small_q_series() {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    const auto even = char_values(1.0, Parity::even, 11);
    const auto odd = char_values(1.0, Parity::odd, 10);
    double worst = 0.0;
    for (int r = 8; r <= 20; r += 2) {
        const double series = handbook_a_high(r, 1.0);
        const double da = std::abs(even[r / 2].a - series);
        const double db = std::abs(odd[r / 2 - 1].a - series);
        worst = std::max({worst, da, db});
        c.require(da <= 1e-6, "a_" + std::to_string(r) + " off by " + fmt(da));
        c.require(db <= 1e-6, "b_" + std::to_string(r) + " off by " + fmt(db));
    }
    const double elapsed = seconds_since(t0);
    c.require(elapsed < 1.0, "runtime " + fmt(elapsed) + " s");
    c.note("worst |solver-series| = " + fmt(worst) + ", " + fmt(elapsed) + " s");
    return c;
}

// ---- 2. solver vs large-q series -------------------------------------------

Criterion criterion_large_q_series() {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    const auto table = spectrum_from_q(160.0, 6);
    double worst = 0.0;
    for (int n = 0; n <= 5; ++n) {
        const double diff = std::abs(table.rows[n].a - handbook_a_low(n, 160.0));
        worst = std::max(worst, diff);
        c.require(diff <= 1e-2, "state n=" + std::to_string(n) + " off by " + fmt(diff));
    }
    const double elapsed = seconds_since(t0);
    c.require(elapsed < 1.0, "runtime " + fmt(elapsed) + " s");
    c.note("worst |solver-series| = " + fmt(worst) + ", " + fmt(elapsed) + " s");
    return c;
}

// ---- 3. graded engine vs closed forms --------------------------------------

Criterion criterion_engine_equivalence() {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    const PendulumConfig configs[] = {PendulumConfig::reference(),
                                      {1.0, 1.0, 1.0, 40.0},
                                      {2.0, 0.7, 1.3, 55.0}};
    double worst = 0.0;
    for (const auto& cfg : configs) {
        for (int n = 0; n <= 10; ++n) {
            for (int g = 1; g <= 4; ++g) {
                const double engine = graded_correction(g, n, cfg).value;
                const double formula = closed_form(g, n, cfg);
                const double rel = std::abs(engine - formula) / std::abs(formula);
                worst = std::max(worst, rel);
                c.require(rel <= 1e-9, "g=" + std::to_string(g) + " n=" + std::to_string(n) +
                                           " rel=" + fmt(rel));
            }
        }
    }
    const double elapsed = seconds_since(t0);
    c.require(elapsed < 30.0, "runtime " + fmt(elapsed) + " s");
    c.note("worst relative = " + fmt(worst) + ", " + fmt(elapsed) + " s");
    return c;
}

// ---- 4. benchmark triple ----------------------------------------------------

Criterion criterion_benchmark_triple() {
    Criterion c;
    const OscillatorFrame frame{1.0, 1.3, 2.1, 48};
    const int n = 3;

    PerturbationPolynomial constant{{{0, 0.37, 1}}};
    for (int k = 2; k <= 4; ++k) {
        const double v = std::abs(rs_pt(constant, n, frame, k));
        c.require(v < 1e-10, "constant order " + std::to_string(k) + " = " + fmt(v));
    }

    const double f = 0.83;
    PerturbationPolynomial linear{{{1, -f, 1}}};
    const double e2 = rs_pt(linear, n, frame, 2);
    const double expected = -f * f / (2.0 * frame.mass * frame.omega * frame.omega);
    c.require(std::abs(e2 - expected) <= 1e-10 * std::abs(expected),
              "linear order 2 = " + fmt(e2) + " vs " + fmt(expected));
    for (int k : {1, 3, 4}) {
        const double v = std::abs(rs_pt(linear, n, frame, k));
        c.require(v < 1e-10, "linear order " + std::to_string(k) + " = " + fmt(v));
    }

    auto residual = [&](double lam) {
        PerturbationPolynomial p{{{2, lam, 1}}};
        const double exact =
            (n + 0.5) * frame.hbar *
                std::sqrt(frame.omega * frame.omega + 2.0 * lam / frame.mass) -
            (n + 0.5) * frame.hbar * frame.omega;
        double sum = 0.0;
        for (int k = 1; k <= 4; ++k) sum += rs_pt(p, n, frame, k);
        return std::abs(exact - sum);
    };
    const double scale = frame.mass * frame.omega * frame.omega;
    const double slope = std::log10(residual(1e-2 * scale) / residual(1e-3 * scale));
    c.require(std::abs(slope - 5.0) <= 0.2, "lambda^5 slope = " + fmt(slope));
    c.note("lambda^5 slope = " + fmt(slope));
    return c;
}

// ---- 5. rotor / handbook identity ------------------------------------------

Criterion criterion_rotor_identity() {
    Criterion c;
    const auto cfg = PendulumConfig::reference();
    const double q = q_of_config(cfg);
    double worst = 0.0;
    for (int m = 2; m <= 30; ++m) {
        const double a_rotor = a_from_energy(rotor_energy(m, cfg, 4).energy, cfg);
        const double a_handbook = handbook_a_high(2 * m, q, 2);
        const double rel = std::abs(a_rotor - a_handbook) / std::abs(a_handbook);
        worst = std::max(worst, rel);
        c.require(rel <= 1e-12, "m=" + std::to_string(m) + " rel=" + fmt(rel));
    }
    c.note("worst relative = " + fmt(worst));
    return c;
}

// ---- 6. classical periods ---------------------------------------------------

double period_by_quadrature(double energy, const PendulumConfig& cfg) {
    const double v0 = cfg.v0;
    if (energy < v0) {
        const double k2 = (energy + v0) / (2.0 * v0);
        const double integral = oracles::gauss_kronrod(
            [k2](double phi) {
                const double s = std::sin(phi);
                return 1.0 / std::sqrt(1.0 - k2 * s * s);
            },
            0.0, kPi / 2.0, 1e-13);
        return 2.0 * std::sqrt(cfg.inertia() / 2.0) * 4.0 / std::sqrt(2.0 * v0) * integral;
    }
    const double integral = oracles::gauss_kronrod(
        [&](double theta) { return 1.0 / std::sqrt(energy + v0 * std::cos(theta)); },
        -kPi, kPi, 1e-13);
    return std::sqrt(cfg.inertia() / 2.0) * integral;
}

Criterion criterion_classical_periods() {
    Criterion c;
    const auto cfg = PendulumConfig::reference();
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        // 200 energies spread over both regimes, avoiding the separatrix.
        const double frac = (i + 0.5) / 200.0;
        const double e = i % 2 == 0 ? -cfg.v0 + frac * 1.98 * cfg.v0
                                    : cfg.v0 * (1.002 + 30.0 * frac);
        const double tau = period(e, cfg).tau;
        const double rel = std::abs(tau - period_by_quadrature(e, cfg)) / tau;
        worst = std::max(worst, rel);
        c.require(rel <= 1e-8, "E=" + fmt(e) + " rel=" + fmt(rel));
    }

    const double small_osc = 2.0 * kPi * std::sqrt(cfg.inertia() / cfg.v0);
    const double at_rest = period(-cfg.v0, cfg).tau;
    c.require(std::abs(at_rest - small_osc) <= 1e-10, "tau(-V0) = " + fmt(at_rest));

    const double e_hi = 100.0 * cfg.v0;
    const double ratio = period(e_hi, cfg).tau / (2.0 * kPi * std::sqrt(cfg.inertia() / (2.0 * e_hi)));
    c.require(std::abs(ratio - 1.0) <= 0.005, "rotor-limit ratio = " + fmt(ratio));
    c.note("worst oracle relative = " + fmt(worst) + ", rotor ratio = " + fmt(ratio));
    return c;
}

// ---- 7 & 8 share the q = 160 discrete pipeline ------------------------------

struct Pipeline {
    SpectrumTable table;
    std::vector<DiscreteDerivatives> raw[2];  // indexed by parity
    double elapsed = 0.0;
};

Pipeline build_pipeline() {
    const auto t0 = std::chrono::steady_clock::now();
    Pipeline p;
    p.table = spectrum(PendulumConfig::reference(), 70);
    p.raw[0] = discrete_table(p.table, Parity::even);
    p.raw[1] = discrete_table(p.table, Parity::odd);
    p.elapsed = seconds_since(t0);
    return p;
}

Criterion criterion_revival_plateaus(const Pipeline& p) {
    Criterion c;
    const auto cfg = PendulumConfig::reference();
    const double rotor_plateau = 4.0 * kPi * cfg.inertia() / cfg.hbar;       // 2 pi
    const double osc_plateau = 32.0 * kPi * cfg.inertia() / cfg.hbar;       // 16 pi

    double rotor_mean = 0.0;
    int rotor_count = 0;
    for (const auto& rows : p.raw) {
        bool any = false;
        for (const auto& r : rows) {
            if (r.energy <= 4.0 * cfg.v0) continue;
            const double t_rev = 4.0 * kPi * cfg.hbar / std::abs(r.d2);
            c.require(std::abs(t_rev - rotor_plateau) <= 0.05 * rotor_plateau,
                      "raw T_rev(E=" + fmt(r.energy) + ") = " + fmt(t_rev));
            rotor_mean += t_rev;
            ++rotor_count;
            any = true;
        }
        c.require(any, "no rotor-side rows above 4 V0");
    }
    rotor_mean /= rotor_count;

    double osc_mean = 0.0;
    int osc_count = 0;
    for (const auto& rows : p.raw) {
        for (const auto& r : parity_corrected(rows)) {
            if (r.energy >= -0.5 * cfg.v0) continue;
            const double t_rev = 4.0 * kPi * cfg.hbar / std::abs(r.d2);
            c.require(std::abs(t_rev - osc_plateau) <= 0.2 * osc_plateau,
                      "corrected T_rev(E=" + fmt(r.energy) + ") = " + fmt(t_rev));
            osc_mean += t_rev;
            ++osc_count;
        }
    }
    c.require(osc_count > 0, "no oscillator-side rows below -V0/2");
    osc_mean /= osc_count;

    const double factor = osc_mean / rotor_mean;
    c.require(std::abs(factor - 8.0) <= 2.0, "plateau ratio = " + fmt(factor));
    c.note("plateau ratio = " + fmt(factor) + " (rotor rows " +
           std::to_string(rotor_count) + ", osc rows " + std::to_string(osc_count) + ")");
    return c;
}

Criterion criterion_separatrix(const Pipeline& p) {
    Criterion c;
    const auto cfg = PendulumConfig::reference();
    const double v0 = cfg.v0;

    for (int pi = 0; pi < 2; ++pi) {
        const auto& rows = p.raw[pi];
        const std::string tag = pi == 0 ? "even" : "odd";

        // Separatrix band: the 3 states of this parity nearest +V0.
        std::vector<double> states;
        for (const auto& row : p.table.rows) {
            if ((row.label.parity == Parity::even) == (pi == 0)) states.push_back(row.energy);
        }
        std::vector<double> dist(states);
        for (auto& e : dist) e = std::abs(e - v0);
        std::sort(dist.begin(), dist.end());
        double band_lo = 1e300, band_hi = -1e300;
        for (double e : states) {
            if (std::abs(e - v0) <= dist[2]) {
                band_lo = std::min(band_lo, e);
                band_hi = std::max(band_hi, e);
            }
        }

        // tau rows keyed by pair midpoint; T_rev rows keyed by the center state.
        std::vector<std::pair<double, double>> tau, trev;
        for (const auto& r : rows) {
            tau.push_back({r.e_bar, 2.0 * kPi * cfg.hbar / std::abs(r.d1)});
            trev.push_back({r.energy, 4.0 * kPi * cfg.hbar / std::abs(r.d2)});
        }

        auto argmax = [](const std::vector<std::pair<double, double>>& v) {
            std::size_t best = 0;
            for (std::size_t i = 1; i < v.size(); ++i)
                if (v[i].second > v[best].second) best = i;
            return best;
        };
        auto argnearest = [v0](const std::vector<std::pair<double, double>>& v) {
            std::size_t best = 0;
            for (std::size_t i = 1; i < v.size(); ++i)
                if (std::abs(v[i].first - v0) < std::abs(v[best].first - v0)) best = i;
            return best;
        };

        const std::size_t tau_peak = argmax(tau);
        c.require(std::isfinite(tau[tau_peak].second), tag + " tau peak not finite");
        c.require(tau_peak == argnearest(tau),
                  tag + " tau peak not at the state nearest +V0");

        const std::size_t trev_peak = argmax(trev);
        c.require(std::isfinite(trev[trev_peak].second), tag + " T_rev peak not finite");
        c.require(trev_peak == argnearest(trev),
                  tag + " T_rev peak not at the state nearest +V0");

        // Monotone trends over the last 5 rows before the band, both sides.
        auto check_monotone = [&](const std::vector<std::pair<double, double>>& v,
                                  bool below, bool increasing, const std::string& what) {
            std::vector<double> ys;
            if (below) {
                for (const auto& [x, y] : v)
                    if (x < band_lo) ys.push_back(y);
                if (ys.size() > 5) ys.erase(ys.begin(), ys.end() - 5);
            } else {
                for (const auto& [x, y] : v)
                    if (x > band_hi) ys.push_back(y);
                if (ys.size() > 5) ys.resize(5);
            }
            c.require(ys.size() >= 3, what + ": too few rows outside the band");
            for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
                const bool ok = increasing ? ys[i + 1] > ys[i] : ys[i + 1] < ys[i];
                c.require(ok, what + " not monotone");
            }
        };
        // tau rises toward the separatrix from both sides...
        check_monotone(tau, true, true, tag + " tau below");
        check_monotone(tau, false, false, tag + " tau above");
        // ...while T_rev falls from both plateaus before the band.
        check_monotone(trev, true, false, tag + " T_rev below");
        check_monotone(trev, false, true, tag + " T_rev above");
    }

    c.require(p.elapsed < 60.0, "pipeline runtime " + fmt(p.elapsed) + " s");
    c.note("pipeline " + fmt(p.elapsed) + " s, peaks at the states nearest +V0");
    return c;
}

// ---- 9. WKB ------------------------------------------------------------------

Criterion criterion_wkb() {
    Criterion c;
    const auto even = char_values(1.0, Parity::even, 16);
    double worst = 0.0;
    for (int m = 20; m <= 30; m += 2) {
        const double diff = std::abs(wkb_series(m, 1.0).a - even[m / 2].a);
        worst = std::max(worst, diff);
        c.require(diff <= 1e-4, "m=" + std::to_string(m) + " |wkb-exact|=" + fmt(diff));
    }
    const double cross =
        std::abs(wkb_action_root(20, 160.0).a - wkb_series(20, 160.0).a);
    c.require(cross <= 0.5, "action-root vs series = " + fmt(cross));
    c.note("worst series error " + fmt(worst) + ", cross-method gap " + fmt(cross));
    return c;
}

// ---- 10. hierarchy ratios -----------------------------------------------------

Criterion criterion_hierarchy() {
    Criterion c;
    const auto cfg = PendulumConfig::reference();
    for (int m : {2, 5, 10, 20, 30}) {
        const auto t = analytic_timescales(Limit::rotor, m, cfg, 0);
        const double rel = std::abs(t.t_rev / t.tau - 2.0 * m) / (2.0 * m);
        c.require(rel <= 1e-12, "rotor m=" + std::to_string(m) + " rel=" + fmt(rel));
    }
    const double q = q_of_config(cfg);
    const double tau0 = analytic_timescales(Limit::oscillator, 0.0, cfg, 0).tau;
    const double trev1 = analytic_timescales(Limit::oscillator, 0.0, cfg, 1).t_rev;
    const double rel = std::abs(trev1 / tau0 - 8.0 * std::sqrt(q)) / (8.0 * std::sqrt(q));
    c.require(rel <= 1e-9, "oscillator ratio rel=" + fmt(rel));
    c.note("T_rev/tau matches 2m and 8 sqrt(q)");
    return c;
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        std::function<Criterion()> run;
    };

    const Pipeline pipeline = build_pipeline();

    const std::vector<Entry> entries = {
        {"solver vs small-q handbook series (q=1, r=8..20, 1e-6)", criterion_small_q_series},
        {"solver vs large-q series (q=160, n=0..5, 1e-2)", criterion_large_q_series},
        {"graded engine = closed forms (1e-9, n=0..10, 3 configs)", criterion_engine_equivalence},
        {"benchmark triple (constant/linear/quadratic)", criterion_benchmark_triple},
        {"rotor order-4 = handbook expansion (1e-12, m=2..30)", criterion_rotor_identity},
        {"classical periods vs quadrature (1e-8, 200 energies)", criterion_classical_periods},
        {"revival plateaus (2 pi: 5%, 16 pi: 20%, factor 8: 25%)",
         [&] { return criterion_revival_plateaus(pipeline); }},
        {"separatrix phenomenology (finite peaks, monotone trends)",
         [&] { return criterion_separatrix(pipeline); }},
        {"WKB series vs solver (1e-4) and action root (0.5)", criterion_wkb},
        {"hierarchy ratios (2m exact, 8 sqrt(q) to 1e-9)", criterion_hierarchy},
    };

    int failures = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        Criterion c;
        try {
            c = entries[i].run();
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %2zu %s%s%s\n", c.pass ? "PASS" : "FAIL", i + 1, entries[i].name,
                    c.detail.empty() ? "" : " -- ", c.detail.c_str());
        if (!c.pass) ++failures;
    }
    std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(entries.size()) - failures,
                entries.size());
    return failures == 0 ? 0 : 1;
}
